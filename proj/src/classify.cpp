#include "minhom/classify.hpp"

namespace minhom {

namespace {

bool has_digon(const Digraph& h) {
  for (const auto& [a, b] : h.arcs())
    if (a < b && h.has_arc(b, a)) return true;
  return false;
}

Classification polynomial(PolyTag tag, int k, QuotientInfo quotient,
                          std::vector<int> order) {
  Classification c;
  c.verdict = Verdict::polynomial;
  c.tag = tag;
  c.k = k;
  c.quotient = std::move(quotient);
  c.base_order = std::move(order);
  return c;
}

Classification np_hard(std::string which) {
  Classification c;
  c.verdict = Verdict::np_hard;
  c.hard_case = std::move(which);
  return c;
}

}  // namespace

Classification classify(const Digraph& h) {
  auto parts = partite_sets(h);
  if (!parts) {
    Classification c;
    c.verdict = Verdict::unsupported;
    c.reason = "nonadjacency is not transitive: not semicomplete multipartite";
    return c;
  }
  const int k = static_cast<int>(parts->size());
  auto quotient = similarity_quotient(h);
  auto base = recognize_base(quotient.base);

  if (h.size() == 0) {
    Classification c;
    c.verdict = Verdict::unsupported;
    c.reason = "empty target";
    return c;
  }

  if (k == 1) return polynomial(PolyTag::no_arcs, 0, std::move(quotient), {});

  bool semicomplete = true;
  for (const auto& part : *parts)
    if (part.size() > 1) semicomplete = false;

  if (semicomplete) {
    // Tournament-like targets: acyclic ones are the transitive tournaments,
    // and among cyclic ones only the short directed cycles stay tractable.
    if (base.family == BaseFamily::tt)
      return polynomial(PolyTag::tt, base.k, std::move(quotient), base.order);
    if (base.family == BaseFamily::cycle && (base.k == 2 || base.k == 3))
      return polynomial(PolyTag::cycle, base.k, std::move(quotient), base.order);
    return np_hard("semicomplete-cyclic");
  }

  if (k == 2 && has_digon(h)) {
    if (base.family == BaseFamily::cycle && base.k == 2)
      return polynomial(PolyTag::cycle, 2, std::move(quotient), base.order);
    Classification c;
    c.verdict = Verdict::open;
    return c;
  }

  if (k == 2) {
    // Bipartite tournament.
    auto report = structure_report(h);
    if (report.acyclic)
      return polynomial(PolyTag::acyclic_bt, 0, std::move(quotient), {});
    if (base.family == BaseFamily::cycle && base.k == 4)
      return polynomial(PolyTag::cycle, 4, std::move(quotient), base.order);
    return np_hard("bt-cyclic-not-C4");
  }

  // k >= 3 partite sets.
  if (has_digon(h)) return np_hard("digon");
  if (base.family == BaseFamily::tt)
    return polynomial(PolyTag::tt, base.k, std::move(quotient), base.order);
  if (base.family == BaseFamily::cycle && base.k == 3)
    return polynomial(PolyTag::cycle, 3, std::move(quotient), base.order);
  if (base.family == BaseFamily::tt_minus && base.k >= 4)
    return polynomial(PolyTag::tt_minus, base.k, std::move(quotient), base.order);
  return np_hard("k-partite-not-listed");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::polynomial: return "polynomial";
    case Verdict::np_hard: return "np_hard";
    case Verdict::open: return "open";
    case Verdict::unsupported: return "unsupported";
  }
  return "?";
}

std::string to_string(PolyTag t) {
  switch (t) {
    case PolyTag::tt: return "tt";
    case PolyTag::tt_minus: return "ttminus";
    case PolyTag::cycle: return "cycle";
    case PolyTag::acyclic_bt: return "acyclic_bt";
    case PolyTag::no_arcs: return "no_arcs";
  }
  return "?";
}

}  // namespace minhom
