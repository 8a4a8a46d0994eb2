#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "minhom/classify.hpp"
#include "minhom/errors.hpp"
#include "minhom/gadgets.hpp"
#include "minhom/instance.hpp"
#include "minhom/io.hpp"
#include "minhom/poly.hpp"
#include "minhom/product.hpp"

namespace {

using minhom::Classification;
using minhom::Solution;
using minhom::Verdict;

nlohmann::json classification_json(const Classification& cls) {
  nlohmann::json out;
  out["verdict"] = minhom::to_string(cls.verdict);
  switch (cls.verdict) {
    case Verdict::polynomial:
      out["tag"] = minhom::to_string(cls.tag);
      if (cls.tag == minhom::PolyTag::tt || cls.tag == minhom::PolyTag::tt_minus ||
          cls.tag == minhom::PolyTag::cycle)
        out["k"] = cls.k;
      break;
    case Verdict::np_hard:
      out["case"] = cls.hard_case;
      break;
    case Verdict::unsupported:
      out["reason"] = cls.reason;
      break;
    case Verdict::open:
      break;
  }
  return out;
}

nlohmann::json solution_json(const minhom::HomInstance& inst, const Solution& sol,
                             const Classification& cls, bool exact,
                             const std::string& warning) {
  nlohmann::json out;
  out["classification"] = classification_json(cls);
  out["solver"] = exact ? "exact" : sol.solver;
  if (exact) out["method"] = "exact";
  if (!warning.empty()) out["warning"] = warning;
  if (sol.status != Solution::Status::optimal) {
    out["status"] = "infeasible";
    return out;
  }
  out["status"] = "optimal";
  out["cost"] = sol.cost;
  nlohmann::json assignment = nlohmann::json::object();
  for (int u = 0; u < inst.d.size(); ++u)
    assignment[inst.d.label(u)] = inst.h.label(sol.assignment[u]);
  out["assignment"] = assignment;
  return out;
}

std::string hardness_warning(const Classification& cls) {
  switch (cls.verdict) {
    case Verdict::np_hard:
      return "target classified np_hard (" + cls.hard_case + "); exact search may be exponential";
    case Verdict::open:
      return "target complexity open; exact search may be exponential";
    case Verdict::unsupported:
      return "target outside the classified families (" + cls.reason +
             "); exact search may be exponential";
    case Verdict::polynomial:
      break;
  }
  return {};
}

struct SolveArgs {
  std::string target, input, costs;
  bool use_max = false;
  int limit = minhom::kDefaultExactLimit;
  bool force_exact = false;
  unsigned seed = 0;
};

void add_solve_options(CLI::App* cmd, SolveArgs& args, bool with_force) {
  cmd->add_option("target", args.target, "target digraph file")->required();
  cmd->add_option("input", args.input, "input digraph file")->required();
  cmd->add_option("costs", args.costs, "cost table file")->required();
  auto* max_flag = cmd->add_flag("--max", args.use_max, "maximize instead of minimizing");
  cmd->add_flag("--min", "minimize (default)")->excludes(max_flag);
  cmd->add_option("--limit", args.limit, "exact-solver size limit in product nodes")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", args.seed, "reserved; kept for config compatibility");
  if (with_force)
    cmd->add_flag("--force-exact", args.force_exact, "use the exact solver even when a polynomial one applies");
}

int run_solve(const SolveArgs& args, bool force_exact) {
  minhom::Digraph h = minhom::parse_digraph_file(args.target);
  minhom::Digraph d = minhom::parse_digraph_file(args.input);
  minhom::CostMatrix raw = minhom::parse_costs_file(args.costs);
  auto objective = args.use_max ? minhom::Objective::max : minhom::Objective::min;
  minhom::HomInstance inst = minhom::make_instance(d, h, raw, objective);
  minhom::validate(inst);

  Classification cls = minhom::classify(h);
  const bool exact = force_exact || args.force_exact || cls.verdict != Verdict::polynomial;
  Solution sol;
  std::string warning;
  if (exact) {
    sol = minhom::solve_via_product(inst, args.limit);
    warning = hardness_warning(cls);
  } else {
    sol = minhom::solve_poly(inst, cls);
  }
  std::cout << solution_json(inst, sol, cls, exact, warning).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum/maximum cost homomorphism toolkit"};
  app.require_subcommand(1);

  std::string classify_target;
  auto* classify_cmd = app.add_subcommand("classify", "classify a target digraph");
  classify_cmd->add_option("target", classify_target, "target digraph file")->required();

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve a cost homomorphism instance");
  add_solve_options(solve_cmd, solve_args, true);

  SolveArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "solve with the exact search only");
  add_solve_options(oracle_cmd, oracle_args, false);

  SolveArgs product_args;
  std::string product_out;
  auto* product_cmd = app.add_subcommand("product", "export the homomorphic product");
  product_cmd->add_option("target", product_args.target, "target digraph file")->required();
  product_cmd->add_option("input", product_args.input, "input digraph file")->required();
  product_cmd->add_option("costs", product_args.costs, "cost table file")->required();
  auto* pmax = product_cmd->add_flag("--max", product_args.use_max, "keep costs as given");
  product_cmd->add_flag("--min", "complement costs first (default)")->excludes(pmax);
  product_cmd->add_option("--out", product_out, "output file")->required();

  std::string reduce_kind, reduce_graph, reduce_out, pair_mode = "non-adjacent";
  bool strict_costs = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "emit a hardness reduction instance");
  reduce_cmd->add_option("kind", reduce_kind, "reduction kind: ac or c3tail")->required();
  reduce_cmd->add_option("graph", reduce_graph, "undirected source graph file")->required();
  reduce_cmd->add_option("--pair-mode", pair_mode, "ac gadget pair selection")
      ->check(CLI::IsMember({"non-adjacent", "adjacent"}));
  reduce_cmd->add_flag("--strict-gadget-costs", strict_costs,
                       "penalize colors 3 and 4 on source vertices (c3tail)");
  reduce_cmd->add_option("--out", reduce_out, "output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) {
      minhom::Digraph h = minhom::parse_digraph_file(classify_target);
      std::cout << classification_json(minhom::classify(h)).dump() << "\n";
      return 0;
    }
    if (*solve_cmd) return run_solve(solve_args, false);
    if (*oracle_cmd) return run_solve(oracle_args, true);
    if (*product_cmd) {
      minhom::Digraph h = minhom::parse_digraph_file(product_args.target);
      minhom::Digraph d = minhom::parse_digraph_file(product_args.input);
      minhom::CostMatrix raw = minhom::parse_costs_file(product_args.costs);
      auto objective = product_args.use_max ? minhom::Objective::max : minhom::Objective::min;
      minhom::HomInstance inst = minhom::make_instance(d, h, raw, objective);
      minhom::validate(inst);
      minhom::HomInstance work =
          inst.objective == minhom::Objective::min ? minhom::complement_costs(inst) : inst;
      minhom::ProductGraph product = minhom::homomorphic_product(work);
      minhom::write_file(product_out, minhom::format_product(product));
      nlohmann::json summary;
      summary["file"] = product_out;
      summary["nodes"] = product.graph.size();
      summary["edges"] = product.graph.edge_count();
      std::cout << summary.dump() << "\n";
      return 0;
    }
    if (*reduce_cmd) {
      minhom::UndirectedGraph g = minhom::parse_graph_file(reduce_graph);
      minhom::ReductionOutput r;
      if (reduce_kind == "ac") {
        auto mode = pair_mode == "adjacent" ? minhom::PairMode::adjacent
                                            : minhom::PairMode::non_adjacent;
        r = minhom::reduce_ac(g, mode);
      } else if (reduce_kind == "c3tail") {
        r = minhom::reduce_c3tail(g, strict_costs);
      } else {
        minhom::fail(minhom::Errc::unknown_name, "unknown reduction kind: " + reduce_kind);
      }
      const std::string d_file = reduce_out + ".d.dg";
      const std::string h_file = reduce_out + ".h.dg";
      const std::string costs_file = reduce_out + ".costs.tsv";
      minhom::write_file(d_file, minhom::format_digraph(r.d));
      minhom::write_file(h_file, minhom::format_digraph(r.h));
      minhom::write_file(costs_file, minhom::format_costs(r.costs));
      nlohmann::json book;
      book["target"] = r.target_name;
      book["d_file"] = d_file;
      book["h_file"] = h_file;
      book["costs_file"] = costs_file;
      book["vertex_count"] = r.d.size();
      if (r.target_name == "ac4")
        book["pair_mode"] = r.pair_mode == minhom::PairMode::adjacent ? "adjacent" : "non-adjacent";
      else
        book["strict_costs"] = r.strict_costs;
      nlohmann::json copies = nlohmann::json::array();
      for (const auto& rec : r.gadgets) {
        nlohmann::json item;
        item["prefix"] = rec.prefix;
        item["a"] = rec.a;
        item["b"] = rec.b;
        copies.push_back(item);
      }
      book["gadgets"] = copies;
      std::cout << book.dump() << "\n";
      return 0;
    }
  } catch (const minhom::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.code() == minhom::Errc::size_limit ? 3 : 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
