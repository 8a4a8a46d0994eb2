#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "minhom/classify.hpp"
#include "minhom/errors.hpp"
#include "minhom/poly.hpp"
#include "minhom/product.hpp"

using minhom::Cost;
using minhom::CostMatrix;
using minhom::Digraph;
using minhom::Errc;
using minhom::Error;
using minhom::HomInstance;
using minhom::Objective;
using minhom::Solution;
using namespace testutil;

namespace {

std::vector<int> identity_order(int k) {
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  return order;
}

void expect_matches_oracle(const HomInstance& inst, const Solution& got,
                           bool same_assignment = true) {
  Solution want = minhom::solve_backtracking(inst, 4096);
  CHECK(got.status == want.status);
  if (want.status == Solution::Status::optimal) {
    CHECK(got.cost == want.cost);
    CHECK(minhom::is_homomorphism(inst, got.assignment));
    CHECK(minhom::assignment_cost(inst, got.assignment) == got.cost);
    if (same_assignment) CHECK(got.assignment == want.assignment);
  }
}

}  // namespace

TEST_CASE("tournament solver on a single arc") {
  Digraph d = Digraph::from_arcs({"a", "b"}, {{"a", "b"}});
  Digraph h = tt(3);
  CostMatrix m = fill_costs(d, h, 1);
  m.entries = {{1, 2, 9}, {9, 4, 1}};
  HomInstance inst = minhom::make_instance(d, h, m, Objective::min);
  Solution s = minhom::solve_ttk(inst, identity_order(3));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 2);
  CHECK(s.assignment == std::vector<int>{0, 2});
  CHECK(s.solver == "ttk");

  inst.objective = Objective::max;
  s = minhom::solve_ttk(inst, identity_order(3));
  CHECK(s.cost == 5);
  CHECK(s.assignment == std::vector<int>{0, 1});
}

TEST_CASE("tournament solver rejects cyclic inputs and wrong targets") {
  Digraph d = cycle(3);
  Digraph h = tt(3);
  HomInstance inst = minhom::make_instance(d, h, fill_costs(d, h, 1));
  Solution s = minhom::solve_ttk(inst, identity_order(3));
  CHECK(s.status == Solution::Status::infeasible);

  Digraph d2 = Digraph::from_arcs({"a", "b"}, {{"a", "b"}});
  HomInstance bad = minhom::make_instance(d2, cycle(3), fill_costs(d2, cycle(3), 1));
  CHECK_THROWS_AS(minhom::solve_ttk(bad, identity_order(3)), Error);
  HomInstance ok = minhom::make_instance(d2, h, fill_costs(d2, h, 1));
  CHECK_THROWS_AS(minhom::solve_ttk(ok, {0, 1}), Error);          // wrong length
  CHECK_THROWS_AS(minhom::solve_ttk(ok, {0, 0, 2}), Error);       // not a permutation
  CHECK_THROWS_AS(minhom::solve_ttk(ok, {2, 1, 0}), Error);       // order disagrees with arcs
}

TEST_CASE("tournament solver matches the oracle on random digraphs") {
  std::mt19937 rng(1201);
  std::uniform_int_distribution<int> dsize(1, 7), kpick(2, 5), obj(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    int k = kpick(rng);
    Digraph d = random_digraph(rng, dsize(rng), 0.35);
    Digraph h = tt(k);
    Objective objective = obj(rng) ? Objective::max : Objective::min;
    HomInstance inst = minhom::make_instance(d, h, random_costs(rng, d, h, 1, 10), objective);
    Solution s = minhom::solve_ttk(inst, identity_order(k));
    expect_matches_oracle(inst, s);
  }
}

TEST_CASE("tournament solver honors restricted domains") {
  Digraph d = Digraph::from_arcs({"a", "b"}, {{"a", "b"}});
  Digraph h = tt(3);
  CostMatrix m = fill_costs(d, h, 1);
  m.entries = {{1, 2, 9}, {9, 4, 1}};
  HomInstance inst = minhom::make_instance(d, h, m, Objective::min);
  inst = minhom::restrict_colors(inst, {{"a", {"2", "3"}}});
  Solution s = minhom::solve_ttk(inst, identity_order(3));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.assignment == std::vector<int>{1, 2});
  CHECK(s.cost == 3);
  inst = minhom::restrict_colors(inst, {{"a", {"3"}}});
  s = minhom::solve_ttk(inst, identity_order(3));
  CHECK(s.status == Solution::Status::infeasible);
}

TEST_CASE("clipped tournament solver on paths") {
  Digraph h = tt_minus(3);
  Digraph path = Digraph::from_arcs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  HomInstance inst = minhom::make_instance(path, h, fill_costs(path, h, 1));
  Solution s = minhom::solve_ttk_minus(inst, identity_order(3));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.assignment == std::vector<int>{0, 1, 2});  // the only choice
  CHECK(s.solver == "ttk_minus");

  Digraph chord = path;
  chord.add_arc(0, 2);
  HomInstance blocked = minhom::make_instance(chord, h, fill_costs(chord, h, 1));
  s = minhom::solve_ttk_minus(blocked, identity_order(3));
  CHECK(s.status == Solution::Status::infeasible);  // 1 -> 3 is the missing arc
}

TEST_CASE("clipped tournament solver tie-breaks low") {
  Digraph h = tt_minus(4);
  Digraph d = Digraph::from_arcs({"a", "b"}, {{"a", "b"}});
  HomInstance inst = minhom::make_instance(d, h, fill_costs(d, h, 1));
  Solution s = minhom::solve_ttk_minus(inst, identity_order(4));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 2);
  CHECK(s.assignment == std::vector<int>{0, 1});
}

TEST_CASE("clipped tournament solver handles isolated vertices") {
  Digraph h = tt_minus(4);
  Digraph d = Digraph::from_arcs({"a", "b", "z"}, {{"a", "b"}});
  CostMatrix m = fill_costs(d, h, 1);
  m.entries[2] = {5, 1, 1, 9};  // z is isolated
  HomInstance inst = minhom::make_instance(d, h, m, Objective::min);
  Solution s = minhom::solve_ttk_minus(inst, identity_order(4));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.assignment[2] == 1);  // cheapest color, low tie
  inst.objective = Objective::max;
  s = minhom::solve_ttk_minus(inst, identity_order(4));
  CHECK(s.assignment[2] == 3);
}

TEST_CASE("clipped tournament solver survives long source-free chains") {
  // The composite path forces ranks to climb through internal vertices;
  // this shape used to stress the closure bookkeeping.
  Digraph h = tt_minus(4);
  Digraph path = Digraph::from_arcs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    HomInstance inst = minhom::make_instance(
        path, h, random_costs(rng, path, h, 1, 10),
        trial % 2 ? Objective::max : Objective::min);
    Solution s = minhom::solve_ttk_minus(inst, identity_order(4));
    expect_matches_oracle(inst, s);
  }
}

TEST_CASE("clipped tournament solver matches the oracle on random digraphs") {
  std::mt19937 rng(1301);
  std::uniform_int_distribution<int> dsize(1, 7), kpick(3, 5), obj(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    int k = kpick(rng);
    Digraph d = random_digraph(rng, dsize(rng), 0.3);
    Digraph h = tt_minus(k);
    Objective objective = obj(rng) ? Objective::max : Objective::min;
    HomInstance inst = minhom::make_instance(d, h, random_costs(rng, d, h, 1, 10), objective);
    Solution s = minhom::solve_ttk_minus(inst, identity_order(k));
    expect_matches_oracle(inst, s);
  }
}

TEST_CASE("cycle solver picks the cheapest rotation") {
  Digraph h = cycle(3);
  Digraph d = Digraph::from_arcs({"a", "b"}, {{"a", "b"}});
  CostMatrix m = fill_costs(d, h, 1);
  m.entries = {{1, 4, 4}, {4, 2, 4}};
  HomInstance inst = minhom::make_instance(d, h, m, Objective::min);
  Solution s = minhom::solve_cycle(inst, identity_order(3));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 3);
  CHECK(s.assignment == std::vector<int>{0, 1});
  CHECK(s.solver == "cycle");

  inst.objective = Objective::max;
  s = minhom::solve_cycle(inst, identity_order(3));
  CHECK(s.cost == 8);
  CHECK(s.assignment == std::vector<int>{1, 2});  // low tie between the two rotations of cost 8
}

TEST_CASE("cycle solver on the digon") {
  Digraph h = cycle(2);
  Digraph path = Digraph::from_arcs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CostMatrix m = fill_costs(path, h, 1);
  m.entries = {{3, 1}, {1, 1}, {3, 1}};
  HomInstance inst = minhom::make_instance(path, h, m, Objective::min);
  Solution s = minhom::solve_cycle(inst, identity_order(2));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 3);
  CHECK(s.assignment == std::vector<int>{1, 0, 1});

  HomInstance odd = minhom::make_instance(cycle(3), h, fill_costs(cycle(3), h, 1));
  s = minhom::solve_cycle(odd, identity_order(2));
  CHECK(s.status == Solution::Status::infeasible);
}

TEST_CASE("cycle solver rotates components independently") {
  Digraph h = cycle(4);
  Digraph d = Digraph::from_arcs({"a", "b", "p", "q"}, {{"a", "b"}, {"p", "q"}});
  CostMatrix m = fill_costs(d, h, 1);
  m.entries = {{1, 9, 9, 9}, {9, 1, 9, 9}, {9, 9, 1, 9}, {9, 9, 9, 1}};
  HomInstance inst = minhom::make_instance(d, h, m, Objective::min);
  Solution s = minhom::solve_cycle(inst, identity_order(4));
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 4);
  CHECK(s.assignment == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("cycle solver matches the oracle on random digraphs") {
  std::mt19937 rng(1401);
  std::uniform_int_distribution<int> dsize(1, 7), kpick(2, 5), obj(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    int k = kpick(rng);
    Digraph d = random_digraph(rng, dsize(rng), 0.3, k == 2);
    Digraph h = cycle(k);
    Objective objective = obj(rng) ? Objective::max : Objective::min;
    HomInstance inst = minhom::make_instance(d, h, random_costs(rng, d, h, 1, 10), objective);
    Solution s = minhom::solve_cycle(inst, identity_order(k));
    expect_matches_oracle(inst, s);
  }
}

TEST_CASE("lifting through a fold keeps costs and picks early members") {
  // 1a and 1b fold to one class; equal folded costs must lift to 1a.
  Digraph h = Digraph::from_arcs({"1a", "1b", "2"}, {{"1a", "2"}, {"1b", "2"}});
  Digraph d = Digraph::from_arcs({"x", "y"}, {{"x", "y"}});
  CostMatrix m = fill_costs(d, h, 1);
  m.entries = {{2, 2, 5}, {9, 9, 1}};
  HomInstance inst = minhom::make_instance(d, h, m, Objective::min);
  minhom::QuotientInfo q = minhom::similarity_quotient(h);
  Solution s = minhom::lift_extension(inst, q, [&](const HomInstance& base) {
    return minhom::solve_ttk(base, identity_order(2));
  });
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 3);
  CHECK(s.assignment == std::vector<int>{0, 2});  // 1a, not 1b

  // Cheaper second member wins instead.
  inst.costs.entries[0] = {4, 2, 5};
  s = minhom::lift_extension(inst, q, [&](const HomInstance& base) {
    return minhom::solve_ttk(base, identity_order(2));
  });
  CHECK(s.assignment == std::vector<int>{1, 2});
  CHECK(s.cost == 3);
}

TEST_CASE("lifting validates the fold") {
  Digraph h = Digraph::from_arcs({"1a", "1b", "2"}, {{"1a", "2"}, {"1b", "2"}});
  Digraph d = Digraph::from_arcs({"x", "y"}, {{"x", "y"}});
  HomInstance inst = minhom::make_instance(d, h, fill_costs(d, h, 1));
  minhom::QuotientInfo q = minhom::similarity_quotient(h);
  q.class_of[1] = 1;
  try {
    minhom::lift_extension(inst, q, [&](const HomInstance& base) {
      return minhom::solve_ttk(base, identity_order(2));
    });
    FAIL("expected a fold complaint");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::class_map_invalid);
  }
}

TEST_CASE("bipartite solver reproduces the worked example") {
  Digraph h = Digraph::from_arcs({"u1", "w1", "u2", "w2"},
                                 {{"u1", "w1"}, {"u1", "w2"}, {"w1", "u2"}, {"u2", "w2"}});
  Digraph d = Digraph::from_arcs({"p", "q"}, {{"p", "q"}});
  HomInstance inst = minhom::make_instance(d, h, fill_costs(d, h, 1));
  Solution s = minhom::solve_acyclic_bt(inst);
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 2);
  CHECK(s.assignment == std::vector<int>{0, 1});  // p -> u1, q -> w1
  CHECK(s.solver == "acyclic_bt");
}

TEST_CASE("bipartite solver needs a bipartite acyclic input") {
  Digraph h = Digraph::from_arcs({"u1", "w1", "u2", "w2"},
                                 {{"u1", "w1"}, {"u1", "w2"}, {"w1", "u2"}, {"u2", "w2"}});
  HomInstance odd = minhom::make_instance(cycle(3), h, fill_costs(cycle(3), h, 1));
  CHECK(minhom::solve_acyclic_bt(odd).status == Solution::Status::infeasible);
  HomInstance spin = minhom::make_instance(cycle(4), h, fill_costs(cycle(4), h, 1));
  CHECK(minhom::solve_acyclic_bt(spin).status == Solution::Status::infeasible);

  HomInstance wrong = minhom::make_instance(cycle(4), tt(3), fill_costs(cycle(4), tt(3), 1));
  CHECK_THROWS_AS(minhom::solve_acyclic_bt(wrong), Error);
}

TEST_CASE("bipartite solver matches the oracle on random digraphs") {
  // A few fixed acyclic bipartite tournaments, random inputs.
  std::vector<Digraph> targets;
  targets.push_back(Digraph::from_arcs({"u1", "w1", "u2", "w2"},
                                       {{"u1", "w1"}, {"u1", "w2"}, {"w1", "u2"}, {"u2", "w2"}}));
  targets.push_back(tt_minus(3));
  targets.push_back(Digraph::from_arcs({"1", "2", "3", "4", "5"},
                                       {{"1", "2"}, {"1", "4"}, {"2", "3"}, {"2", "5"},
                                        {"4", "3"}, {"4", "5"}}));
  std::mt19937 rng(1501);
  std::uniform_int_distribution<int> dsize(1, 6), obj(0, 1);
  for (const Digraph& h : targets) {
    // The lexicographic tie-break is only pinned down when no vertices of the
    // target get folded together; the third target folds 2 and 4.
    bool trivial_quotient =
        minhom::similarity_quotient(h).base.size() == h.size();
    for (int trial = 0; trial < 60; ++trial) {
      Digraph d = random_digraph(rng, dsize(rng), 0.3);
      Objective objective = obj(rng) ? Objective::max : Objective::min;
      HomInstance inst = minhom::make_instance(d, h, random_costs(rng, d, h, 1, 10), objective);
      Solution s = minhom::solve_acyclic_bt(inst);
      expect_matches_oracle(inst, s, false);
      if (trivial_quotient && s.status == Solution::Status::optimal)
        CHECK(s.assignment == minhom::solve_backtracking(inst, 4096).assignment);
    }
  }
}

TEST_CASE("solver for arcless targets") {
  Digraph h({"1", "2"});
  Digraph d({"a", "b", "c"});
  CostMatrix m = fill_costs(d, h, 1);
  m.entries = {{3, 1}, {1, 3}, {2, 2}};
  HomInstance inst = minhom::make_instance(d, h, m);
  Solution s = minhom::solve_no_arcs(inst);
  REQUIRE(s.status == Solution::Status::optimal);
  CHECK(s.cost == 4);
  CHECK(s.assignment == std::vector<int>{1, 0, 0});

  Digraph d2 = Digraph::from_arcs({"a", "b"}, {{"a", "b"}});
  HomInstance blocked = minhom::make_instance(d2, h, fill_costs(d2, h, 1));
  CHECK(minhom::solve_no_arcs(blocked).status == Solution::Status::infeasible);
}

TEST_CASE("dispatch routes by classification") {
  std::mt19937 rng(1601);
  struct Row {
    Digraph h;
    const char* solver;
  };
  std::vector<Row> rows;
  rows.push_back({tt(3), "ttk"});
  rows.push_back({tt_minus(4), "ttk_minus"});
  rows.push_back({cycle(3), "cycle"});
  rows.push_back({tt_minus(3), "acyclic_bt"});
  rows.push_back({Digraph({"1", "2"}), "no_arcs"});
  rows.push_back({expand(rng, tt(3), 2, true).h, "ttk"});
  rows.push_back({expand(rng, cycle(4), 2, true).h, "cycle"});
  for (const Row& row : rows) {
    minhom::Classification cls = minhom::classify(row.h);
    REQUIRE(cls.verdict == minhom::Verdict::polynomial);
    Digraph d = random_digraph(rng, 4, 0.3);
    HomInstance inst =
        minhom::make_instance(d, row.h, random_costs(rng, d, row.h, 1, 10));
    Solution s = minhom::solve_poly(inst, cls);
    CHECK(s.solver == row.solver);
    expect_matches_oracle(inst, s, false);
  }
}

TEST_CASE("dispatch rejects stale classifications") {
  minhom::Classification cls = minhom::classify(tt(3));
  Digraph d = Digraph::from_arcs({"a", "b"}, {{"a", "b"}});
  HomInstance inst = minhom::make_instance(d, cycle(3), fill_costs(d, cycle(3), 1));
  try {
    minhom::solve_poly(inst, cls);
    FAIL("expected a routing complaint");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::misrouted_instance);
  }
  minhom::Classification hard = minhom::classify(minhom::Digraph::from_arcs(
      {"1", "2", "3", "4"},
      {{"1", "2"}, {"2", "3"}, {"3", "1"}, {"1", "4"}, {"2", "4"}, {"3", "4"}}));
  HomInstance inst2 = minhom::make_instance(d, tt(3), fill_costs(d, tt(3), 1));
  CHECK_THROWS_AS(minhom::solve_poly(inst2, hard), Error);
}

TEST_CASE("dispatch handles folded targets end to end") {
  std::mt19937 rng(1701);
  std::uniform_int_distribution<int> dsize(1, 6), obj(0, 1);
  std::vector<Digraph> bases;
  bases.push_back(tt(3));
  bases.push_back(tt_minus(4));
  bases.push_back(cycle(3));
  bases.push_back(cycle(2));
  for (const Digraph& base : bases) {
    for (int trial = 0; trial < 40; ++trial) {
      Expansion ext = expand(rng, base, 3, true);
      minhom::Classification cls = minhom::classify(ext.h);
      REQUIRE(cls.verdict == minhom::Verdict::polynomial);
      Digraph d = random_digraph(rng, dsize(rng), 0.3, base == cycle(2));
      Objective objective = obj(rng) ? Objective::max : Objective::min;
      HomInstance inst =
          minhom::make_instance(d, ext.h, random_costs(rng, d, ext.h, 1, 10), objective);
      Solution s = minhom::solve_poly(inst, cls);
      expect_matches_oracle(inst, s, false);
    }
  }
}
