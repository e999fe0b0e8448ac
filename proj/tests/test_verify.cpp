#include <random>

#include "doctest.h"
#include "graphs.hpp"
#include "oracle.hpp"
#include "sccpres/errors.hpp"
#include "sccpres/verify.hpp"

using namespace sccp;

namespace {

EdgeSet drop(const EdgeSet& s, EdgeId e) {
  EdgeSet out;
  for (EdgeId x : s)
    if (x != e) out.push_back(x);
  return out;
}

EdgeSet random_subset(const DiGraph& g, std::mt19937_64& rng, int keep_in_four) {
  EdgeSet out;
  for (EdgeId e : g.edge_ids())
    if (static_cast<int>(rng() % 4) < keep_in_four) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("verify examples") {
  DiGraph tri = testgraphs::bidirected_triangle();
  for (const auto& spec : {VariantSpec::all_pairs(), VariantSpec::global(), VariantSpec::st(0, 2)})
    CHECK(verify_ft(tri, tri.edge_ids(), spec, 2).ok);

  auto bad = verify_ft(tri, drop(tri.edge_ids(), 0), VariantSpec::all_pairs(), 1);
  CHECK(!bad.ok);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->faults.size() <= 1);

  DiGraph chord(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(verify_ft(chord, EdgeSet{0, 1, 2, 3}, VariantSpec::all_pairs(), 0).ok);
  CHECK_THROWS_AS(verify_ft(testgraphs::bidirected_complete(8), EdgeSet{}, VariantSpec::all_pairs(), 5, {1000, 1}),
                  CapabilityError);
}

TEST_CASE("verify matches brute force for every variant") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    DiGraph g = gen_random(5, 6, seed, seed % 3 != 0);
    EdgeSet kept = random_subset(g, rng, 3);
    for (const auto& spec : {VariantSpec::all_pairs(), VariantSpec::global(), VariantSpec::single_source(1),
                             VariantSpec::st(0, 3), VariantSpec::sourcewise({2, 4})}) {
      for (int k = 0; k <= 2; ++k) CHECK(verify_ft(g, kept, spec, k).ok == oracle::ft_ok(g, kept, spec, k));
    }
  }
}

TEST_CASE("shards report the globally first counterexample") {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DiGraph g = gen_random(6, 10, seed, true);
    EdgeSet kept = random_subset(g, rng, 3);
    auto one = verify_ft(g, kept, VariantSpec::all_pairs(), 2, {2'000'000, 1});
    auto four = verify_ft(g, kept, VariantSpec::all_pairs(), 2, {2'000'000, 4});
    CHECK(one.ok == four.ok);
    if (!one.ok) {
      CHECK(one.counterexample->index == four.counterexample->index);
      CHECK(one.counterexample->faults == four.counterexample->faults);
      CHECK(one.counterexample->pair == four.counterexample->pair);
    }
  }
}

TEST_CASE("failure is monotone under edge removal") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    DiGraph g = gen_random(5, 7, seed, true);
    EdgeSet kept = random_subset(g, rng, 3);
    if (verify_ft(g, kept, VariantSpec::all_pairs(), 1).ok) continue;
    for (EdgeId e : kept) CHECK(!verify_ft(g, drop(kept, e), VariantSpec::all_pairs(), 1).ok);
  }
}

TEST_CASE("kconn verifier") {
  DiGraph tri = testgraphs::bidirected_triangle();
  CHECK(verify_kconn(tri, tri.edge_ids(), 2).ok);
  auto bad = verify_kconn(tri, drop(tri.edge_ids(), 0), 2);
  CHECK(!bad.ok);
  CHECK(bad.expected == 2);
  CHECK(bad.actual == 1);
  CHECK(verify_kconn(tri, EdgeSet{0, 2, 5}, 1).ok);
}

TEST_CASE("critical edge enumeration") {
  CHECK(enumerate_critical_edges(testgraphs::cycle(5), VariantSpec::all_pairs(), 1) == EdgeSet{0, 1, 2, 3, 4});
  DiGraph tri = testgraphs::bidirected_triangle();
  CHECK(enumerate_critical_edges(tri, VariantSpec::all_pairs(), 1) == tri.edge_ids());
  CHECK(enumerate_critical_edges(testgraphs::path(5), VariantSpec::all_pairs(), 2).empty());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DiGraph g = gen_random(5, 6, seed, true);
    auto c1 = enumerate_critical_edges(g, VariantSpec::all_pairs(), 1);
    auto c2 = enumerate_critical_edges(g, VariantSpec::all_pairs(), 2);
    CHECK(std::includes(c2.begin(), c2.end(), c1.begin(), c1.end()));
    CHECK(c1 == oracle::critical_set(g, VariantSpec::all_pairs(), 1));
  }
}

TEST_CASE("cut characterizations agree with the flow verifiers") {
  DiGraph c3 = testgraphs::cycle(3);
  CHECK(verify_ft_by_cuts(c3, c3.edge_ids(), 1));
  CHECK(!verify_ft_by_cuts(c3, EdgeSet{0, 1}, 0));
  DiGraph tri = testgraphs::bidirected_triangle();
  CHECK(!verify_kconn_by_cuts(tri, drop(tri.edge_ids(), 0), 2));
  CHECK(verify_kconn_by_cuts(tri, tri.edge_ids(), 2));

  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    DiGraph g = gen_random(n, 6, seed, seed % 3 != 0);
    EdgeSet kept = random_subset(g, rng, 3);
    const int k = static_cast<int>(seed % 3);
    CHECK(verify_ft_by_cuts(g, kept, k) == verify_ft(g, kept, VariantSpec::all_pairs(), k).ok);
    CHECK(verify_kconn_by_cuts(g, kept, k) == verify_kconn(g, kept, k).ok);
  }
  CHECK_THROWS_AS(verify_ft_by_cuts(DiGraph(9), EdgeSet{}, 1), CapabilityError);
}

TEST_CASE("strong fault model witnesses") {
  auto inst = gen_bounded_degree_lower(4, 2);
  const EdgeSet all = inst.graph.edge_ids();
  for (const auto& w : inst.witnesses)
    CHECK(verify_bounded_degree_witness(inst.graph, all, w.edge, w.faults, w.pair.first, w.pair.second));

  const auto& w0 = inst.witnesses[0];
  CHECK(!verify_bounded_degree_witness(inst.graph, all, w0.edge, EdgeSet{}, w0.pair.first, w0.pair.second));
  EdgeSet star;
  for (const auto& e : inst.graph.edges())
    if (e.tail == inst.s) star.push_back(e.id);
  CHECK_THROWS_AS(verify_bounded_degree_witness(inst.graph, all, w0.edge, star, inst.s, w0.pair.second),
                  InputError);

  auto col = gen_color_fault_lower(4, 2);
  const EdgeSet call = col.graph.edge_ids();
  for (const auto& w : col.witnesses)
    CHECK(verify_color_witness(col.graph, call, w.edge, *w.color, w.pair.first, w.pair.second));
  const auto& c0 = col.witnesses[0];
  CHECK(!verify_color_witness(col.graph, call, c0.edge, 0, c0.pair.first, c0.pair.second));
  CHECK_THROWS_AS(verify_color_witness(col.graph, call, c0.edge, 99, c0.pair.first, c0.pair.second), InputError);

  std::vector<EdgeSpec> mono{{0, 1, 7}, {1, 0, 7}};
  DiGraph one(2, mono);
  CHECK(!verify_color_witness(one, one.edge_ids(), 0, 7, 0, 1));
}
