#include <sstream>

#include "doctest.h"
#include "graphs.hpp"
#include "oracle.hpp"
#include "sccpres/digraph.hpp"
#include "sccpres/errors.hpp"
#include "sccpres/faults.hpp"

using namespace sccp;

namespace {

std::vector<VertexSet> sorted_components(const SccPartition& p) {
  auto c = p.components;
  for (auto& s : c) std::sort(s.begin(), s.end());
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_CASE("scc of small graphs") {
  CHECK(sorted_components(scc(testgraphs::cycle(3))) == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(sorted_components(scc(testgraphs::path(3))) == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(sorted_components(scc(DiGraph(3, {{0, 1}, {1, 0}, {1, 2}}))) == std::vector<VertexSet>{{0, 1}, {2}});
}

TEST_CASE("topological order respects edges") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DiGraph g = gen_random(7, 9, seed, false);
    auto p = scc(g);
    std::vector<int> rank(p.count());
    for (int i = 0; i < p.count(); ++i) rank[p.topological_order[i]] = i;
    for (const auto& e : g.edges()) CHECK(rank[p.component_of[e.tail]] <= rank[p.component_of[e.head]]);
  }
}

TEST_CASE("scc matches closure and is reverse-invariant") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    DiGraph g = gen_random(7, 10, seed, false);
    auto p = scc(g);
    auto r = oracle::closure(g, [](EdgeId) { return true; });
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) CHECK(p.same(a, b) == oracle::sc(r, a, b));
    CHECK(scc_labels(g) == scc_labels(reverse(g)));
  }
}

TEST_CASE("edge removal refines components") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    DiGraph g = gen_random(6, 8, seed, true);
    EdgeSet f{static_cast<EdgeId>(seed % g.edge_count()), static_cast<EdgeId>((seed * 7 + 3) % g.edge_count())};
    f = normalized_edges(f);
    auto before = scc(g);
    auto after = scc(remove_edges(g, f));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        if (after.same(a, b)) CHECK(before.same(a, b));
  }
}

TEST_CASE("surgery") {
  DiGraph c3 = testgraphs::cycle(3);
  DiGraph cut = remove_edges(c3, EdgeSet{0});
  CHECK(cut.edge_count() == 2);
  CHECK(!cut.has_edge_id(0));
  CHECK(cut.edge(1).tail == 1);
  CHECK(cut.edge(2).head == 0);
  CHECK(remove_edges(c3, EdgeSet{}) == c3);
  CHECK_THROWS_AS(remove_edges(c3, EdgeSet{7}), InputError);

  DiGraph par(2, {{0, 1}, {0, 1}});
  DiGraph one = remove_edges(par, EdgeSet{1});
  CHECK(one.edge_count() == 1);
  CHECK(one.edge(0).head == 1);

  DiGraph r = reverse(DiGraph(2, {{0, 1}}));
  CHECK(r.at(0).tail == 1);
  CHECK(r.at(0).head == 0);

  auto sub = induced(c3, VertexSet{0, 1});
  CHECK(sub.graph.vertex_count() == 2);
  REQUIRE(sub.graph.edge_count() == 1);
  CHECK(sub.graph.at(0).tail == 0);
  CHECK(sub.to_parent_edge[0] == 0);

  CHECK(restrict_to(c3, c3.edge_ids()) == c3);
  CHECK_THROWS_AS(induced(c3, VertexSet{5}), InputError);

  std::vector<EdgeSpec> extra{{2, 1, std::nullopt}};
  DiGraph more = add_edges(c3, extra);
  CHECK(more.edge_count() == 4);
  CHECK(more.edge(3).tail == 2);
}

TEST_CASE("self-loops do not merge components") {
  DiGraph g(2, {{0, 0}, {0, 1}, {1, 1}});
  CHECK(scc(g).count() == 2);
}

TEST_CASE("text format round trip") {
  std::vector<EdgeSpec> edges{{0, 1, std::nullopt}, {1, 2, 3}, {2, 0, std::nullopt}, {0, 1, 0}};
  DiGraph g(3, edges);
  std::string text = serialize_graph(g);
  CHECK(text == "3 4\n0 1\n1 2 3\n2 0\n0 1 0\n");
  CHECK(parse_graph_string(text) == g);
  CHECK(parse_graph_string("# comment\n2 1\n# another\n0 1\n") == DiGraph(2, {{0, 1}}));
  CHECK_THROWS_AS(parse_graph_string("2 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph_string("2 1\n0 5\n"), InputError);
  CHECK(graph_hash(g) == graph_hash(parse_graph_string(text)));
}

TEST_CASE("fault sets in colex order") {
  std::vector<std::vector<int>> seen;
  for_each_fault_set(4, 2, [&](std::uint64_t i, std::span<const int> f) {
    CHECK(i == seen.size());
    seen.emplace_back(f.begin(), f.end());
    return true;
  });
  std::vector<std::vector<int>> expected{{},     {0},    {1},    {0, 1}, {2},    {0, 2},
                                         {1, 2}, {3},    {0, 3}, {1, 3}, {2, 3}};
  CHECK(seen == expected);
  CHECK(count_fault_sets(4, 2) == 11);
  CHECK(count_fault_sets(20, 2) == 211);

  std::vector<std::vector<int>> tail;
  for_each_fault_set(
      4, 2,
      [&](std::uint64_t, std::span<const int> f) {
        tail.emplace_back(f.begin(), f.end());
        return true;
      },
      5, 9);
  CHECK(tail == std::vector<std::vector<int>>(expected.begin() + 5, expected.begin() + 9));
  CHECK_THROWS_AS(check_fault_budget(100, 5, 1000, "test"), CapabilityError);
}
