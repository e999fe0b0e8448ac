#include "doctest.h"
#include "graphs.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "sccpres/errors.hpp"
#include "sccpres/families.hpp"
#include "sccpres/kconn.hpp"
#include "sccpres/verify.hpp"

using namespace sccp;

TEST_CASE("baswana tree shape") {
  // s, two leaves and one y: 4 vertices, 2 tree + 2 cross + 1 return edges.
  auto small = gen_baswana_tree(1, 1);
  CHECK(small.graph.vertex_count() == 4);
  CHECK(small.graph.edge_count() == 5);
  CHECK(small.tree_edges.size() == 2);
  CHECK(small.cross_edges.size() == 2);

  auto inst = gen_baswana_tree(2, 3);
  CHECK(inst.cross_edges.size() == 12);
  auto crit = enumerate_critical_edges(inst.graph, VariantSpec::all_pairs(), 2);
  for (EdgeId e : inst.cross_edges) CHECK(oracle::contains(crit, e));

  auto h = greedy_kconn_preserver(small.graph, 1, true);
  CHECK(verify_kconn(small.graph, h.kept_edges, 1).ok);
  CHECK(static_cast<int>(h.kept_edges.size()) <= small.graph.edge_count());

  CHECK_THROWS_AS(gen_baswana_tree(0, 1), InputError);
  CHECK_THROWS_AS(gen_baswana_tree(2, 0), InputError);
}

TEST_CASE("st lower family") {
  auto one = gen_st_lower(1, 2);
  // s, two leaves, two in-tree leaves, next root.
  CHECK(one.graph.vertex_count() == 6);
  CHECK(one.cross_edges.size() == 4);
  auto two = gen_st_lower(2, 2);
  CHECK(two.graph.vertex_count() == 11);
  CHECK(two.cross_edges.size() == 8);
  for (const auto& w : two.witnesses) {
    CHECK(w.faults.size() == 2);
    CHECK(w.pair == std::make_pair(two.s, two.t));
    auto before = oracle::closure_without(two.graph, two.graph.edge_ids(), w.faults);
    EdgeSet fe = w.faults;
    fe.push_back(w.edge);
    auto after = oracle::closure_without(two.graph, two.graph.edge_ids(), fe);
    CHECK(oracle::sc(before, two.s, two.t));
    CHECK(!oracle::sc(after, two.s, two.t));
  }
  for (int layers = 1; layers <= 3; ++layers) {
    auto inst = gen_st_lower(layers, 2);
    auto h = greedy_preserver(inst.graph, VariantSpec::st(inst.s, inst.t), 2);
    for (EdgeId e : inst.cross_edges) CHECK(oracle::contains(h.kept_edges, e));
  }
  CHECK_THROWS_AS(gen_st_lower(1, 3), InputError);
}

TEST_CASE("bounded degree family") {
  CHECK(gen_bounded_degree_lower(4, 2).cross_edges.size() == 8);
  CHECK(gen_bounded_degree_lower(2, 1).cross_edges.size() == 2);
  CHECK_THROWS_AS(gen_bounded_degree_lower(4, 0), InputError);
  CHECK_THROWS_AS(gen_bounded_degree_lower(3, 1), InputError);
}

TEST_CASE("color family") {
  auto inst = gen_color_fault_lower(4, 2);
  for (const auto& e : inst.graph.edges()) CHECK(e.color.has_value());
  for (auto [color, leaf] : inst.color_leaf) {
    auto r = oracle::closure(inst.graph, [&](EdgeId id) { return inst.graph.edge(id).color != color; });
    for (VertexId x : inst.x) CHECK(static_cast<bool>(r[inst.s][x]) == (x == leaf));
  }
  auto r0 = oracle::closure(inst.graph, [&](EdgeId id) { return inst.graph.edge(id).color != 0; });
  for (VertexId x : inst.x)
    for (VertexId y : inst.y) CHECK(!r0[x][y]);
}

TEST_CASE("random generator") {
  DiGraph ring = gen_random(5, 0, 3, true);
  CHECK(ring.edge_count() == 5);
  CHECK(scc(ring).count() == 1);
  CHECK(gen_random(8, 20, 42, false) == gen_random(8, 20, 42, false));
  CHECK(!(gen_random(8, 20, 42, false) == gen_random(8, 20, 43, false)));
  for (const auto& e : gen_random(6, 30, 1, false).edges()) CHECK(e.tail != e.head);
}

TEST_CASE("metadata sidecar") {
  auto inst = gen_st_lower(1, 2);
  auto j = nlohmann::json::parse(inst.metadata_json());
  CHECK(j["family"] == "st-lower");
  CHECK(j["s"] == inst.s);
  CHECK(j["t"] == inst.t);
  CHECK(j["cross_edges"].size() == 4);
  CHECK(j["witnesses"].size() == 4);
}
