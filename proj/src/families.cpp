#include "sccpres/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "json.hpp"
#include "sccpres/errors.hpp"

namespace sccp {

namespace {

constexpr int kMaxVertices = 1 << 20;

struct Builder {
  int n = 0;
  std::vector<EdgeSpec> edges;

  VertexId vertex() { return n++; }
  EdgeId add(VertexId u, VertexId v, std::optional<int> color = std::nullopt) {
    edges.push_back({u, v, color});
    return static_cast<EdgeId>(edges.size() - 1);
  }
  DiGraph build() const { return DiGraph(n, edges); }
};

// Full binary tree of the given depth in heap layout; node 0 is `root`.
struct HeapTree {
  std::vector<VertexId> vertex;  // heap index -> vertex
  std::vector<EdgeId> edge;      // heap index -> edge joining it to its parent (-1 for the root)
  int depth = 0;

  int first_leaf() const { return (1 << depth) - 1; }
  int leaf_count() const { return 1 << depth; }

  // Edges joining the siblings of the path root -> leaf to their parents.
  EdgeSet off_path(int leaf_index) const {
    EdgeSet f;
    for (int c = first_leaf() + leaf_index; c > 0; c = (c - 1) / 2) {
      int sib = (c % 2 == 1) ? c + 1 : c - 1;
      f.push_back(edge[sib]);
    }
    std::sort(f.begin(), f.end());
    return f;
  }
};

HeapTree grow_tree(Builder& b, VertexId root, int depth, bool outward) {
  HeapTree t;
  t.depth = depth;
  const int nodes = (1 << (depth + 1)) - 1;
  t.vertex.assign(static_cast<size_t>(nodes), -1);
  t.edge.assign(static_cast<size_t>(nodes), -1);
  t.vertex[0] = root;
  for (int i = 1; i < nodes; ++i) {
    t.vertex[i] = b.vertex();
    VertexId parent = t.vertex[(i - 1) / 2];
    t.edge[i] = outward ? b.add(parent, t.vertex[i]) : b.add(t.vertex[i], parent);
  }
  return t;
}

void guard_size(double vertices) {
  if (vertices > kMaxVertices) throw CapabilityError("family instance exceeds vertex limit");
}

bool power_of_two(int x) { return x >= 1 && (x & (x - 1)) == 0; }

int log2_exact(int x) {
  int d = 0;
  while ((1 << d) < x) ++d;
  return d;
}

FamilyInstance tree_with_sinks(const std::string& family, int depth, int y_count) {
  if (y_count < 1) throw InputError("need at least one Y vertex");
  guard_size(std::ldexp(2.0, depth) + y_count);
  Builder b;
  FamilyInstance out;
  out.family = family;
  out.s = b.vertex();
  HeapTree tree = grow_tree(b, out.s, depth, true);
  for (int i = 1; i < static_cast<int>(tree.edge.size()); ++i) out.tree_edges.push_back(tree.edge[i]);
  for (int i = 0; i < tree.leaf_count(); ++i) out.x.push_back(tree.vertex[tree.first_leaf() + i]);
  for (int j = 0; j < y_count; ++j) out.y.push_back(b.vertex());
  for (int i = 0; i < tree.leaf_count(); ++i) {
    for (VertexId yv : out.y) {
      EdgeId e = b.add(out.x[i], yv);
      out.cross_edges.push_back(e);
      out.witnesses.push_back({e, {out.s, yv}, tree.off_path(i), std::nullopt});
    }
  }
  for (VertexId yv : out.y) b.add(yv, out.s);
  out.graph = b.build();
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

}  // namespace

std::string FamilyInstance::metadata_json() const {
  nlohmann::json j;
  j["family"] = family;
  j["params"] = params;
  j["n"] = graph.vertex_count();
  j["m"] = graph.edge_count();
  j["s"] = s;
  if (t >= 0) j["t"] = t;
  j["x"] = x;
  j["y"] = y;
  j["tree_edges"] = tree_edges;
  j["cross_edges"] = cross_edges;
  auto& w = j["witnesses"] = nlohmann::json::array();
  for (const auto& c : witnesses) {
    nlohmann::json item{{"edge", c.edge}, {"pair", {c.pair.first, c.pair.second}}, {"faults", c.faults}};
    if (c.color) item["color"] = *c.color;
    w.push_back(std::move(item));
  }
  if (!color_leaf.empty()) {
    auto& cl = j["color_leaf"] = nlohmann::json::object();
    for (auto [c, v] : color_leaf) cl[std::to_string(c)] = v;
  }
  return j.dump(2) + "\n";
}

FamilyInstance gen_baswana_tree(int k, int y_count) {
  if (k < 1) throw InputError("baswana tree needs k >= 1");
  if (k > 20) throw CapabilityError("baswana tree limited to k <= 20");
  auto out = tree_with_sinks("baswana", k, y_count);
  out.params = {{"k", k}, {"y", y_count}};
  return out;
}

FamilyInstance gen_bounded_degree_lower(int x_count, int y_count) {
  if (!power_of_two(x_count) || x_count < 2) throw InputError("|X| must be a power of two >= 2");
  auto out = tree_with_sinks("bounded-degree", log2_exact(x_count), y_count);
  out.params = {{"x", x_count}, {"y", y_count}};
  return out;
}

FamilyInstance gen_st_lower(int layers, int k_even) {
  if (layers < 1) throw InputError("st-lower needs at least one layer");
  if (k_even < 2 || k_even % 2 != 0) throw InputError("st-lower needs an even k >= 2");
  const int d = k_even / 2;
  if (d > 10) throw CapabilityError("st-lower limited to k <= 20");
  guard_size(static_cast<double>(layers) * std::ldexp(4.0, d));
  Builder b;
  FamilyInstance out;
  out.family = "st-lower";
  out.params = {{"layers", layers}, {"k", k_even}};
  VertexId root = b.vertex();
  out.s = root;
  for (int i = 0; i < layers; ++i) {
    HeapTree fwd = grow_tree(b, root, d, true);
    VertexId next = b.vertex();
    HeapTree back = grow_tree(b, next, d, false);
    for (int h = 1; h < static_cast<int>(fwd.edge.size()); ++h) out.tree_edges.push_back(fwd.edge[h]);
    for (int h = 1; h < static_cast<int>(back.edge.size()); ++h) out.tree_edges.push_back(back.edge[h]);
    for (int a = 0; a < fwd.leaf_count(); ++a) {
      VertexId xa = fwd.vertex[fwd.first_leaf() + a];
      out.x.push_back(xa);
      for (int c = 0; c < back.leaf_count(); ++c) {
        VertexId xc = back.vertex[back.first_leaf() + c];
        EdgeId e = b.add(xa, xc);
        EdgeSet f = fwd.off_path(a);
        EdgeSet f2 = back.off_path(c);
        f.insert(f.end(), f2.begin(), f2.end());
        std::sort(f.begin(), f.end());
        out.cross_edges.push_back(e);
        out.witnesses.push_back({e, {-1, -1}, std::move(f), std::nullopt});
      }
    }
    for (int c = 0; c < back.leaf_count(); ++c) out.y.push_back(back.vertex[back.first_leaf() + c]);
    root = next;
  }
  out.t = root;
  b.add(out.t, out.s);
  for (auto& w : out.witnesses) w.pair = {out.s, out.t};
  out.graph = b.build();
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

FamilyInstance gen_color_fault_lower(int x_count, int y_count) {
  if (!power_of_two(x_count) || x_count < 2) throw InputError("|X| must be a power of two >= 2");
  if (y_count < 1) throw InputError("need at least one Y vertex");
  const int depth = log2_exact(x_count);
  guard_size(static_cast<double>(x_count) * (depth + 2) + y_count);
  Builder b;
  FamilyInstance out;
  out.family = "color";
  out.params = {{"x", x_count}, {"y", y_count}};
  out.s = b.vertex();
  const int nodes = 2 * x_count - 1;
  const int first_leaf = x_count - 1;
  std::vector<VertexId> vertex(static_cast<size_t>(nodes), -1);
  vertex[0] = out.s;
  for (int i = 1; i < nodes; ++i) vertex[i] = b.vertex();
  // Leaves under heap node c, as 1-based colors.
  auto leaves_under = [&](int c) {
    std::vector<int> colors;
    int lo = c, hi = c;
    while (lo < first_leaf) {
      lo = 2 * lo + 1;
      hi = 2 * hi + 2;
    }
    for (int l = lo; l <= hi; ++l) colors.push_back(l - first_leaf + 1);
    return colors;
  };
  for (int c = 1; c < nodes; ++c) {
    int sib = (c % 2 == 1) ? c + 1 : c - 1;
    auto colors = leaves_under(sib);
    VertexId from = vertex[(c - 1) / 2];
    for (size_t i = 0; i < colors.size(); ++i) {
      VertexId to = i + 1 == colors.size() ? vertex[c] : b.vertex();
      out.tree_edges.push_back(b.add(from, to, colors[i]));
      from = to;
    }
  }
  for (int l = 0; l < x_count; ++l) {
    out.x.push_back(vertex[first_leaf + l]);
    out.color_leaf[l + 1] = vertex[first_leaf + l];
  }
  for (int j = 0; j < y_count; ++j) out.y.push_back(b.vertex());
  std::vector<std::pair<EdgeId, int>> cross;
  for (int l = 0; l < x_count; ++l) {
    for (VertexId yv : out.y) {
      EdgeId e = b.add(out.x[l], yv, 0);
      out.cross_edges.push_back(e);
      cross.push_back({e, l + 1});
    }
  }
  for (VertexId yv : out.y) b.add(yv, out.s, 0);
  out.graph = b.build();
  for (auto [e, color] : cross) {
    CrossWitness w;
    w.edge = e;
    w.pair = {out.s, out.graph.edge(e).head};
    w.color = color;
    for (const auto& edge : out.graph.edges()) {
      if (edge.color == color) w.faults.push_back(edge.id);
    }
    out.witnesses.push_back(std::move(w));
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

DiGraph gen_random(int n, int m, std::uint64_t seed, bool ensure_strongly_connected) {
  if (n < 0 || m < 0) throw InputError("random graph needs n, m >= 0");
  if (m > 0 && n < 2) throw InputError("random edges need at least two vertices");
  guard_size(n);
  std::mt19937_64 rng(seed);
  std::vector<EdgeSpec> edges;
  if (ensure_strongly_connected && n >= 2) {
    std::vector<VertexId> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n; ++i) edges.push_back({order[i], order[(i + 1) % n], std::nullopt});
  }
  std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
  for (int i = 0; i < m; ++i) {
    VertexId u = pick(rng);
    VertexId v = pick(rng);
    while (v == u) v = pick(rng);
    edges.push_back({u, v, std::nullopt});
  }
  return DiGraph(n, edges);
}

}  // namespace sccp
