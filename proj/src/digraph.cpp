#include "sccpres/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "sccpres/errors.hpp"

namespace sccp {

DiGraph::DiGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  rebuild_indexes();
}

DiGraph::DiGraph(int vertex_count, std::span<const EdgeSpec> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    edges_.push_back(Edge{static_cast<EdgeId>(edges_.size()), e.tail, e.head, e.color});
  }
  rebuild_indexes();
}

DiGraph::DiGraph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges)
    : n_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    edges_.push_back(Edge{static_cast<EdgeId>(edges_.size()), u, v, std::nullopt});
  }
  rebuild_indexes();
}

DiGraph::DiGraph(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges)
    : DiGraph(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size())) {}

DiGraph DiGraph::with_ids(int vertex_count, std::vector<Edge> edges) {
  DiGraph g;
  if (vertex_count < 0) throw InputError("negative vertex count");
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  g.rebuild_indexes();
  return g;
}

void DiGraph::rebuild_indexes() {
  max_id_ = -1;
  for (const auto& e : edges_) {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.tail) + " -> " +
                       std::to_string(e.head));
    }
    if (e.id < 0) throw InputError("negative edge id");
    max_id_ = std::max(max_id_, e.id);
  }
  pos_of_id_.assign(static_cast<size_t>(max_id_ + 1), -1);
  for (int p = 0; p < edge_count(); ++p) {
    auto& slot = pos_of_id_[static_cast<size_t>(edges_[p].id)];
    if (slot != -1) throw InputError("duplicate edge id " + std::to_string(edges_[p].id));
    slot = p;
  }

  // Counting sort into CSR; positions stay ascending within each list.
  out_start_.assign(static_cast<size_t>(n_) + 1, 0);
  in_start_.assign(static_cast<size_t>(n_) + 1, 0);
  for (const auto& e : edges_) {
    ++out_start_[e.tail + 1];
    ++in_start_[e.head + 1];
  }
  for (int v = 0; v < n_; ++v) {
    out_start_[v + 1] += out_start_[v];
    in_start_[v + 1] += in_start_[v];
  }
  out_list_.assign(edges_.size(), 0);
  in_list_.assign(edges_.size(), 0);
  std::vector<int> oc(out_start_.begin(), out_start_.end() - 1);
  std::vector<int> ic(in_start_.begin(), in_start_.end() - 1);
  for (int p = 0; p < edge_count(); ++p) {
    out_list_[oc[edges_[p].tail]++] = p;
    in_list_[ic[edges_[p].head]++] = p;
  }
}

bool DiGraph::has_edge_id(EdgeId id) const {
  return id >= 0 && id <= max_id_ && pos_of_id_[static_cast<size_t>(id)] != -1;
}

int DiGraph::position_of(EdgeId id) const {
  if (!has_edge_id(id)) throw InputError("unknown edge id " + std::to_string(id));
  return pos_of_id_[static_cast<size_t>(id)];
}

std::span<const int> DiGraph::out_positions(VertexId v) const {
  return {out_list_.data() + out_start_[v], static_cast<size_t>(out_start_[v + 1] - out_start_[v])};
}

std::span<const int> DiGraph::in_positions(VertexId v) const {
  return {in_list_.data() + in_start_[v], static_cast<size_t>(in_start_[v + 1] - in_start_[v])};
}

EdgeSet DiGraph::edge_ids() const {
  EdgeSet ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

inline bool alive_at(const EdgeMask& alive, int p) { return alive.empty() || alive[p]; }

// Iterative Tarjan.  Emits components sinks-first.
template <typename OnComponent>
void tarjan(const DiGraph& g, const EdgeMask& alive, OnComponent&& emit) {
  const int n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, size_t>> call;
  int counter = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      auto outs = g.out_positions(v);
      if (i < outs.size()) {
        int p = outs[i++];
        if (!alive_at(alive, p)) continue;
        VertexId w = g.at(p).head;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      VertexId done = v;
      call.pop_back();
      if (!call.empty()) {
        VertexId parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        VertexSet comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        emit(std::move(comp));
      }
    }
  }
}

}  // namespace

SccPartition scc(const DiGraph& g) { return scc(g, {}); }

SccPartition scc(const DiGraph& g, const EdgeMask& alive) {
  std::vector<VertexSet> sinks_first;
  tarjan(g, alive, [&](VertexSet comp) {
    std::sort(comp.begin(), comp.end());
    sinks_first.push_back(std::move(comp));
  });
  // Relabel by smallest vertex so component ids are canonical.
  std::vector<int> order(sinks_first.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sinks_first[a].front() < sinks_first[b].front(); });
  std::vector<int> new_id(order.size());
  SccPartition out;
  out.component_of.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<int>(i);
    for (VertexId v : sinks_first[order[i]]) out.component_of[v] = static_cast<int>(i);
    out.components.push_back(std::move(sinks_first[order[i]]));
  }
  for (auto it = new_id.rbegin(); it != new_id.rend(); ++it) out.topological_order.push_back(*it);
  return out;
}

std::vector<int> scc_labels(const DiGraph& g, const EdgeMask& alive) {
  const int n = g.vertex_count();
  std::vector<int> raw(n, -1);
  int c = 0;
  tarjan(g, alive, [&](const VertexSet& comp) {
    for (VertexId v : comp) raw[v] = c;
    ++c;
  });
  std::vector<int> remap(c, -1), labels(n);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (remap[raw[v]] == -1) remap[raw[v]] = next++;
    labels[v] = remap[raw[v]];
  }
  return labels;
}

std::vector<char> reachable_from(const DiGraph& g, std::span<const VertexId> sources,
                                 const EdgeMask& alive) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> queue;
  for (VertexId s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int p : g.out_positions(queue[i])) {
      if (!alive_at(alive, p)) continue;
      VertexId w = g.at(p).head;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<char> reaching(const DiGraph& g, std::span<const VertexId> targets, const EdgeMask& alive) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> queue;
  for (VertexId t : targets) {
    if (!seen[t]) {
      seen[t] = 1;
      queue.push_back(t);
    }
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int p : g.in_positions(queue[i])) {
      if (!alive_at(alive, p)) continue;
      VertexId w = g.at(p).tail;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

DiGraph remove_edges(const DiGraph& g, std::span<const EdgeId> faults) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId id : faults) drop[g.position_of(id)] = 1;
  std::vector<Edge> kept;
  for (int p = 0; p < g.edge_count(); ++p) {
    if (!drop[p]) kept.push_back(g.at(p));
  }
  return DiGraph::with_ids(g.vertex_count(), std::move(kept));
}

DiGraph restrict_to(const DiGraph& g, std::span<const EdgeId> keep) {
  std::vector<char> take(g.edge_count(), 0);
  for (EdgeId id : keep) take[g.position_of(id)] = 1;
  std::vector<Edge> kept;
  for (int p = 0; p < g.edge_count(); ++p) {
    if (take[p]) kept.push_back(g.at(p));
  }
  return DiGraph::with_ids(g.vertex_count(), std::move(kept));
}

DiGraph reverse(const DiGraph& g) {
  std::vector<Edge> flipped(g.edges().begin(), g.edges().end());
  for (auto& e : flipped) std::swap(e.tail, e.head);
  return DiGraph::with_ids(g.vertex_count(), std::move(flipped));
}

DiGraph add_edges(const DiGraph& g, std::span<const EdgeSpec> extra) {
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  EdgeId next = g.max_edge_id() + 1;
  for (const auto& e : extra) all.push_back(Edge{next++, e.tail, e.head, e.color});
  return DiGraph::with_ids(g.vertex_count(), std::move(all));
}

InducedSubgraph induced(const DiGraph& g, std::span<const VertexId> vertices) {
  InducedSubgraph sub;
  sub.from_parent_vertex.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (VertexId v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range: " + std::to_string(v));
    if (sub.from_parent_vertex[v] != -1) continue;
    sub.from_parent_vertex[v] = static_cast<VertexId>(sub.to_parent_vertex.size());
    sub.to_parent_vertex.push_back(v);
  }
  std::vector<EdgeSpec> specs;
  for (const auto& e : g.edges()) {
    VertexId a = sub.from_parent_vertex[e.tail], b = sub.from_parent_vertex[e.head];
    if (a == -1 || b == -1) continue;
    specs.push_back(EdgeSpec{a, b, e.color});
    sub.to_parent_edge.push_back(e.id);
  }
  sub.graph = DiGraph(static_cast<int>(sub.to_parent_vertex.size()), specs);
  return sub;
}

EdgeMask mask_keeping(const DiGraph& g, std::span<const EdgeId> keep) {
  EdgeMask m(g.edge_count(), 0);
  for (EdgeId id : keep) m[g.position_of(id)] = 1;
  return m;
}

namespace {

bool is_comment_or_blank(const std::string& line) { return line.empty() || line[0] == '#'; }

// Parses space-separated non-negative decimals; rejects anything else.
std::vector<long long> parse_fields(const std::string& line, size_t lineno) {
  std::vector<long long> out;
  size_t i = 0;
  while (i < line.size()) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i || value < 0) {
      throw InputError("line " + std::to_string(lineno) + ": expected non-negative integer");
    }
    out.push_back(value);
    i = static_cast<size_t>(ptr - line.data());
    if (i == line.size()) break;
    if (line[i] != ' ' || i + 1 == line.size()) {
      throw InputError("line " + std::to_string(lineno) + ": fields must be separated by single spaces");
    }
    ++i;
  }
  return out;
}

}  // namespace

DiGraph parse_graph(std::istream& in) {
  std::string line;
  size_t lineno = 0;
  long long n = -1, m = -1;
  std::vector<EdgeSpec> specs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw InputError("line " + std::to_string(lineno) + ": CR line ending");
    if (is_comment_or_blank(line)) continue;
    auto f = parse_fields(line, lineno);
    if (n < 0) {
      if (f.size() != 2) throw InputError("header must be 'n m'");
      n = f[0];
      m = f[1];
      continue;
    }
    if (static_cast<long long>(specs.size()) == m) throw InputError("more edge lines than declared");
    if (f.size() != 2 && f.size() != 3) throw InputError("line " + std::to_string(lineno) + ": expected 'tail head [color]'");
    if (f[0] >= n || f[1] >= n) throw InputError("line " + std::to_string(lineno) + ": vertex out of range");
    EdgeSpec e{static_cast<VertexId>(f[0]), static_cast<VertexId>(f[1]), std::nullopt};
    if (f.size() == 3) e.color = static_cast<int>(f[2]);
    specs.push_back(e);
  }
  if (n < 0) throw InputError("missing header line");
  if (static_cast<long long>(specs.size()) != m) {
    throw InputError("declared " + std::to_string(m) + " edges, found " + std::to_string(specs.size()));
  }
  return DiGraph(static_cast<int>(n), specs);
}

DiGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

DiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const DiGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.tail);
    out += ' ';
    out += std::to_string(e.head);
    if (e.color) {
      out += ' ';
      out += std::to_string(*e.color);
    }
    out += '\n';
  }
  return out;
}

void write_graph_file(const DiGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write graph file: " + path);
  out << serialize_graph(g);
}

std::uint64_t graph_hash(const DiGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_graph(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

EdgeSet normalized_edges(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace sccp
