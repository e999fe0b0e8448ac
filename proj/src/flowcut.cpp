#include "sccpres/flowcut.hpp"

#include <algorithm>
#include <string>

#include "sccpres/errors.hpp"

namespace sccp {

std::vector<char> membership(int n, std::span<const VertexId> set) {
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (VertexId v : set) {
    if (v < 0 || v >= n) throw InputError("vertex out of range: " + std::to_string(v));
    in[v] = 1;
  }
  return in;
}

VertexSet members(const std::vector<char>& flags) {
  VertexSet out;
  for (size_t v = 0; v < flags.size(); ++v) {
    if (flags[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

EdgeSet out_boundary(const DiGraph& g, std::span<const VertexId> side) {
  auto in = membership(g.vertex_count(), side);
  EdgeSet b;
  for (const auto& e : g.edges()) {
    if (in[e.tail] && !in[e.head]) b.push_back(e.id);
  }
  std::sort(b.begin(), b.end());
  return b;
}

EdgeSet in_boundary(const DiGraph& g, std::span<const VertexId> side) {
  auto in = membership(g.vertex_count(), side);
  EdgeSet b;
  for (const auto& e : g.edges()) {
    if (!in[e.tail] && in[e.head]) b.push_back(e.id);
  }
  std::sort(b.begin(), b.end());
  return b;
}

namespace {

void check_terminals(int n, std::span<const VertexId> xs, std::span<const VertexId> ys) {
  if (xs.empty() || ys.empty()) throw InputError("terminal sets must be nonempty");
  auto x = membership(n, xs);
  for (VertexId y : ys) {
    if (y < 0 || y >= n) throw InputError("vertex out of range: " + std::to_string(y));
    if (x[y]) throw InputError("terminal sets X and Y intersect at vertex " + std::to_string(y));
  }
}

}  // namespace

FlowNetwork::FlowNetwork(const DiGraph& g, std::span<const VertexId> sources,
                         std::span<const VertexId> sinks, const EdgeMask& alive)
    : g_(&g), n_(g.vertex_count()), source_(n_), sink_(n_ + 1), big_(g.edge_count() + 1) {
  adj_.resize(static_cast<size_t>(n_) + 2);
  for (int p = 0; p < g.edge_count(); ++p) {
    if (!alive.empty() && !alive[p]) continue;
    const Edge& e = g.at(p);
    if (e.tail == e.head) continue;
    add_arc(e.tail, e.head, 1, p);
  }
  for (VertexId x : sources) add_arc(source_, x, big_, kTerminal);
  for (VertexId y : sinks) add_arc(y, sink_, big_, kTerminal);
}

int FlowNetwork::add_arc(int from, int to, int cap, int tag) {
  int id = static_cast<int>(head_.size());
  head_.push_back(to);
  cap_.push_back(cap);
  tag_.push_back(tag);
  head_.push_back(from);
  cap_.push_back(0);
  tag_.push_back(tag);
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

void FlowNetwork::add_source_arc(VertexId v) { add_arc(source_, v, 1, kArtificial); }

int FlowNetwork::augment(std::optional<int> cap) {
  const int nodes = n_ + 2;
  std::vector<int> via(nodes);
  std::vector<int> queue;
  queue.reserve(nodes);
  while (!cap || flow_ < *cap) {
    std::fill(via.begin(), via.end(), -1);
    via[source_] = -2;
    queue.clear();
    queue.push_back(source_);
    bool found = false;
    for (size_t i = 0; i < queue.size() && !found; ++i) {
      int u = queue[i];
      for (int a : adj_[u]) {
        if (cap_[a] <= 0) continue;
        int w = head_[a];
        if (via[w] != -1) continue;
        via[w] = a;
        if (w == sink_) {
          found = true;
          break;
        }
        queue.push_back(w);
      }
    }
    if (!found) break;
    for (int w = sink_; w != source_;) {
      int a = via[w];
      cap_[a] -= 1;
      cap_[a ^ 1] += 1;
      w = head_[a ^ 1];
    }
    ++flow_;
  }
  return flow_;
}

std::vector<char> FlowNetwork::reaches_sink() const {
  // Backward search: u reaches the sink when some arc u->w has residual
  // capacity and w reaches the sink.  The reverse twin of arc a is a^1 and
  // lives in adj_[w], so scanning adj_[w] finds every arc entering w.
  std::vector<char> seen(static_cast<size_t>(n_) + 2, 0);
  std::vector<int> queue{sink_};
  seen[sink_] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    int w = queue[i];
    for (int twin : adj_[w]) {
      int a = twin ^ 1;  // arc from head_[twin] into w
      if (cap_[a] <= 0) continue;
      int u = head_[twin];
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  seen.resize(static_cast<size_t>(n_));
  return seen;
}

std::vector<char> FlowNetwork::reached_from_source() const {
  std::vector<char> seen(static_cast<size_t>(n_) + 2, 0);
  std::vector<int> queue{source_};
  seen[source_] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (int a : adj_[queue[i]]) {
      if (cap_[a] <= 0) continue;
      int w = head_[a];
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  seen.resize(static_cast<size_t>(n_));
  return seen;
}

std::vector<std::vector<EdgeId>> FlowNetwork::decompose() const {
  // Flow on a forward arc a (even index) equals the residual of its twin.
  std::vector<int> carried(head_.size(), 0);
  for (size_t a = 0; a < head_.size(); a += 2) carried[a] = cap_[a + 1];
  std::vector<size_t> cursor(adj_.size(), 0);
  std::vector<std::vector<EdgeId>> paths;
  for (int unit = 0; unit < flow_; ++unit) {
    std::vector<int> arcs;
    std::vector<int> pos_on_walk(adj_.size(), -1);
    int u = source_;
    pos_on_walk[u] = 0;
    while (u != sink_) {
      int next_arc = -1;
      for (; cursor[u] < adj_[u].size(); ++cursor[u]) {
        int a = adj_[u][cursor[u]];
        if ((a & 1) == 0 && carried[a] > 0) {
          next_arc = a;
          break;
        }
      }
      if (next_arc == -1) break;  // cannot happen for a valid flow
      int w = head_[next_arc];
      if (pos_on_walk[w] != -1) {
        // Cancel the cycle w -> ... -> u -> w and resume from w.
        carried[next_arc] -= 1;
        for (size_t i = static_cast<size_t>(pos_on_walk[w]); i < arcs.size(); ++i) {
          carried[arcs[i]] -= 1;
          pos_on_walk[head_[arcs[i]]] = -1;
        }
        arcs.resize(static_cast<size_t>(pos_on_walk[w]));
        pos_on_walk[w] = static_cast<int>(arcs.size());
        u = w;
        continue;
      }
      arcs.push_back(next_arc);
      pos_on_walk[w] = static_cast<int>(arcs.size());
      u = w;
    }
    if (u != sink_) break;
    std::vector<EdgeId> path;
    for (int a : arcs) {
      carried[a] -= 1;
      if (tag_[a] >= 0) path.push_back(g_->at(tag_[a]).id);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

FlowValue max_flow(const DiGraph& g, std::span<const VertexId> xs, std::span<const VertexId> ys,
                   std::optional<int> cap, bool with_witness) {
  check_terminals(g.vertex_count(), xs, ys);
  FlowNetwork net(g, xs, ys);
  FlowValue out;
  out.value = net.augment(cap);
  if (with_witness) out.witness_paths = net.decompose();
  bool saturated = !cap || out.value < *cap;
  if (saturated) {
    auto reach = net.reaches_sink();
    std::vector<char> side(reach.size());
    for (size_t v = 0; v < reach.size(); ++v) side[v] = !reach[v];
    Cut c;
    c.side = members(side);
    c.direction = Direction::out;
    c.boundary = out_boundary(g, c.side);
    out.min_cut = std::move(c);
  }
  return out;
}

int flow_value(const DiGraph& g, std::span<const VertexId> xs, std::span<const VertexId> ys,
               std::optional<int> cap, const EdgeMask& alive) {
  check_terminals(g.vertex_count(), xs, ys);
  FlowNetwork net(g, xs, ys, alive);
  return net.augment(cap);
}

int flow_value(const DiGraph& g, VertexId s, VertexId t, std::optional<int> cap, const EdgeMask& alive) {
  VertexId xs[] = {s};
  VertexId ys[] = {t};
  return flow_value(g, xs, ys, cap, alive);
}

int symmetric_connectivity(const DiGraph& g, VertexId s, VertexId t, int k, const EdgeMask& alive) {
  if (s == t) throw InputError("symmetric connectivity needs s != t");
  if (k <= 0) return 0;
  int forward = flow_value(g, s, t, k, alive);
  if (forward == 0) return 0;
  return std::min(forward, flow_value(g, t, s, forward, alive));
}

Cut farthest_min_cut(const DiGraph& g, std::span<const VertexId> xs, std::span<const VertexId> ys) {
  return *max_flow(g, xs, ys).min_cut;
}

bool is_out_reachable(const DiGraph& g, std::span<const VertexId> side, std::span<const VertexId> xs) {
  auto in = membership(g.vertex_count(), side);
  EdgeMask alive(g.edge_count(), 1);
  for (int p = 0; p < g.edge_count(); ++p) {
    if (in[g.at(p).tail] && !in[g.at(p).head]) alive[p] = 0;
  }
  auto reach = reachable_from(g, xs, alive);
  return reach == in;
}

bool is_in_reachable(const DiGraph& g, std::span<const VertexId> side, std::span<const VertexId> xs) {
  auto in = membership(g.vertex_count(), side);
  EdgeMask alive(g.edge_count(), 1);
  for (int p = 0; p < g.edge_count(); ++p) {
    if (!in[g.at(p).tail] && in[g.at(p).head]) alive[p] = 0;
  }
  auto reach = reaching(g, xs, alive);
  return reach == in;
}

namespace {

void check_is_cut(const DiGraph& g, const Cut& cut, std::span<const VertexId> xs, std::span<const VertexId> ys) {
  check_terminals(g.vertex_count(), xs, ys);
  auto in = membership(g.vertex_count(), cut.side);
  for (VertexId x : xs) {
    if (!in[x]) throw InputError("not an (X,Y)-cut: X vertex " + std::to_string(x) + " outside side");
  }
  for (VertexId y : ys) {
    if (in[y]) throw InputError("not an (X,Y)-cut: Y vertex " + std::to_string(y) + " inside side");
  }
}

}  // namespace

Cut canonicalize_out_reachable(const DiGraph& g, const Cut& cut, std::span<const VertexId> xs,
                               std::span<const VertexId> ys) {
  check_is_cut(g, cut, xs, ys);
  auto in = membership(g.vertex_count(), cut.side);
  EdgeMask alive(g.edge_count(), 1);
  for (int p = 0; p < g.edge_count(); ++p) {
    if (in[g.at(p).tail] && !in[g.at(p).head]) alive[p] = 0;
  }
  Cut out;
  out.side = members(reachable_from(g, xs, alive));
  out.direction = Direction::out;
  out.boundary = out_boundary(g, out.side);
  return out;
}

Cut canonicalize_in_reachable(const DiGraph& g, const Cut& cut, std::span<const VertexId> xs,
                              std::span<const VertexId> ys) {
  check_is_cut(g, cut, xs, ys);
  auto in = membership(g.vertex_count(), cut.side);
  EdgeMask alive(g.edge_count(), 1);
  for (int p = 0; p < g.edge_count(); ++p) {
    if (!in[g.at(p).tail] && in[g.at(p).head]) alive[p] = 0;
  }
  Cut out;
  out.side = members(reaching(g, xs, alive));
  out.direction = Direction::in;
  out.boundary = in_boundary(g, out.side);
  return out;
}

}  // namespace sccp
