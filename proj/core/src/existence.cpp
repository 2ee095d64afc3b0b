#include "ordmap/existence.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>

#include "ordmap/errors.hpp"

namespace ordmap {

namespace {

void check_equal_orders(const OrderSpectrum& src, const OrderSpectrum& dst) {
  if (src.group_order() != dst.group_order()) {
    throw DomainError("group orders differ: " + std::to_string(src.group_order()) + " vs " +
                      std::to_string(dst.group_order()));
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> classes_of(const OrderSpectrum& s) {
  return {s.entries().begin(), s.entries().end()};
}

// Edge-list max-flow network with deterministic adjacency order.
struct FlowNetwork {
  struct Edge {
    std::size_t to;
    std::uint64_t cap;
    std::size_t rev;  // index of the reverse edge in adj[to]
  };

  explicit FlowNetwork(std::size_t nodes) : adj(nodes) {}

  void add_edge(std::size_t from, std::size_t to, std::uint64_t cap) {
    adj[from].push_back(Edge{to, cap, adj[to].size()});
    adj[to].push_back(Edge{from, 0, adj[from].size() - 1});
  }

  // Edmonds-Karp; adjacency lists are scanned in insertion order, so the
  // resulting flow is a pure function of the construction order.
  std::uint64_t max_flow(std::size_t source, std::size_t sink) {
    std::uint64_t total = 0;
    std::vector<std::pair<std::size_t, std::size_t>> parent(adj.size());  // (node, edge index)
    while (true) {
      std::vector<bool> seen(adj.size(), false);
      std::deque<std::size_t> queue{source};
      seen[source] = true;
      bool found = false;
      while (!queue.empty() && !found) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < adj[u].size(); ++i) {
          const Edge& e = adj[u][i];
          if (e.cap == 0 || seen[e.to]) continue;
          seen[e.to] = true;
          parent[e.to] = {u, i};
          if (e.to == sink) {
            found = true;
            break;
          }
          queue.push_back(e.to);
        }
      }
      if (!found) return total;
      std::uint64_t bottleneck = UINT64_MAX;
      for (std::size_t v = sink; v != source;) {
        auto [u, i] = parent[v];
        bottleneck = std::min(bottleneck, adj[u][i].cap);
        v = u;
      }
      for (std::size_t v = sink; v != source;) {
        auto [u, i] = parent[v];
        Edge& e = adj[u][i];
        e.cap -= bottleneck;
        adj[e.to][e.rev].cap += bottleneck;
        v = u;
      }
      total += bottleneck;
    }
  }

  std::vector<bool> residual_reachable(std::size_t source) const {
    std::vector<bool> seen(adj.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const Edge& e : adj[u]) {
        if (e.cap == 0 || seen[e.to]) continue;
        seen[e.to] = true;
        queue.push_back(e.to);
      }
    }
    return seen;
  }

  std::vector<std::vector<Edge>> adj;
};

}  // namespace

ClassGraph build_class_graph(const OrderSpectrum& src, const OrderSpectrum& dst,
                             ComparisonMode mode) {
  check_equal_orders(src, dst);
  ClassGraph graph;
  graph.source_classes = classes_of(src);
  graph.target_classes = classes_of(dst);
  for (const auto& [d, src_count] : graph.source_classes) {
    for (const auto& [e, dst_count] : graph.target_classes) {
      if (mode_holds(mode, d, e)) graph.edges.emplace_back(d, e);
    }
  }
  return graph;
}

ExistenceCertificate exists_bijection(const OrderSpectrum& src, const OrderSpectrum& dst,
                                      ComparisonMode mode) {
  ClassGraph graph = build_class_graph(src, dst, mode);
  const std::size_t s_count = graph.source_classes.size();
  const std::size_t t_count = graph.target_classes.size();
  const std::uint64_t total = src.group_order();

  // Node layout: 0 = source, 1..s_count = source classes,
  // s_count+1..s_count+t_count = target classes, last = sink.
  FlowNetwork net(s_count + t_count + 2);
  const std::size_t source = 0;
  const std::size_t sink = s_count + t_count + 1;
  auto src_node = [&](std::size_t i) { return 1 + i; };
  auto dst_node = [&](std::size_t j) { return 1 + s_count + j; };

  for (std::size_t i = 0; i < s_count; ++i) {
    net.add_edge(source, src_node(i), graph.source_classes[i].second);
  }
  // Class-to-class edges are unbounded; `total` can never be exceeded.
  std::size_t edge_cursor = 0;
  std::vector<std::pair<std::size_t, std::size_t>> class_edges;  // indices into adj for readback
  for (std::size_t i = 0; i < s_count; ++i) {
    for (std::size_t j = 0; j < t_count; ++j) {
      if (edge_cursor < graph.edges.size() &&
          graph.edges[edge_cursor] ==
              std::make_pair(graph.source_classes[i].first, graph.target_classes[j].first)) {
        class_edges.emplace_back(src_node(i), net.adj[src_node(i)].size());
        net.add_edge(src_node(i), dst_node(j), total);
        ++edge_cursor;
      }
    }
  }
  for (std::size_t j = 0; j < t_count; ++j) {
    net.add_edge(dst_node(j), sink, graph.target_classes[j].second);
  }

  ExistenceCertificate cert;
  cert.mode = mode;
  cert.group_order = total;
  cert.feasible = net.max_flow(source, sink) == total;

  if (cert.feasible) {
    std::size_t k = 0;
    for (const auto& [d, e] : graph.edges) {
      auto [node, idx] = class_edges[k++];
      std::uint64_t flow = total - net.adj[node][idx].cap;
      if (flow > 0) cert.assignment[{d, e}] = flow;
    }
  } else {
    // Min-cut side of the residual graph: the reachable source classes
    // form a Hall violator (their class edges are uncut, so every
    // neighbour is reachable and its sink edge saturated).
    std::vector<bool> reachable = net.residual_reachable(source);
    for (std::size_t i = 0; i < s_count; ++i) {
      if (reachable[src_node(i)]) cert.witness.push_back(graph.source_classes[i].first);
    }
  }
  return cert;
}

PairingTable realize_bijection(const GroupSpec& g, const GroupSpec& c,
                               const ExistenceCertificate& cert, std::uint64_t bound) {
  if (!cert.feasible) throw DomainError("cannot realize an infeasible certificate");
  if (g.order() != c.order() || g.order() != cert.group_order) {
    throw DomainError("certificate group order does not match the given groups");
  }

  std::vector<Element> src_elems = enumerate_elements(g, bound);
  std::vector<Element> dst_elems = enumerate_elements(c, bound);

  // Bucket target elements by order, preserving canonical order inside
  // each bucket.
  std::map<std::uint64_t, std::deque<std::size_t>> dst_buckets;
  std::vector<std::uint64_t> dst_orders(dst_elems.size());
  for (std::size_t j = 0; j < dst_elems.size(); ++j) {
    dst_orders[j] = element_order(c, dst_elems[j]);
    dst_buckets[dst_orders[j]].push_back(j);
  }

  // Per source class: the (target order, remaining count) schedule in
  // assignment order.
  std::map<std::uint64_t, std::deque<std::pair<std::uint64_t, std::uint64_t>>> schedule;
  for (const auto& [pair, count] : cert.assignment) {
    schedule[pair.first].emplace_back(pair.second, count);
  }

  PairingTable table{g, c, cert.mode, {}, false};
  table.rows.reserve(src_elems.size());
  bool all_hold = true;

  for (const Element& x : src_elems) {
    std::uint64_t d = element_order(g, x);
    auto sched_it = schedule.find(d);
    if (sched_it == schedule.end() || sched_it->second.empty()) {
      throw DomainError("certificate does not cover all source elements of order " +
                        std::to_string(d));
    }
    auto& [target_order, remaining] = sched_it->second.front();
    auto bucket_it = dst_buckets.find(target_order);
    if (bucket_it == dst_buckets.end() || bucket_it->second.empty()) {
      throw DomainError("certificate requests more order-" + std::to_string(target_order) +
                        " targets than the codomain provides");
    }
    std::size_t j = bucket_it->second.front();
    bucket_it->second.pop_front();
    if (--remaining == 0) sched_it->second.pop_front();

    bool holds = mode_holds(cert.mode, d, dst_orders[j]);
    all_hold = all_hold && holds;
    table.rows.push_back(PairingRow{x, d, dst_elems[j], dst_orders[j], holds});
  }
  table.all_hold = all_hold;
  return table;
}

namespace {

// Backtracking distribution of source class counts over admissible target
// classes. Kept deliberately naive: this is the oracle the flow solver is
// checked against.
bool distribute(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& src_classes,
                std::size_t src_idx,
                const std::vector<std::vector<std::size_t>>& adjacency,
                std::vector<std::uint64_t>& dst_remaining) {
  if (src_idx == src_classes.size()) return true;
  const auto& adj = adjacency[src_idx];
  std::uint64_t need = src_classes[src_idx].second;

  // Suffix capacities let us abandon a branch that can no longer fit.
  std::vector<std::uint64_t> suffix(adj.size() + 1, 0);
  for (std::size_t i = adj.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1] + dst_remaining[adj[i]];
  }

  std::function<bool(std::size_t, std::uint64_t)> place = [&](std::size_t pos,
                                                              std::uint64_t remaining) {
    if (remaining == 0) return distribute(src_classes, src_idx + 1, adjacency, dst_remaining);
    if (pos == adj.size() || suffix[pos] < remaining) return false;
    std::uint64_t here = std::min(remaining, dst_remaining[adj[pos]]);
    for (std::uint64_t take = here + 1; take-- > 0;) {
      dst_remaining[adj[pos]] -= take;
      if (place(pos + 1, remaining - take)) return true;
      dst_remaining[adj[pos]] += take;
    }
    return false;
  };
  return place(0, need);
}

}  // namespace

bool brute_force_exists(const OrderSpectrum& src, const OrderSpectrum& dst,
                        ComparisonMode mode) {
  check_equal_orders(src, dst);
  if (src.group_order() > 64) {
    throw ResourceError("group order " + std::to_string(src.group_order()) +
                        " exceeds brute-force bound 64");
  }
  auto src_classes = classes_of(src);
  auto dst_classes = classes_of(dst);
  std::vector<std::vector<std::size_t>> adjacency(src_classes.size());
  for (std::size_t i = 0; i < src_classes.size(); ++i) {
    for (std::size_t j = 0; j < dst_classes.size(); ++j) {
      if (mode_holds(mode, src_classes[i].first, dst_classes[j].first)) {
        adjacency[i].push_back(j);
      }
    }
  }
  std::vector<std::uint64_t> dst_remaining(dst_classes.size());
  for (std::size_t j = 0; j < dst_classes.size(); ++j) {
    dst_remaining[j] = dst_classes[j].second;
  }
  return distribute(src_classes, 0, adjacency, dst_remaining);
}

}  // namespace ordmap
