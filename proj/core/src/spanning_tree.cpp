#include "npvsched/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace npvsched {

namespace {

void sorted_insert(std::vector<Vertex>& list, Vertex v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

bool sorted_erase(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

}  // namespace

SpanningTree::SpanningTree(int n, TreeRole role)
    : out_(static_cast<std::size_t>(n)),
      in_(static_cast<std::size_t>(n)),
      role_(role) {}

void SpanningTree::add_edge(Vertex from, Vertex to) {
  if (has_edge(from, to)) {
    throw std::logic_error("tree edge added twice");
  }
  sorted_insert(out_[index(from)], to);
  sorted_insert(in_[index(to)], from);
  ++edge_count_;
}

void SpanningTree::remove_edge(Vertex from, Vertex to) {
  if (!sorted_erase(out_[index(from)], to)) {
    throw std::logic_error("removing a missing tree edge");
  }
  sorted_erase(in_[index(to)], from);
  --edge_count_;
}

bool SpanningTree::has_edge(Vertex from, Vertex to) const {
  const auto& list = out_[index(from)];
  return std::binary_search(list.begin(), list.end(), to);
}

std::vector<std::pair<Vertex, Vertex>> SpanningTree::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  result.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex v = 1; v <= vertex_count(); ++v) {
    for (Vertex w : successors(v)) result.emplace_back(v, w);
  }
  return result;
}

bool SpanningTree::is_spanning_tree() const {
  const int n = vertex_count();
  if (n == 0) return true;
  if (edge_count() != n - 1) return false;

  // union-find over the undirected edges
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  };
  for (auto [from, to] : edges()) {
    if (!unite(from, to)) return false;
  }
  if (extra_edge_ && !unite(1, n)) return false;
  return true;
}

}  // namespace npvsched
