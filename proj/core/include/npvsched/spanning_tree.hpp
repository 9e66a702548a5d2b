#pragma once

#include <span>
#include <vector>

namespace npvsched {

/// 1-based activity index. Vertex 1 is the start dummy, vertex n the end dummy.
using Vertex = int;

enum class TreeRole { kEarly, kCurrent, kSteepest, kLate };

/// Mutable spanning tree over vertices 1..n used as the search structure of
/// every solver. Tree edges are oriented like the precedence edges they
/// stand for. The extra (1, n) deadline edge is kept out of the adjacency
/// lists and flagged separately, since the solvers never search through it.
class SpanningTree {
 public:
  SpanningTree() = default;
  explicit SpanningTree(int n, TreeRole role = TreeRole::kCurrent);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  TreeRole role() const { return role_; }
  void set_role(TreeRole role) { role_ = role; }

  /// Adjacency lists are kept sorted by vertex id.
  void add_edge(Vertex from, Vertex to);
  void remove_edge(Vertex from, Vertex to);
  bool has_edge(Vertex from, Vertex to) const;

  void set_extra_edge(bool present) { extra_edge_ = present; }
  bool extra_edge_present() const { return extra_edge_; }

  std::span<const Vertex> successors(Vertex v) const { return out_[index(v)]; }
  std::span<const Vertex> predecessors(Vertex v) const { return in_[index(v)]; }

  /// Regular edges plus one for the extra edge when present.
  int edge_count() const { return edge_count_ + (extra_edge_ ? 1 : 0); }

  /// Edges in ascending (from, to) order, excluding the extra edge.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// n - 1 edges (counting the extra edge) forming one connected component.
  bool is_spanning_tree() const;

 private:
  static std::size_t index(Vertex v) { return static_cast<std::size_t>(v - 1); }

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  int edge_count_ = 0;
  bool extra_edge_ = false;
  TreeRole role_ = TreeRole::kCurrent;
};

}  // namespace npvsched
