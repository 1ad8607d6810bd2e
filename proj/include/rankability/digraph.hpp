#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rankability {

// order[p] is the vertex placed at rank position p, position 0 ranked best.
using VertexOrdering = std::vector<int>;

bool is_vertex_ordering(const VertexOrdering& order, int n);

// Simple unweighted directed graph on n >= 2 labeled vertices, stored as a
// dense row-major 0/1 adjacency matrix with zero diagonal. Instances are
// immutable; edits return new graphs.
class Digraph {
 public:
  static Digraph from_adjacency(const std::vector<std::vector<int>>& matrix);
  static Digraph from_bits(int n, std::vector<std::uint8_t> bits);

  // Edges i -> j for all i < j: every vertex beats all later vertices.
  static Digraph complete_dominance(int n);

  // 0 -> 1 -> ... -> n-1 -> 0 and nothing else.
  static Digraph cycle(int n);

  int n() const { return n_; }
  bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  int edge_count() const;
  std::vector<int> out_degrees() const;

  Digraph toggle_edge(int i, int j) const;

  // New graph where vertex i is renamed to perm[i].
  Digraph relabeled(const VertexOrdering& perm) const;

  const std::vector<std::uint8_t>& bits() const { return adj_; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Digraph(int n, std::vector<std::uint8_t> bits) : n_(n), adj_(std::move(bits)) {}

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// Text format: first line is n, then n lines of n space-separated 0/1 entries.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& g);
Digraph load_digraph(const std::string& path);
void save_digraph(const std::string& path, const Digraph& g);

}  // namespace rankability
