#include "rankability/digraph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rankability/error.hpp"

namespace rankability {

namespace {

void check_n(int n) {
  if (n < 2) throw Error(Errc::too_small, "graph needs at least 2 vertices, got " + std::to_string(n));
}

}  // namespace

bool is_vertex_ordering(const VertexOrdering& order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Digraph Digraph::from_adjacency(const std::vector<std::vector<int>>& matrix) {
  int n = static_cast<int>(matrix.size());
  check_n(n);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n)
      throw Error(Errc::non_square, "row " + std::to_string(i) + " has " +
                                        std::to_string(matrix[i].size()) + " entries, expected " +
                                        std::to_string(n));
    for (int j = 0; j < n; ++j) {
      int v = matrix[i][j];
      if (v != 0 && v != 1)
        throw Error(Errc::non_binary_entry, "entry (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ") is " + std::to_string(v));
      if (i == j && v != 0)
        throw Error(Errc::self_loop, "nonzero diagonal at vertex " + std::to_string(i));
      bits[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(v);
    }
  }
  return Digraph(n, std::move(bits));
}

Digraph Digraph::from_bits(int n, std::vector<std::uint8_t> bits) {
  check_n(n);
  if (bits.size() != static_cast<std::size_t>(n) * n)
    throw Error(Errc::non_square, "bit buffer holds " + std::to_string(bits.size()) +
                                      " entries, expected " + std::to_string(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint8_t v = bits[static_cast<std::size_t>(i) * n + j];
      if (v != 0 && v != 1)
        throw Error(Errc::non_binary_entry, "entry (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ") is " + std::to_string(v));
      if (i == j && v != 0)
        throw Error(Errc::self_loop, "nonzero diagonal at vertex " + std::to_string(i));
    }
  }
  return Digraph(n, std::move(bits));
}

Digraph Digraph::complete_dominance(int n) {
  check_n(n);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bits[static_cast<std::size_t>(i) * n + j] = 1;
  return Digraph(n, std::move(bits));
}

Digraph Digraph::cycle(int n) {
  check_n(n);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i) * n + (i + 1) % n] = 1;
  return Digraph(n, std::move(bits));
}

int Digraph::edge_count() const {
  int count = 0;
  for (std::uint8_t b : adj_) count += b;
  return count;
}

std::vector<int> Digraph::out_degrees() const {
  std::vector<int> deg(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) deg[i] += adj_[static_cast<std::size_t>(i) * n_ + j];
  return deg;
}

Digraph Digraph::toggle_edge(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw Error(Errc::index_out_of_range, "toggle_edge(" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") on " + std::to_string(n_) +
                                              " vertices");
  if (i == j) throw Error(Errc::self_loop, "toggle_edge on the diagonal");
  std::vector<std::uint8_t> bits = adj_;
  bits[static_cast<std::size_t>(i) * n_ + j] ^= 1;
  return Digraph(n_, std::move(bits));
}

Digraph Digraph::relabeled(const VertexOrdering& perm) const {
  if (!is_vertex_ordering(perm, n_))
    throw Error(Errc::length_mismatch, "relabeling is not a permutation of " + std::to_string(n_) +
                                           " vertices");
  std::vector<std::uint8_t> bits(adj_.size(), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      bits[static_cast<std::size_t>(perm[i]) * n_ + perm[j]] =
          adj_[static_cast<std::size_t>(i) * n_ + j];
  return Digraph(n_, std::move(bits));
}

Digraph read_digraph(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw Error(Errc::io_error, "missing vertex count");
  if (n < 2) throw Error(Errc::too_small, "graph needs at least 2 vertices, got " + std::to_string(n));
  std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> matrix[i][j]))
        throw Error(Errc::io_error, "truncated adjacency matrix at row " + std::to_string(i));
  return Digraph::from_adjacency(matrix);
}

void write_digraph(std::ostream& out, const Digraph& g) {
  out << g.n() << '\n';
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (j) out << ' ';
      out << (g.edge(i, j) ? 1 : 0);
    }
    out << '\n';
  }
}

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return read_digraph(in);
}

void save_digraph(const std::string& path, const Digraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  write_digraph(out, g);
  if (!out) throw Error(Errc::io_error, "write failed for " + path);
}

}  // namespace rankability
