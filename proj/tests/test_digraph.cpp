#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "rankability/digraph.hpp"
#include "rankability/error.hpp"

#include "test_helpers.hpp"

using namespace rankability;
using helpers::throws_code;

TEST_CASE("from_adjacency wraps a valid matrix unchanged") {
  Digraph g = helpers::example_graph();
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.edge(0, 1));
  CHECK(g.edge(0, 2));
  CHECK(g.edge(0, 3));
  CHECK(g.edge(2, 1));
  CHECK(g.edge(3, 1));
  CHECK_FALSE(g.edge(1, 0));
  CHECK_FALSE(g.edge(2, 3));
}

TEST_CASE("from_adjacency accepts the empty graph") {
  Digraph g = Digraph::from_adjacency({{0, 0}, {0, 0}});
  CHECK(g.edge_count() == 0);
}

TEST_CASE("construction rejects invalid matrices") {
  CHECK(throws_code([] { Digraph::from_adjacency({{0, 1}, {0, 0}, {0, 0}}); },
                    Errc::non_square));
  CHECK(throws_code([] { Digraph::from_adjacency({{0, 1, 0}, {0, 1, 0}, {0, 0, 0}}); },
                    Errc::self_loop));
  CHECK(throws_code([] { Digraph::from_adjacency({{0, 2}, {0, 0}}); }, Errc::non_binary_entry));
  CHECK(throws_code([] { Digraph::from_adjacency({{0}}); }, Errc::too_small));
  CHECK(throws_code([] { Digraph::from_bits(2, {0, 1, 0}); }, Errc::non_square));
}

TEST_CASE("complete_dominance is strict upper-triangular ones") {
  for (int n : {2, 4, 7}) {
    Digraph g = Digraph::complete_dominance(n);
    CHECK(g.edge_count() == n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(g.edge(i, j) == (i < j));
  }
  CHECK(throws_code([] { Digraph::complete_dominance(1); }, Errc::too_small));
}

TEST_CASE("complete_dominance out-degrees count down to zero") {
  CHECK(Digraph::complete_dominance(4).out_degrees() == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("transpose of complete dominance relabeled in reverse is itself") {
  int n = 5;
  Digraph g = Digraph::complete_dominance(n);
  std::vector<std::uint8_t> transposed(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.edge(i, j)) transposed[static_cast<std::size_t>(j) * n + i] = 1;
  VertexOrdering reverse(n);
  for (int i = 0; i < n; ++i) reverse[i] = n - 1 - i;
  CHECK(Digraph::from_bits(n, transposed).relabeled(reverse) == g);
}

TEST_CASE("cycle wires i to i+1 mod n") {
  Digraph g = Digraph::cycle(3);
  CHECK(g.edge(0, 1));
  CHECK(g.edge(1, 2));
  CHECK(g.edge(2, 0));
  CHECK(g.edge_count() == 3);

  Digraph two = Digraph::cycle(2);
  CHECK(two.edge(0, 1));
  CHECK(two.edge(1, 0));

  CHECK(Digraph::cycle(5).out_degrees() == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("example graph out-degrees") {
  CHECK(helpers::example_graph().out_degrees() == std::vector<int>{3, 0, 1, 1});
}

TEST_CASE("out_degrees sums to the edge count") {
  Digraph g = helpers::example_graph();
  int total = 0;
  for (int d : g.out_degrees()) total += d;
  CHECK(total == g.edge_count());
}

TEST_CASE("toggle_edge flips exactly one entry and is an involution") {
  Digraph g = Digraph::complete_dominance(4);
  Digraph h = g.toggle_edge(2, 3);
  CHECK_FALSE(h.edge(2, 3));
  CHECK(h.edge_count() == g.edge_count() - 1);
  int changed = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) changed += g.edge(i, j) != h.edge(i, j);
  CHECK(changed == 1);
  CHECK(h.toggle_edge(2, 3) == g);

  CHECK(throws_code([&] { (void)g.toggle_edge(1, 1); }, Errc::self_loop));
  CHECK(throws_code([&] { (void)g.toggle_edge(0, 4); }, Errc::index_out_of_range));
}

TEST_CASE("ordering validation") {
  CHECK(is_vertex_ordering({2, 0, 1}, 3));
  CHECK_FALSE(is_vertex_ordering({0, 1}, 3));
  CHECK_FALSE(is_vertex_ordering({0, 0, 1}, 3));
  CHECK_FALSE(is_vertex_ordering({0, 1, 3}, 3));
}

TEST_CASE("relabeling permutes rows and columns together") {
  Digraph g = helpers::example_graph();
  Digraph h = g.relabeled({1, 2, 3, 0});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(h.edge((i + 1) % 4, (j + 1) % 4) == g.edge(i, j));
  CHECK(throws_code([&] { (void)g.relabeled({0, 1, 2}); }, Errc::length_mismatch));
}

TEST_CASE("text round-trip preserves the graph") {
  Digraph g = helpers::example_graph();
  std::stringstream buffer;
  write_digraph(buffer, g);
  CHECK(read_digraph(buffer) == g);
}

TEST_CASE("file round-trip preserves the graph") {
  Digraph g = Digraph::cycle(6);
  std::string path = "digraph_roundtrip.txt";
  save_digraph(path, g);
  CHECK(load_digraph(path) == g);
  std::remove(path.c_str());
}

TEST_CASE("reading malformed text reports io errors") {
  std::stringstream empty;
  CHECK(throws_code([&] { read_digraph(empty); }, Errc::io_error));
  std::stringstream truncated("3\n0 1 0\n0 0");
  CHECK(throws_code([&] { read_digraph(truncated); }, Errc::io_error));
  CHECK(throws_code([] { load_digraph("no_such_file.txt"); }, Errc::io_error));
}
