// Copyright 2026 The huckel-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HUCKEL_GRAPH_HPP_
#define HUCKEL_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace huckel {

// Subset of {0, ..., n-1}, stored as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : VertexSet(universe) {
    for (std::size_t v : members) insert(v);
  }

  std::size_t universe() const { return universe_; }

  void insert(std::size_t v) {
    if (v >= universe_) {
      throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                              " outside universe of size " +
                              std::to_string(universe_));
    }
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  bool contains(std::size_t v) const {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < universe_; ++v) {
      if (contains(v)) out.push_back(v);
    }
    return out;
  }

  VertexSet& operator|=(const VertexSet& other) {
    if (other.universe_ != universe_) {
      throw std::invalid_argument("VertexSet: universe mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Undirected simple graph with a bit-packed symmetric adjacency matrix.
// Rows are padded to whole 64-bit words; padding bits are always zero.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n)
      : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

  static Graph from_edges(
      std::size_t n,
      std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return ((bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U) != 0;
  }

  void add_edge(std::size_t u, std::size_t v) { set_edge(u, v, true); }
  void remove_edge(std::size_t u, std::size_t v) { set_edge(u, v, false); }

  // Self-loops are rejected: the graph is simple.
  void set_edge(std::size_t u, std::size_t v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("Graph: self-loop at vertex " +
                                  std::to_string(u));
    }
    set_bit(u, v, present);
    set_bit(v, u, present);
  }

  void toggle_edge(std::size_t u, std::size_t v) {
    set_edge(u, v, !adjacent(u, v));
  }

  std::span<const std::uint64_t> row(std::size_t v) const {
    return {bits_.data() + v * words_per_row_, words_per_row_};
  }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::uint64_t w : row(v)) d += std::popcount(w);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t w : bits_) twice += std::popcount(w);
    return twice / 2;
  }

  std::size_t common_neighbors(std::size_t u, std::size_t v) const {
    auto ru = row(u);
    auto rv = row(v);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_per_row_; ++i) {
      c += std::popcount(ru[i] & rv[i]);
    }
    return c;
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u) {
      if (adjacent(v, u)) out.push_back(u);
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  friend Graph complement(const Graph& g);
  friend Graph seidel_switch(const Graph& g, const VertexSet& y);

 private:
  std::uint64_t* row_data(std::size_t v) {
    return bits_.data() + v * words_per_row_;
  }

  // Mask of the valid bits of word w in a row.
  std::uint64_t valid_mask(std::size_t w) const {
    const std::size_t rem = n_ - 64 * w;
    return rem >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
  }

  void check_vertex(std::size_t v) const {
    if (v >= n_) {
      throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                              " out of range for order " + std::to_string(n_));
    }
  }

  void set_bit(std::size_t u, std::size_t v, bool on) {
    std::uint64_t& w = bits_[u * words_per_row_ + v / 64];
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    w = on ? (w | mask) : (w & ~mask);
  }

  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Common small graphs used throughout the tests and CLI.
inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// K_{1,n-1} with centre 0.
inline Graph star_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// J(v, 2): 2-subsets of {0..v-1}, adjacent when they share one element.
inline Graph johnson_graph_pairs(std::size_t v) {
  std::vector<std::pair<std::size_t, std::size_t>> subsets;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) subsets.emplace_back(a, b);
  Graph g(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      const int shared = (a == c) + (a == d) + (b == c) + (b == d);
      if (shared == 1) g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph complement(const Graph& g) {
  Graph out = g;
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::uint64_t* r = out.row_data(i);
    for (std::size_t w = 0; w < g.words_per_row(); ++w) {
      r[w] = ~r[w] & g.valid_mask(w);
    }
    r[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t na = a.order();
  Graph out(na + b.order());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      if (a.adjacent(i, j)) out.add_edge(i, j);
  for (std::size_t i = 0; i < b.order(); ++i)
    for (std::size_t j = i + 1; j < b.order(); ++j)
      if (b.adjacent(i, j)) out.add_edge(na + i, na + j);
  return out;
}

inline Graph add_isolated_vertex(const Graph& g) {
  Graph out(g.order() + 1);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

// Appends a vertex whose neighbourhood is N(v); it is not joined to v.
inline Graph add_duplicate_vertex(const Graph& g, std::size_t v) {
  if (v >= g.order()) {
    throw std::out_of_range("add_duplicate_vertex: vertex " +
                            std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
  }
  Graph out = add_isolated_vertex(g);
  const std::size_t fresh = g.order();
  for (std::size_t u : g.neighbors(v)) out.add_edge(fresh, u);
  return out;
}

// Complements every pair with exactly one endpoint in y.
inline Graph seidel_switch(const Graph& g, const VertexSet& y) {
  if (y.universe() != g.order()) {
    throw std::invalid_argument("seidel_switch: switching set universe " +
                                std::to_string(y.universe()) +
                                " does not match graph order " +
                                std::to_string(g.order()));
  }
  Graph out = g;
  auto ys = y.words();
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::uint64_t* r = out.row_data(i);
    const bool inside = y.contains(i);
    for (std::size_t w = 0; w < g.words_per_row(); ++w) {
      const std::uint64_t across = inside ? ~ys[w] : ys[w];
      r[w] ^= across & g.valid_mask(w);
    }
  }
  return out;
}

struct GraphStats {
  std::size_t edges = 0;
  std::vector<std::size_t> degrees;
  bool is_regular = true;
  bool has_isolated = false;
};

inline GraphStats stats(const Graph& g) {
  GraphStats s;
  s.degrees.reserve(g.order());
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    s.degrees.push_back(d);
    degree_sum += d;
    if (d == 0) s.has_isolated = true;
    if (d != s.degrees.front()) s.is_regular = false;
  }
  s.edges = degree_sum / 2;
  return s;
}

}  // namespace huckel

#endif  // HUCKEL_GRAPH_HPP_
