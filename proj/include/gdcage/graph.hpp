#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdcage {

// Distances use a sentinel instead of an optional: any real distance in a
// supported graph is < kInfDist / 2.
inline constexpr int kInfDist = 1 << 29;

// Undirected simple graph on vertices 0..n-1 with dense bitset adjacency rows.
class Graph {
 public:
  static constexpr int kMaxVertices = 512;

  Graph() : Graph(0) {}
  explicit Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: vertex count out of range");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
    deg_.assign(n_, 0);
  }

  int order() const { return n_; }

  int edge_count() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += deg_[v];
    return m / 2;
  }

  bool has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return (bits_[static_cast<size_t>(a) * words_ + b / 64] >> (b % 64)) & 1;
  }

  void add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("Graph: self-loop");
    if (has_edge(a, b)) throw std::invalid_argument("Graph: duplicate edge");
    set_bit(a, b);
    set_bit(b, a);
    ++deg_[a];
    ++deg_[b];
  }

  void remove_edge(int a, int b) {
    if (!has_edge(a, b)) throw std::invalid_argument("Graph: no such edge");
    clear_bit(a, b);
    clear_bit(b, a);
    --deg_[a];
    --deg_[b];
  }

  int degree(int v) const {
    check_vertex(v);
    return deg_[v];
  }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_,
            static_cast<size_t>(words_)};
  }

  int words_per_row() const { return words_; }

  template <typename F>
  void for_neighbors(int v, F&& f) const {
    const std::uint64_t* r = bits_.data() + static_cast<size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        int bit = __builtin_ctzll(word);
        f(w * 64 + bit);
        word &= word - 1;
      }
    }
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(deg_[v]);
    for_neighbors(v, [&](int w) { out.push_back(w); });
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int a = 0; a < n_; ++a)
      for_neighbors(a, [&](int b) {
        if (a < b) out.emplace_back(a, b);
      });
    return out;
  }

  // Returns a copy extended with `extra` isolated vertices.
  Graph with_padding(int extra) const {
    Graph out(n_ + extra);
    for (auto [a, b] : edges()) out.add_edge(a, b);
    return out;
  }

  // Induced subgraph on `keep` (in the given order); vertex i of the result
  // is keep[i].
  Graph induced(const std::vector<int>& keep) const {
    Graph out(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
      for (size_t j = i + 1; j < keep.size(); ++j)
        if (has_edge(keep[i], keep[j]))
          out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
  }

  // Relabeled copy: vertex v of *this becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const {
    Graph out(n_);
    for (auto [a, b] : edges()) out.add_edge(perm[a], perm[b]);
    return out;
  }

  // Disjoint union: vertices of other are shifted by order().
  Graph disjoint_union(const Graph& other) const {
    Graph out = with_padding(other.n_);
    for (auto [a, b] : other.edges()) out.add_edge(n_ + a, n_ + b);
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }
  void set_bit(int a, int b) {
    bits_[static_cast<size_t>(a) * words_ + b / 64] |= std::uint64_t{1}
                                                       << (b % 64);
  }
  void clear_bit(int a, int b) {
    bits_[static_cast<size_t>(a) * words_ + b / 64] &=
        ~(std::uint64_t{1} << (b % 64));
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> deg_;
};

}  // namespace gdcage
