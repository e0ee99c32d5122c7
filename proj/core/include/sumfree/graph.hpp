#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sumfree/residue.hpp"

namespace sumfree {

/// Cay(Z_n, S): x ~ y iff (x - y) mod n is in the connection set. The
/// connection set must be symmetric and exclude 0.
class CayleyGraph {
 public:
  /// Throws symmetry_required / zero_in_set when the invariants fail.
  explicit CayleyGraph(ResidueSet connection);

  Modulus modulus() const noexcept { return connection_.modulus(); }
  std::int64_t order() const noexcept { return connection_.n(); }
  const ResidueSet& connection() const noexcept { return connection_; }
  std::size_t degree() const noexcept { return connection_.size(); }
  std::uint64_t edge_count() const noexcept {
    return static_cast<std::uint64_t>(order()) * degree() / 2;
  }
  bool adjacent(Residue x, Residue y) const noexcept {
    return connection_.contains(modulus().reduce(x - y));
  }

 private:
  ResidueSet connection_;
};

/// Plain simple graph on vertices 0..n-1 stored as adjacency bitset rows.
/// The graph-level checkers consume this form only, so they never see the
/// group structure a Cayley graph came from.
class Graph {
 public:
  explicit Graph(std::size_t vertices);

  static Graph from_cayley(const CayleyGraph& g);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::size_t degree(std::size_t v) const noexcept;
  std::uint64_t edge_count() const noexcept;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  const std::uint64_t* row(std::size_t v) const noexcept { return rows_.data() + v * words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace sumfree
