#include "sumfree/graph.hpp"

#include <bit>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

CayleyGraph::CayleyGraph(ResidueSet connection) : connection_(std::move(connection)) {
  if (connection_.contains(0)) {
    throw Error(ErrorCode::zero_in_set, "Cayley connection set contains 0");
  }
  if (const auto bad = first_asymmetric_member(connection_)) {
    throw Error(ErrorCode::symmetry_required,
                "connection set not symmetric at " + std::to_string(*bad));
  }
}

Graph::Graph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), rows_(n_ * words_, 0) {}

Graph Graph::from_cayley(const CayleyGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Graph out(n);
  const auto steps = g.connection().members();
  for (std::size_t x = 0; x < n; ++x) {
    for (const Residue s : steps) {
      const auto y = static_cast<std::size_t>(g.modulus().reduce(static_cast<Residue>(x) + s));
      out.rows_[x * out.words_ + y / 64] |= std::uint64_t{1} << (y % 64);
    }
  }
  return out;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) {
    throw Error(ErrorCode::domain, "bad edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) return;
  rows_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  rows_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  const auto* r = row(v);
  for (std::size_t i = 0; i < words_; ++i) d += static_cast<std::size_t>(std::popcount(r[i]));
  return d;
}

std::uint64_t Graph::edge_count() const noexcept {
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  const auto* r = row(v);
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t w = r[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

}  // namespace sumfree
