#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/construction.hpp"
#include "sumfree/graph.hpp"
#include "sumfree/residue.hpp"

namespace sumfree {

/// Concrete evidence attached to a failed check. `kind` says how to read
/// `values`: "element", "missing", "extra", "pair" or "cycle".
struct Counterexample {
  std::string kind;
  std::vector<std::int64_t> values;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct Check {
  std::string name;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool overall() const noexcept;
  const Check* find(const std::string& name) const noexcept;
  void append(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SetCheck {
  bool passed = false;
  std::optional<Residue> counterexample;
};

/// ell S and S disjoint; counterexample is the smallest common element.
SetCheck is_sum_free(const ResidueSet& s, int ell);

/// ell S u S = Z_n; counterexample is the smallest missing residue.
SetCheck is_complete(const ResidueSet& s, int ell);

/// n <= C(|S| + ell - 1, ell) + |S|, which every complete set satisfies.
bool satisfies_binomial_bound(std::int64_t n, std::size_t size, int ell);

VerificationReport certify_symmetric_complete_sumfree(const ResidueSet& s, int ell);

/// 0 not in (ell+1) S, computed from the (ell+1)-fold sumset. Throws
/// symmetry_required for asymmetric input.
bool check_no_zero_in_ell_plus_one(const ResidueSet& s, int ell);

/// Same question answered through ell S n S (valid for symmetric S only).
bool check_no_zero_in_ell_plus_one_via_sum_free(const ResidueSet& s, int ell);

/// Set-level saturation certificate: S symmetric, 0 not in S,
/// R_ell(S) = Z_n \ (S u {0}) and 0 not in (ell+1) S.
VerificationReport certify_proposition(const ResidueSet& s, int ell);

/// Z_n = [0, ell-2]_e u S+ u ell S- u ell S+ u S- u [n-ell+2, n-2]_o as a
/// disjoint union, for a construction output.
Check check_construction_decomposition(const ConstructionParams& p);

struct CycleSearch {
  bool free = true;
  std::vector<std::size_t> cycle;  // vertex sequence when !free
};

/// No cycle of exactly `length` vertices. Throws invalid_cycle_length for
/// length < 3.
CycleSearch is_cycle_free(const Graph& g, int length);

/// A simple path with exactly `edges` edges from u to v, as its vertex
/// sequence.
std::optional<std::vector<std::size_t>> find_simple_path(const Graph& g, std::size_t u,
                                                         std::size_t v, int edges);

/// C_length-free and every non-adjacent pair joined by a simple path of
/// length - 1 edges.
VerificationReport is_cycle_saturated(const Graph& g, int length);

/// Common degree when the graph is regular.
std::optional<std::size_t> regular_degree(const Graph& g);

/// Direct graph-level certificate for Cay(Z_n, S): regularity of degree |S|,
/// C_{ell+1}-freeness and C_{ell+1}-saturation.
VerificationReport certify_cayley_graph(const CayleyGraph& g, int ell);

}  // namespace sumfree
