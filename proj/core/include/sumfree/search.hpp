#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/residue.hpp"

namespace sumfree {

class ResultLog;

/// Knobs for the exhaustive psi search.
///
/// Pruning rules (each is necessary for every completion at the current
/// target size, so disabling them never changes an outcome):
///   - cardinality: skip size m when n > C(m + ell - 1, ell) + m;
///   - sum-free: drop a partial set once ell S meets S (sumsets only grow);
///   - canonical (optional): multiplication by a unit of Z_n maps witnesses
///     to witnesses, and every orbit has a member whose smallest element is
///     min gcd(x, n) over its members. Only such representatives are kept.
struct SearchOptions {
  std::optional<int> max_size;              // default floor(n / 2)
  unsigned threads = 1;
  std::optional<std::uint64_t> node_budget;
  bool prune = true;                        // cardinality + sum-free rules
  bool canonical = false;
  bool allow_half = true;                   // n/2 may be a member (even n)
  bool report_without_half = true;
};

enum class Outcome { found, none_exists, inconclusive };

std::string to_string(Outcome outcome);
Outcome outcome_from_string(const std::string& text);

struct SearchStats {
  std::uint64_t nodes = 0;       // partial half-sets expanded
  std::uint64_t candidates = 0;  // full-size half-sets tested for completeness
  std::uint64_t millis = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchResult {
  std::int64_t n = 0;
  int ell = 0;
  Outcome outcome = Outcome::inconclusive;
  std::optional<int> psi;
  std::vector<Residue> witness;  // sorted least residues when found
  int up_to = 0;                 // largest size exhausted
  // Minimum over sets avoiding n/2; only differs from psi for even n.
  std::optional<int> psi_without_half;
  std::vector<Residue> witness_without_half;
  SearchStats stats;
  std::string version;

  /// Equality ignoring wall-clock time.
  bool same_outcome(const SearchResult& other) const;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Minimum size of a symmetric complete (ell,1)-sum-free subset of Z_n.
/// Candidates are enumerated by positive half H in {1, ..., ceil(n/2)-1},
/// plus n/2 for even n, in increasing size; inside a size the lexicographically
/// smallest half wins. Throws parity for odd ell and out_of_range for n > 2048.
SearchResult psi_search(std::int64_t n, int ell, const SearchOptions& options = {});

using ResultSink = std::function<void(const SearchResult&, bool from_log)>;

/// psi_search for every n in [from, to]. With a log, fresh results are
/// appended as they complete; with `resume`, finished entries already in the
/// log for this code version are reused instead of recomputed.
std::vector<SearchResult> psi_table(int ell, std::int64_t from, std::int64_t to,
                                    const SearchOptions& options = {},
                                    ResultLog* log = nullptr, bool resume = false,
                                    const ResultSink& sink = {});

struct RsatReport {
  std::int64_t n = 0;
  int ell = 0;
  std::uint64_t degree = 0;
  std::uint64_t edges = 0;
  double bound_plus = 0;   // n^2 / (2(ell+1)) + n
  bool bound_satisfied = false;
  double bound_minus = 0;  // n^2 / (2(ell+1)) - n
  bool bound_minus_satisfied = false;
  std::optional<std::uint64_t> product_bound;  // n * psi when psi is known
  std::optional<bool> product_satisfied;

  friend bool operator==(const RsatReport&, const RsatReport&) = default;
};

/// Edge count of Cay(Z_n, S) against the regular saturation upper bounds.
/// Throws certificate_required unless S passes certify_proposition.
RsatReport rsat_report(const ResidueSet& s, int ell, std::optional<int> psi = std::nullopt);

}  // namespace sumfree
