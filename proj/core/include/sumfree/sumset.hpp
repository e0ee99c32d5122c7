#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumfree/residue.hpp"

namespace sumfree {

enum class Ambient { integers, modular };

struct SumsetRequest {
  ResidueSet base;
  int fold = 1;
  Ambient ambient = Ambient::modular;
};

/// a + b over the common modulus.
ResidueSet pairwise_sumset(const ResidueSet& a, const ResidueSet& b);

/// The fold-fold sumset { s_1 + ... + s_fold : s_i in base }.
///
/// Modular ambient reduces mod n. Integer ambient returns exact integer sums
/// as a set whose modulus is fold * max(base) + 1, so no reduction ever
/// happens (an empty base yields an empty set over Z_1).
ResidueSet fold_sumset(const SumsetRequest& req);

/// Brute-force enumeration of all size-`fold` multisets of `base`. This is
/// the test oracle for fold_sumset and shares none of its code path.
/// Throws oracle_too_large when |base| > 64, fold > 8, or the multiset
/// count exceeds kBruteForceLimit.
ResidueSet brute_force_sumset(const SumsetRequest& req);
inline constexpr std::uint64_t kBruteForceLimit = 50'000'000;

/// R_fold(s): sums s_1 + ... + s_fold whose consecutive subsums
/// s_i + ... + s_j (i < j) are all nonzero mod n. Equivalently the
/// endpoints of simple paths of length `fold` from 0 in Cay(Z_n, s).
/// Throws zero_in_set when 0 is a member.
ResidueSet restricted_sumset(const ResidueSet& s, int fold);

/// An explicit sequence realising `target` in R_fold(s), or nullopt.
std::optional<std::vector<Residue>> subsum_check_witness(const ResidueSet& s, int fold,
                                                         Residue target);

/// Direct O(fold^2) check that `terms` are members of s, sum to target mod n,
/// and have no consecutive subsum congruent to 0.
bool is_valid_restricted_witness(const ResidueSet& s, std::span<const Residue> terms,
                                 Residue target);

}  // namespace sumfree
