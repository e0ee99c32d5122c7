#pragma once

#include <cstdint>

#include "sumfree/graph.hpp"
#include "sumfree/residue.hpp"

namespace sumfree {

/// Every parameter of the explicit construction for a given (ell, n).
///
///   n = (2 ell + 2) k + r,   r = ell + 3 - 4(t + 2) + gamma (2 ell + 2)
///   j = 2 gamma + 1,         alpha = k + gamma - 2t - 4,   M = ell (2k + j)
struct ConstructionParams {
  std::int64_t ell = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::int64_t gamma = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
  std::int64_t alpha = 0;
  std::int64_t M = 0;

  /// Smallest k accepted by the construction: 4t + 2 ell + 2|gamma| + 2.
  std::int64_t min_k() const noexcept;

  /// Throws ErrorCode::internal naming the first violated relation.
  void validate() const;

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// 12 ell^2 + 36 ell + 24; derive_params needs n strictly above it.
std::int64_t construction_threshold(std::int64_t ell) noexcept;

/// Parameters for odd n > construction_threshold(ell). With `force`, any odd
/// n whose k still meets min_k() is accepted.
ConstructionParams derive_params(std::int64_t ell, std::int64_t n, bool force = false);

/// Parameters from (ell, t, k) directly; n follows from them.
ConstructionParams params_for(std::int64_t ell, std::int64_t t, std::int64_t k);

/// t in {1..ell+1} with ell + 3 - 4(t+2) == r (mod 2 ell + 2), found by
/// exhaustive scan. Zero or multiple matches throw ErrorCode::internal.
std::int64_t solve_t(std::int64_t ell, std::int64_t r);

struct SPlusParts {
  ParityInterval i1;
  ParityInterval i2;
  ParityInterval i3;
};

/// I1 = [1, 2 alpha + 1]_o, I2 = [2 alpha + 5, 2 alpha + 5 + 2t]_o,
/// I3 = {2 alpha + 4t + 9}.
SPlusParts splus_parts(std::int64_t t, std::int64_t alpha);

/// I1 u I2 u I3 inside Z_{modulus}.
ResidueSet splus_set(std::int64_t t, std::int64_t alpha, Modulus modulus);

ResidueSet build_splus(const ConstructionParams& p);
ResidueSet build_full_set(const ConstructionParams& p);

/// ell S+ in closed form: [ell, M]_e minus ([M-2t-2, M-2]_e u {M-4t-6}),
/// with M = ell (2 alpha + 4t + 9). Integer ambient: the result's modulus is
/// M + 1. Requires alpha >= 2t + 2 ell - 2.
ResidueSet key_lemma_rhs(std::int64_t ell, std::int64_t t, std::int64_t alpha);

/// beta1 I1 + beta2 I2 + beta3 I3 as an even interval:
/// [M - b1(2 alpha + 4t + 8) - b2(4t + 4), M - b1(4t + 8) - b2(2t + 4)]_e.
ParityInterval j_interval(std::int64_t beta1, std::int64_t beta2, std::int64_t beta3,
                          std::int64_t ell, std::int64_t t, std::int64_t alpha);

/// K_{n/2,n/2} as Cay(Z_n, odd residues).
CayleyGraph balanced_bipartite_graph(std::int64_t n, std::int64_t ell);

}  // namespace sumfree
