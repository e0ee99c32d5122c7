#include "sumfree/construction.hpp"

#include <cstdlib>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

// ell + 3 - 4(t + 2): the residue class that t selects mod 2 ell + 2.
std::int64_t t_residue(std::int64_t ell, std::int64_t t) { return ell + 3 - 4 * (t + 2); }

void require_even_ell(std::int64_t ell) {
  if (ell % 2 != 0) {
    throw Error(ErrorCode::parity, "ell must be even, got " + std::to_string(ell));
  }
  if (ell < 4) throw Error(ErrorCode::out_of_range, "ell must be >= 4, got " + std::to_string(ell));
}

void fail(const std::string& what) { throw Error(ErrorCode::internal, what); }

}  // namespace

std::int64_t ConstructionParams::min_k() const noexcept {
  return 4 * t + 2 * ell + 2 * std::llabs(gamma) + 2;
}

void ConstructionParams::validate() const {
  const std::int64_t m = 2 * ell + 2;
  if (ell < 4 || ell % 2 != 0) fail("ell must be even and >= 4");
  if (n % 2 == 0) fail("n must be odd");
  if (r < 1 || r > 2 * ell + 1 || r % 2 == 0) fail("r not an odd value in [1, 2ell+1]");
  if (t < 1 || t > ell + 1) fail("t not in [1, ell+1]");
  if (n != m * k + r) fail("n != (2ell+2)k + r");
  if (r != t_residue(ell, t) + gamma * m) fail("r != ell + 3 - 4(t+2) + gamma(2ell+2)");
  if (j != 2 * gamma + 1) fail("j != 2 gamma + 1");
  if (alpha != k + gamma - 2 * t - 4) fail("alpha != k + gamma - 2t - 4");
  if (M != ell * (2 * k + j)) fail("M != ell(2k + j)");
  if (k < min_k()) fail("k below 4t + 2ell + 2|gamma| + 2");
  if (ell * (2 * k + j) != n - (2 * k + j - 2 * (2 * t + 4) + 2)) fail("n equation violated");
  if (gamma >= 4) fail("gamma >= 4");
  if (M >= n) fail("M >= n");
}

std::int64_t construction_threshold(std::int64_t ell) noexcept {
  return 12 * ell * ell + 36 * ell + 24;
}

std::int64_t solve_t(std::int64_t ell, std::int64_t r) {
  const std::int64_t m = 2 * ell + 2;
  std::int64_t found = 0;
  int hits = 0;
  for (std::int64_t t = 1; t <= ell + 1; ++t) {
    if (floor_mod(t_residue(ell, t) - r, m) == 0) {
      found = t;
      ++hits;
    }
  }
  if (hits != 1) {
    fail(std::to_string(hits) + " values of t match r = " + std::to_string(r) +
         " for ell = " + std::to_string(ell));
  }
  return found;
}

ConstructionParams derive_params(std::int64_t ell, std::int64_t n, bool force) {
  require_even_ell(ell);
  const std::int64_t bound = construction_threshold(ell);
  if (n % 2 == 0 || n < 1) {
    throw Error(ErrorCode::out_of_range,
                "n must be odd (even n uses the balanced bipartite graph), got " +
                    std::to_string(n));
  }
  if (!force && n <= bound) {
    throw Error(ErrorCode::out_of_range, "n = " + std::to_string(n) + " must exceed " +
                                             std::to_string(bound) +
                                             " (12 ell^2 + 36 ell + 24); use force to try anyway");
  }

  ConstructionParams p;
  p.ell = ell;
  p.n = n;
  const std::int64_t m = 2 * ell + 2;
  p.r = floor_mod(n, m);
  p.k = (n - p.r) / m;
  p.t = solve_t(ell, p.r);
  const std::int64_t lift = p.r - t_residue(ell, p.t);
  if (lift % m != 0) fail("gamma does not divide exactly");
  p.gamma = lift / m;
  p.j = 2 * p.gamma + 1;
  p.alpha = p.k + p.gamma - 2 * p.t - 4;
  p.M = ell * (2 * p.k + p.j);
  if (p.k < p.min_k()) {
    throw Error(ErrorCode::out_of_range, "n = " + std::to_string(n) + " gives k = " +
                                             std::to_string(p.k) + " < " +
                                             std::to_string(p.min_k()));
  }
  p.validate();
  return p;
}

ConstructionParams params_for(std::int64_t ell, std::int64_t t, std::int64_t k) {
  require_even_ell(ell);
  if (t < 1 || t > ell + 1) {
    throw Error(ErrorCode::out_of_range, "t must lie in [1, ell+1], got " + std::to_string(t));
  }
  const std::int64_t m = 2 * ell + 2;
  const std::int64_t base = t_residue(ell, t);
  ConstructionParams p;
  p.ell = ell;
  p.t = t;
  p.k = k;
  // Unique gamma with 1 <= base + gamma m <= 2 ell + 2.
  const std::int64_t above = m - base;  // ceil((1 - base) / m) == floor((m - base) / m)
  p.gamma = (above - floor_mod(above, m)) / m;
  p.r = base + p.gamma * m;
  p.n = m * k + p.r;
  p.j = 2 * p.gamma + 1;
  p.alpha = k + p.gamma - 2 * t - 4;
  p.M = ell * (2 * k + p.j);
  if (k < p.min_k()) {
    throw Error(ErrorCode::out_of_range,
                "k = " + std::to_string(k) + " < " + std::to_string(p.min_k()));
  }
  p.validate();
  return p;
}

SPlusParts splus_parts(std::int64_t t, std::int64_t alpha) {
  return SPlusParts{
      ParityInterval::odd(1, 2 * alpha + 1),
      ParityInterval::odd(2 * alpha + 5, 2 * alpha + 5 + 2 * t),
      ParityInterval::odd(2 * alpha + 4 * t + 9, 2 * alpha + 4 * t + 9),
  };
}

ResidueSet splus_set(std::int64_t t, std::int64_t alpha, Modulus modulus) {
  const SPlusParts parts = splus_parts(t, alpha);
  return interval_to_set(parts.i1, modulus) | interval_to_set(parts.i2, modulus) |
         interval_to_set(parts.i3, modulus);
}

ResidueSet build_splus(const ConstructionParams& p) {
  p.validate();
  return splus_set(p.t, p.alpha, Modulus(p.n));
}

ResidueSet build_full_set(const ConstructionParams& p) {
  const ResidueSet plus = build_splus(p);
  return plus | negate_set(plus);
}

ResidueSet key_lemma_rhs(std::int64_t ell, std::int64_t t, std::int64_t alpha) {
  require_even_ell(ell);
  if (t < 1 || alpha < 2 * t + 2 * ell - 2) {
    throw Error(ErrorCode::key_lemma_range,
                "need t >= 1 and alpha >= 2t + 2ell - 2 (ell=" + std::to_string(ell) +
                    ", t=" + std::to_string(t) + ", alpha=" + std::to_string(alpha) + ")");
  }
  const std::int64_t M = ell * (2 * alpha + 4 * t + 9);
  const Modulus wide(M + 1);
  ResidueSet out = interval_to_set(ParityInterval::even(ell, M), wide);
  out -= interval_to_set(ParityInterval::even(M - 2 * t - 2, M - 2), wide);
  out.erase(M - 4 * t - 6);
  return out;
}

ParityInterval j_interval(std::int64_t beta1, std::int64_t beta2, std::int64_t beta3,
                          std::int64_t ell, std::int64_t t, std::int64_t alpha) {
  const auto in_range = [ell](std::int64_t b) { return b >= 0 && b <= ell; };
  if (!in_range(beta1) || !in_range(beta2) || !in_range(beta3) ||
      beta1 + beta2 + beta3 != ell) {
    throw Error(ErrorCode::invalid_composition,
                "(" + std::to_string(beta1) + "," + std::to_string(beta2) + "," +
                    std::to_string(beta3) + ") is not a composition of " + std::to_string(ell));
  }
  const std::int64_t M = ell * (2 * alpha + 4 * t + 9);
  return ParityInterval::even(M - beta1 * (2 * alpha + 4 * t + 8) - beta2 * (4 * t + 4),
                              M - beta1 * (4 * t + 8) - beta2 * (2 * t + 4));
}

CayleyGraph balanced_bipartite_graph(std::int64_t n, std::int64_t ell) {
  if (n % 2 != 0) throw Error(ErrorCode::parity, "n must be even, got " + std::to_string(n));
  if (ell % 2 != 0) throw Error(ErrorCode::parity, "ell must be even, got " + std::to_string(ell));
  const std::int64_t need = (ell + 2) / 2;  // ceil((ell + 1) / 2)
  if (n / 2 < need) {
    throw Error(ErrorCode::out_of_range, "n/2 = " + std::to_string(n / 2) + " < " +
                                             std::to_string(need));
  }
  const Modulus m(n);
  return CayleyGraph(interval_to_set(ParityInterval::odd(1, n - 1), m));
}

}  // namespace sumfree
