#pragma once

#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sumfree/error.hpp"
#include "sumfree/residue.hpp"

namespace testing {

inline sumfree::ResidueSet make(std::int64_t n, std::initializer_list<sumfree::Residue> xs) {
  return sumfree::ResidueSet::from_members(sumfree::Modulus(n), xs);
}

inline sumfree::ResidueSet make(std::int64_t n, const oracle::Set& xs) {
  const std::vector<sumfree::Residue> v(xs.begin(), xs.end());
  return sumfree::ResidueSet::from_members(sumfree::Modulus(n), v);
}

inline oracle::Set to_set(const sumfree::ResidueSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

inline oracle::Set random_subset(std::mt19937_64& rng, std::int64_t n, std::size_t max_size,
                                 bool allow_zero = true) {
  std::uniform_int_distribution<std::int64_t> pick(allow_zero ? 0 : 1, n - 1);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  oracle::Set s;
  const auto want = size(rng);
  for (std::size_t i = 0; i < want && n > (allow_zero ? 0 : 1); ++i) s.insert(pick(rng));
  return s;
}

inline oracle::Set random_symmetric(std::mt19937_64& rng, std::int64_t n, std::size_t halves) {
  oracle::Set s;
  std::uniform_int_distribution<std::int64_t> pick(1, n - 1);
  for (std::size_t i = 0; i < halves; ++i) {
    const auto x = pick(rng);
    s.insert(x);
    s.insert(n - x);
  }
  return s;
}

// Code of the sumfree::Error thrown by f, or nullopt when nothing is thrown.
template <typename F>
std::optional<sumfree::ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const sumfree::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing
