#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sumfree/residue.hpp"

using namespace sumfree;
using testing::code_of;
using testing::make;

TEST_CASE("modulus rejects non-positive orders") {
  CHECK(code_of([] { Modulus(0); }) == ErrorCode::invalid_modulus);
  CHECK(code_of([] { Modulus(-3); }) == ErrorCode::invalid_modulus);
  CHECK(Modulus(1).value() == 1);
  CHECK(Modulus(7).reduce(-1) == 6);
  CHECK(Modulus(7).reduce(15) == 1);
}

TEST_CASE("residue set membership and cardinality") {
  auto s = make(41, {1, 5, 11});
  CHECK(s.size() == 3);
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(6));
  CHECK(s.min() == 1);
  CHECK(s.max() == 11);
  s.insert(40);
  s.erase(1);
  CHECK(s.members() == std::vector<Residue>{5, 11, 40});
  CHECK(s.to_string() == "{5,11,40}");
  CHECK(code_of([&] { s.insert(41); }) == ErrorCode::domain);
  CHECK(code_of([] { make(41, {61}); }) == ErrorCode::domain);
  CHECK(code_of([] { make(41, {-1}); }) == ErrorCode::domain);
}

TEST_CASE("residue set algebra across word boundaries") {
  const Modulus m(130);
  auto a = ResidueSet::from_members(m, {0, 63, 64, 127, 129});
  auto b = ResidueSet::from_members(m, {64, 65, 129});
  CHECK((a & b).members() == std::vector<Residue>{64, 129});
  CHECK((a | b).size() == 6);
  CHECK((a - b).members() == std::vector<Residue>{0, 63, 127});
  CHECK(a.complement().size() == 125);
  CHECK(ResidueSet::full(m).size() == 130);
  CHECK(a.translated(1).members() == std::vector<Residue>{0, 1, 64, 65, 128});
  CHECK(a.intersects(b));
  CHECK(ResidueSet::from_members(m, {64}).is_subset_of(a));
  CHECK(b.first_not_in(a) == 65);
}

TEST_CASE("rotation stays inside the ring for every width") {
  std::mt19937_64 rng(7);
  for (std::int64_t n : {1, 2, 63, 64, 65, 127, 128, 129, 191, 192, 200, 257}) {
    const auto s = testing::random_subset(rng, n, 10);
    const auto set = make(n, s);
    for (Residue shift : {Residue{0}, Residue{1}, n / 2, n - 1}) {
      ResidueSet out(Modulus{n});
      set.rotate_or_into(shift, out);
      oracle::Set expect;
      for (auto x : s) expect.insert(oracle::mod(x + shift, n));
      CHECK(testing::to_set(out) == expect);
    }
  }
}

TEST_CASE("parity intervals") {
  const auto iv = ParityInterval::even(4, 8);
  CHECK(iv.cardinality() == 3);
  CHECK(interval_to_set(iv, Modulus(41)).members() == std::vector<Residue>{4, 6, 8});
  CHECK(interval_to_set(ParityInterval::odd(1, 1), Modulus(41)).members() ==
        std::vector<Residue>{1});
  const auto big = interval_to_set(ParityInterval::even(4, 116), Modulus(401));
  CHECK(big.size() == 57);
  CHECK(big.min() == 4);
  CHECK(big.max() == 116);
  CHECK(code_of([] { ParityInterval::even(8, 4); }) == ErrorCode::invalid_interval);
  CHECK(code_of([] { ParityInterval::even(3, 7); }) == ErrorCode::invalid_interval);
  CHECK(code_of([] { ParityInterval::odd(1, 4); }) == ErrorCode::invalid_interval);
  CHECK(code_of([] { interval_to_set(ParityInterval::even(38, 42), Modulus(41)); }) ==
        ErrorCode::interval_out_of_bounds);
  CHECK(code_of([] { interval_to_set(ParityInterval::odd(-1, 3), Modulus(41)); }) ==
        ErrorCode::interval_out_of_bounds);
}

TEST_CASE("interval cardinality formula") {
  for (std::int64_t lo = 0; lo < 20; ++lo)
    for (std::int64_t hi = lo; hi < 40; hi += 2) {
      const ParityInterval iv(lo, hi, lo % 2 == 0 ? Parity::even : Parity::odd);
      const auto set = interval_to_set(iv, Modulus(41));
      CHECK(static_cast<std::int64_t>(set.size()) == (hi - lo) / 2 + 1);
      CHECK(iv.contains(lo));
      CHECK(iv.contains(hi));
      CHECK_FALSE(iv.contains(lo + 1));
    }
}

TEST_CASE("negation and symmetry") {
  CHECK(negate_set(make(41, {1, 5, 11})).members() == std::vector<Residue>{30, 36, 40});
  CHECK(negate_set(make(41, {})).empty());
  CHECK(negate_set(make(41, {0})).members() == std::vector<Residue>{0});
  CHECK(is_symmetric(make(41, {1, 40})));
  CHECK(is_symmetric(make(41, {1, 5, 11, 30, 36, 40})));
  CHECK_FALSE(is_symmetric(make(41, {1, 5})));
  CHECK(first_asymmetric_member(make(41, {1, 5, 36})) == 1);
  CHECK(first_asymmetric_member(make(41, {1, 40})) == std::nullopt);
  CHECK(is_symmetric(make(50, {25})));
}

TEST_CASE("negation is an involution and symmetry matches a membership scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 300);
    const auto s = testing::random_subset(rng, n, 20);
    const auto set = make(n, s);
    CHECK(negate_set(negate_set(set)) == set);
    CHECK(is_symmetric(set) == oracle::symmetric(s, n));
    const auto sym = make(n, testing::random_symmetric(rng, n, 5));
    CHECK(is_symmetric(sym));
  }
}
