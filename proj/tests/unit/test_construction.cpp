#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sumfree/construction.hpp"
#include "sumfree/sumset.hpp"

using namespace sumfree;
using testing::code_of;
using testing::to_set;

namespace {

void check_against_oracle(const ConstructionParams& p) {
  const auto o = oracle::params(p.ell, p.n);
  REQUIRE(o.has_value());
  CHECK(p.r == o->r);
  CHECK(p.t == o->t);
  CHECK(p.gamma == o->gamma);
  CHECK(p.j == o->j);
  CHECK(p.k == o->k);
  CHECK(p.alpha == o->alpha);
  CHECK(p.M == o->M);
}

}  // namespace

TEST_CASE("threshold") {
  CHECK(construction_threshold(4) == 360);
  CHECK(construction_threshold(6) == 672);
  CHECK(construction_threshold(8) == 1080);
}

TEST_CASE("derive params for n = 401 and n = 363") {
  const auto p = derive_params(4, 401);
  CHECK(p == ConstructionParams{4, 401, 1, 2, 1, 3, 40, 33, 332});
  check_against_oracle(p);
  CHECK(p.M == 401 - (2 * p.k + p.j - 2 * (2 * p.t + 4) + 2));

  const auto q = derive_params(4, 363);
  CHECK(q == ConstructionParams{4, 363, 3, 4, 2, 5, 36, 26, 308});
  check_against_oracle(q);
}

TEST_CASE("derive params rejects bad input") {
  CHECK(code_of([] { derive_params(5, 401); }) == ErrorCode::parity);
  CHECK(code_of([] { derive_params(2, 401); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { derive_params(4, 402); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { derive_params(4, 101); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { derive_params(4, 361); }) == std::nullopt);
  CHECK(code_of([] { derive_params(4, 359); }) == ErrorCode::out_of_range);
  try {
    derive_params(4, 101);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("360") != std::string::npos);
  }
}

TEST_CASE("force accepts any n whose k meets the lower bound") {
  for (std::int64_t n = 1; n <= 361; n += 2) {
    const auto o = oracle::params(4, n);
    REQUIRE(o.has_value());
    const std::int64_t min_k = 4 * o->t + 8 + 2 * std::abs(o->gamma) + 2;
    if (o->k >= min_k) {
      const auto p = derive_params(4, n, true);
      check_against_oracle(p);
      CHECK(p.k >= p.min_k());
    } else {
      CHECK(code_of([n] { derive_params(4, n, true); }) == ErrorCode::out_of_range);
    }
  }
}

TEST_CASE("solve_t is a bijection onto odd residues") {
  for (std::int64_t ell : {4, 6, 8, 10}) {
    std::set<std::int64_t> seen;
    for (std::int64_t r = 1; r <= 2 * ell + 1; r += 2) {
      const auto t = solve_t(ell, r);
      CHECK(t >= 1);
      CHECK(t <= ell + 1);
      seen.insert(t);
    }
    CHECK(seen.size() == static_cast<std::size_t>(ell + 1));
  }
}

TEST_CASE("params_for reproduces derive_params") {
  const auto p = params_for(4, 2, 40);
  CHECK(p == derive_params(4, 401));
  CHECK(code_of([] { params_for(4, 0, 40); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { params_for(4, 2, 3); }) == ErrorCode::out_of_range);
}

TEST_CASE("validate catches a tampered parameter") {
  auto p = derive_params(4, 401);
  p.M += 2;
  CHECK(code_of([&] { p.validate(); }) == ErrorCode::internal);
}

TEST_CASE("positive half for n = 401") {
  const auto p = derive_params(4, 401);
  const auto plus = build_splus(p);
  oracle::Set expect;
  for (int x = 1; x <= 67; x += 2) expect.insert(x);
  expect.insert({71, 73, 75, 83});
  CHECK(to_set(plus) == expect);
  CHECK(plus.size() == 38);
  CHECK(plus.min() == 1);
  CHECK(plus.max() == 2 * p.k + p.j);

  const auto parts = splus_parts(p.t, p.alpha);
  CHECK(parts.i1.hi() < parts.i2.lo());
  CHECK(parts.i2.hi() < parts.i3.lo());
  CHECK(parts.i3.cardinality() == 1);

  const auto q = derive_params(4, 363);
  CHECK(build_splus(q).max() == 77);
  CHECK(splus_parts(q.t, q.alpha).i3.lo() == 77);
}

TEST_CASE("full set for n = 401") {
  const auto p = derive_params(4, 401);
  const auto s = build_full_set(p);
  CHECK(s.size() == 76);
  CHECK(static_cast<std::int64_t>(s.size()) == 2 * (p.k + p.gamma - p.t - 1));
  CHECK(is_symmetric(s));
  CHECK_FALSE(s.contains(0));
  for (Residue x : {Residue{1}, Residue{3}, Residue{400}, Residue{398}}) CHECK(s.contains(x));
}

TEST_CASE("key lemma closed form") {
  const auto rhs = key_lemma_rhs(4, 1, 8);
  CHECK(rhs.n() == 117);
  CHECK(rhs.min() == 4);
  CHECK(rhs.max() == 116);
  oracle::Set expect;
  for (int x = 4; x <= 116; x += 2) expect.insert(x);
  for (int gap : {106, 112, 114}) expect.erase(gap);
  CHECK(to_set(rhs) == expect);
  CHECK(code_of([] { key_lemma_rhs(4, 1, 7); }) == ErrorCode::key_lemma_range);
  CHECK(code_of([] { key_lemma_rhs(5, 1, 20); }) == ErrorCode::parity);
}

TEST_CASE("composition intervals") {
  CHECK(j_interval(0, 0, 4, 4, 1, 8) == ParityInterval::even(116, 116));
  CHECK(j_interval(4, 0, 0, 4, 1, 8) == ParityInterval::even(4, 68));
  CHECK(j_interval(0, 1, 3, 4, 1, 8) == ParityInterval::even(108, 110));
  CHECK(code_of([] { j_interval(1, 1, 1, 4, 1, 8); }) == ErrorCode::invalid_composition);
  CHECK(code_of([] { j_interval(-1, 2, 3, 4, 1, 8); }) == ErrorCode::invalid_composition);
}

TEST_CASE("key lemma matches the integer sumset of S+") {
  for (std::int64_t ell : {4, 6, 8})
    for (std::int64_t t = 1; t <= 3; ++t)
      for (std::int64_t alpha = 2 * t + 2 * ell - 2; alpha <= 2 * t + 2 * ell + 6; ++alpha) {
        const std::int64_t top = 2 * alpha + 4 * t + 9;
        const auto plus = splus_set(t, alpha, Modulus(top + 1));
        const auto sums = fold_sumset({plus, static_cast<int>(ell), Ambient::integers});
        const auto rhs = key_lemma_rhs(ell, t, alpha);
        CHECK(sums == rhs);
        ResidueSet unions(rhs.modulus());
        for (std::int64_t b1 = 0; b1 <= ell; ++b1)
          for (std::int64_t b2 = 0; b1 + b2 <= ell; ++b2)
            unions |= interval_to_set(j_interval(b1, b2, ell - b1 - b2, ell, t, alpha),
                                      rhs.modulus());
        CHECK(unions == rhs);
      }
}

TEST_CASE("bipartite generator") {
  const auto g = balanced_bipartite_graph(6, 4);
  CHECK(g.degree() == 3);
  CHECK(g.edge_count() == 9);
  CHECK(code_of([] { balanced_bipartite_graph(4, 4); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { balanced_bipartite_graph(7, 4); }) == ErrorCode::parity);
  CHECK(balanced_bipartite_graph(400, 4).degree() == 200);
}
