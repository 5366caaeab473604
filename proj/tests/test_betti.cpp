#include <chrono>

#include "doctest.h"
#include "gsd/betti.hpp"
#include "gsd/subdet.hpp"

using namespace gsd;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class F>
Resolution<F> resolve(const F& field, const MinorSelection& sel, GradingMode mode = GradingMode::fine) {
  return minimal_resolution(field, selection_polynomials(field, sel), sel.matrix().grading(mode));
}

MinorSelection full_two_by(int ell) {
  GenericMatrix x(2, ell);
  return MinorSelection(x, 2, all_minors(x, 2));
}

}  // namespace

TEST_CASE("hypersurface") {
  PrimeField f;
  auto res = resolve(f, MinorSelection(GenericMatrix(2, 2), 2, {{{1, 2}, {1, 2}}}));
  BettiTable want;
  want.add(0, 0);
  want.add(1, 2);
  CHECK(res.table == want);
  CHECK(linear_resolution_check(res.table, 2));
}

TEST_CASE("maximal minors of 2 x l follow the Eagon-Northcott ranks") {
  PrimeField f;
  for (int ell = 2; ell <= 4; ++ell) {
    auto res = resolve(f, full_two_by(ell));
    BettiTable want;
    want.add(0, 0);
    // Oracle: the Eagon-Northcott complex of a 2 x l matrix has F_i of rank
    // i * C(l, i+1) generated in degree i + 1.
    for (int i = 1; i <= ell - 1; ++i) want.add(i, i + 1, i * binomial(ell, i + 1));
    CHECK(res.table == want);
    CHECK(linear_resolution_check(res.table, 2));
    auto gb = buchberger(f, 2 * ell, selection_polynomials(f, full_two_by(ell)));
    CHECK(hilbert_certificate(res.table, gb, 10));
  }
  auto t = resolve(f, full_two_by(3)).table;
  CHECK(t.get(1, 2) == 3);
  CHECK(t.get(2, 3) == 2);
  CHECK(t.tally() ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");
}

TEST_CASE("complete intersection of two column-sharing minors is not linear") {
  PrimeField f;
  MinorSelection sel(GenericMatrix(2, 3), 2, {{{1, 2}, {1, 2}}, {{1, 2}, {1, 3}}});
  auto res = resolve(f, sel);
  CHECK(res.table.get(1, 2) == 2);
  CHECK(res.table.get(2, 4) == 1);
  CHECK(res.table.totals() == std::vector<std::int64_t>{1, 2, 1});
  CHECK_FALSE(linear_resolution_check(res.table, 2));
}

TEST_CASE("every grading gives the same table") {
  PrimeField f;
  GenericMatrix x(3, 3);
  MinorSelection sel(x, 2, {{{1, 2}, {1, 2}}, {{1, 3}, {1, 3}}, {{2, 3}, {2, 3}}, {{1, 2}, {2, 3}}});
  auto ref = resolve(f, sel, GradingMode::standard).table;
  for (GradingMode mode : {GradingMode::row, GradingMode::column, GradingMode::fine})
    CHECK(resolve(f, sel, mode).table == ref);
  auto gb = buchberger(f, 9, selection_polynomials(f, sel));
  CHECK(hilbert_certificate(ref, gb, 12));
}

TEST_CASE("zero ideal and table invariants") {
  PrimeField f;
  auto res = minimal_resolution<PrimeField>(f, {}, Grading::standard(4));
  CHECK(res.table.totals() == std::vector<std::int64_t>{1});
  CHECK(linear_resolution_check(res.table, 2));
  CHECK(hilbert_certificate(res.table, buchberger<PrimeField>(f, 4, {}), 6));

  GenericMatrix x(3, 3);
  auto full = resolve(f, MinorSelection(x, 2, all_minors(x, 2))).table;
  for (const auto& [key, v] : full.entries()) {
    CHECK(v > 0);
    if (key.first > 0) CHECK(key.second > key.first);
    CHECK(key.first <= 9);
  }
  CHECK(full.totals() == std::vector<std::int64_t>{1, 9, 16, 9, 1});
}

TEST_CASE("certificate rejects a wrong table") {
  PrimeField f;
  auto sel = full_two_by(3);
  auto table = resolve(f, sel).table;
  table.add(2, 3);
  CHECK_FALSE(hilbert_certificate(table, buchberger(f, 6, selection_polynomials(f, sel)), 8));
}

TEST_CASE("mixed generator degrees are rejected by the linearity test") {
  BettiTable t;
  t.add(0, 0);
  t.add(1, 2);
  t.add(1, 3);
  CHECK_THROWS_AS(linear_resolution_check(t, 2), std::invalid_argument);
}

TEST_CASE("three maximal minors of a 3x4 matrix") {
  PrimeField f;
  GenericMatrix x(3, 4);
  MinorSelection sel(x, 3, {{{1, 2, 3}, {1, 2, 3}}, {{1, 2, 3}, {1, 2, 4}}, {{1, 2, 3}, {1, 3, 4}}});
  auto start = std::chrono::steady_clock::now();
  auto res = resolve(f, sel);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("resolution took " << seconds << " s");
  CHECK(res.table.totals() == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK_FALSE(linear_resolution_check(res.table, 3));
  auto gb = buchberger(f, 12, selection_polynomials(f, sel));
  CHECK(hilbert_certificate(res.table, gb, 10));
  MESSAGE("\n" << res.table.tally());
}
