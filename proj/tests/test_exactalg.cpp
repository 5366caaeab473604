#include <random>

#include "doctest.h"
#include "gsd/field.hpp"
#include "gsd/grading.hpp"
#include "gsd/polynomial.hpp"

using namespace gsd;

namespace {

const VariableNames kNames23 = VariableNames::matrix(2, 3);

template <class F>
Polynomial<F> P(const F& field, const std::string& text, const VariableNames& names = kNames23) {
  return parse_polynomial(text, field, names);
}

// Textbook grevlex, written against explicit exponent vectors: higher degree
// wins, otherwise the rightmost nonzero entry of a - b is negative iff a > b.
int grevlex_oracle(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    int diff = a[k] - b[k];
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

std::vector<int> random_exponents(std::mt19937& rng, int nvars, int maxe) {
  std::uniform_int_distribution<int> d(0, maxe);
  std::vector<int> e(static_cast<std::size_t>(nvars));
  for (auto& x : e) x = d(rng);
  return e;
}

template <class F>
Polynomial<F> random_poly(const F& field, std::mt19937& rng, int nvars, int terms, int maxe, int maxc) {
  std::vector<typename Polynomial<F>::Term> t;
  std::uniform_int_distribution<int> c(-maxc, maxc);
  for (int k = 0; k < terms; ++k)
    t.push_back({Monomial::from_exponents(random_exponents(rng, nvars, maxe)), field.from_int(c(rng))});
  return Polynomial<F>::from_terms(field, nvars, std::move(t));
}

}  // namespace

TEST_CASE("prime field arithmetic is exact and canonical") {
  PrimeField f;
  CHECK(f.characteristic() == 32003);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_string(f.from_int(-5)) == "-5");
  for (std::uint32_t a = 1; a < 200; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_rational(mpq_class(1, 2)) == f.inv(2));
  CHECK_THROWS(PrimeField(32004));
  CHECK(f.parse("-3/2") == f.neg(f.div(3, 2)));
}

TEST_CASE("rational field keeps reduced fractions") {
  RationalField q;
  auto x = q.parse("6/-4");
  CHECK(q.to_string(x) == "-3/2");
  CHECK(q.add(x, q.parse("3/2")) == 0);
  CHECK_THROWS(q.inv(q.zero()));
}

TEST_CASE("grevlex matches the textbook definition and is multiplicative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = random_exponents(rng, 6, 3);
    auto b = random_exponents(rng, 6, 3);
    auto c = random_exponents(rng, 6, 2);
    Monomial ma = Monomial::from_exponents(a), mb = Monomial::from_exponents(b), mc = Monomial::from_exponents(c);
    int expect = grevlex_oracle(a, b);
    REQUIRE(grevlex_compare(ma, mb) == expect);
    CHECK(grevlex_compare(mb, ma) == -expect);
    CHECK(grevlex_compare(ma * mc, mb * mc) == expect);
  }
}

TEST_CASE("grevlex on the 2x2 grid puts the anti-diagonal first") {
  // Row-major indexing x11, x12, x21, x22: x11*x22 has the larger exponent in
  // the last variable, so x12*x21 is the greater monomial.
  std::vector<int> diag{1, 0, 0, 1}, anti{0, 1, 1, 0};
  CHECK(monomial_compare(anti, diag) == Ordering::greater);
  CHECK(monomial_compare(diag, diag) == Ordering::equal);
  CHECK(monomial_compare(std::vector<int>{1, 0, 0, 0}, diag) == Ordering::less);
  CHECK_THROWS(monomial_compare(std::vector<int>{1, 0}, diag));
}

TEST_CASE("polynomial arithmetic") {
  PrimeField f;
  auto m12 = P(f, "x_{1,1}*x_{2,2} - x_{1,2}*x_{2,1}");
  auto m13 = P(f, "x_{1,1}*x_{2,3} - x_{1,3}*x_{2,1}");
  CHECK((m12 + (-m12)).is_zero());
  CHECK((P(f, "x_{1,2}*x_{2,1} - x_{1,1}*x_{2,2}") + m12).is_zero());
  auto one = Polynomial<PrimeField>::constant(f, 6, f.one());
  CHECK(m12 * one == m12);

  auto prod = m12 * m13;
  CHECK(prod.size() == 4);
  for (const auto& t : prod.terms()) CHECK((t.coeff == f.one() || t.coeff == f.from_int(-1)));
  CHECK(prod.is_homogeneous());
  CHECK(*prod.degree() == 4);
  // Oracle: the largest of the four expansion monomials under the textbook order.
  std::vector<std::vector<int>> expansion = {
      {2, 0, 0, 0, 1, 1}, {1, 0, 1, 0, 2, 0}, {1, 1, 0, 1, 0, 1}, {0, 1, 1, 2, 0, 0}};
  auto best = expansion[0];
  for (const auto& e : expansion)
    if (grevlex_oracle(e, best) > 0) best = e;
  CHECK(prod.leading_term().monomial == Monomial::from_exponents(best));
  CHECK(monomial_to_string(prod.leading_term().monomial, kNames23) == "x_{1,2}*x_{1,3}*x_{2,1}^2");

  CHECK_THROWS(m12 + P(f, "x_{1,1}", VariableNames::matrix(2, 2)));
  CHECK_THROWS(m12 + Polynomial<PrimeField>(PrimeField(7), 6));
}

TEST_CASE("ring axioms on random polynomials") {
  PrimeField f;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(f, rng, 5, 4, 2, 5);
    auto b = random_poly(f, rng, 5, 4, 2, 5);
    auto c = random_poly(f, rng, 5, 3, 2, 5);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Polynomial<PrimeField>(f, 5));
    auto n = a;
    n.normalize();
    CHECK(n == a);
  }
}

TEST_CASE("arithmetic over Q agrees with F_p after reduction") {
  PrimeField f;
  RationalField q;
  std::mt19937 rng(3);
  auto reduce = [&](const Polynomial<RationalField>& p) {
    std::vector<Polynomial<PrimeField>::Term> t;
    for (const auto& term : p.terms()) t.push_back({term.monomial, f.from_rational(term.coeff)});
    return Polynomial<PrimeField>::from_terms(f, p.nvars(), std::move(t));
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(q, rng, 6, 5, 2, 9);
    auto b = random_poly(q, rng, 6, 5, 2, 9);
    CHECK(reduce(a * b - a) == reduce(a) * reduce(b) - reduce(a));
  }
}

TEST_CASE("multidegree in the matrix gradings") {
  PrimeField f;
  auto m13 = P(f, "x_{1,1}*x_{2,3} - x_{1,3}*x_{2,1}");
  auto col = Grading::for_matrix(GradingMode::column, 2, 3);
  auto md = multidegree(m13, col);
  CHECK(md.kind == Multidegree::Kind::homogeneous);
  CHECK(md.value == DegreeVector{1, 0, 1});
  CHECK(multidegree(P(f, "x_{1,1}*x_{2,2} - x_{1,2}*x_{2,1}"), Grading::standard(6)).value == DegreeVector{2});
  CHECK(multidegree(P(f, "x_{1,1} + x_{1,1}*x_{2,2}"), Grading::standard(6)).kind == Multidegree::Kind::inhomogeneous);
  CHECK(multidegree(Polynomial<PrimeField>(f, 6), col).kind == Multidegree::Kind::bottom);
  auto fine = Grading::for_matrix(GradingMode::fine, 2, 3);
  CHECK(multidegree(m13, fine).value == DegreeVector{1, 1, 1, 0, 1});
  CHECK(multidegree(m13, Grading::for_matrix(GradingMode::row, 2, 3)).value == DegreeVector{1, 1});
}

TEST_CASE("multidegree is additive on products of minors") {
  PrimeField f;
  auto names = VariableNames::matrix(3, 3);
  std::vector<Polynomial<PrimeField>> minors;
  for (int r1 = 1; r1 <= 3; ++r1)
    for (int r2 = r1 + 1; r2 <= 3; ++r2)
      for (int c1 = 1; c1 <= 3; ++c1)
        for (int c2 = c1 + 1; c2 <= 3; ++c2) {
          auto v = [&](int r, int c) { return "x_{" + std::to_string(r) + "," + std::to_string(c) + "}"; };
          minors.push_back(P(f, v(r1, c1) + "*" + v(r2, c2) + " - " + v(r1, c2) + "*" + v(r2, c1), names));
        }
  for (GradingMode mode : {GradingMode::standard, GradingMode::column, GradingMode::row, GradingMode::fine}) {
    auto g = Grading::for_matrix(mode, 3, 3);
    for (std::size_t a = 0; a < minors.size(); a += 2)
      for (std::size_t b = 0; b < minors.size(); b += 3) {
        auto da = multidegree(minors[a], g).value;
        auto db = multidegree(minors[b], g).value;
        auto dp = multidegree(minors[a] * minors[b], g);
        REQUIRE(dp.kind == Multidegree::Kind::homogeneous);
        for (std::size_t k = 0; k < da.size(); ++k) CHECK(dp.value[k] == da[k] + db[k]);
      }
  }
}

TEST_CASE("partial order on degree vectors") {
  CHECK(degree_leq({1, 0, 1}, {1, 1, 1}));
  CHECK_FALSE(degree_leq({1, 0, 2}, {1, 1, 1}));
  CHECK_THROWS(degree_leq({1}, {1, 2}));
}

TEST_CASE("printing round-trips through the parser") {
  PrimeField f;
  RationalField q;
  auto p = P(f, "3*x_{1,1}^2*x_{2,3} - x_{1,2} + 5");
  CHECK(to_string(p, kNames23) == "3*x_{1,1}^2*x_{2,3} - x_{1,2} + 5");
  CHECK(P(f, to_string(p, kNames23)) == p);
  auto r = P(q, "1/2*x_{1,1} - 7/3*x_{2,2}");
  CHECK(P(q, to_string(r, kNames23)) == r);
  CHECK_THROWS(P(f, "x_{9,9}"));
  CHECK_THROWS(P(f, "x_{1,1} x_{1,2}"));
}

TEST_CASE("graded monomial enumeration") {
  CHECK(monomials_of_degree(4, 2).size() == 10);
  CHECK(monomials_of_degree(6, 0).size() == 1);
  auto g = Grading::for_matrix(GradingMode::column, 2, 3);
  DegreeKey k(4);
  k.set(0, 2);
  k.set(1, 1);
  k.set(3, 1);
  CHECK(g.monomials_with_key(k).size() == 4);
}
