#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsd/field.hpp"
#include "gsd/grading.hpp"
#include "gsd/monomial.hpp"

namespace gsd {

/// Printable names for ring variables: x_{i,j} for matrix rings, or an indexed
/// family like y_{k} for the smaller rings produced by linear reductions.
class VariableNames {
 public:
  static VariableNames matrix(int rows, int cols);
  static VariableNames indexed(std::string prefix, int count);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
  std::optional<int> lookup(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

/// Sparse polynomial with exact coefficients. Terms are kept in strictly
/// descending grevlex order with no zero coefficients, so equality, printing
/// and hashing are canonical.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
    bool operator==(const Term& o) const { return monomial == o.monomial && coeff == o.coeff; }
  };

  Polynomial(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVariables) throw std::invalid_argument("variable count out of range");
  }

  static Polynomial constant(F field, int nvars, const Element& c) {
    Polynomial p(field, nvars);
    if (!p.field_.is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial variable(F field, int nvars, int v) {
    if (v < 0 || v >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(field, nvars);
    p.terms_.push_back({Monomial::variable(v), p.field_.one()});
    return p;
  }
  static Polynomial term(F field, int nvars, const Monomial& m, const Element& c) {
    Polynomial p(field, nvars);
    p.check_monomial(m);
    if (!p.field_.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(F field, int nvars, std::vector<Term> terms) {
    Polynomial p(field, nvars);
    for (const Term& t : terms) p.check_monomial(t.monomial);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  /// Degree of the leading term; nullopt for zero.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().monomial.degree();
  }
  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
      for (const Term& b : o.terms_) out.push_back({a.monomial * b.monomial, field_.mul(a.coeff, b.coeff)});
    Polynomial r(field_, nvars_);
    r.terms_ = std::move(out);
    r.normalize();
    return r;
  }

  Polynomial scaled(const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }

  /// c * m * this; the order is multiplicative so no re-sorting is needed.
  Polynomial times_term(const Monomial& m, const Element& c) const {
    check_monomial(m);
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.monomial * m, field_.mul(t.coeff, c)});
    return r;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field_.inv(terms_.front().coeff));
  }

  /// Re-sorts and merges; a no-op on values built through the public API.
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!merged.empty() && merged.back().monomial == t.monomial)
        merged.back().coeff = field_.add(merged.back().coeff, t.coeff);
      else
        merged.push_back(std::move(t));
      if (field_.is_zero(merged.back().coeff)) merged.pop_back();
    }
    terms_ = std::move(merged);
  }

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_; }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const Term& t : terms_) h = h * 1000003u ^ t.monomial.hash();
    return h;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different fields");
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable sets");
  }
  void check_monomial(const Monomial& m) const {
    if (m.degree() != 0 && m.last_variable() >= nvars_) throw std::out_of_range("monomial uses a variable outside the ring");
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == o.terms_.size()) c = 1;
      else c = grevlex_compare(terms_[i].monomial, o.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const Term& t = o.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? field_.neg(t.coeff) : t.coeff});
      } else {
        Element s = subtract ? field_.sub(terms_[i].coeff, o.terms_[j].coeff) : field_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!field_.is_zero(s)) r.terms_.push_back({terms_[i].monomial, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  F field_;
  int nvars_;
  std::vector<Term> terms_;
};

/// Result of a multidegree query. The zero polynomial reports `bottom`, which
/// is compatible with every degree.
struct Multidegree {
  enum class Kind { homogeneous, inhomogeneous, bottom };
  Kind kind = Kind::bottom;
  DegreeVector value;

  bool operator==(const Multidegree&) const = default;
};

template <class F>
Multidegree multidegree(const Polynomial<F>& p, const Grading& g) {
  if (p.nvars() != g.nvars()) throw std::invalid_argument("grading and polynomial ring disagree");
  if (p.is_zero()) return {};
  DegreeKey first = g.key(p.terms().front().monomial);
  for (const auto& t : p.terms())
    if (!(g.key(t.monomial) == first)) return {Multidegree::Kind::inhomogeneous, {}};
  return {Multidegree::Kind::homogeneous, first.grading_part()};
}

/// Degree key of a polynomial homogeneous in the grading; throws otherwise.
template <class F>
DegreeKey homogeneous_key(const Polynomial<F>& p, const Grading& g) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no degree key");
  DegreeKey first = g.key(p.terms().front().monomial);
  for (const auto& t : p.terms())
    if (!(g.key(t.monomial) == first)) throw std::invalid_argument("inhomogeneous polynomial");
  return first;
}

template <class F>
std::string to_string(const Polynomial<F>& p, const VariableNames& names);

std::string monomial_to_string(const Monomial& m, const VariableNames& names);

/// Parses the format produced by to_string (sums of coefficient*monomial terms).
template <class F>
Polynomial<F> parse_polynomial(const std::string& text, const F& field, const VariableNames& names);

}  // namespace gsd
