#pragma once

#include <cstdint>
#include <vector>

#include "gsd/grading.hpp"
#include "gsd/polynomial.hpp"

namespace gsd {

/// Element of a free module S^r, stored as terms (monomial, component, coeff)
/// sorted descending in the position-over-term order: a smaller component
/// index always dominates, ties are broken by grevlex.
template <class F>
class ModuleVector {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    int component;
    Element coeff;
  };

  ModuleVector() = default;

  static int compare_terms(const Monomial& ma, int ca, const Monomial& mb, int cb) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return grevlex_compare(ma, mb);
  }

  static ModuleVector from_polynomial(const Polynomial<F>& p, int component) {
    ModuleVector v;
    v.terms_.reserve(p.size());
    for (const auto& t : p.terms()) v.terms_.push_back({t.monomial, component, t.coeff});
    return v;
  }
  static ModuleVector from_components(const std::vector<Polynomial<F>>& comps, int offset = 0) {
    ModuleVector v;
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (const auto& t : comps[c].terms()) v.terms_.push_back({t.monomial, offset + static_cast<int>(c), t.coeff});
    return v;
  }
  static ModuleVector from_sorted_terms(std::vector<Term> terms) {
    ModuleVector v;
    v.terms_ = std::move(terms);
    return v;
  }

  /// Component polynomials, for components [offset, offset + rank).
  std::vector<Polynomial<F>> components(const F& field, int nvars, int rank, int offset = 0) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  const Term& lead() const { return terms_.front(); }

 private:
  std::vector<Term> terms_;
};

/// Reduced Gröbner basis of a submodule of S^r (grevlex on monomials, position
/// over term on components). `component_degrees[c]` is the total-degree shift
/// of component c and drives the normal selection strategy. The result is
/// sorted by leading term, ascending.
template <class F>
std::vector<ModuleVector<F>> module_groebner(const F& field, std::vector<ModuleVector<F>> gens,
                                             const std::vector<int>& component_degrees, bool product_criterion);

/// Full reduction of v against a Gröbner basis (every remaining term is standard).
template <class F>
ModuleVector<F> module_normal_form(const F& field, const ModuleVector<F>& v, const std::vector<ModuleVector<F>>& basis);

/// Reduced Gröbner basis of an ideal of S = k[x_0..x_{n-1}].
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis(F field, int nvars, std::vector<Polynomial<F>> original, std::vector<Polynomial<F>> basis);

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  /// Monic, tail-reduced, sorted by leading monomial ascending.
  const std::vector<Polynomial<F>>& generators() const { return basis_; }
  const std::vector<Polynomial<F>>& original_ideal() const { return original_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  Polynomial<F> normal_form(const Polynomial<F>& p) const;
  bool contains(const Polynomial<F>& p) const { return normal_form(p).is_zero(); }
  bool is_standard(const Monomial& m) const {
    for (const Monomial& l : leads_)
      if (l.divides(m)) return false;
    return true;
  }
  bool is_unit_ideal() const { return !leads_.empty() && leads_.front().is_one(); }

 private:
  F field_;
  int nvars_;
  std::vector<Polynomial<F>> original_;
  std::vector<Polynomial<F>> basis_;
  std::vector<ModuleVector<F>> module_basis_;
  std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the product and chain criteria.
template <class F>
GroebnerBasis<F> buchberger(const F& field, int nvars, std::vector<Polynomial<F>> gens);

/// Standard monomials of degree d: a basis of (S/I)_d.
template <class F>
std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis<F>& gb, int d);

template <class F>
std::int64_t hilbert_function(const GroebnerBasis<F>& gb, int d);

/// Numerator K(t) of the Hilbert series of S/(leads) written as K(t)/(1-t)^nvars.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> leads, int nvars);

/// Krull dimension of S/(leads), read off the order of vanishing of K at t = 1.
int krull_dimension(const std::vector<Monomial>& leads, int nvars);

/// Element of a graded free module: one polynomial per basis element.
template <class F>
struct FreeModuleElement {
  std::vector<Polynomial<F>> components;
};

template <class F>
struct SyzygyModule {
  /// Degrees of the input generators, i.e. the shifts of the new free module.
  std::vector<DegreeKey> shifts;
  /// Minimal homogeneous generators of the syzygy module.
  std::vector<FreeModuleElement<F>> generators;
  /// Degree of each generator (terms' degree plus component shift).
  std::vector<DegreeKey> degrees;
};

/// Degree of a homogeneous module element; throws on inhomogeneous input.
template <class F>
DegreeKey module_element_degree(const ModuleVector<F>& v, const std::vector<DegreeKey>& shifts, const Grading& grading);

/// Indices of a minimal generating subset, chosen degree by degree: an element
/// is dropped exactly when it lies in the span of S-multiples of earlier picks.
template <class F>
std::vector<std::size_t> minimal_generator_indices(const F& field, const std::vector<ModuleVector<F>>& elements,
                                                   const std::vector<DegreeKey>& shifts, const Grading& grading);

/// Syzygies of homogeneous generators g_1..g_r of a submodule of the graded
/// free module with the given shifts. Computed from the Gröbner basis of the
/// graph module {(g_k, e_k)} under an order eliminating the original
/// components, then minimalized.
template <class F>
SyzygyModule<F> module_syzygies(const F& field, const std::vector<FreeModuleElement<F>>& gens,
                                const std::vector<DegreeKey>& ambient_shifts, const Grading& grading);

}  // namespace gsd
