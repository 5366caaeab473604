#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsd/betti.hpp"
#include "gsd/groebner.hpp"
#include "gsd/linalg.hpp"

namespace gsd {

/// Graded pieces of R = S/I in the standard-monomial basis, split by the
/// degree keys of a grading in which I is homogeneous. Caches normal forms of
/// monomials, so an instance must not be shared between threads.
template <class F>
class QuotientRing {
 public:
  QuotientRing(GroebnerBasis<F> gb, Grading grading);

  const F& field() const { return gb_.field(); }
  int nvars() const { return gb_.nvars(); }
  const Grading& grading() const { return grading_; }
  const GroebnerBasis<F>& groebner_basis() const { return gb_; }

  /// Standard monomials of the given key, in descending grevlex order.
  const std::vector<Monomial>& basis(const DegreeKey& key);
  /// Keys of total degree d with a nonzero graded piece.
  const std::vector<DegreeKey>& keys_of_degree(int d);
  /// Position of a standard monomial inside basis(key(m)).
  std::uint32_t index_of(const Monomial& standard);
  /// Coordinates of the class of m in basis(key(m)).
  const SparseVector<F>& normal_form(const Monomial& m);

 private:
  struct DegreePiece {
    std::vector<DegreeKey> keys;
    std::map<DegreeKey, std::vector<Monomial>> by_key;
  };
  DegreePiece& piece(int d);

  GroebnerBasis<F> gb_;
  Grading grading_;
  std::map<int, DegreePiece> pieces_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
  std::unordered_map<Monomial, SparseVector<F>, MonomialHash> nf_cache_;
  std::vector<Monomial> empty_;
};

/// Element of the Koszul complex K(x_1..x_N; R): a sum of e_A (A a subset of
/// the variables, as a bitmask) times coefficients kept in normal form.
template <class F>
struct KoszulChain {
  int nvars = 0;
  std::map<std::uint32_t, Polynomial<F>> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const KoszulChain&) const = default;
};

/// Sign of e_A ^ e_B for disjoint sorted subsets, as (-1)^(inversions).
int wedge_sign(std::uint32_t a, std::uint32_t b);

template <class F>
KoszulChain<F> chain_add(const KoszulChain<F>& a, const KoszulChain<F>& b);
template <class F>
KoszulChain<F> chain_scale(const KoszulChain<F>& a, const typename F::Element& c);
/// Koszul differential computed on polynomials: d(f e_A) = sum (-1)^(s-1) x_{a_s} f e_{A - a_s}.
template <class F>
KoszulChain<F> chain_differential(const KoszulChain<F>& a, const GroebnerBasis<F>& gb);
template <class F>
KoszulChain<F> chain_wedge(const KoszulChain<F>& a, const KoszulChain<F>& b, const GroebnerBasis<F>& gb);

/// Text form: terms "(<coefficient>) * e[(r,c)]^e[(r,c)]" joined by " + ";
/// the empty wedge prints as "1" and the zero chain as "0". Variables are
/// named by matrix position for a matrix with `cols` columns.
template <class F>
std::string chain_to_string(const KoszulChain<F>& a, const VariableNames& names, int cols);
template <class F>
KoszulChain<F> parse_chain(const std::string& text, const F& field, const VariableNames& names, int cols);

/// One multigraded piece (K_i)_key with basis pairs (subset, standard monomial).
struct KoszulBlock {
  int i = 0;
  DegreeKey key;
  std::vector<std::pair<std::uint32_t, Monomial>> basis;
  std::unordered_map<std::uint32_t, std::uint32_t> offset;  // subset -> first index
  std::size_t dimension() const { return basis.size(); }
};

template <class F>
class KoszulComplex {
 public:
  explicit KoszulComplex(QuotientRing<F>& ring);

  QuotientRing<F>& ring() { return ring_; }
  int nvars() const { return nvars_; }

  const KoszulBlock& block(int i, const DegreeKey& key);
  /// Keys with (K_i)_key != 0 and total degree j.
  std::vector<DegreeKey> keys(int i, int j);
  /// Columns of d_i : (K_i)_key -> (K_{i-1})_key, in block coordinates.
  std::vector<SparseVector<F>> differential_columns(int i, const DegreeKey& key);

  KoszulChain<F> to_chain(const KoszulBlock& b, const SparseVector<F>& v);
  SparseVector<F> to_vector(const KoszulBlock& b, const KoszulChain<F>& c);

 private:
  QuotientRing<F>& ring_;
  int nvars_;
  std::vector<std::vector<std::uint32_t>> subsets_by_size_;
  std::vector<DegreeKey> subset_keys_;  // indexed by mask
  std::vector<std::vector<DegreeKey>> distinct_keys_by_size_;
  std::map<std::pair<int, DegreeKey>, std::unique_ptr<KoszulBlock>> blocks_;
};

/// Homology of one block with distinguished representatives: kernel vectors
/// of d_i reduced against the boundary echelon, kept in insertion order.
template <class F>
struct HomologyBlock {
  int i = 0;
  DegreeKey key;
  std::size_t chain_dimension = 0;
  std::size_t boundary_rank = 0;
  std::size_t cycle_dimension = 0;
  std::vector<SparseVector<F>> representatives;
  /// Boundaries followed by representatives; basis indices >= boundary_rank
  /// belong to representatives in order.
  std::unique_ptr<EchelonBasis<F>> echelon;
  std::vector<std::size_t> representative_of_basis;  // echelon index -> representative, or npos

  std::size_t dimension() const { return representatives.size(); }
};

template <class F>
class KoszulHomology {
 public:
  explicit KoszulHomology(KoszulComplex<F>& complex);

  KoszulComplex<F>& complex() { return complex_; }
  const HomologyBlock<F>& block(int i, const DegreeKey& key);
  /// dim H_i in total degree j, summed over keys.
  std::int64_t dimension(int i, int j);
  /// Class of a cycle in the basis of representatives; throws if not a cycle.
  std::vector<typename F::Element> classify(int i, const DegreeKey& key, const SparseVector<F>& cycle);
  bool is_boundary(int i, const DegreeKey& key, const SparseVector<F>& cycle);
  /// dim K_i - rank d_i - rank d_{i+1}, without computing representatives.
  std::int64_t dimension_by_rank(int i, const DegreeKey& key);

 private:
  std::size_t differential_rank(int i, const DegreeKey& key);

  KoszulComplex<F>& complex_;
  std::map<std::pair<int, DegreeKey>, std::unique_ptr<HomologyBlock<F>>> blocks_;
  std::map<std::pair<int, DegreeKey>, std::size_t> ranks_;
};

/// Betti numbers of S/I over S read off Koszul homology, for i <= nvars and
/// total degree j <= max_degree. Entries are refined by key.
template <class F>
BettiTable koszul_betti_table(KoszulHomology<F>& homology, int max_degree);

struct ClassRef {
  int i = 0;
  DegreeKey key;
  std::size_t index = 0;
};

template <class F>
struct ProductWitness {
  ClassRef a;
  ClassRef b;
  KoszulChain<F> factor_a;
  KoszulChain<F> factor_b;
  KoszulChain<F> product;
  /// Coordinates of the product class in the target block's representatives.
  std::vector<typename F::Element> product_class;
  std::size_t target_chain_dimension = 0;
  std::size_t target_boundary_rank = 0;
};

template <class F>
struct ProductCheck {
  bool trivial = true;
  std::optional<ProductWitness<F>> witness;
  std::size_t pairs_checked = 0;
};

/// Product of two basis classes, as coordinates in the target block (empty
/// vector for zero).
template <class F>
std::vector<typename F::Element> class_product(KoszulHomology<F>& homology, const ClassRef& a, const ClassRef& b);

/// Sweeps all pairs of basis classes in positive homological degree over the
/// multigraded support of the given Betti table; stops at the first nonzero product.
template <class F>
ProductCheck<F> trivial_product_check(KoszulHomology<F>& homology, const BettiTable& support);

struct WitnessCheck {
  bool factors_are_cycles = false;
  bool product_is_cycle = false;
  bool product_matches_wedge = false;
  bool product_not_boundary = false;
  bool ok() const { return factors_are_cycles && product_is_cycle && product_matches_wedge && product_not_boundary; }
};

/// Re-verifies a witness from its text form with chain-level arithmetic and a
/// dense rank computation, sharing no code with the block machinery.
template <class F>
WitnessCheck verify_witness_text(const std::string& factor_a, const std::string& factor_b, const std::string& product,
                                 const GroebnerBasis<F>& gb, const Grading& grading, const VariableNames& names, int cols);

}  // namespace gsd
