#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsd/betti.hpp"
#include "gsd/groebner.hpp"
#include "gsd/subdet.hpp"

namespace gsd {

/// Truncated bigraded power series sum c_{i,j} z^i t^j with 0 <= i <= j <= D.
/// Rows above `computed_rows` are unknown (left at zero) rather than zero.
struct BigradedSeries {
  enum class Provenance { actual_resolution, golod_bound };

  int D = 0;
  int computed_rows = 0;
  Provenance provenance = Provenance::actual_resolution;
  std::vector<std::vector<std::int64_t>> c;  // c[i][j]

  static BigradedSeries zero(int D, Provenance p);

  std::int64_t get(int i, int j) const;
  void set(int i, int j, std::int64_t v);
  /// Coefficients of z^i after setting t = 1, over the truncation window.
  std::vector<std::int64_t> z_collapse() const;
  /// Product with (1 + z t)^k, truncated at t-degree D.
  BigradedSeries times_one_plus_zt(int k) const;
};

std::string to_string(BigradedSeries::Provenance p);

/// Thrown when the actual series exceeds the Golod bound somewhere. The
/// coefficientwise inequality is a theorem, so this signals an internal error.
class SerreViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Poincare series of k over R = S/I (bigraded), from a minimal graded free
/// resolution of k built degree by degree up to internal degree D. With
/// max_row >= 0 only rows i <= max_row are computed.
template <class F>
BigradedSeries resolution_of_k_over_R(const GroebnerBasis<F>& gb, const Grading& grading, int D, int max_row = -1);

/// Expansion of (1 + z t)^nvars / (1 - sum_{i >= 1} beta_{i,j} z^{i+1} t^j)
/// through t-degree D. Throws std::overflow_error on int64 overflow.
BigradedSeries golod_bound_series(const BettiTable& bt, int nvars, int D);

/// True iff actual <= bound on every computed coefficient.
bool serre_inequality_check(const BigradedSeries& actual, const BigradedSeries& bound);

struct GolodVerdict {
  enum class Kind { not_golod, consistent_up_to };
  Kind kind = Kind::consistent_up_to;
  int D = 0;
  // First gap, ordered by homological degree and then internal degree.
  int gap_i = 0;
  int gap_j = 0;
  std::int64_t gap_size = 0;

  std::string to_string() const;
};

enum class FastPath { none, disjoint_split, product_witness };
std::string to_string(FastPath f);

struct GolodOptions {
  int D = 8;
  std::uint64_t seed = 0;
  /// Quotient by depth(R) random linear nonzerodivisors before resolving k.
  bool artinian_reduction = true;
  int retries = 16;
  /// Stop resolving once a row of the series falls below the bound.
  bool stop_at_first_gap = true;
};

struct GolodReport {
  GolodVerdict verdict;
  FastPath fast_path = FastPath::none;
  /// Both series describe R itself (a reduced computation is lifted back).
  BigradedSeries actual;
  BigradedSeries bound;
  std::uint64_t seed = 0;
  int reduced_by = 0;
  int reduction_attempts = 0;
  /// Set when a fast path claimed NotGolod but no gap appeared up to D.
  bool fast_path_unconfirmed = false;
};

/// Compares the Poincare series of k over S/I with the Golod bound. `betti`
/// must be the Betti table of S/I over S. A fast-path hint (established by
/// the caller) fixes the verdict as NotGolod; the series are still computed
/// so the gap can be reported. Throws SerreViolation if the bound fails.
template <class F>
GolodReport golod_check(const F& field, const std::vector<Polynomial<F>>& gens, const Grading& grading,
                        const BettiTable& betti, const GolodOptions& options, FastPath hint = FastPath::none);

template <class F>
struct ArtinianReduction {
  GroebnerBasis<F> gb;  // of the reduced ideal in nvars - count variables
  int count = 0;
  int attempts = 0;
  /// The linear forms used, each in the variables remaining at its step.
  std::vector<std::vector<typename F::Element>> forms;
};

class ReductionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cuts S/I by `count` seeded random linear forms, eliminating the last
/// variable each time. The forms form a regular sequence exactly when the
/// Hilbert series numerator is unchanged, which is checked; failed draws are
/// resampled up to `retries` times before ReductionFailed is thrown.
template <class F>
ArtinianReduction<F> artinian_reduction(const F& field, const std::vector<Polynomial<F>>& gens, int nvars, int count,
                                        std::uint64_t seed, int retries = 16);

/// mu(I_1) * mu(I_2) for a selection splitting into exactly two variable-disjoint groups.
std::int64_t tensor_obstruction(const MinorSelection& sel);

struct KunnethResult {
  bool ok = true;
  std::vector<MinorSelection> groups;
  BettiTable whole;      // from Koszul homology of the full ideal
  BettiTable predicted;  // convolution of the groups' tables
};

/// Checks that the Koszul homology of I splits as the tensor product over the
/// variable-disjoint groups: beta_{i,j} equals the bigraded convolution of the
/// groups' Betti numbers.
template <class F>
KunnethResult kunneth_check(const F& field, const MinorSelection& sel);

}  // namespace gsd
