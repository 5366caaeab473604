#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsd/groebner.hpp"
#include "gsd/polynomial.hpp"

namespace gsd {

/// The m x n matrix of indeterminates; x_{i,j} (1-based) is variable (i-1)*n + (j-1).
class GenericMatrix {
 public:
  GenericMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return rows_ * cols_; }
  int variable(int row, int col) const;
  VariableNames names() const { return VariableNames::matrix(rows_, cols_); }
  Grading grading(GradingMode mode) const { return Grading::for_matrix(mode, rows_, cols_); }

  bool operator==(const GenericMatrix&) const = default;

 private:
  int rows_;
  int cols_;
};

/// A t x t minor named by 1-based, strictly increasing row and column lists.
struct Minor {
  std::vector<int> rows;
  std::vector<int> cols;

  int size() const { return static_cast<int>(rows.size()); }
  std::string to_string() const;
  auto operator<=>(const Minor&) const = default;
};

/// A set of t x t minors of an m x n generic matrix, stored sorted.
class MinorSelection {
 public:
  MinorSelection(GenericMatrix matrix, int t, std::vector<Minor> minors = {});

  const GenericMatrix& matrix() const { return matrix_; }
  int t() const { return t_; }
  const std::vector<Minor>& minors() const { return minors_; }
  std::size_t size() const { return minors_.size(); }
  bool empty() const { return minors_.empty(); }
  bool contains(const Minor& m) const;

  std::string to_string() const;
  /// Deterministic census order: by size, then lexicographic in the minor lists.
  bool operator<(const MinorSelection& o) const;
  bool operator==(const MinorSelection& o) const = default;

 private:
  GenericMatrix matrix_;
  int t_;
  std::vector<Minor> minors_;
};

/// Every t x t minor of the matrix, in lexicographic (rows, cols) order.
std::vector<Minor> all_minors(const GenericMatrix& x, int t);

template <class F>
Polynomial<F> minor_polynomial(const F& field, const GenericMatrix& x, const Minor& minor);

template <class F>
std::vector<Polynomial<F>> selection_polynomials(const F& field, const MinorSelection& sel);

struct ShapeVerdict {
  enum class Kind { empty, block, not_block };
  enum class Orientation { two_by_l, l_by_two };

  Kind kind = Kind::empty;
  Orientation orientation = Orientation::two_by_l;
  std::vector<int> rows;
  std::vector<int> cols;
  int ell = 0;

  /// "Empty", "NotBlock", or e.g. "Block 2x3 rows=[1,2] cols=[1,2,3]".
  std::string to_string() const;
  bool operator==(const ShapeVerdict&) const = default;
};

/// Combinatorial block test for t = 2: the selection must be exactly the set
/// of all 2x2 minors of some 2 x l or l x 2 submatrix.
ShapeVerdict shape_classify_combinatorial(const MinorSelection& sel);

/// Block test confirmed by ideal comparison through Gröbner normal forms: a
/// Block verdict is checked as I = I_2(Y) in both directions, and a NotBlock
/// verdict is checked against the smallest candidate submatrix. Throws
/// std::logic_error if the two tests disagree.
template <class F>
ShapeVerdict shape_classify(const F& field, const MinorSelection& sel);

enum class Axis { columns, rows };

/// Minors whose column set (or row set) is exactly {a, b}.
MinorSelection restrict_pair(const MinorSelection& sel, Axis axis, int a, int b);

/// Connected components of the variable-sharing graph, each as a selection.
std::vector<MinorSelection> disjoint_split(const MinorSelection& sel);

/// Least selection in the orbit under row and column permutations, plus
/// transposition for square matrices. A selection with more rows than columns
/// is transposed first, so every representative has rows <= cols.
MinorSelection canonicalize(const MinorSelection& sel);

/// Applies a row permutation, a column permutation (0-based images) and an
/// optional transpose; used for orbit spot-checks.
MinorSelection permute_selection(const MinorSelection& sel, const std::vector<int>& row_perm,
                                 const std::vector<int>& col_perm, bool transpose);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumeratedSelection {
  MinorSelection selection;
  /// Number of selections of the original shape represented (1 without symmetry).
  std::uint64_t orbit_size;
};

/// All subsets of the minor set (or one canonical representative per orbit),
/// sorted in census order. Throws CapExceeded if there are more than `cap` minors.
std::vector<EnumeratedSelection> enumerate_selections(int rows, int cols, int t, bool up_to_symmetry, int cap = 12);

/// Field named in an ideal specification: "fp:<prime>" or "qq".
struct FieldChoice {
  bool rational = false;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  static FieldChoice parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const FieldChoice&) const = default;
};

struct IdealSpec {
  MinorSelection selection;
  FieldChoice field;
};

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates the JSON ideal specification; throws SpecError with a
/// message naming the offending field.
IdealSpec parse_ideal_spec(const std::string& text);
std::string ideal_spec_to_json(const IdealSpec& spec);

}  // namespace gsd
