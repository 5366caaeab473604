#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsd/groebner.hpp"

namespace gsd {

/// Graded Betti numbers beta_{i,j}, optionally refined by a multidegree key.
/// Only nonzero entries are stored.
class BettiTable {
 public:
  void add(int i, const DegreeKey& key, std::int64_t count = 1);
  void add(int i, int j, std::int64_t count = 1);

  std::int64_t get(int i, int j) const;
  std::int64_t total(int i) const;
  std::vector<std::int64_t> totals() const;
  int max_homological_degree() const;
  int max_internal_degree() const;
  bool empty() const { return entries_.empty(); }

  /// (i, j) -> beta_{i,j}, nonzero entries only.
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  /// (i, multidegree key) -> count; empty when the table was built without keys.
  const std::map<std::pair<int, DegreeKey>, std::int64_t>& multigraded() const { return multigraded_; }

  /// Conventional tally: columns are homological degrees i, rows are j - i.
  std::string tally() const;

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
  std::map<std::pair<int, DegreeKey>, std::int64_t> multigraded_;
};

template <class F>
struct Resolution {
  BettiTable table;
  /// differentials[i] lists the images of the basis of F_{i+1} in F_i (i >= 0),
  /// with F_0 = S; shifts[i] are the degrees of the basis of F_i.
  std::vector<std::vector<FreeModuleElement<F>>> differentials;
  std::vector<std::vector<DegreeKey>> shifts;
};

/// Minimal graded free resolution of S/I by iterated minimal syzygies. The
/// grading must make every generator homogeneous; its keys refine the table.
template <class F>
Resolution<F> minimal_resolution(const F& field, const std::vector<Polynomial<F>>& gens, const Grading& grading);

/// True iff beta_{i,j} != 0 implies j = gendeg + i - 1 for every i >= 1.
/// Throws std::invalid_argument if the ideal is not generated in degree gendeg.
bool linear_resolution_check(const BettiTable& bt, int gendeg);

/// Checks sum (-1)^i beta_{i,j} t^j == (1-t)^n * sum_d HF(d) t^d through degree D.
template <class F>
bool hilbert_certificate(const BettiTable& bt, const GroebnerBasis<F>& gb, int D);

}  // namespace gsd
