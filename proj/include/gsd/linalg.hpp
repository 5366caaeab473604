#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsd {

template <class F>
using SparseVector = std::vector<std::pair<std::uint32_t, typename F::Element>>;

/// Incrementally built row-echelon basis of sparse vectors. Every stored vector
/// has a distinct pivot (its smallest index, normalized to coefficient 1), and
/// pivots are restricted to indices below `pivot_limit`. Entries at or beyond
/// the limit ride along, which is how kernels are tracked.
///
/// Reduction uses a dense scratch row, so an instance is not safe for
/// concurrent use.
template <class F>
class EchelonBasis {
 public:
  using Element = typename F::Element;

  EchelonBasis(F field, std::size_t pivot_limit, std::size_t total_dim)
      : field_(std::move(field)),
        pivot_limit_(pivot_limit),
        pivot_of_(pivot_limit, -1),
        scratch_(total_dim, field_.zero()),
        queued_(total_dim, 0) {
    if (total_dim < pivot_limit) throw std::invalid_argument("echelon dimension smaller than pivot range");
  }
  EchelonBasis(F field, std::size_t dim) : EchelonBasis(std::move(field), dim, dim) {}

  std::size_t rank() const { return vectors_.size(); }
  std::size_t dimension() const { return scratch_.size(); }
  const SparseVector<F>& vector(std::size_t k) const { return vectors_[k]; }
  std::uint32_t pivot(std::size_t k) const { return vectors_[k].front().first; }
  std::optional<std::size_t> basis_index_of_pivot(std::size_t pos) const {
    if (pos >= pivot_limit_ || pivot_of_[pos] < 0) return std::nullopt;
    return static_cast<std::size_t>(pivot_of_[pos]);
  }

  /// Remainder of v after eliminating every pivot position it touches.
  /// If `multipliers` is given, records (basis index, c) for each v -= c * basis[k].
  SparseVector<F> reduce(const SparseVector<F>& v, std::vector<std::pair<std::size_t, Element>>* multipliers = nullptr) const {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    std::vector<std::uint32_t> tail;
    for (const auto& [idx, val] : v) {
      if (idx >= scratch_.size()) throw std::out_of_range("vector index beyond echelon dimension");
      scratch_[idx] = field_.add(scratch_[idx], val);
      touch(idx, heap, tail);
    }
    SparseVector<F> out;
    while (!heap.empty()) {
      std::uint32_t j = heap.top();
      heap.pop();
      queued_[j] = 0;
      Element c = scratch_[j];
      if (field_.is_zero(c)) continue;
      int k = pivot_of_[j];
      if (k < 0) {
        out.emplace_back(j, c);
        scratch_[j] = field_.zero();
        continue;
      }
      if (multipliers) multipliers->emplace_back(static_cast<std::size_t>(k), c);
      scratch_[j] = field_.zero();
      for (const auto& [idx, val] : vectors_[static_cast<std::size_t>(k)]) {
        if (idx == j) continue;
        scratch_[idx] = field_.sub(scratch_[idx], field_.mul(c, val));
        touch(idx, heap, tail);
      }
    }
    // Entries beyond the pivot range were collected through `tail`.
    for (std::uint32_t idx : tail) {
      queued_[idx] = 0;
      if (!field_.is_zero(scratch_[idx])) out.emplace_back(idx, scratch_[idx]);
      scratch_[idx] = field_.zero();
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  bool in_span(const SparseVector<F>& v) const { return reduce(v).empty(); }

  /// Reduces v and stores the remainder if it has a pivot. Returns its basis index.
  std::optional<std::size_t> insert(const SparseVector<F>& v) {
    SparseVector<F> r = reduce(v);
    return insert_reduced(std::move(r));
  }

  /// Stores an already reduced vector (as returned by reduce()).
  std::optional<std::size_t> insert_reduced(SparseVector<F> r) {
    if (r.empty() || r.front().first >= pivot_limit_) return std::nullopt;
    Element inv = field_.inv(r.front().second);
    for (auto& e : r) e.second = field_.mul(e.second, inv);
    pivot_of_[r.front().first] = static_cast<int>(vectors_.size());
    vectors_.push_back(std::move(r));
    return vectors_.size() - 1;
  }

 private:
  void touch(std::uint32_t idx,
             std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>>& heap,
             std::vector<std::uint32_t>& tail) const {
    if (queued_[idx]) return;
    queued_[idx] = 1;
    if (idx < pivot_limit_)
      heap.push(idx);
    else
      tail.push_back(idx);
  }

  F field_;
  std::size_t pivot_limit_;
  std::vector<int> pivot_of_;
  std::vector<SparseVector<F>> vectors_;
  mutable std::vector<Element> scratch_;
  mutable std::vector<std::uint8_t> queued_;
};

/// Rank of the matrix whose columns are given (each of length `rows`).
template <class F>
std::size_t matrix_rank(const F& field, std::size_t rows, const std::vector<SparseVector<F>>& columns) {
  EchelonBasis<F> e(field, rows);
  for (const auto& c : columns) {
    e.insert(c);
    if (e.rank() == rows) break;
  }
  return e.rank();
}

/// Kernel of the matrix with the given columns, as vectors in column coordinates.
/// Each kernel vector is e_c minus a combination of earlier columns, so the
/// basis is determined by the column order.
template <class F>
std::vector<SparseVector<F>> matrix_kernel(const F& field, std::size_t rows, const std::vector<SparseVector<F>>& columns) {
  std::size_t ncols = columns.size();
  EchelonBasis<F> e(field, rows, rows + ncols);
  std::vector<SparseVector<F>> kernel;
  for (std::size_t c = 0; c < ncols; ++c) {
    SparseVector<F> v = columns[c];
    v.emplace_back(static_cast<std::uint32_t>(rows + c), field.one());
    SparseVector<F> r = e.reduce(v);
    if (!r.empty() && r.front().first < rows) {
      e.insert_reduced(std::move(r));
      continue;
    }
    SparseVector<F> k;
    k.reserve(r.size());
    for (auto& [idx, val] : r) k.emplace_back(static_cast<std::uint32_t>(idx - rows), std::move(val));
    kernel.push_back(std::move(k));
  }
  return kernel;
}

/// Dense-matrix rank by plain Gaussian elimination; kept separate from the
/// sparse echelon code so it can serve as an independent check.
template <class F>
std::size_t dense_rank(const F& field, std::vector<std::vector<typename F::Element>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t ncols = rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && field.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto inv = field.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (field.is_zero(rows[r][col])) continue;
      auto c = field.mul(rows[r][col], inv);
      for (std::size_t k = col; k < ncols; ++k) rows[r][k] = field.sub(rows[r][k], field.mul(c, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace gsd
