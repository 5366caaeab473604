#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gsd/monomial.hpp"

namespace gsd {

enum class GradingMode { standard, column, row, fine };

std::string to_string(GradingMode mode);

using DegreeVector = std::vector<int>;

/// Componentwise partial order on degree vectors.
bool degree_leq(const DegreeVector& a, const DegreeVector& b);

/// Compact degree used for bucketing graded pieces: slot 0 holds the total
/// (standard) degree, the remaining slots hold the grading's degree vector.
class DegreeKey {
 public:
  static constexpr int kCapacity = 18;

  DegreeKey() = default;
  explicit DegreeKey(int width) : width_(static_cast<std::uint8_t>(width)) {}

  int width() const { return width_; }
  int total() const { return v_[0]; }
  int operator[](int k) const { return v_[static_cast<std::size_t>(k)]; }
  void set(int k, int value) { v_[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(value); }

  DegreeKey operator+(const DegreeKey& o) const {
    DegreeKey r(width_);
    for (int k = 0; k < width_; ++k) r.set(k, (*this)[k] + o[k]);
    return r;
  }
  DegreeKey operator-(const DegreeKey& o) const {
    DegreeKey r(width_);
    for (int k = 0; k < width_; ++k) r.set(k, (*this)[k] - o[k]);
    return r;
  }
  bool nonnegative() const {
    for (int k = 0; k < width_; ++k)
      if (v_[static_cast<std::size_t>(k)] < 0) return false;
    return true;
  }
  /// Componentwise comparison.
  bool leq(const DegreeKey& o) const {
    for (int k = 0; k < width_; ++k)
      if ((*this)[k] > o[k]) return false;
    return true;
  }

  DegreeVector grading_part() const {
    DegreeVector r;
    if (width_ == 1) return {v_[0]};
    for (int k = 1; k < width_; ++k) r.push_back(v_[static_cast<std::size_t>(k)]);
    return r;
  }

  std::string to_string() const;

  auto operator<=>(const DegreeKey&) const = default;

  std::size_t hash() const {
    std::size_t h = width_;
    for (int k = 0; k < width_; ++k) h = h * 131 + static_cast<std::size_t>(v_[static_cast<std::size_t>(k)] + 64);
    return h;
  }

 private:
  std::uint8_t width_ = 1;
  std::array<std::int8_t, kCapacity> v_{};
};

struct DegreeKeyHash {
  std::size_t operator()(const DegreeKey& k) const { return k.hash(); }
};

/// Assignment of degree vectors to the variables of a polynomial ring. For an
/// m x n generic matrix the column grading sets deg x_{ij} = e_j, the row
/// grading e_i, and the fine grading (e_i, e_j) in Z^m x Z^n, which is the
/// finest grading making every minor homogeneous.
class Grading {
 public:
  static Grading standard(int nvars);
  static Grading for_matrix(GradingMode mode, int rows, int cols);

  GradingMode mode() const { return mode_; }
  int nvars() const { return nvars_; }
  int key_width() const { return key_width_; }

  DegreeVector degree_of(int v) const { return variable_keys_[static_cast<std::size_t>(v)].grading_part(); }
  const DegreeKey& key_of(int v) const { return variable_keys_[static_cast<std::size_t>(v)]; }
  DegreeKey key(const Monomial& m) const;
  DegreeKey zero_key() const { return DegreeKey(key_width_); }
  DegreeVector degree(const Monomial& m) const { return key(m).grading_part(); }

  /// Monomials in the first nvars() variables with exactly this degree key.
  std::vector<Monomial> monomials_with_key(const DegreeKey& key) const;

 private:
  GradingMode mode_ = GradingMode::standard;
  int nvars_ = 0;
  int key_width_ = 1;
  std::vector<DegreeKey> variable_keys_;
};

}  // namespace gsd
