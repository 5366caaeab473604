#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gsd {

inline constexpr int kMaxVariables = 16;
inline constexpr int kMaxExponent = 127;

/// Exponent vector over at most kMaxVariables variables. Unused slots are zero,
/// so monomials from rings with different variable counts still compare sanely;
/// the owning ring tracks the actual count.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int v) {
    check_index(v);
    Monomial m;
    m.exp_[v] = 1;
    m.degree_ = 1;
    return m;
  }

  static Monomial from_exponents(std::span<const int> exps) {
    if (exps.size() > kMaxVariables) throw std::invalid_argument("too many variables");
    Monomial m;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] < 0 || exps[v] > kMaxExponent) throw std::invalid_argument("exponent out of range");
      m.exp_[v] = static_cast<std::uint8_t>(exps[v]);
      m.degree_ += static_cast<std::uint16_t>(exps[v]);
    }
    return m;
  }

  int operator[](int v) const { return exp_[v]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Highest variable index with a nonzero exponent, or -1 for the unit monomial.
  int last_variable() const {
    for (int v = kMaxVariables - 1; v >= 0; --v)
      if (exp_[v] != 0) return v;
    return -1;
  }

  std::uint32_t support_mask() const {
    std::uint32_t mask = 0;
    for (int v = 0; v < kMaxVariables; ++v)
      if (exp_[v] != 0) mask |= 1u << v;
    return mask;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int v = 0; v < kMaxVariables; ++v) {
      int e = exp_[v] + o.exp_[v];
      if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
      r.exp_[v] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
    return r;
  }

  Monomial times_variable(int v) const {
    Monomial r = *this;
    if (r.exp_[v] == kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    ++r.exp_[v];
    ++r.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (int v = 0; v < kMaxVariables; ++v)
      if (exp_[v] > o.exp_[v]) return false;
    return true;
  }

  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r;
    for (int v = 0; v < kMaxVariables; ++v) r.exp_[v] = static_cast<std::uint8_t>(exp_[v] - divisor.exp_[v]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int v = 0; v < kMaxVariables; ++v) {
      r.exp_[v] = a.exp_[v] > b.exp_[v] ? a.exp_[v] : b.exp_[v];
      r.degree_ += r.exp_[v];
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int v = 0; v < kMaxVariables; ++v) {
      r.exp_[v] = a.exp_[v] < b.exp_[v] ? a.exp_[v] : b.exp_[v];
      r.degree_ += r.exp_[v];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int v = 0; v < kMaxVariables; ++v)
      if (a.exp_[v] != 0 && b.exp_[v] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

  std::size_t hash() const {
    std::uint64_t lo = 0, hi = 0;
    for (int v = 0; v < 8; ++v) lo |= static_cast<std::uint64_t>(exp_[v]) << (8 * v);
    for (int v = 8; v < 16; ++v) hi |= static_cast<std::uint64_t>(exp_[v]) << (8 * (v - 8));
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x7F4A7C159E3779B9ULL + (lo << 6) + (lo >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  std::vector<int> exponents(int nvars) const {
    std::vector<int> r(static_cast<std::size_t>(nvars));
    for (int v = 0; v < nvars; ++v) r[static_cast<std::size_t>(v)] = exp_[v];
    return r;
  }

 private:
  static void check_index(int v) {
    if (v < 0 || v >= kMaxVariables) throw std::out_of_range("variable index out of range");
  }

  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic order with x_0 > x_1 > ... (row-major variable
/// indexing, so x_{1,1} is the largest variable). Returns -1, 0 or 1.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int v = kMaxVariables - 1; v >= 0; --v) {
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

enum class Ordering { less, equal, greater };

/// Checked comparison of explicit exponent vectors (lengths must agree).
inline Ordering monomial_compare(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent vector length mismatch");
  int c = grevlex_compare(Monomial::from_exponents(a), Monomial::from_exponents(b));
  return c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal);
}

/// All monomials of total degree d in the first nvars variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace gsd
