#include "gsd/grading.hpp"

#include <stdexcept>

namespace gsd {

std::string to_string(GradingMode mode) {
  switch (mode) {
    case GradingMode::standard: return "standard";
    case GradingMode::column: return "column";
    case GradingMode::row: return "row";
    case GradingMode::fine: return "fine";
  }
  return "?";
}

bool degree_leq(const DegreeVector& a, const DegreeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("degree vectors of different length");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::string DegreeKey::to_string() const {
  std::string s = "(";
  for (int k = 0; k < width_; ++k) {
    if (k) s += k == 1 ? ";" : ",";
    s += std::to_string((*this)[k]);
  }
  return s + ")";
}

Grading Grading::standard(int nvars) {
  if (nvars < 0 || nvars > kMaxVariables) throw std::invalid_argument("variable count out of range");
  Grading g;
  g.mode_ = GradingMode::standard;
  g.nvars_ = nvars;
  g.key_width_ = 1;
  for (int v = 0; v < nvars; ++v) {
    DegreeKey k(1);
    k.set(0, 1);
    g.variable_keys_.push_back(k);
  }
  return g;
}

Grading Grading::for_matrix(GradingMode mode, int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols > kMaxVariables)
    throw std::invalid_argument("matrix shape out of range");
  if (mode == GradingMode::standard) return standard(rows * cols);
  Grading g;
  g.mode_ = mode;
  g.nvars_ = rows * cols;
  int extra = mode == GradingMode::column ? cols : mode == GradingMode::row ? rows : rows + cols;
  g.key_width_ = 1 + extra;
  if (g.key_width_ > DegreeKey::kCapacity) throw std::invalid_argument("grading too wide");
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      DegreeKey k(g.key_width_);
      k.set(0, 1);
      if (mode == GradingMode::column) k.set(1 + j, 1);
      if (mode == GradingMode::row) k.set(1 + i, 1);
      if (mode == GradingMode::fine) {
        k.set(1 + i, 1);
        k.set(1 + rows + j, 1);
      }
      g.variable_keys_.push_back(k);
    }
  }
  return g;
}

DegreeKey Grading::key(const Monomial& m) const {
  DegreeKey r(key_width_);
  for (int v = 0; v < nvars_; ++v) {
    int e = m[v];
    if (e == 0) continue;
    const DegreeKey& kv = variable_keys_[static_cast<std::size_t>(v)];
    for (int k = 0; k < key_width_; ++k) r.set(k, r[k] + e * kv[k]);
  }
  return r;
}

std::vector<Monomial> Grading::monomials_with_key(const DegreeKey& key) const {
  std::vector<Monomial> out;
  if (key.total() < 0) return out;
  for (const Monomial& m : monomials_of_degree(nvars_, key.total()))
    if (this->key(m) == key) out.push_back(m);
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // Enumerate compositions of d into nvars parts, lexicographically descending
  // in the exponent of x_0; sort afterwards for the canonical order.
  auto rec = [&](auto&& self, int v, int remaining) -> void {
    if (v == nvars - 1) {
      e[static_cast<std::size_t>(v)] = remaining;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(v)] = k;
      self(self, v + 1, remaining - k);
    }
    e[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

}  // namespace gsd
