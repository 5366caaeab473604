#include "gsd/subdet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace gsd {

GenericMatrix::GenericMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix needs at least one row and one column");
  if (rows * cols > kMaxVariables)
    throw std::invalid_argument("matrix has more than " + std::to_string(kMaxVariables) + " entries");
}

int GenericMatrix::variable(int row, int col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) throw std::out_of_range("matrix cell out of range");
  return (row - 1) * cols_ + (col - 1);
}

namespace {

std::string list_to_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

void check_index_list(const std::vector<int>& v, int t, int bound, const std::string& what) {
  if (static_cast<int>(v.size()) != t) throw std::invalid_argument(what + " must have length " + std::to_string(t));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 1 || v[k] > bound) throw std::invalid_argument(what + " index out of range");
    if (k && v[k] <= v[k - 1]) throw std::invalid_argument(what + " must be strictly increasing");
  }
}

}  // namespace

std::string Minor::to_string() const { return "rows=" + list_to_string(rows) + " cols=" + list_to_string(cols); }

MinorSelection::MinorSelection(GenericMatrix matrix, int t, std::vector<Minor> minors)
    : matrix_(matrix), t_(t), minors_(std::move(minors)) {
  if (t < 1 || t > std::min(matrix_.rows(), matrix_.cols())) throw std::invalid_argument("minor size out of range");
  for (const Minor& m : minors_) {
    check_index_list(m.rows, t, matrix_.rows(), "minor rows");
    check_index_list(m.cols, t, matrix_.cols(), "minor cols");
  }
  std::sort(minors_.begin(), minors_.end());
  if (std::adjacent_find(minors_.begin(), minors_.end()) != minors_.end())
    throw std::invalid_argument("duplicate minor in selection");
}

bool MinorSelection::contains(const Minor& m) const { return std::binary_search(minors_.begin(), minors_.end(), m); }

std::string MinorSelection::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < minors_.size(); ++k) s += (k ? "; " : "") + minors_[k].to_string();
  return s + "}";
}

bool MinorSelection::operator<(const MinorSelection& o) const {
  if (minors_.size() != o.minors_.size()) return minors_.size() < o.minors_.size();
  return minors_ < o.minors_;
}

namespace {

void subsets(int n, int t, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int k = next; k <= n; ++k) {
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

std::vector<Minor> all_minors(const GenericMatrix& x, int t) {
  std::vector<std::vector<int>> rs, cs;
  subsets(x.rows(), t, rs);
  subsets(x.cols(), t, cs);
  std::vector<Minor> out;
  for (const auto& r : rs)
    for (const auto& c : cs) out.push_back({r, c});
  return out;
}

template <class F>
Polynomial<F> minor_polynomial(const F& field, const GenericMatrix& x, const Minor& minor) {
  int t = minor.size();
  check_index_list(minor.rows, t, x.rows(), "minor rows");
  check_index_list(minor.cols, t, x.cols(), "minor cols");
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<typename Polynomial<F>::Term> terms;
  do {
    int inversions = 0;
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    Monomial m;
    for (int a = 0; a < t; ++a)
      m = m.times_variable(x.variable(minor.rows[static_cast<std::size_t>(a)],
                                      minor.cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]));
    terms.push_back({m, inversions % 2 ? field.neg(field.one()) : field.one()});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial<F>::from_terms(field, x.nvars(), std::move(terms));
}

template <class F>
std::vector<Polynomial<F>> selection_polynomials(const F& field, const MinorSelection& sel) {
  std::vector<Polynomial<F>> out;
  for (const Minor& m : sel.minors()) out.push_back(minor_polynomial(field, sel.matrix(), m));
  return out;
}

std::string ShapeVerdict::to_string() const {
  switch (kind) {
    case Kind::empty: return "Empty";
    case Kind::not_block: return "NotBlock";
    case Kind::block: {
      std::string dims = orientation == Orientation::two_by_l ? "2x" + std::to_string(ell) : std::to_string(ell) + "x2";
      return "Block " + dims + " rows=" + list_to_string(rows) + " cols=" + list_to_string(cols);
    }
  }
  return "?";
}

ShapeVerdict shape_classify_combinatorial(const MinorSelection& sel) {
  if (sel.t() != 2) throw std::invalid_argument("shape classification needs 2x2 minors");
  ShapeVerdict v;
  if (sel.empty()) return v;
  std::set<int> rows, cols;
  for (const Minor& m : sel.minors()) {
    rows.insert(m.rows.begin(), m.rows.end());
    cols.insert(m.cols.begin(), m.cols.end());
  }
  v.kind = ShapeVerdict::Kind::not_block;
  std::vector<int> rv(rows.begin(), rows.end()), cv(cols.begin(), cols.end());
  // A block on two rows uses exactly those rows and all pairs of its columns;
  // symmetrically for two columns. The single-minor case is 2x2 either way and
  // is reported as 2 x l.
  if (rv.size() == 2) {
    std::vector<Minor> want;
    for (std::size_t a = 0; a < cv.size(); ++a)
      for (std::size_t b = a + 1; b < cv.size(); ++b) want.push_back({rv, {cv[a], cv[b]}});
    if (MinorSelection(sel.matrix(), 2, want) == sel) {
      v.kind = ShapeVerdict::Kind::block;
      v.orientation = ShapeVerdict::Orientation::two_by_l;
      v.rows = rv;
      v.cols = cv;
      v.ell = static_cast<int>(cv.size());
      return v;
    }
  }
  if (cv.size() == 2) {
    std::vector<Minor> want;
    for (std::size_t a = 0; a < rv.size(); ++a)
      for (std::size_t b = a + 1; b < rv.size(); ++b) want.push_back({{rv[a], rv[b]}, cv});
    if (MinorSelection(sel.matrix(), 2, want) == sel) {
      v.kind = ShapeVerdict::Kind::block;
      v.orientation = ShapeVerdict::Orientation::l_by_two;
      v.rows = rv;
      v.cols = cv;
      v.ell = static_cast<int>(rv.size());
      return v;
    }
  }
  return v;
}

template <class F>
ShapeVerdict shape_classify(const F& field, const MinorSelection& sel) {
  ShapeVerdict v = shape_classify_combinatorial(sel);
  if (v.kind == ShapeVerdict::Kind::empty) return v;
  // Candidate submatrix: all rows and columns touched by the selection.
  std::set<int> rows, cols;
  for (const Minor& m : sel.minors()) {
    rows.insert(m.rows.begin(), m.rows.end());
    cols.insert(m.cols.begin(), m.cols.end());
  }
  if (rows.size() != 2 && cols.size() != 2) {
    if (v.kind == ShapeVerdict::Kind::block) throw std::logic_error("block verdict on a selection spanning no 2-line submatrix");
    return v;
  }
  std::vector<Minor> y_minors;
  for (const Minor& m : all_minors(sel.matrix(), 2)) {
    bool inside = std::all_of(m.rows.begin(), m.rows.end(), [&](int r) { return rows.count(r) > 0; }) &&
                  std::all_of(m.cols.begin(), m.cols.end(), [&](int c) { return cols.count(c) > 0; });
    if (inside) y_minors.push_back(m);
  }
  MinorSelection y(sel.matrix(), 2, y_minors);
  auto gens = selection_polynomials(field, sel);
  auto ygens = selection_polynomials(field, y);
  auto gb = buchberger(field, sel.matrix().nvars(), gens);
  auto ygb = buchberger(field, sel.matrix().nvars(), ygens);
  bool y_in_i = std::all_of(ygens.begin(), ygens.end(), [&](const auto& g) { return gb.contains(g); });
  bool i_in_y = std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return ygb.contains(g); });
  bool equal = y_in_i && i_in_y;
  if (equal != (v.kind == ShapeVerdict::Kind::block))
    throw std::logic_error("combinatorial shape test disagrees with ideal comparison for " + sel.to_string());
  return v;
}

MinorSelection restrict_pair(const MinorSelection& sel, Axis axis, int a, int b) {
  if (sel.t() != 2) throw std::invalid_argument("pair restriction needs 2x2 minors");
  int bound = axis == Axis::columns ? sel.matrix().cols() : sel.matrix().rows();
  if (a < 1 || b > bound || a >= b) throw std::out_of_range("restriction pair out of range");
  std::vector<Minor> kept;
  for (const Minor& m : sel.minors()) {
    const auto& line = axis == Axis::columns ? m.cols : m.rows;
    if (line[0] == a && line[1] == b) kept.push_back(m);
  }
  return MinorSelection(sel.matrix(), sel.t(), kept);
}

std::vector<MinorSelection> disjoint_split(const MinorSelection& sel) {
  const auto& ms = sel.minors();
  std::vector<std::uint32_t> support;
  for (const Minor& m : ms) {
    std::uint32_t mask = 0;
    for (int r : m.rows)
      for (int c : m.cols) mask |= 1u << sel.matrix().variable(r, c);
    support.push_back(mask);
  }
  std::vector<int> group(ms.size(), -1);
  int groups = 0;
  for (std::size_t s = 0; s < ms.size(); ++s) {
    if (group[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    group[s] = groups;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < ms.size(); ++w)
        if (group[w] < 0 && (support[u] & support[w])) {
          group[w] = groups;
          stack.push_back(w);
        }
    }
    ++groups;
  }
  std::vector<std::vector<Minor>> parts(static_cast<std::size_t>(groups));
  for (std::size_t s = 0; s < ms.size(); ++s) parts[static_cast<std::size_t>(group[s])].push_back(ms[s]);
  std::vector<MinorSelection> out;
  for (auto& p : parts) out.emplace_back(sel.matrix(), sel.t(), std::move(p));
  return out;
}

MinorSelection permute_selection(const MinorSelection& sel, const std::vector<int>& row_perm,
                                 const std::vector<int>& col_perm, bool transpose) {
  const GenericMatrix& x = sel.matrix();
  if (static_cast<int>(row_perm.size()) != x.rows() || static_cast<int>(col_perm.size()) != x.cols())
    throw std::invalid_argument("permutation sizes do not match the matrix");
  std::vector<Minor> out;
  for (const Minor& m : sel.minors()) {
    Minor p;
    for (int r : m.rows) p.rows.push_back(row_perm[static_cast<std::size_t>(r - 1)] + 1);
    for (int c : m.cols) p.cols.push_back(col_perm[static_cast<std::size_t>(c - 1)] + 1);
    std::sort(p.rows.begin(), p.rows.end());
    std::sort(p.cols.begin(), p.cols.end());
    if (transpose) std::swap(p.rows, p.cols);
    out.push_back(std::move(p));
  }
  GenericMatrix target = transpose ? GenericMatrix(x.cols(), x.rows()) : x;
  return MinorSelection(target, sel.t(), std::move(out));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

MinorSelection canonicalize(const MinorSelection& sel) {
  const GenericMatrix& x = sel.matrix();
  MinorSelection base = sel;
  if (x.rows() > x.cols()) {
    std::vector<int> ir(static_cast<std::size_t>(x.rows())), ic(static_cast<std::size_t>(x.cols()));
    std::iota(ir.begin(), ir.end(), 0);
    std::iota(ic.begin(), ic.end(), 0);
    base = permute_selection(sel, ir, ic, true);
  }
  const GenericMatrix& bx = base.matrix();
  auto rperms = all_permutations(bx.rows());
  auto cperms = all_permutations(bx.cols());
  std::vector<bool> transposes{false};
  if (bx.rows() == bx.cols()) transposes.push_back(true);
  MinorSelection best = base;
  for (bool tr : transposes)
    for (const auto& rp : rperms)
      for (const auto& cp : cperms) {
        MinorSelection cand = permute_selection(base, rp, cp, tr);
        if (cand.minors() < best.minors()) best = std::move(cand);
      }
  return best;
}

std::vector<EnumeratedSelection> enumerate_selections(int rows, int cols, int t, bool up_to_symmetry, int cap) {
  GenericMatrix x(rows, cols);
  auto minors = all_minors(x, t);
  if (static_cast<int>(minors.size()) > cap)
    throw CapExceeded(std::to_string(minors.size()) + " minors exceed the cap of " + std::to_string(cap) +
                      " (raise --cap to enumerate)");
  if (minors.size() > 24) throw CapExceeded("enumeration beyond 2^24 selections is not supported");
  std::uint64_t total = 1ull << minors.size();
  std::vector<EnumeratedSelection> out;
  if (!up_to_symmetry) {
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<Minor> pick;
      for (std::size_t k = 0; k < minors.size(); ++k)
        if (mask >> k & 1) pick.push_back(minors[k]);
      out.push_back({MinorSelection(x, t, pick), 1});
    }
  } else {
    std::map<std::vector<Minor>, EnumeratedSelection> orbits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<Minor> pick;
      for (std::size_t k = 0; k < minors.size(); ++k)
        if (mask >> k & 1) pick.push_back(minors[k]);
      MinorSelection c = canonicalize(MinorSelection(x, t, pick));
      auto it = orbits.find(c.minors());
      if (it == orbits.end())
        orbits.emplace(c.minors(), EnumeratedSelection{c, 1});
      else
        ++it->second.orbit_size;
    }
    for (auto& [key, e] : orbits) out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EnumeratedSelection& a, const EnumeratedSelection& b) { return a.selection < b.selection; });
  return out;
}

FieldChoice FieldChoice::parse(const std::string& text) {
  FieldChoice c;
  if (text == "qq") {
    c.rational = true;
    return c;
  }
  if (text.rfind("fp:", 0) == 0) {
    std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 10 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("field must be fp:<prime> or qq");
    unsigned long long p = std::stoull(digits);
    if (p < 2 || p >= (1ull << 31) || !is_prime(static_cast<std::uint32_t>(p)))
      throw std::invalid_argument("field characteristic must be a prime below 2^31");
    c.prime = static_cast<std::uint32_t>(p);
    return c;
  }
  throw std::invalid_argument("field must be fp:<prime> or qq");
}

std::string FieldChoice::to_string() const { return rational ? "qq" : "fp:" + std::to_string(prime); }

namespace {

using nlohmann::json;

int read_int(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw SpecError("missing field '" + path + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw SpecError("field '" + path + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> read_list(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw SpecError("missing field '" + path + key + "'");
  const json& v = j.at(key);
  if (!v.is_array()) throw SpecError("field '" + path + key + "' must be an array of integers");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) throw SpecError("field '" + path + key + "' must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

IdealSpec parse_ideal_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("specification must be a JSON object");
  if (!j.contains("matrix") || !j.at("matrix").is_object()) throw SpecError("missing field 'matrix'");
  int rows = read_int(j.at("matrix"), "rows", "matrix.");
  int cols = read_int(j.at("matrix"), "cols", "matrix.");
  if (rows < 1 || cols < 1) throw SpecError("field 'matrix' must have positive rows and cols");
  if (rows * cols > kMaxVariables)
    throw SpecError("field 'matrix' has more than " + std::to_string(kMaxVariables) + " entries");
  int t = read_int(j, "t", "");
  if (t < 1 || t > std::min(rows, cols)) throw SpecError("field 't' must be between 1 and min(rows, cols)");
  FieldChoice field;
  if (j.contains("field")) {
    if (!j.at("field").is_string()) throw SpecError("field 'field' must be a string");
    try {
      field = FieldChoice::parse(j.at("field").get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("field 'field': ") + e.what());
    }
  }
  if (!j.contains("minors") || !j.at("minors").is_array()) throw SpecError("missing field 'minors'");
  std::vector<Minor> minors;
  std::set<Minor> seen;
  const json& arr = j.at("minors");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    std::string path = "minors[" + std::to_string(k) + "].";
    if (!arr[k].is_object()) throw SpecError("field 'minors[" + std::to_string(k) + "]' must be an object");
    Minor m{read_list(arr[k], "rows", path), read_list(arr[k], "cols", path)};
    try {
      check_index_list(m.rows, t, rows, "rows");
    } catch (const std::invalid_argument& e) {
      throw SpecError("field '" + path + "rows': " + e.what());
    }
    try {
      check_index_list(m.cols, t, cols, "cols");
    } catch (const std::invalid_argument& e) {
      throw SpecError("field '" + path + "cols': " + e.what());
    }
    if (!seen.insert(m).second) throw SpecError("duplicate minor at index " + std::to_string(k));
    minors.push_back(std::move(m));
  }
  return {MinorSelection(GenericMatrix(rows, cols), t, std::move(minors)), field};
}

std::string ideal_spec_to_json(const IdealSpec& spec) {
  json j;
  j["matrix"] = {{"rows", spec.selection.matrix().rows()}, {"cols", spec.selection.matrix().cols()}};
  j["t"] = spec.selection.t();
  j["minors"] = json::array();
  for (const Minor& m : spec.selection.minors()) j["minors"].push_back({{"rows", m.rows}, {"cols", m.cols}});
  j["field"] = spec.field.to_string();
  return j.dump(2);
}

template Polynomial<PrimeField> minor_polynomial(const PrimeField&, const GenericMatrix&, const Minor&);
template Polynomial<RationalField> minor_polynomial(const RationalField&, const GenericMatrix&, const Minor&);
template std::vector<Polynomial<PrimeField>> selection_polynomials(const PrimeField&, const MinorSelection&);
template std::vector<Polynomial<RationalField>> selection_polynomials(const RationalField&, const MinorSelection&);
template ShapeVerdict shape_classify(const PrimeField&, const MinorSelection&);
template ShapeVerdict shape_classify(const RationalField&, const MinorSelection&);

}  // namespace gsd
