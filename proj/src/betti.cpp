#include "gsd/betti.hpp"

#include <algorithm>
#include <sstream>

namespace gsd {

void BettiTable::add(int i, const DegreeKey& key, std::int64_t count) {
  if (count == 0) return;
  multigraded_[{i, key}] += count;
  entries_[{i, key.total()}] += count;
}

void BettiTable::add(int i, int j, std::int64_t count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::int64_t BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

std::vector<std::int64_t> BettiTable::totals() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_homological_degree() + 1), 0);
  for (const auto& [key, v] : entries_) out[static_cast<std::size_t>(key.first)] += v;
  return out;
}

int BettiTable::max_homological_degree() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

int BettiTable::max_internal_degree() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.second);
  return m;
}

std::string BettiTable::tally() const {
  if (entries_.empty()) return "(zero)\n";
  int imax = max_homological_degree();
  int rmin = 0, rmax = 0;
  bool first = true;
  for (const auto& [key, v] : entries_) {
    int r = key.second - key.first;
    rmin = first ? r : std::min(rmin, r);
    rmax = first ? r : std::max(rmax, r);
    first = false;
  }
  std::vector<std::string> header, totals_row;
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(rmax - rmin + 1));
  std::size_t width = 1;
  for (int i = 0; i <= imax; ++i) {
    header.push_back(std::to_string(i));
    totals_row.push_back(std::to_string(total(i)));
    for (int r = rmin; r <= rmax; ++r) {
      std::int64_t v = get(i, i + r);
      rows[static_cast<std::size_t>(r - rmin)].push_back(v ? std::to_string(v) : ".");
    }
  }
  for (const auto& s : totals_row) width = std::max(width, s.size());
  for (const auto& s : header) width = std::max(width, s.size());
  std::size_t label_width = std::string("total:").size();
  for (int r = rmin; r <= rmax; ++r) label_width = std::max(label_width, std::to_string(r).size() + 1);
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  auto emit = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::string line = pad(label, label_width);
    for (const auto& c : cells) line += " " + pad(c, width);
    out << line << "\n";
  };
  emit("", header);
  emit("total:", totals_row);
  for (int r = rmin; r <= rmax; ++r) emit(std::to_string(r) + ":", rows[static_cast<std::size_t>(r - rmin)]);
  return out.str();
}

template <class F>
Resolution<F> minimal_resolution(const F& field, const std::vector<Polynomial<F>>& gens, const Grading& grading) {
  const int nvars = grading.nvars();
  Resolution<F> res;
  res.shifts.push_back({grading.zero_key()});
  res.table.add(0, grading.zero_key());

  std::vector<ModuleVector<F>> elems;
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator ring does not match the grading");
    if (!g.is_zero()) elems.push_back(ModuleVector<F>::from_polynomial(g, 0));
  }
  std::vector<FreeModuleElement<F>> current;
  std::vector<DegreeKey> degrees;
  for (std::size_t k : minimal_generator_indices(field, elems, res.shifts[0], grading)) {
    current.push_back({elems[k].components(field, nvars, 1)});
    degrees.push_back(module_element_degree(elems[k], res.shifts[0], grading));
  }
  if (!current.empty() && degrees.front().total() == 0) throw std::invalid_argument("the ideal is the unit ideal");

  int i = 1;
  while (!current.empty()) {
    if (i > nvars) throw std::logic_error("resolution longer than the number of variables");
    for (const auto& d : degrees) res.table.add(i, d);
    res.differentials.push_back(current);
    res.shifts.push_back(degrees);
    SyzygyModule<F> syz = module_syzygies(field, current, res.shifts[static_cast<std::size_t>(i - 1)], grading);
    current = std::move(syz.generators);
    degrees = std::move(syz.degrees);
    ++i;
  }
  return res;
}

bool linear_resolution_check(const BettiTable& bt, int gendeg) {
  for (const auto& [key, v] : bt.entries())
    if (key.first == 1 && key.second != gendeg)
      throw std::invalid_argument("ideal is not generated in the single degree " + std::to_string(gendeg));
  for (const auto& [key, v] : bt.entries())
    if (key.first >= 1 && key.second != gendeg + key.first - 1) return false;
  return true;
}

template <class F>
bool hilbert_certificate(const BettiTable& bt, const GroebnerBasis<F>& gb, int D) {
  if (D < bt.max_internal_degree()) throw std::invalid_argument("certificate degree below the table's support");
  const int n = gb.nvars();
  std::vector<std::int64_t> lhs(static_cast<std::size_t>(D + 1), 0), hf(static_cast<std::size_t>(D + 1), 0);
  for (const auto& [key, v] : bt.entries())
    if (key.second <= D) lhs[static_cast<std::size_t>(key.second)] += (key.first % 2 ? -1 : 1) * v;
  for (int d = 0; d <= D; ++d) hf[static_cast<std::size_t>(d)] = hilbert_function(gb, d);
  // Multiply by (1 - t)^n one factor at a time.
  for (int k = 0; k < n; ++k)
    for (int d = D; d >= 1; --d) hf[static_cast<std::size_t>(d)] -= hf[static_cast<std::size_t>(d - 1)];
  return lhs == hf;
}

template Resolution<PrimeField> minimal_resolution(const PrimeField&, const std::vector<Polynomial<PrimeField>>&,
                                                   const Grading&);
template Resolution<RationalField> minimal_resolution(const RationalField&, const std::vector<Polynomial<RationalField>>&,
                                                      const Grading&);
template bool hilbert_certificate(const BettiTable&, const GroebnerBasis<PrimeField>&, int);
template bool hilbert_certificate(const BettiTable&, const GroebnerBasis<RationalField>&, int);

}  // namespace gsd
