#include "gsd/koszul.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gsd {

namespace {

std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

std::string basis_symbol(int v, int cols) {
  if (cols <= 0) return "e[" + std::to_string(v + 1) + "]";
  return "e[(" + std::to_string(v / cols + 1) + "," + std::to_string(v % cols + 1) + ")]";
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  // Count pairs (x in a, y in b) with x > y: each costs one transposition.
  int inversions = 0;
  for (; b; b &= b - 1) inversions += std::popcount(a >> (std::countr_zero(b) + 1));
  return inversions % 2 ? -1 : 1;
}

// ---------------------------------------------------------------- QuotientRing

template <class F>
QuotientRing<F>::QuotientRing(GroebnerBasis<F> gb, Grading grading) : gb_(std::move(gb)), grading_(std::move(grading)) {
  if (grading_.nvars() != gb_.nvars()) throw std::invalid_argument("grading and ring disagree on the variable count");
}

template <class F>
typename QuotientRing<F>::DegreePiece& QuotientRing<F>::piece(int d) {
  auto it = pieces_.find(d);
  if (it != pieces_.end()) return it->second;
  DegreePiece p;
  for (const Monomial& m : quotient_monomial_basis(gb_, d)) {
    auto& bucket = p.by_key[grading_.key(m)];
    index_[m] = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(m);
  }
  for (const auto& [key, ms] : p.by_key) p.keys.push_back(key);
  return pieces_.emplace(d, std::move(p)).first->second;
}

template <class F>
const std::vector<Monomial>& QuotientRing<F>::basis(const DegreeKey& key) {
  if (key.total() < 0) return empty_;
  DegreePiece& p = piece(key.total());
  auto it = p.by_key.find(key);
  return it == p.by_key.end() ? empty_ : it->second;
}

template <class F>
const std::vector<DegreeKey>& QuotientRing<F>::keys_of_degree(int d) {
  static const std::vector<DegreeKey> none;
  if (d < 0) return none;
  return piece(d).keys;
}

template <class F>
std::uint32_t QuotientRing<F>::index_of(const Monomial& standard) {
  piece(standard.degree());
  auto it = index_.find(standard);
  if (it == index_.end()) throw std::invalid_argument("monomial is not standard");
  return it->second;
}

template <class F>
const SparseVector<F>& QuotientRing<F>::normal_form(const Monomial& m) {
  auto it = nf_cache_.find(m);
  if (it != nf_cache_.end()) return it->second;
  piece(m.degree());
  SparseVector<F> v;
  if (gb_.is_standard(m)) {
    v.emplace_back(index_.at(m), field().one());
  } else {
    Polynomial<F> r = gb_.normal_form(Polynomial<F>::term(field(), nvars(), m, field().one()));
    for (const auto& t : r.terms()) v.emplace_back(index_.at(t.monomial), t.coeff);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return nf_cache_.emplace(m, std::move(v)).first->second;
}

// ------------------------------------------------------------- chain arithmetic

template <class F>
KoszulChain<F> chain_add(const KoszulChain<F>& a, const KoszulChain<F>& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("chains live in different rings");
  KoszulChain<F> out = a;
  for (const auto& [mask, f] : b.terms) {
    auto it = out.terms.find(mask);
    if (it == out.terms.end()) {
      out.terms.emplace(mask, f);
      continue;
    }
    it->second = it->second + f;
    if (it->second.is_zero()) out.terms.erase(it);
  }
  return out;
}

template <class F>
KoszulChain<F> chain_scale(const KoszulChain<F>& a, const typename F::Element& c) {
  KoszulChain<F> out{a.nvars, {}};
  for (const auto& [mask, f] : a.terms) {
    Polynomial<F> g = f.scaled(c);
    if (!g.is_zero()) out.terms.emplace(mask, std::move(g));
  }
  return out;
}

template <class F>
KoszulChain<F> chain_differential(const KoszulChain<F>& a, const GroebnerBasis<F>& gb) {
  const F& field = gb.field();
  KoszulChain<F> out{a.nvars, {}};
  for (const auto& [mask, f] : a.terms) {
    int s = 0;
    for (int v : bits_of(mask)) {
      auto sign = (s++ % 2) ? field.neg(field.one()) : field.one();
      Polynomial<F> g = gb.normal_form(f.times_term(Monomial::variable(v), sign));
      KoszulChain<F> piece{a.nvars, {}};
      if (!g.is_zero()) piece.terms.emplace(mask & ~(1u << v), std::move(g));
      out = chain_add(out, piece);
    }
  }
  return out;
}

template <class F>
KoszulChain<F> chain_wedge(const KoszulChain<F>& a, const KoszulChain<F>& b, const GroebnerBasis<F>& gb) {
  KoszulChain<F> out{a.nvars, {}};
  for (const auto& [ma, f] : a.terms)
    for (const auto& [mb, g] : b.terms) {
      if (ma & mb) continue;
      Polynomial<F> h = gb.normal_form(f * g);
      if (wedge_sign(ma, mb) < 0) h = -h;
      KoszulChain<F> piece{a.nvars, {}};
      if (!h.is_zero()) piece.terms.emplace(ma | mb, std::move(h));
      out = chain_add(out, piece);
    }
  return out;
}

template <class F>
std::string chain_to_string(const KoszulChain<F>& a, const VariableNames& names, int cols) {
  if (a.terms.empty()) return "0";
  std::string out;
  for (const auto& [mask, f] : a.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(f, names) + ") * ";
    if (mask == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int v : bits_of(mask)) {
      if (!first) out += "^";
      out += basis_symbol(v, cols);
      first = false;
    }
  }
  return out;
}

template <class F>
KoszulChain<F> parse_chain(const std::string& text, const F& field, const VariableNames& names, int cols) {
  const int nvars = names.size();
  KoszulChain<F> out{nvars, {}};
  std::string s = trim(text);
  if (s == "0") return out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("chain parse error at offset " + std::to_string(pos) + ": " + what);
  };
  std::map<std::string, int> symbols;
  for (int v = 0; v < nvars; ++v) symbols[basis_symbol(v, cols)] = v;
  while (true) {
    if (pos >= s.size() || s[pos] != '(') fail("expected '('");
    int depth = 0;
    std::size_t close = pos;
    for (; close < s.size(); ++close) {
      if (s[close] == '(') ++depth;
      if (s[close] == ')' && --depth == 0) break;
    }
    if (close >= s.size()) fail("unbalanced parentheses");
    Polynomial<F> f = parse_polynomial(s.substr(pos + 1, close - pos - 1), field, names);
    pos = close + 1;
    const std::string star = " * ";
    if (s.compare(pos, star.size(), star) != 0) fail("expected ' * '");
    pos += star.size();
    std::size_t end = s.find(" + ", pos);
    std::string wedge = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::uint32_t mask = 0;
    if (wedge != "1") {
      std::size_t start = 0;
      while (start <= wedge.size()) {
        std::size_t hat = wedge.find('^', start);
        std::string sym = wedge.substr(start, hat == std::string::npos ? std::string::npos : hat - start);
        auto it = symbols.find(sym);
        if (it == symbols.end()) fail("unknown basis symbol '" + sym + "'");
        std::uint32_t bit = 1u << it->second;
        if (mask & bit) fail("repeated basis symbol '" + sym + "'");
        // Sort the symbols into increasing order, tracking the sign.
        if (wedge_sign(mask, bit) < 0) f = -f;
        mask |= bit;
        if (hat == std::string::npos) break;
        start = hat + 1;
      }
    }
    KoszulChain<F> piece{nvars, {}};
    if (!f.is_zero()) piece.terms.emplace(mask, std::move(f));
    out = chain_add(out, piece);
    if (end == std::string::npos) break;
    pos = end + 3;
  }
  return out;
}

// --------------------------------------------------------------- KoszulComplex

template <class F>
KoszulComplex<F>::KoszulComplex(QuotientRing<F>& ring) : ring_(ring), nvars_(ring.nvars()) {
  subsets_by_size_.resize(static_cast<std::size_t>(nvars_ + 1));
  subset_keys_.resize(std::size_t{1} << nvars_, ring.grading().zero_key());
  for (std::uint32_t mask = 0; mask < (1u << nvars_); ++mask) {
    subsets_by_size_[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    if (mask) {
      int low = std::countr_zero(mask);
      subset_keys_[mask] = subset_keys_[mask & (mask - 1)] + ring.grading().key_of(low);
    }
  }
  for (const auto& masks : subsets_by_size_) {
    std::vector<DegreeKey> ks;
    for (std::uint32_t mask : masks) ks.push_back(subset_keys_[mask]);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    distinct_keys_by_size_.push_back(std::move(ks));
  }
}

namespace {

DegreeKey subset_key(std::uint32_t mask, const Grading& g) {
  DegreeKey k = g.zero_key();
  for (int v : bits_of(mask)) k = k + g.key_of(v);
  return k;
}

struct ChainTermLess {
  bool operator()(const std::pair<std::uint32_t, Monomial>& x, const std::pair<std::uint32_t, Monomial>& y) const {
    if (x.first != y.first) return x.first < y.first;
    return grevlex_compare(x.second, y.second) < 0;
  }
};

}  // namespace

template <class F>
const KoszulBlock& KoszulComplex<F>::block(int i, const DegreeKey& key) {
  auto id = std::make_pair(i, key);
  auto it = blocks_.find(id);
  if (it != blocks_.end()) return *it->second;
  auto b = std::make_unique<KoszulBlock>();
  b->i = i;
  b->key = key;
  if (i >= 0 && i <= nvars_) {
    for (std::uint32_t mask : subsets_by_size_[static_cast<std::size_t>(i)]) {
      const DegreeKey& a = subset_keys_[mask];
      if (!a.leq(key)) continue;
      DegreeKey rest = key - a;
      const auto& mons = ring_.basis(rest);
      if (mons.empty()) continue;
      b->offset[mask] = static_cast<std::uint32_t>(b->basis.size());
      for (const Monomial& u : mons) b->basis.emplace_back(mask, u);
    }
  }
  return *blocks_.emplace(id, std::move(b)).first->second;
}

template <class F>
std::vector<DegreeKey> KoszulComplex<F>::keys(int i, int j) {
  std::vector<DegreeKey> out;
  if (i < 0 || i > nvars_ || j < i) return out;
  const auto& ring_keys = ring_.keys_of_degree(j - i);
  for (const DegreeKey& a : distinct_keys_by_size_[static_cast<std::size_t>(i)])
    for (const DegreeKey& k : ring_keys) out.push_back(a + k);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class F>
std::vector<SparseVector<F>> KoszulComplex<F>::differential_columns(int i, const DegreeKey& key) {
  const F& field = ring_.field();
  const KoszulBlock& src = block(i, key);
  std::vector<SparseVector<F>> cols;
  if (i == 0) {
    cols.assign(src.dimension(), {});
    return cols;
  }
  const KoszulBlock& dst = block(i - 1, key);
  cols.reserve(src.dimension());
  for (const auto& [mask, u] : src.basis) {
    SparseVector<F> col;
    int s = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      bool negative = (s++ % 2) != 0;
      const SparseVector<F>& nf = ring_.normal_form(u.times_variable(v));
      if (nf.empty()) continue;
      std::uint32_t base = dst.offset.at(mask & ~(1u << v));
      for (const auto& [idx, c] : nf) col.emplace_back(base + idx, negative ? field.neg(c) : c);
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.push_back(std::move(col));
  }
  return cols;
}

template <class F>
KoszulChain<F> KoszulComplex<F>::to_chain(const KoszulBlock& b, const SparseVector<F>& v) {
  std::map<std::uint32_t, std::vector<typename Polynomial<F>::Term>> grouped;
  for (const auto& [idx, c] : v) {
    const auto& [mask, u] = b.basis.at(idx);
    grouped[mask].push_back({u, c});
  }
  KoszulChain<F> out{nvars_, {}};
  for (auto& [mask, terms] : grouped) {
    auto p = Polynomial<F>::from_terms(ring_.field(), nvars_, std::move(terms));
    if (!p.is_zero()) out.terms.emplace(mask, std::move(p));
  }
  return out;
}

template <class F>
SparseVector<F> KoszulComplex<F>::to_vector(const KoszulBlock& b, const KoszulChain<F>& c) {
  SparseVector<F> out;
  for (const auto& [mask, f] : c.terms) {
    auto it = b.offset.find(mask);
    if (it == b.offset.end()) throw std::invalid_argument("chain has a term outside the block");
    for (const auto& t : f.terms()) {
      if (ring_.grading().key(t.monomial) + subset_keys_[mask] != b.key)
        throw std::invalid_argument("chain term has the wrong degree for the block");
      out.emplace_back(it->second + ring_.index_of(t.monomial), t.coeff);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// -------------------------------------------------------------- KoszulHomology

template <class F>
KoszulHomology<F>::KoszulHomology(KoszulComplex<F>& complex) : complex_(complex) {}

template <class F>
const HomologyBlock<F>& KoszulHomology<F>::block(int i, const DegreeKey& key) {
  auto id = std::make_pair(i, key);
  auto it = blocks_.find(id);
  if (it != blocks_.end()) return *it->second;

  const F& field = complex_.ring().field();
  const std::size_t dim = complex_.block(i, key).dimension();
  auto h = std::make_unique<HomologyBlock<F>>();
  h->i = i;
  h->key = key;
  h->chain_dimension = dim;
  h->echelon = std::make_unique<EchelonBasis<F>>(field, dim);
  if (i + 1 <= complex_.nvars())
    for (const auto& col : complex_.differential_columns(i + 1, key)) {
      h->echelon->insert(col);
      if (h->echelon->rank() == dim) break;
    }
  h->boundary_rank = h->echelon->rank();
  h->representative_of_basis.assign(h->boundary_rank, static_cast<std::size_t>(-1));

  std::vector<SparseVector<F>> cycles;
  if (i == 0) {
    for (std::size_t k = 0; k < dim; ++k) cycles.push_back({{static_cast<std::uint32_t>(k), field.one()}});
  } else {
    std::size_t rows = complex_.block(i - 1, key).dimension();
    cycles = matrix_kernel(field, rows, complex_.differential_columns(i, key));
  }
  h->cycle_dimension = cycles.size();
  for (const auto& z : cycles) {
    auto idx = h->echelon->insert_reduced(h->echelon->reduce(z));
    if (!idx) continue;
    h->representative_of_basis.push_back(h->representatives.size());
    h->representatives.push_back(h->echelon->vector(*idx));
  }
  if (h->representatives.size() != h->cycle_dimension - h->boundary_rank)
    throw std::logic_error("boundaries are not contained in the cycles");
  ranks_[{i + 1, key}] = h->boundary_rank;
  ranks_[{i, key}] = dim - h->cycle_dimension;
  return *blocks_.emplace(id, std::move(h)).first->second;
}

template <class F>
std::size_t KoszulHomology<F>::differential_rank(int i, const DegreeKey& key) {
  if (i <= 0 || i > complex_.nvars()) return 0;
  auto id = std::make_pair(i, key);
  auto it = ranks_.find(id);
  if (it != ranks_.end()) return it->second;
  std::size_t rows = complex_.block(i - 1, key).dimension();
  std::size_t r = rows == 0 ? 0 : matrix_rank(complex_.ring().field(), rows, complex_.differential_columns(i, key));
  ranks_[id] = r;
  return r;
}

template <class F>
std::int64_t KoszulHomology<F>::dimension_by_rank(int i, const DegreeKey& key) {
  std::size_t dim = complex_.block(i, key).dimension();
  if (dim == 0) return 0;
  return static_cast<std::int64_t>(dim) - static_cast<std::int64_t>(differential_rank(i, key)) -
         static_cast<std::int64_t>(differential_rank(i + 1, key));
}

template <class F>
std::int64_t KoszulHomology<F>::dimension(int i, int j) {
  std::int64_t total = 0;
  for (const DegreeKey& key : complex_.keys(i, j)) total += dimension_by_rank(i, key);
  return total;
}

template <class F>
std::vector<typename F::Element> KoszulHomology<F>::classify(int i, const DegreeKey& key, const SparseVector<F>& cycle) {
  const HomologyBlock<F>& h = block(i, key);
  const F& field = complex_.ring().field();
  std::vector<std::pair<std::size_t, typename F::Element>> mult;
  if (!h.echelon->reduce(cycle, &mult).empty()) throw std::invalid_argument("vector is not a cycle");
  std::vector<typename F::Element> coords(h.dimension(), field.zero());
  for (const auto& [k, c] : mult) {
    std::size_t r = h.representative_of_basis[k];
    if (r != static_cast<std::size_t>(-1)) coords[r] = field.add(coords[r], c);
  }
  return coords;
}

template <class F>
bool KoszulHomology<F>::is_boundary(int i, const DegreeKey& key, const SparseVector<F>& cycle) {
  const F& field = complex_.ring().field();
  for (const auto& c : classify(i, key, cycle))
    if (!field.is_zero(c)) return false;
  return true;
}

template <class F>
BettiTable koszul_betti_table(KoszulHomology<F>& homology, int max_degree) {
  BettiTable t;
  for (int i = 0; i <= homology.complex().nvars(); ++i)
    for (int j = i; j <= max_degree; ++j)
      for (const DegreeKey& key : homology.complex().keys(i, j)) t.add(i, key, homology.dimension_by_rank(i, key));
  return t;
}

// ------------------------------------------------------------------- products

namespace {

template <class F>
SparseVector<F> wedge_vectors(KoszulComplex<F>& cx, const KoszulBlock& a, const SparseVector<F>& va,
                              const KoszulBlock& b, const SparseVector<F>& vb, const KoszulBlock& target) {
  const F& field = cx.ring().field();
  std::map<std::uint32_t, typename F::Element> acc;
  for (const auto& [ia, ca] : va) {
    const auto& [ma, ua] = a.basis[ia];
    for (const auto& [ib, cb] : vb) {
      const auto& [mb, ub] = b.basis[ib];
      if (ma & mb) continue;
      const SparseVector<F>& nf = cx.ring().normal_form(ua * ub);
      if (nf.empty()) continue;
      auto coeff = field.mul(ca, cb);
      if (wedge_sign(ma, mb) < 0) coeff = field.neg(coeff);
      std::uint32_t base = target.offset.at(ma | mb);
      for (const auto& [idx, c] : nf) {
        auto [it, fresh] = acc.emplace(base + idx, field.zero());
        it->second = field.add(it->second, field.mul(coeff, c));
      }
    }
  }
  SparseVector<F> out;
  for (auto& [idx, c] : acc)
    if (!field.is_zero(c)) out.emplace_back(idx, std::move(c));
  return out;
}

}  // namespace

template <class F>
std::vector<typename F::Element> class_product(KoszulHomology<F>& homology, const ClassRef& a, const ClassRef& b) {
  KoszulComplex<F>& cx = homology.complex();
  const int i = a.i + b.i;
  if (i > cx.nvars()) return {};
  const DegreeKey key = a.key + b.key;
  const SparseVector<F> va = homology.block(a.i, a.key).representatives.at(a.index);
  const SparseVector<F> vb = homology.block(b.i, b.key).representatives.at(b.index);
  if (homology.block(i, key).dimension() == 0) return {};
  SparseVector<F> prod = wedge_vectors(cx, cx.block(a.i, a.key), va, cx.block(b.i, b.key), vb, cx.block(i, key));
  auto coords = homology.classify(i, key, prod);
  const F& field = cx.ring().field();
  for (const auto& c : coords)
    if (!field.is_zero(c)) return coords;
  return {};
}

template <class F>
ProductCheck<F> trivial_product_check(KoszulHomology<F>& homology, const BettiTable& support) {
  if (support.multigraded().empty() && !support.entries().empty())
    throw std::invalid_argument("product check needs a multigraded Betti table");
  std::vector<ClassRef> classes;
  for (const auto& [id, count] : support.multigraded()) {
    if (id.first < 1) continue;
    const auto& h = homology.block(id.first, id.second);
    if (static_cast<std::int64_t>(h.dimension()) != count)
      throw std::logic_error("Koszul homology disagrees with the Betti table at i=" + std::to_string(id.first) +
                             " key=" + id.second.to_string());
    for (std::size_t k = 0; k < h.dimension(); ++k) classes.push_back({id.first, id.second, k});
  }
  ProductCheck<F> out;
  KoszulComplex<F>& cx = homology.complex();
  for (std::size_t p = 0; p < classes.size(); ++p)
    for (std::size_t q = p; q < classes.size(); ++q) {
      const ClassRef& a = classes[p];
      const ClassRef& b = classes[q];
      const int i = a.i + b.i;
      const DegreeKey key = a.key + b.key;
      ++out.pairs_checked;
      if (!support.multigraded().count({i, key})) continue;
      auto coords = class_product(homology, a, b);
      if (coords.empty()) continue;
      out.trivial = false;
      ProductWitness<F> w;
      w.a = a;
      w.b = b;
      w.factor_a = cx.to_chain(cx.block(a.i, a.key), homology.block(a.i, a.key).representatives[a.index]);
      w.factor_b = cx.to_chain(cx.block(b.i, b.key), homology.block(b.i, b.key).representatives[b.index]);
      w.product = chain_wedge(w.factor_a, w.factor_b, cx.ring().groebner_basis());
      w.product_class = std::move(coords);
      const auto& target = homology.block(i, key);
      w.target_chain_dimension = target.chain_dimension;
      w.target_boundary_rank = target.boundary_rank;
      out.witness = std::move(w);
      return out;
    }
  return out;
}

// ------------------------------------------------------- witness verification

template <class F>
WitnessCheck verify_witness_text(const std::string& factor_a, const std::string& factor_b, const std::string& product,
                                 const GroebnerBasis<F>& gb, const Grading& grading, const VariableNames& names,
                                 int cols) {
  const F& field = gb.field();
  WitnessCheck out;
  KoszulChain<F> a = parse_chain(factor_a, field, names, cols);
  KoszulChain<F> b = parse_chain(factor_b, field, names, cols);
  KoszulChain<F> z = parse_chain(product, field, names, cols);
  out.factors_are_cycles = chain_differential(a, gb).is_zero() && chain_differential(b, gb).is_zero();
  out.product_is_cycle = chain_differential(z, gb).is_zero();
  out.product_matches_wedge = chain_wedge(a, b, gb) == z;
  if (z.is_zero()) return out;

  // The product must be homogeneous in one homological degree and one key.
  const int i = std::popcount(z.terms.begin()->first);
  std::optional<DegreeKey> key;
  for (const auto& [mask, f] : z.terms) {
    if (std::popcount(mask) != i) return out;
    for (const auto& t : f.terms()) {
      DegreeKey k = grading.key(t.monomial) + subset_key(mask, grading);
      if (key && *key != k) return out;
      key = k;
    }
  }
  if (i + 1 > gb.nvars()) {
    out.product_not_boundary = true;
    return out;
  }

  // Boundaries of e_B * u for every (i+1)-subset B and standard monomial u of
  // complementary key span the boundaries in this degree.
  std::vector<KoszulChain<F>> boundaries;
  const int nvars = gb.nvars();
  const int d = key->total() - (i + 1);
  std::vector<Monomial> standard = d >= 0 ? quotient_monomial_basis(gb, d) : std::vector<Monomial>{};
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    if (std::popcount(mask) != i + 1) continue;
    DegreeKey rest = *key - subset_key(mask, grading);
    if (!rest.nonnegative()) continue;
    for (const Monomial& u : standard) {
      if (grading.key(u) != rest) continue;
      KoszulChain<F> c{nvars, {}};
      c.terms.emplace(mask, Polynomial<F>::term(field, nvars, u, field.one()));
      boundaries.push_back(chain_differential(c, gb));
    }
  }
  std::map<std::pair<std::uint32_t, Monomial>, std::size_t, ChainTermLess> coord;
  auto register_chain = [&](const KoszulChain<F>& c) {
    for (const auto& [mask, f] : c.terms)
      for (const auto& t : f.terms()) coord.emplace(std::make_pair(mask, t.monomial), coord.size());
  };
  for (const auto& c : boundaries) register_chain(c);
  register_chain(z);
  auto dense = [&](const KoszulChain<F>& c) {
    std::vector<typename F::Element> row(coord.size(), field.zero());
    for (const auto& [mask, f] : c.terms)
      for (const auto& t : f.terms()) row[coord.at({mask, t.monomial})] = t.coeff;
    return row;
  };
  std::vector<std::vector<typename F::Element>> rows;
  for (const auto& c : boundaries) rows.push_back(dense(c));
  std::size_t r0 = dense_rank(field, rows);
  rows.push_back(dense(z));
  out.product_not_boundary = dense_rank(field, rows) > r0;
  return out;
}

#define GSD_INSTANTIATE(F)                                                                                           \
  template class QuotientRing<F>;                                                                                    \
  template class KoszulComplex<F>;                                                                                   \
  template class KoszulHomology<F>;                                                                                  \
  template KoszulChain<F> chain_add(const KoszulChain<F>&, const KoszulChain<F>&);                                   \
  template KoszulChain<F> chain_scale(const KoszulChain<F>&, const typename F::Element&);                            \
  template KoszulChain<F> chain_differential(const KoszulChain<F>&, const GroebnerBasis<F>&);                        \
  template KoszulChain<F> chain_wedge(const KoszulChain<F>&, const KoszulChain<F>&, const GroebnerBasis<F>&);        \
  template std::string chain_to_string(const KoszulChain<F>&, const VariableNames&, int);                            \
  template KoszulChain<F> parse_chain(const std::string&, const F&, const VariableNames&, int);                      \
  template BettiTable koszul_betti_table(KoszulHomology<F>&, int);                                                   \
  template std::vector<typename F::Element> class_product(KoszulHomology<F>&, const ClassRef&, const ClassRef&);     \
  template ProductCheck<F> trivial_product_check(KoszulHomology<F>&, const BettiTable&);                             \
  template WitnessCheck verify_witness_text(const std::string&, const std::string&, const std::string&,              \
                                            const GroebnerBasis<F>&, const Grading&, const VariableNames&, int);

GSD_INSTANTIATE(PrimeField)
GSD_INSTANTIATE(RationalField)

}  // namespace gsd
