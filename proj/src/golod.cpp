#include "gsd/golod.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "gsd/koszul.hpp"

namespace gsd {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflows int64");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("series coefficient overflows int64");
  return r;
}

}  // namespace

// ------------------------------------------------------------ BigradedSeries

BigradedSeries BigradedSeries::zero(int D, Provenance p) {
  if (D < 0) throw std::invalid_argument("negative truncation degree");
  BigradedSeries s;
  s.D = D;
  s.provenance = p;
  s.c.assign(static_cast<std::size_t>(D + 1), std::vector<std::int64_t>(static_cast<std::size_t>(D + 1), 0));
  return s;
}

std::int64_t BigradedSeries::get(int i, int j) const {
  if (i < 0 || j < 0 || i > D || j > D) return 0;
  return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void BigradedSeries::set(int i, int j, std::int64_t v) {
  if (i < 0 || j < 0 || i > D || j > D) throw std::out_of_range("series index outside the truncation window");
  c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
}

std::vector<std::int64_t> BigradedSeries::z_collapse() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(D + 1), 0);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; j <= D; ++j) out[static_cast<std::size_t>(i)] = checked_add(out[static_cast<std::size_t>(i)], get(i, j));
  return out;
}

BigradedSeries BigradedSeries::times_one_plus_zt(int k) const {
  BigradedSeries s = *this;
  for (int step = 0; step < k; ++step)
    for (int i = D; i >= 1; --i)
      for (int j = D; j >= 1; --j) s.set(i, j, checked_add(s.get(i, j), s.get(i - 1, j - 1)));
  return s;
}

std::string to_string(BigradedSeries::Provenance p) {
  return p == BigradedSeries::Provenance::actual_resolution ? "actual-resolution" : "golod-bound";
}

std::string GolodVerdict::to_string() const {
  if (kind == Kind::consistent_up_to) return "ConsistentUpTo(" + std::to_string(D) + ")";
  return "NotGolod(gap " + std::to_string(gap_size) + " at z^" + std::to_string(gap_i) + " t^" + std::to_string(gap_j) +
         ")";
}

std::string to_string(FastPath f) {
  switch (f) {
    case FastPath::none:
      return "none";
    case FastPath::disjoint_split:
      return "disjoint-split";
    case FastPath::product_witness:
      return "product-witness";
  }
  return "none";
}

// ------------------------------------------------------ resolution of k over R

namespace {

/// Builds the minimal graded free resolution of k over R one homological
/// level at a time, keeping only internal degrees <= D.
template <class F>
class ResidueFieldResolver {
 public:
  using Element = typename F::Element;

  ResidueFieldResolver(const GroebnerBasis<F>& gb, const Grading& grading, int D) : ring_(gb, grading), D_(D) {
    Level zero;
    zero.gens.push_back({grading.zero_key(), {}});
    zero.by_key[grading.zero_key()].push_back(0);
    levels_.push_back(std::move(zero));
  }

  int levels() const { return static_cast<int>(levels_.size()); }

  /// Number of generators of F_i of each total degree 0..D.
  std::vector<std::int64_t> row(int i) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(D_ + 1), 0);
    for (const auto& g : levels_[static_cast<std::size_t>(i)].gens) ++out[static_cast<std::size_t>(g.deg.total())];
    return out;
  }

  /// Computes F_{i+1} from F_i and its differential, where i is the last level.
  void extend() {
    const int i = levels() - 1;
    const Level& cur = levels_.back();
    Level next;
    const Level* prev = i >= 1 ? &levels_[static_cast<std::size_t>(i - 1)] : nullptr;
    const F& field = ring_.field();
    for (int d = i + 1; d <= D_; ++d) {
      std::set<DegreeKey> candidates;
      for (const auto& [deg, gens] : cur.by_key) {
        if (deg.total() > d) continue;
        for (const DegreeKey& rk : ring_.keys_of_degree(d - deg.total())) candidates.insert(deg + rk);
      }
      for (const DegreeKey& key : candidates) {
        Layout here = layout(cur, key);
        if (here.dim == 0) continue;
        std::vector<SparseVector<F>> cycles;
        if (!prev) {
          for (std::size_t k = 0; k < here.dim; ++k) cycles.push_back({{static_cast<std::uint32_t>(k), field.one()}});
        } else {
          Layout below = layout(*prev, key);
          std::vector<SparseVector<F>> columns;
          columns.reserve(here.dim);
          for (const Segment& seg : here.segments)
            for (const Monomial& w : *seg.basis)
              columns.push_back(multiply(cur.gens[seg.gen].image, w, below));
          cycles = matrix_kernel(field, below.dim, columns);
        }
        if (cycles.empty()) continue;
        // Span of R_+ times the generators of F_{i+1} found in lower degrees.
        EchelonBasis<F> span(field, here.dim);
        for (const auto& [deg, gens] : next.by_key) {
          if (deg == key || !deg.leq(key)) continue;
          const auto& mons = ring_.basis(key - deg);
          for (std::uint32_t h : gens)
            for (const Monomial& u : mons) {
              span.insert(multiply(next.gens[h].image, u, here));
              if (span.rank() == here.dim) break;
            }
        }
        for (const auto& z : cycles) {
          if (span.rank() == here.dim) break;
          SparseVector<F> r = span.reduce(z);
          if (r.empty()) continue;
          span.insert_reduced(std::move(r));
          auto id = static_cast<std::uint32_t>(next.gens.size());
          next.gens.push_back({key, decode(z, here)});
          next.by_key[key].push_back(id);
        }
      }
    }
    levels_.push_back(std::move(next));
  }

 private:
  struct FreeTerm {
    std::uint32_t gen;
    Monomial mon;
    Element coeff;
  };
  struct Generator {
    DegreeKey deg;
    std::vector<FreeTerm> image;  // in the previous level's free module
  };
  struct Level {
    std::vector<Generator> gens;
    std::map<DegreeKey, std::vector<std::uint32_t>> by_key;
  };
  struct Segment {
    std::uint32_t start;
    std::uint32_t gen;
    const std::vector<Monomial>* basis;
  };
  struct Layout {
    std::size_t dim = 0;
    std::vector<Segment> segments;
    std::unordered_map<std::uint32_t, std::uint32_t> offset;
  };

  Layout layout(const Level& level, const DegreeKey& key) {
    Layout l;
    for (const auto& [deg, gens] : level.by_key) {
      if (!deg.leq(key)) continue;
      const auto& mons = ring_.basis(key - deg);
      if (mons.empty()) continue;
      for (std::uint32_t g : gens) {
        l.segments.push_back({static_cast<std::uint32_t>(l.dim), g, &mons});
        l.offset[g] = static_cast<std::uint32_t>(l.dim);
        l.dim += mons.size();
      }
    }
    return l;
  }

  SparseVector<F> multiply(const std::vector<FreeTerm>& terms, const Monomial& u, const Layout& target) {
    const F& field = ring_.field();
    SparseVector<F> out;
    for (const FreeTerm& t : terms) {
      const SparseVector<F>& nf = ring_.normal_form(u * t.mon);
      if (nf.empty()) continue;
      std::uint32_t base = target.offset.at(t.gen);
      for (const auto& [idx, c] : nf) out.emplace_back(base + idx, field.mul(t.coeff, c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector<F> merged;
    for (auto& e : out) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second = field.add(merged.back().second, e.second);
      else
        merged.push_back(std::move(e));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [&](const auto& e) { return field.is_zero(e.second); }),
                 merged.end());
    return merged;
  }

  std::vector<FreeTerm> decode(const SparseVector<F>& v, const Layout& l) const {
    std::vector<FreeTerm> out;
    for (const auto& [idx, c] : v) {
      auto it = std::upper_bound(l.segments.begin(), l.segments.end(), idx,
                                 [](std::uint32_t x, const Segment& s) { return x < s.start; });
      const Segment& seg = *std::prev(it);
      out.push_back({seg.gen, (*seg.basis)[idx - seg.start], c});
    }
    return out;
  }

  QuotientRing<F> ring_;
  int D_;
  std::vector<Level> levels_;
};

}  // namespace

template <class F>
BigradedSeries resolution_of_k_over_R(const GroebnerBasis<F>& gb, const Grading& grading, int D, int max_row) {
  if (D < 1) throw std::invalid_argument("truncation degree must be at least 1");
  if (gb.is_unit_ideal()) throw std::invalid_argument("the ideal is the unit ideal");
  int last = max_row < 0 ? D : std::min(max_row, D);
  BigradedSeries s = BigradedSeries::zero(D, BigradedSeries::Provenance::actual_resolution);
  ResidueFieldResolver<F> r(gb, grading, D);
  s.set(0, 0, 1);
  for (int i = 1; i <= last; ++i) {
    r.extend();
    auto row = r.row(i);
    for (int j = 0; j <= D; ++j) s.set(i, j, row[static_cast<std::size_t>(j)]);
  }
  s.computed_rows = last;
  return s;
}

// ----------------------------------------------------------------- the bound

BigradedSeries golod_bound_series(const BettiTable& bt, int nvars, int D) {
  if (D < 0) throw std::invalid_argument("negative truncation degree");
  // B = sum beta_{i,j} z^{i+1} t^j over i >= 1; every term has t-degree >= 2.
  std::vector<std::tuple<int, int, std::int64_t>> b;
  for (const auto& [key, v] : bt.entries())
    if (key.first >= 1 && key.second <= D) b.emplace_back(key.first + 1, key.second, v);
  BigradedSeries q = BigradedSeries::zero(D, BigradedSeries::Provenance::golod_bound);
  q.set(0, 0, 1);
  // 1 / (1 - B) = 1 + B / (1 - B), solved in increasing t-degree.
  for (int j = 1; j <= D; ++j)
    for (int i = 0; i <= j; ++i) {
      std::int64_t acc = 0;
      for (const auto& [bi, bj, v] : b)
        if (bi <= i && bj <= j) acc = checked_add(acc, checked_mul(v, q.get(i - bi, j - bj)));
      q.set(i, j, acc);
    }
  BigradedSeries out = q.times_one_plus_zt(nvars);
  out.provenance = BigradedSeries::Provenance::golod_bound;
  out.computed_rows = D;
  return out;
}

bool serre_inequality_check(const BigradedSeries& actual, const BigradedSeries& bound) {
  if (actual.D != bound.D) throw std::invalid_argument("series truncated at different degrees");
  for (int i = 0; i <= actual.computed_rows; ++i)
    for (int j = 0; j <= actual.D; ++j)
      if (actual.get(i, j) > bound.get(i, j)) return false;
  return true;
}

// ------------------------------------------------------- Artinian reduction

namespace {

template <class F>
typename F::Element random_coefficient(const F& field, std::mt19937_64& rng);

template <>
PrimeField::Element random_coefficient(const PrimeField& field, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::uint32_t>(1, field.characteristic() - 1)(rng);
}

template <>
RationalField::Element random_coefficient(const RationalField& field, std::mt19937_64& rng) {
  int v = std::uniform_int_distribution<int>(1, 18)(rng);
  return field.from_int(v <= 9 ? v : 9 - v);
}

/// Substitutes x_{n-1} = sum_{v < n-1} lin[v] x_v into p, giving a polynomial in n - 1 variables.
template <class F>
Polynomial<F> substitute_last(const Polynomial<F>& p, const std::vector<typename F::Element>& lin) {
  const F& field = p.field();
  const int n = p.nvars();
  std::vector<typename Polynomial<F>::Term> lterms;
  for (int v = 0; v < n - 1; ++v) lterms.push_back({Monomial::variable(v), lin[static_cast<std::size_t>(v)]});
  Polynomial<F> l = Polynomial<F>::from_terms(field, n - 1, lterms);
  std::vector<Polynomial<F>> powers{Polynomial<F>::constant(field, n - 1, field.one())};
  Polynomial<F> out(field, n - 1);
  for (const auto& t : p.terms()) {
    std::vector<int> e = t.monomial.exponents(n);
    int k = e.back();
    e.pop_back();
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * l);
    out = out + powers[static_cast<std::size_t>(k)].times_term(Monomial::from_exponents(e), t.coeff);
  }
  return out;
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

template <class F>
ArtinianReduction<F> artinian_reduction(const F& field, const std::vector<Polynomial<F>>& gens, int nvars, int count,
                                        std::uint64_t seed, int retries) {
  if (count < 0 || count > nvars) throw std::invalid_argument("reduction count out of range");
  auto target = trimmed(hilbert_numerator(buchberger(field, nvars, gens).leading_monomials(), nvars));
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= std::max(1, retries); ++attempt) {
    std::vector<Polynomial<F>> cur = gens;
    std::vector<std::vector<typename F::Element>> forms;
    for (int step = 0; step < count; ++step) {
      const int n = nvars - step;
      std::vector<typename F::Element> form;
      for (int v = 0; v < n; ++v) form.push_back(random_coefficient(field, rng));
      // x_{n-1} = -(1 / c_{n-1}) sum_{v < n-1} c_v x_v
      auto scale = field.neg(field.inv(form.back()));
      std::vector<typename F::Element> lin;
      for (int v = 0; v < n - 1; ++v) lin.push_back(field.mul(scale, form[static_cast<std::size_t>(v)]));
      std::vector<Polynomial<F>> next;
      for (const auto& g : cur) {
        Polynomial<F> h = substitute_last(g, lin);
        if (!h.is_zero()) next.push_back(std::move(h));
      }
      cur = std::move(next);
      forms.push_back(std::move(form));
    }
    GroebnerBasis<F> gb = buchberger(field, nvars - count, cur);
    if (trimmed(hilbert_numerator(gb.leading_monomials(), nvars - count)) == target)
      return {std::move(gb), count, attempt, std::move(forms)};
  }
  throw ReductionFailed("no regular sequence of " + std::to_string(count) + " linear forms found in " +
                        std::to_string(retries) + " attempts");
}

// -------------------------------------------------------------- golod_check

template <class F>
GolodReport golod_check(const F& field, const std::vector<Polynomial<F>>& gens, const Grading& grading,
                        const BettiTable& betti, const GolodOptions& options, FastPath hint) {
  const int D = options.D;
  const int n = grading.nvars();
  GolodReport rep;
  rep.seed = options.seed;
  rep.fast_path = hint;
  rep.bound = golod_bound_series(betti, n, D);

  std::optional<GroebnerBasis<F>> gb;
  Grading ring_grading = grading;
  if (options.artinian_reduction) {
    int depth = n - std::max(0, betti.max_homological_degree());
    if (depth > 0) {
      try {
        auto red = artinian_reduction(field, gens, n, depth, options.seed, options.retries);
        rep.reduced_by = depth;
        rep.reduction_attempts = red.attempts;
        gb.emplace(std::move(red.gb));
        ring_grading = Grading::standard(n - depth);
      } catch (const ReductionFailed&) {
        rep.reduction_attempts = options.retries;
      }
    }
  }
  if (!gb) gb.emplace(buchberger(field, n, gens));

  ResidueFieldResolver<F> resolver(*gb, ring_grading, D);
  BigradedSeries reduced = BigradedSeries::zero(D, BigradedSeries::Provenance::actual_resolution);
  reduced.set(0, 0, 1);
  std::optional<std::pair<int, int>> gap;
  int rows = 0;
  for (int i = 1; i <= D; ++i) {
    resolver.extend();
    auto row = resolver.row(i);
    for (int j = 0; j <= D; ++j) reduced.set(i, j, row[static_cast<std::size_t>(j)]);
    reduced.computed_rows = rows = i;
    // Row i of the lifted series only involves rows <= i of the reduced one.
    BigradedSeries lifted = reduced.times_one_plus_zt(rep.reduced_by);
    for (int j = 0; j <= D && !gap; ++j) {
      std::int64_t a = lifted.get(i, j), b = rep.bound.get(i, j);
      if (a > b)
        throw SerreViolation("Poincare series exceeds the Golod bound at z^" + std::to_string(i) + " t^" +
                             std::to_string(j));
      if (a < b) gap = {i, j};
    }
    if (gap && options.stop_at_first_gap) break;
  }
  rep.actual = reduced.times_one_plus_zt(rep.reduced_by);
  rep.actual.computed_rows = rows;
  if (!serre_inequality_check(rep.actual, rep.bound)) throw SerreViolation("Poincare series exceeds the Golod bound");

  rep.verdict.D = D;
  if (gap) {
    rep.verdict.kind = GolodVerdict::Kind::not_golod;
    rep.verdict.gap_i = gap->first;
    rep.verdict.gap_j = gap->second;
    rep.verdict.gap_size = rep.bound.get(gap->first, gap->second) - rep.actual.get(gap->first, gap->second);
  } else if (hint != FastPath::none) {
    rep.verdict.kind = GolodVerdict::Kind::not_golod;
    rep.fast_path_unconfirmed = true;
  } else {
    rep.verdict.kind = GolodVerdict::Kind::consistent_up_to;
  }
  return rep;
}

// ------------------------------------------------------- tensor obstructions

std::int64_t tensor_obstruction(const MinorSelection& sel) {
  auto groups = disjoint_split(sel);
  if (groups.size() != 2)
    throw std::invalid_argument("tensor obstruction needs exactly two disjoint groups, found " +
                                std::to_string(groups.size()));
  return static_cast<std::int64_t>(groups[0].size()) * static_cast<std::int64_t>(groups[1].size());
}

template <class F>
KunnethResult kunneth_check(const F& field, const MinorSelection& sel) {
  KunnethResult out;
  out.groups = disjoint_split(sel);
  if (out.groups.size() < 2) return out;
  const Grading grading = sel.matrix().grading(GradingMode::fine);
  const int n = sel.matrix().nvars();

  BettiTable predicted;
  predicted.add(0, 0);
  int max_degree = 0;
  for (const auto& g : out.groups) {
    BettiTable t = minimal_resolution(field, selection_polynomials(field, g), grading).table;
    max_degree += t.max_internal_degree();
    BettiTable conv;
    for (const auto& [a, va] : predicted.entries())
      for (const auto& [b, vb] : t.entries()) conv.add(a.first + b.first, a.second + b.second, checked_mul(va, vb));
    predicted = std::move(conv);
  }
  QuotientRing<F> ring(buchberger(field, n, selection_polynomials(field, sel)), grading);
  KoszulComplex<F> complex(ring);
  KoszulHomology<F> homology(complex);
  BettiTable refined = koszul_betti_table(homology, max_degree + 1);
  BettiTable whole;
  for (const auto& [key, v] : refined.entries()) whole.add(key.first, key.second, v);
  out.whole = std::move(whole);
  out.predicted = std::move(predicted);
  out.ok = out.whole == out.predicted;
  return out;
}

#define GSD_INSTANTIATE(F)                                                                                         \
  template BigradedSeries resolution_of_k_over_R(const GroebnerBasis<F>&, const Grading&, int, int);               \
  template GolodReport golod_check(const F&, const std::vector<Polynomial<F>>&, const Grading&, const BettiTable&, \
                                   const GolodOptions&, FastPath);                                                 \
  template ArtinianReduction<F> artinian_reduction(const F&, const std::vector<Polynomial<F>>&, int, int,          \
                                                   std::uint64_t, int);                                            \
  template KunnethResult kunneth_check(const F&, const MinorSelection&);

GSD_INSTANTIATE(PrimeField)
GSD_INSTANTIATE(RationalField)

}  // namespace gsd
