#include "gsd/groebner.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <memory>
#include <optional>
#include <unordered_map>

#include "gsd/linalg.hpp"

namespace gsd {

template <class F>
std::vector<Polynomial<F>> ModuleVector<F>::components(const F& field, int nvars, int rank, int offset) const {
  std::vector<std::vector<typename Polynomial<F>::Term>> parts(static_cast<std::size_t>(rank));
  for (const Term& t : terms_) {
    int c = t.component - offset;
    if (c < 0 || c >= rank) throw std::out_of_range("module component outside the requested range");
    parts[static_cast<std::size_t>(c)].push_back({t.monomial, t.coeff});
  }
  std::vector<Polynomial<F>> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial<F>::from_terms(field, nvars, std::move(p)));
  return out;
}

namespace {

template <class F>
using MTerm = typename ModuleVector<F>::Term;

template <class F>
void sort_terms(std::vector<MTerm<F>>& terms) {
  std::sort(terms.begin(), terms.end(), [](const MTerm<F>& a, const MTerm<F>& b) {
    return ModuleVector<F>::compare_terms(a.monomial, a.component, b.monomial, b.component) > 0;
  });
}

/// Merges and drops zeros in a sorted term list.
template <class F>
void merge_sorted(const F& field, std::vector<MTerm<F>>& terms) {
  std::vector<MTerm<F>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().component == t.component && out.back().monomial == t.monomial)
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
    if (field.is_zero(out.back().coeff)) out.pop_back();
  }
  terms = std::move(out);
}

/// p[from..] + c * u * g[gfrom..], both inputs sorted; the result is sorted.
template <class F>
std::vector<MTerm<F>> axpy(const F& field, const std::vector<MTerm<F>>& p, std::size_t from, const typename F::Element& c,
                           const Monomial& u, const std::vector<MTerm<F>>& g, std::size_t gfrom) {
  std::vector<MTerm<F>> out;
  out.reserve(p.size() - from + g.size() - gfrom);
  std::size_t i = from, j = gfrom;
  while (i < p.size() || j < g.size()) {
    int cmp;
    Monomial gm;
    if (j < g.size()) gm = g[j].monomial * u;
    if (i == p.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = ModuleVector<F>::compare_terms(p[i].monomial, p[i].component, gm, g[j].component);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].component, field.mul(c, g[j].coeff)});
      ++j;
    } else {
      auto s = field.add(p[i].coeff, field.mul(c, g[j].coeff));
      if (!field.is_zero(s)) out.push_back({p[i].monomial, p[i].component, s});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
void make_monic(const F& field, std::vector<MTerm<F>>& terms) {
  if (terms.empty() || field.is_one(terms.front().coeff)) return;
  auto inv = field.inv(terms.front().coeff);
  for (auto& t : terms) t.coeff = field.mul(t.coeff, inv);
}

/// Reducer set: monic vectors indexed by the component of their leading term.
template <class F>
class Reducers {
 public:
  void add(const std::vector<MTerm<F>>* v) {
    int c = v->front().component;
    if (c >= static_cast<int>(by_component_.size())) by_component_.resize(static_cast<std::size_t>(c) + 1);
    by_component_[static_cast<std::size_t>(c)].push_back(v);
  }
  void remove(const std::vector<MTerm<F>>* v) {
    auto& list = by_component_[static_cast<std::size_t>(v->front().component)];
    list.erase(std::find(list.begin(), list.end(), v));
  }
  const std::vector<MTerm<F>>* find(const Monomial& m, int component) const {
    if (component >= static_cast<int>(by_component_.size())) return nullptr;
    for (const auto* v : by_component_[static_cast<std::size_t>(component)])
      if (v->front().monomial.divides(m)) return v;
    return nullptr;
  }

 private:
  std::vector<std::vector<const std::vector<MTerm<F>>*>> by_component_;
};

/// Full reduction: every term of the result is irreducible.
template <class F>
std::vector<MTerm<F>> reduce_full(const F& field, std::vector<MTerm<F>> p, const Reducers<F>& reducers) {
  std::vector<MTerm<F>> rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const MTerm<F>& t = p[pos];
    const auto* g = reducers.find(t.monomial, t.component);
    if (!g) {
      rem.push_back(t);
      ++pos;
      continue;
    }
    Monomial u = t.monomial / g->front().monomial;
    p = axpy(field, p, pos + 1, field.neg(t.coeff), u, *g, 1);
    pos = 0;
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int component;
  int sugar;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = grevlex_compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.component != b.component) return a.component > b.component;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

}  // namespace

template <class F>
std::vector<ModuleVector<F>> module_groebner(const F& field, std::vector<ModuleVector<F>> gens,
                                             const std::vector<int>& component_degrees, bool product_criterion) {
  using Terms = std::vector<MTerm<F>>;
  auto shift = [&](int c) {
    return c < static_cast<int>(component_degrees.size()) ? component_degrees[static_cast<std::size_t>(c)] : 0;
  };

  // Storage never shrinks and a deque keeps element addresses stable, so
  // pair indices and reducer pointers stay valid; `active` marks the current
  // (lead-minimal) basis.
  std::deque<Terms> store;
  std::vector<int> sugar;
  std::vector<char> active;
  std::vector<Pair> pairs;
  Reducers<F> reducers;

  auto element_sugar = [&](const Terms& t) {
    int s = 0;
    for (const auto& term : t) s = std::max(s, term.monomial.degree() + shift(term.component));
    return s;
  };

  auto add_element = [&](Terms h) {
    make_monic(field, h);
    std::size_t hi = store.size();
    store.push_back(std::move(h));
    sugar.push_back(element_sugar(store.back()));
    active.push_back(1);
    const Monomial hm = store[hi].front().monomial;
    const int hc = store[hi].front().component;

    // Gebauer-Möller update.
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active[g] || store[g].front().component != hc) continue;
      const Monomial& gm = store[g].front().monomial;
      Monomial l = lcm(hm, gm);
      int s = std::max(sugar[hi] + (l.degree() - hm.degree()), sugar[g] + (l.degree() - gm.degree()));
      fresh.push_back({g, hi, l, hc, s});
    }
    std::vector<char> keep(fresh.size(), 1);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (product_criterion && coprime(hm, store[fresh[a].i].front().monomial)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
          keep[a] = 0;
          break;
        }
      }
    }
    // Among pairs with equal lcm keep one, preferring a coprime pair (which is
    // then discarded by the product criterion along with its twins).
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (!keep[b] || !(fresh[b].lcm == fresh[a].lcm)) continue;
        bool b_coprime = product_criterion && coprime(hm, store[fresh[b].i].front().monomial);
        if (b_coprime) {
          keep[a] = 0;
          break;
        }
        keep[b] = 0;
      }
    }
    std::vector<Pair> kept_new;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (product_criterion && coprime(hm, store[fresh[a].i].front().monomial)) continue;
      kept_new.push_back(fresh[a]);
    }
    // Chain criterion on old pairs.
    std::vector<Pair> old;
    old.reserve(pairs.size());
    for (const Pair& p : pairs) {
      if (p.component == hc && hm.divides(p.lcm)) {
        Monomial li = lcm(store[p.i].front().monomial, hm);
        Monomial lj = lcm(store[p.j].front().monomial, hm);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      old.push_back(p);
    }
    pairs = std::move(old);
    pairs.insert(pairs.end(), kept_new.begin(), kept_new.end());

    for (std::size_t g = 0; g < hi; ++g) {
      if (active[g] && store[g].front().component == hc && hm.divides(store[g].front().monomial)) {
        active[g] = 0;
        reducers.remove(&store[g]);
      }
    }
    reducers.add(&store[hi]);
  };

  std::vector<Terms> inputs;
  for (auto& g : gens) {
    Terms t = g.terms();
    sort_terms<F>(t);
    merge_sorted(field, t);
    if (!t.empty()) inputs.push_back(std::move(t));
  }
  // Feed inputs lowest first so the selection strategy sees them in degree order.
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Terms& a, const Terms& b) {
    int sa = element_sugar(a), sb = element_sugar(b);
    if (sa != sb) return sa < sb;
    return ModuleVector<F>::compare_terms(a.front().monomial, a.front().component, b.front().monomial,
                                          b.front().component) < 0;
  });
  std::size_t next_input = 0;

  while (next_input < inputs.size() || !pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
    bool take_input = next_input < inputs.size() &&
                      (best == pairs.end() || element_sugar(inputs[next_input]) <= best->sugar);
    Terms h;
    if (take_input) {
      h = reduce_full(field, inputs[next_input++], reducers);
    } else {
      Pair p = *best;
      pairs.erase(best);
      const Terms& a = store[p.i];
      const Terms& b = store[p.j];
      Monomial ua = p.lcm / a.front().monomial;
      Monomial ub = p.lcm / b.front().monomial;
      Terms sa;
      sa.reserve(a.size() - 1);
      for (std::size_t k = 1; k < a.size(); ++k) sa.push_back({a[k].monomial * ua, a[k].component, a[k].coeff});
      Terms s = axpy(field, sa, 0, field.neg(field.one()), ub, b, 1);
      h = reduce_full(field, std::move(s), reducers);
    }
    if (!h.empty()) add_element(std::move(h));
  }

  // Interreduce tails and sort by leading term.
  std::vector<std::size_t> basis;
  for (std::size_t g = 0; g < store.size(); ++g)
    if (active[g]) basis.push_back(g);
  std::vector<ModuleVector<F>> out;
  out.reserve(basis.size());
  for (std::size_t g : basis) {
    Terms t = store[g];
    Terms tail(t.begin() + 1, t.end());
    Terms red = reduce_full(field, std::move(tail), reducers);
    Terms full;
    full.reserve(red.size() + 1);
    full.push_back(t.front());
    full.insert(full.end(), red.begin(), red.end());
    out.push_back(ModuleVector<F>::from_sorted_terms(std::move(full)));
  }
  std::sort(out.begin(), out.end(), [](const ModuleVector<F>& a, const ModuleVector<F>& b) {
    return ModuleVector<F>::compare_terms(a.lead().monomial, a.lead().component, b.lead().monomial,
                                          b.lead().component) < 0;
  });
  return out;
}

template <class F>
ModuleVector<F> module_normal_form(const F& field, const ModuleVector<F>& v, const std::vector<ModuleVector<F>>& basis) {
  Reducers<F> reducers;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    if (!field.is_one(b.lead().coeff)) throw std::invalid_argument("normal form needs a monic basis");
    reducers.add(&b.terms());
  }
  auto terms = v.terms();
  sort_terms<F>(terms);
  merge_sorted(field, terms);
  return ModuleVector<F>::from_sorted_terms(reduce_full(field, std::move(terms), reducers));
}

template <class F>
GroebnerBasis<F>::GroebnerBasis(F field, int nvars, std::vector<Polynomial<F>> original, std::vector<Polynomial<F>> basis)
    : field_(std::move(field)), nvars_(nvars), original_(std::move(original)), basis_(std::move(basis)) {
  for (const auto& g : basis_) {
    leads_.push_back(g.leading_term().monomial);
    module_basis_.push_back(ModuleVector<F>::from_polynomial(g, 0));
  }
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& p) const {
  if (!(p.field() == field_) || p.nvars() != nvars_) throw std::invalid_argument("polynomial ring does not match the basis");
  ModuleVector<F> r = module_normal_form(field_, ModuleVector<F>::from_polynomial(p, 0), module_basis_);
  return r.components(field_, nvars_, 1).front();
}

template <class F>
GroebnerBasis<F> buchberger(const F& field, int nvars, std::vector<Polynomial<F>> gens) {
  std::vector<ModuleVector<F>> mv;
  for (const auto& g : gens) {
    if (!(g.field() == field) || g.nvars() != nvars) throw std::invalid_argument("generator ring does not match");
    if (!g.is_zero()) mv.push_back(ModuleVector<F>::from_polynomial(g, 0));
  }
  auto gb = module_groebner(field, std::move(mv), {0}, true);
  std::vector<Polynomial<F>> basis;
  basis.reserve(gb.size());
  for (const auto& v : gb) basis.push_back(v.components(field, nvars, 1).front());
  return GroebnerBasis<F>(field, nvars, std::move(gens), std::move(basis));
}

template <class F>
std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis<F>& gb, int d) {
  if (d < 0) return {};
  if (gb.is_unit_ideal()) return {};
  // Standard monomials form an order ideal, so every degree-d one extends a
  // degree-(d-1) one by a variable at or after its last variable.
  std::vector<Monomial> layer{Monomial()};
  for (int k = 0; k < d; ++k) {
    std::vector<Monomial> next;
    for (const Monomial& s : layer) {
      for (int v = std::max(0, s.last_variable()); v < gb.nvars(); ++v) {
        Monomial m = s.times_variable(v);
        if (gb.is_standard(m)) next.push_back(m);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return layer;
}

template <class F>
std::int64_t hilbert_function(const GroebnerBasis<F>& gb, int d) {
  return static_cast<std::int64_t>(quotient_monomial_basis(gb, d).size());
}

namespace {

using Series = std::vector<std::int64_t>;

void add_shifted(Series& a, const Series& b, int shift, std::int64_t sign) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + static_cast<std::size_t>(shift)] += sign * b[k];
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_compare(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// K-polynomial of S/(gens) by pivoting on a variable:
/// K(I) = K(I + (x)) + t * K(I : x).
Series numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  // Base case: pairwise coprime generators give a product of (1 - t^d).
  std::uint32_t seen = 0;
  bool coprime_all = true;
  for (const Monomial& g : gens) {
    std::uint32_t s = g.support_mask();
    if (s & seen) {
      coprime_all = false;
      break;
    }
    seen |= s;
  }
  if (coprime_all) {
    Series r{1};
    for (const Monomial& g : gens) {
      Series next(r.size() + static_cast<std::size_t>(g.degree()), 0);
      for (std::size_t k = 0; k < r.size(); ++k) {
        next[k] += r[k];
        next[k + static_cast<std::size_t>(g.degree())] -= r[k];
      }
      r = std::move(next);
    }
    trim(r);
    return r;
  }
  // Pivot on the variable shared by the most non-linear generators.
  std::array<int, kMaxVariables> count{};
  for (const Monomial& g : gens) {
    if (g.degree() == 1) continue;
    for (int v = 0; v < kMaxVariables; ++v)
      if (g[v] > 0) ++count[static_cast<std::size_t>(v)];
  }
  int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial x = Monomial::variable(pivot);
  std::vector<Monomial> plus{x};
  std::vector<Monomial> colon;
  for (const Monomial& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    colon.push_back(g[pivot] > 0 ? g / x : g);
  }
  Series r = numerator_rec(std::move(plus));
  add_shifted(r, numerator_rec(std::move(colon)), 1, 1);
  trim(r);
  return r;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> leads, int nvars) {
  for (const Monomial& m : leads)
    if (m.degree() > 0 && m.last_variable() >= nvars) throw std::invalid_argument("monomial outside the ring");
  Series r = numerator_rec(std::move(leads));
  if (r.empty()) r.push_back(0);
  return r;
}

int krull_dimension(const std::vector<Monomial>& leads, int nvars) {
  Series k = hilbert_numerator(leads, nvars);
  trim(k);
  if (k.empty()) return -1;
  // Divide out (1 - t) while it divides.
  int order = 0;
  while (true) {
    std::int64_t at_one = 0;
    for (auto c : k) at_one += c;
    if (at_one != 0) break;
    // Synthetic division by (1 - t): q_k = sum_{l <= k} c_l.
    Series q(k.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t l = 0; l + 1 < k.size(); ++l) {
      acc += k[l];
      q[l] = acc;
    }
    k = std::move(q);
    trim(k);
    ++order;
  }
  return nvars - order;
}

template <class F>
DegreeKey module_element_degree(const ModuleVector<F>& v, const std::vector<DegreeKey>& shifts, const Grading& grading) {
  if (v.is_zero()) throw std::invalid_argument("zero module element has no degree");
  std::optional<DegreeKey> deg;
  for (const auto& t : v.terms()) {
    if (t.component < 0 || t.component >= static_cast<int>(shifts.size()))
      throw std::out_of_range("module component without a degree shift");
    DegreeKey k = grading.key(t.monomial) + shifts[static_cast<std::size_t>(t.component)];
    if (!deg)
      deg = k;
    else if (!(*deg == k))
      throw std::invalid_argument("inhomogeneous module element");
  }
  return *deg;
}

template <class F>
std::vector<std::size_t> minimal_generator_indices(const F& field, const std::vector<ModuleVector<F>>& elements,
                                                   const std::vector<DegreeKey>& shifts, const Grading& grading) {
  struct Candidate {
    std::size_t index;
    DegreeKey degree;
  };
  std::vector<Candidate> cands;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].is_zero()) continue;
    cands.push_back({k, module_element_degree(elements[k], shifts, grading)});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.degree.total() != b.degree.total()) return a.degree.total() < b.degree.total();
    return a.degree < b.degree;
  });

  // Per target degree: the coordinate system of that graded piece of the
  // free module, and the span of S-multiples of generators picked so far.
  struct Piece {
    std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> by_component;
    std::unique_ptr<EchelonBasis<F>> span;
  };
  std::unordered_map<DegreeKey, std::vector<Monomial>, DegreeKeyHash> monomial_cache;
  auto monomials = [&](const DegreeKey& k) -> const std::vector<Monomial>& {
    auto it = monomial_cache.find(k);
    if (it != monomial_cache.end()) return it->second;
    return monomial_cache.emplace(k, k.nonnegative() ? grading.monomials_with_key(k) : std::vector<Monomial>{})
        .first->second;
  };
  auto to_sparse = [](const Piece& piece, const ModuleVector<F>& v, const Monomial& u) {
    SparseVector<F> s;
    for (const auto& t : v.terms())
      s.emplace_back(piece.by_component[static_cast<std::size_t>(t.component)].at(t.monomial * u), t.coeff);
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return s;
  };

  std::vector<std::size_t> chosen;
  std::vector<DegreeKey> chosen_degree;
  std::size_t c = 0;
  while (c < cands.size()) {
    std::size_t end = c;
    while (end < cands.size() && cands[end].degree == cands[c].degree) ++end;
    const DegreeKey kappa = cands[c].degree;
    Piece piece;
    piece.by_component.resize(shifts.size());
    std::uint32_t dim = 0;
    for (std::size_t comp = 0; comp < shifts.size(); ++comp) {
      DegreeKey rest = kappa - shifts[comp];
      if (!rest.nonnegative()) continue;
      for (const Monomial& m : monomials(rest)) piece.by_component[comp].emplace(m, dim++);
    }
    piece.span = std::make_unique<EchelonBasis<F>>(field, dim);
    for (std::size_t s = 0; s < chosen.size(); ++s) {
      DegreeKey rest = kappa - chosen_degree[s];
      if (!rest.nonnegative()) continue;
      for (const Monomial& u : monomials(rest)) piece.span->insert(to_sparse(piece, elements[chosen[s]], u));
    }
    for (std::size_t k = c; k < end; ++k) {
      if (piece.span->insert(to_sparse(piece, elements[cands[k].index], Monomial()))) {
        chosen.push_back(cands[k].index);
        chosen_degree.push_back(kappa);
      }
    }
    c = end;
  }
  return chosen;
}

template <class F>
SyzygyModule<F> module_syzygies(const F& field, const std::vector<FreeModuleElement<F>>& gens,
                                const std::vector<DegreeKey>& ambient_shifts, const Grading& grading) {
  const int rank = static_cast<int>(ambient_shifts.size());
  const int r = static_cast<int>(gens.size());
  const int nvars = grading.nvars();
  SyzygyModule<F> out;

  std::vector<ModuleVector<F>> graph;
  std::vector<int> total_shifts;
  for (const auto& s : ambient_shifts) total_shifts.push_back(s.total());
  for (int k = 0; k < r; ++k) {
    const auto& g = gens[static_cast<std::size_t>(k)];
    if (static_cast<int>(g.components.size()) != rank) throw std::invalid_argument("generator rank does not match the ambient module");
    ModuleVector<F> v = ModuleVector<F>::from_components(g.components);
    DegreeKey deg = module_element_degree(v, ambient_shifts, grading);
    out.shifts.push_back(deg);
    total_shifts.push_back(deg.total());
    auto terms = v.terms();
    terms.push_back({Monomial(), rank + k, field.one()});
    graph.push_back(ModuleVector<F>::from_sorted_terms(std::move(terms)));
  }
  if (r == 0) return out;

  auto gb = module_groebner(field, std::move(graph), total_shifts, false);
  std::vector<ModuleVector<F>> syz;
  for (const auto& v : gb) {
    if (v.lead().component < rank) continue;
    std::vector<typename ModuleVector<F>::Term> t;
    for (const auto& term : v.terms()) t.push_back({term.monomial, term.component - rank, term.coeff});
    syz.push_back(ModuleVector<F>::from_sorted_terms(std::move(t)));
  }
  for (std::size_t k : minimal_generator_indices(field, syz, out.shifts, grading)) {
    out.generators.push_back({syz[k].components(field, nvars, r)});
    out.degrees.push_back(module_element_degree(syz[k], out.shifts, grading));
  }
  return out;
}

#define GSD_INSTANTIATE(F)                                                                                         \
  template class ModuleVector<F>;                                                                                  \
  template std::vector<ModuleVector<F>> module_groebner(const F&, std::vector<ModuleVector<F>>, const std::vector<int>&, \
                                                        bool);                                                     \
  template ModuleVector<F> module_normal_form(const F&, const ModuleVector<F>&, const std::vector<ModuleVector<F>>&); \
  template class GroebnerBasis<F>;                                                                                 \
  template GroebnerBasis<F> buchberger(const F&, int, std::vector<Polynomial<F>>);                                 \
  template std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis<F>&, int);                            \
  template std::int64_t hilbert_function(const GroebnerBasis<F>&, int);                                            \
  template DegreeKey module_element_degree(const ModuleVector<F>&, const std::vector<DegreeKey>&, const Grading&); \
  template std::vector<std::size_t> minimal_generator_indices(const F&, const std::vector<ModuleVector<F>>&,       \
                                                              const std::vector<DegreeKey>&, const Grading&);      \
  template SyzygyModule<F> module_syzygies(const F&, const std::vector<FreeModuleElement<F>>&,                     \
                                           const std::vector<DegreeKey>&, const Grading&);

GSD_INSTANTIATE(PrimeField)
GSD_INSTANTIATE(RationalField)

}  // namespace gsd
