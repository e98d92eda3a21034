#include "hfg/groebner.hpp"

#include "hfg/error.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace hfg {

namespace {

// Terms sorted descending under the engine's order.
struct OrderedPoly {
  std::vector<Term> terms;
  unsigned sugar = 0;

  const Monomial& lm() const { return terms.front().monomial; }
  const Rational& lc() const { return terms.front().coeff; }
};

class Engine {
public:
  explicit Engine(const MonomialOrder& order) : order_(order) {}

  OrderedPoly convert(const Polynomial& p) const {
    OrderedPoly o;
    o.terms = p.terms();
    std::sort(o.terms.begin(), o.terms.end(),
              [this](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
    o.sugar = p.total_degree();
    return o;
  }

  static void make_monic(OrderedPoly& p) {
    if (p.terms.empty() || p.lc() == 1) return;
    const Rational inv = 1 / p.lc();
    for (auto& t : p.terms) t.coeff *= inv;
  }

  // out = a[from..] - c * m * b[1..]; the leading terms are assumed to cancel.
  void subtract_multiple(std::vector<Term>& out, const std::vector<Term>& a, std::size_t from,
                         const Rational& c, const Monomial& m, const std::vector<Term>& b) const {
    out.clear();
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 1;
    Monomial bm;
    bool have_bm = false;
    while (i < a.size() || j < b.size()) {
      if (j < b.size() && !have_bm) {
        bm = b[j].monomial * m;
        have_bm = true;
      }
      int cmp;
      if (i == a.size()) cmp = -1;
      else if (j == b.size()) cmp = 1;
      else cmp = order_.compare(a[i].monomial, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({bm, -c * b[j].coeff});
        ++j;
        have_bm = false;
      } else {
        Rational s = a[i].coeff - c * b[j].coeff;
        if (s != 0) out.push_back({bm, std::move(s)});
        ++i;
        ++j;
        have_bm = false;
      }
    }
  }

  // Full reduction of p by the polynomials reducers[idx] for idx in active.
  OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& store, const std::vector<std::size_t>& active) const {
    OrderedPoly rem;
    rem.sugar = p.sugar;
    std::vector<Term> work = std::move(p.terms);
    std::vector<Term> next;
    std::size_t pos = 0;
    while (pos < work.size()) {
      const Term& lt = work[pos];
      const OrderedPoly* divisor = nullptr;
      for (std::size_t idx : active) {
        if (store[idx].lm().divides(lt.monomial)) {
          divisor = &store[idx];
          break;
        }
      }
      if (!divisor) {
        rem.terms.push_back(lt);
        ++pos;
        continue;
      }
      const Monomial mult = lt.monomial / divisor->lm();
      const Rational c = lt.coeff / divisor->lc();
      rem.sugar = std::max(rem.sugar, mult.degree() + divisor->sugar);
      subtract_multiple(next, work, pos + 1, c, mult, divisor->terms);
      std::swap(work, next);
      pos = 0;
    }
    return rem;
  }

  OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g) const {
    const Monomial l = f.lm().lcm(g.lm());
    const Monomial mf = l / f.lm();
    const Monomial mg = l / g.lm();
    // f, g are monic, so S = mf*f - mg*g and the leading terms cancel.
    std::vector<Term> a;
    a.reserve(f.terms.size());
    for (std::size_t i = 1; i < f.terms.size(); ++i) a.push_back({f.terms[i].monomial * mf, f.terms[i].coeff});
    OrderedPoly s;
    std::vector<Term> tmp;
    subtract_multiple(tmp, a, 0, Rational(1), mg, g.terms);
    s.terms = std::move(tmp);
    s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    return s;
  }

  Polynomial to_polynomial(const BlockPtr& block, OrderedPoly p) const {
    return Polynomial::from_terms(block, std::move(p.terms));
  }

  const MonomialOrder& order() const { return order_; }

private:
  MonomialOrder order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

} // namespace

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("leading monomial of the zero polynomial");
  const auto& t = f.terms();
  const Term* best = &t.front();
  for (const auto& term : t)
    if (order.greater(term.monomial, best->monomial)) best = &term;
  return best->monomial;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!nonzero.empty()) require_same_block(nonzero.front().block(), g.block(), "buchberger");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return {};
  const BlockPtr block = nonzero.front().block();
  Engine eng(order);

  std::vector<OrderedPoly> store;
  std::vector<std::size_t> basis; // indices into store forming the current G
  std::vector<Pair> pairs;

  auto lcm_of = [&](std::size_t a, std::size_t b) { return store[a].lm().lcm(store[b].lm()); };
  auto pair_sugar = [&](std::size_t a, std::size_t b, const Monomial& l) {
    return std::max(store[a].sugar + (l.degree() - store[a].lm().degree()),
                    store[b].sugar + (l.degree() - store[b].lm().degree()));
  };

  // Gebauer-Moeller update with the new element h = store[hi].
  auto update = [&](std::size_t hi) {
    const Monomial& lh = store[hi].lm();
    std::vector<Pair> c;
    for (std::size_t g : basis) {
      Monomial l = lcm_of(hi, g);
      c.push_back({hi, g, l, pair_sugar(hi, g, l)});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = lh.is_coprime(store[p.j].lm());
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (c[q].lcm.divides(p.lcm)) keep = false;
        for (std::size_t q = 0; q < d.size() && keep; ++q)
          if (d[q].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (auto& p : d)
      if (!lh.is_coprime(store[p.j].lm())) e.push_back(std::move(p));
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      const bool drop = lh.divides(p.lcm) && !(lcm_of(p.i, hi) == p.lcm) && !(lcm_of(hi, p.j) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : e) kept.push_back(std::move(p));
    pairs = std::move(kept);
    std::vector<std::size_t> nb;
    for (std::size_t g : basis)
      if (!lh.divides(store[g].lm())) nb.push_back(g);
    nb.push_back(hi);
    basis = std::move(nb);
  };

  auto insert = [&](OrderedPoly p) {
    Engine::make_monic(p);
    store.push_back(std::move(p));
    update(store.size() - 1);
  };

  // Seed in increasing order of leading monomial so small elements reduce later ones.
  std::vector<OrderedPoly> seeds;
  for (const auto& g : nonzero) seeds.push_back(eng.convert(g));
  std::sort(seeds.begin(), seeds.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return order.compare(a.lm(), b.lm()) < 0;
  });
  for (auto& s : seeds) {
    OrderedPoly r = eng.reduce(std::move(s), store, basis);
    if (!r.terms.empty()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && order.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    ++st.pairs_considered;
    OrderedPoly s = eng.s_polynomial(store[p.i], store[p.j]);
    ++st.pairs_reduced;
    OrderedPoly r = eng.reduce(std::move(s), store, basis);
    if (r.terms.empty()) {
      ++st.zero_reductions;
      continue;
    }
    insert(std::move(r));
  }

  // Interreduce the minimal basis into the reduced basis.
  std::sort(basis.begin(), basis.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(store[a].lm(), store[b].lm()) < 0;
  });
  std::vector<OrderedPoly> reduced;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < basis.size(); ++q)
      if (q != k) others.push_back(basis[q]);
    OrderedPoly head;
    head.terms.push_back(store[basis[k]].terms.front());
    OrderedPoly tail;
    tail.terms.assign(store[basis[k]].terms.begin() + 1, store[basis[k]].terms.end());
    OrderedPoly rt = eng.reduce(std::move(tail), store, others);
    head.terms.insert(head.terms.end(), rt.terms.begin(), rt.terms.end());
    Engine::make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OrderedPoly& a, const OrderedPoly& b) { return order.greater(a.lm(), b.lm()); });
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& r : reduced) out.push_back(eng.to_polynomial(block, std::move(r)));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
  Engine eng(order);
  std::vector<OrderedPoly> store;
  std::vector<std::size_t> active;
  for (const auto& g : basis) {
    require_same_block(f.block(), g.block(), "normal_form");
    if (g.is_zero()) continue;
    active.push_back(store.size());
    store.push_back(eng.convert(g));
  }
  OrderedPoly r = eng.reduce(eng.convert(f), store, active);
  return eng.to_polynomial(f.block(), std::move(r));
}

} // namespace hfg
