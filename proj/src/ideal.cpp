#include "hfg/ideal.hpp"

#include "hfg/error.hpp"

#include <algorithm>
#include <numeric>

namespace hfg {

void GroebnerBudget::check(std::size_t variables, unsigned degree, const char* what) const {
  if (variables > max_variables)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(variables) + " variables exceed the budget of " +
                         std::to_string(max_variables));
  if (degree > max_input_degree)
    throw BudgetExceeded(std::string(what) + ": input degree " + std::to_string(degree) +
                         " exceeds the budget of " + std::to_string(max_input_degree));
}

IdealPresentation::IdealPresentation(BlockPtr block, std::vector<Polynomial> gens)
    : block_(std::move(block)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_block(block_, g.block(), "ideal generators");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

unsigned IdealPresentation::max_degree() const {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

const std::vector<Polynomial>& IdealPresentation::groebner_basis(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, basis] : cache_->bases)
    if (o == order) return *basis;
  auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(gens_, order));
  cache_->bases.emplace_back(order, basis);
  return *basis;
}

bool IdealPresentation::contains(const Polynomial& f) const {
  require_same_block(block_, f.block(), "ideal membership");
  return normal_form(f, groebner_basis(), MonomialOrder::grevlex()).is_zero();
}

bool IdealPresentation::contains(const IdealPresentation& other) const {
  require_same_block(block_, other.block(), "ideal containment");
  const auto& basis = groebner_basis();
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) {
    return normal_form(g, basis, MonomialOrder::grevlex()).is_zero();
  });
}

bool IdealPresentation::is_zero() const { return gens_.empty(); }

bool IdealPresentation::is_unit() const {
  const auto& basis = groebner_basis();
  return basis.size() == 1 && basis.front().is_constant();
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b) {
  require_same_block(a.block(), b.block(), "ideal_equal");
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  return ga == gb;
}

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b) {
  require_same_block(a.block(), b.block(), "ideal_sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealPresentation(a.block(), std::move(gens));
}

IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b) {
  require_same_block(a.block(), b.block(), "ideal_product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return IdealPresentation(a.block(), std::move(gens));
}

namespace {

void dedupe(std::vector<Polynomial>& polys) {
  std::vector<Polynomial> out;
  for (auto& p : polys) {
    Polynomial m = p.monic();
    if (std::none_of(out.begin(), out.end(), [&](const Polynomial& q) { return q == m; })) out.push_back(std::move(m));
  }
  polys = std::move(out);
}

} // namespace

IdealPresentation ideal_power(const IdealPresentation& ideal, unsigned m) {
  if (m == 0) throw DomainError("ideal_power: exponent must be at least 1");
  const auto& g = ideal.generators();
  std::vector<Polynomial> gens;
  // multisets of size m over the generator list, as non-decreasing index tuples
  std::vector<std::size_t> idx(m, 0);
  if (g.empty()) return IdealPresentation(ideal.block());
  while (true) {
    Polynomial p = Polynomial::constant(ideal.block(), 1);
    for (std::size_t k : idx) p *= g[k];
    gens.push_back(std::move(p));
    std::size_t pos = m;
    while (pos > 0 && idx[pos - 1] == g.size() - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t q = pos - 1; q < m; ++q) idx[q] = v;
  }
  dedupe(gens);
  return IdealPresentation(ideal.block(), std::move(gens));
}

IdealPresentation eliminate(std::span<const Polynomial> gens, std::size_t keep, const BlockPtr& target) {
  if (target->size() != keep) throw BlockMismatch("eliminate: target block size differs from kept variables");
  auto basis = buchberger(gens, MonomialOrder::elimination(keep));
  std::vector<Polynomial> kept;
  std::vector<std::size_t> back(keep);
  std::iota(back.begin(), back.end(), 0);
  for (const auto& p : basis) {
    bool only_kept = true;
    for (const auto& t : p.terms()) {
      if (t.monomial.partial_degree(keep, t.monomial.arity()) != 0) {
        only_kept = false;
        break;
      }
    }
    if (!only_kept) continue;
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Monomial m(keep);
      for (std::size_t i = 0; i < keep; ++i) m.set(i, t.monomial[i]);
      terms.push_back({m, t.coeff});
    }
    kept.push_back(Polynomial::from_terms(target, std::move(terms)));
  }
  return IdealPresentation(target, std::move(kept));
}

IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b) {
  require_same_block(a.block(), b.block(), "ideal_intersection");
  if (a.is_zero() || b.is_zero()) return IdealPresentation(a.block());
  const std::size_t n = a.block()->size();
  std::vector<std::string> names = a.block()->names();
  std::string t = "t";
  while (a.block()->index_of(t)) t += "_";
  names.push_back(t);
  const BlockPtr ext = make_block(std::move(names));
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), 0);
  const Polynomial tv = Polynomial::variable(ext, n);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(tv * f.embed(ext, map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embed(ext, map));
  return eliminate(gens, n, a.block());
}

IdealPresentation intersect_all(std::span<const IdealPresentation> ideals) {
  if (ideals.empty()) throw DomainError("intersect_all: empty list");
  IdealPresentation acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersection(acc, ideals[i]);
  return acc;
}

namespace {

struct ThreeBlocks {
  BlockPtr ext;
  std::vector<std::size_t> x_map, y_map, z_map;
};

ThreeBlocks three_blocks(const BlockPtr& x) {
  const std::size_t n = x->size();
  std::vector<std::string> names = x->names();
  for (const char* prefix : {"y_", "z_"})
    for (const auto& nm : x->names()) names.push_back(prefix + nm);
  ThreeBlocks tb{make_block(std::move(names)), {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    tb.x_map.push_back(i);
    tb.y_map.push_back(n + i);
    tb.z_map.push_back(2 * n + i);
  }
  return tb;
}

enum class Relation { Sum, Product };

IdealPresentation two_block_elimination(const IdealPresentation& a, const IdealPresentation& b, Relation rel,
                                        const GroebnerBudget& budget, const char* what) {
  require_same_block(a.block(), b.block(), what);
  const std::size_t n = a.block()->size();
  budget.check(3 * n, std::max(a.max_degree(), b.max_degree()), what);
  const ThreeBlocks tb = three_blocks(a.block());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(f.embed(tb.ext, tb.y_map));
  for (const auto& g : b.generators()) gens.push_back(g.embed(tb.ext, tb.z_map));
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial x = Polynomial::variable(tb.ext, tb.x_map[i]);
    const Polynomial y = Polynomial::variable(tb.ext, tb.y_map[i]);
    const Polynomial z = Polynomial::variable(tb.ext, tb.z_map[i]);
    gens.push_back(rel == Relation::Sum ? x - y - z : x - y * z);
  }
  return eliminate(gens, n, a.block());
}

} // namespace

IdealPresentation join_ideals(const IdealPresentation& a, const IdealPresentation& b, const GroebnerBudget& budget) {
  return two_block_elimination(a, b, Relation::Sum, budget, "join_ideals");
}

IdealPresentation hadamard_ideals(const IdealPresentation& a, const IdealPresentation& b,
                                  const GroebnerBudget& budget) {
  return two_block_elimination(a, b, Relation::Product, budget, "hadamard_ideals");
}

Polynomial hadamard_transform(const Polynomial& f, std::span<const Rational> coords) {
  if (coords.size() != f.block()->size()) throw BlockMismatch("hadamard_transform: point arity mismatch");
  if (!f.is_homogeneous()) throw DomainError("hadamard_transform: polynomial is not homogeneous");
  for (const auto& c : coords)
    if (c == 0) throw DomainError("hadamard_transform: point has a zero coordinate");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Rational denom = 1;
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (unsigned k = 0; k < t.monomial[i]; ++k) denom *= coords[i];
    terms.push_back({t.monomial, t.coeff / denom});
  }
  return Polynomial::from_terms(f.block(), std::move(terms));
}

IdealPresentation hadamard_transform(const IdealPresentation& ideal, std::span<const Rational> coords) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(hadamard_transform(g, coords));
  return IdealPresentation(ideal.block(), std::move(gens));
}

IdealPresentation irrelevant_power(unsigned t, const BlockPtr& block) {
  if (t == 0) throw DomainError("irrelevant_power: exponent must be at least 1");
  const std::size_t n = block->size();
  std::vector<Polynomial> gens;
  std::vector<unsigned> e(n, 0);
  // enumerate compositions of t into n parts
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      gens.push_back(Polynomial::monomial(block, Monomial::from_exponents(e)));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, t);
  return IdealPresentation(block, std::move(gens));
}

} // namespace hfg
