#include "hfg/polynomial.hpp"

#include "hfg/error.hpp"
#include "hfg/order.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace hfg {

VariableBlock::VariableBlock(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables)
    throw DomainError("variable block has more than " + std::to_string(kMaxVariables) + " variables");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableBlock::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

BlockPtr make_block(std::vector<std::string> names) {
  return std::make_shared<const VariableBlock>(std::move(names));
}

const BlockPtr& plane_block() {
  static const BlockPtr block = make_block({"x0", "x1", "x2"});
  return block;
}

bool same_block(const BlockPtr& a, const BlockPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_block(const BlockPtr& a, const BlockPtr& b, std::string_view what) {
  if (!same_block(a, b)) throw BlockMismatch(std::string(what) + ": operands live over different variable blocks");
}

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

bool term_greater(const Term& a, const Term& b) {
  return kCanonical.greater(a.monomial, b.monomial);
}

// Sorts descending and merges equal monomials, dropping zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].monomial == acc.monomial) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (acc.coeff != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = kCanonical.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Polynomial::Polynomial(BlockPtr block) : block_(std::move(block)) {
  if (!block_) throw DomainError("polynomial without a variable block");
}

Polynomial Polynomial::from_terms(BlockPtr block, std::vector<Term> terms) {
  Polynomial p(std::move(block));
  for (const auto& t : terms)
    if (t.monomial.arity() != p.block_->size())
      throw BlockMismatch("monomial arity does not match the variable block");
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(BlockPtr block, const Rational& c) {
  Polynomial p(std::move(block));
  if (c != 0) p.terms_.push_back({Monomial(p.block_->size()), c});
  return p;
}

Polynomial Polynomial::variable(BlockPtr block, std::size_t index) {
  Polynomial p(std::move(block));
  if (index >= p.block_->size()) throw DomainError("variable index out of range");
  Monomial m(p.block_->size());
  m.set(index, 1);
  p.terms_.push_back({m, 1});
  return p;
}

Polynomial Polynomial::monomial(BlockPtr block, const Monomial& m, const Rational& c) {
  return from_terms(std::move(block), {{m, c}});
}

Polynomial Polynomial::linear_form(BlockPtr block, std::span<const Rational> coeffs) {
  if (coeffs.size() != block->size()) throw BlockMismatch("linear form arity mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(block->size());
    m.set(i, 1);
    terms.push_back({m, coeffs[i]});
  }
  return from_terms(std::move(block), std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0);
}

unsigned Polynomial::total_degree() const {
  // grevlex sorts by degree first
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().monomial.degree();
  return terms_.back().monomial.degree() == d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return kCanonical.greater(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_block(block_, other.block_, "polynomial addition");
  Polynomial r(block_);
  r.terms_ = merge(terms_, other.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_block(block_, other.block_, "polynomial subtraction");
  Polynomial r(block_);
  r.terms_ = merge(terms_, other.terms_, true);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_block(block_, other.block_, "polynomial multiplication");
  std::vector<Term> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) terms.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  Polynomial r(block_);
  normalize(terms);
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(block_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(block_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return *this * inv;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != block_->size()) throw BlockMismatch("evaluation point has the wrong arity");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::embed(const BlockPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != block_->size()) throw BlockMismatch("embedding map has the wrong arity");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (var_map[i] >= target->size()) throw BlockMismatch("embedding target index out of range");
      if (t.monomial[i]) m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit = (c == 1);
    bool wrote = false;
    if (!unit || t.monomial.degree() == 0) {
      os << to_compact_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < block_->size(); ++i) {
      const unsigned e = t.monomial[i];
      if (!e) continue;
      if (wrote) os << "*";
      os << block_->name(i);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_block(block_, other.block_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

Polynomial product(const BlockPtr& block, std::span<const Polynomial> factors) {
  Polynomial r = Polynomial::constant(block, 1);
  for (const auto& f : factors) r *= f;
  return r;
}

} // namespace hfg
