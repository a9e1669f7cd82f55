#include "sublevel/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sublevel/error.hpp"

namespace sublevel::poly {

Monomial::Monomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  for (const Term& t : terms) {
    if (t.exp == 0) continue;
    if (!terms_.empty() && terms_.back().var == t.var)
      terms_.back().exp += t.exp;
    else
      terms_.push_back(t);
    degree_ += t.exp;
  }
}

Monomial Monomial::variable(Var v, std::uint32_t exp) { return Monomial({{v, exp}}); }

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, Var x) { return t.var < x; });
  return (it != terms_.end() && it->var == v) ? it->exp : 0;
}

std::vector<Var> Monomial::variables() const {
  std::vector<Var> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.var);
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->var < b->var)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->var < a->var) {
      r.terms_.push_back(*b++);
    } else {
      r.terms_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ <=> o.degree_;
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Term& a = terms_[k];
    const Term& b = o.terms_[k];
    if (a.var != b.var) return a.var < b.var ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.exp != b.exp) return a.exp > b.exp ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> o.terms_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Term& t : terms_) {
    std::uint64_t v = (std::uint64_t(t.var) << 32) | t.exp;
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdull;
    v ^= v >> 33;
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  if (terms_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) os << '*';
    os << 'x' << terms_[k].var;
    if (terms_[k].exp > 1) os << '^' << terms_[k].exp;
  }
  return os.str();
}

Polynomial Polynomial::constant(std::size_t nvars, double c) {
  Polynomial p(nvars);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, Var v) {
  if (v >= nvars) throw DimensionError("variable index out of range");
  Polynomial p(nvars);
  p.add_term(Monomial::variable(v), 1.0);
  return p;
}

void Polynomial::add_term(const Monomial& m, double c) {
  if (m.span_vars() > nvars_) throw DimensionError("monomial references variable " + m.to_string() +
                                                   " outside nvars=" + std::to_string(nvars_));
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kDropTol) terms_.erase(it);
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

double Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> out;
  for (const auto& [m, c] : terms_)
    for (const auto& t : m.terms()) out.push_back(t.var);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Polynomial::check_nvars(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionError("polynomial nvars mismatch: " + std::to_string(nvars_) + " vs " +
                         std::to_string(o.nvars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_nvars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_nvars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < kDropTol)
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    double a = std::abs(c);
    if (m.is_constant()) os << a;
    else if (a == 1.0) os << m.to_string();
    else os << a << '*' << m.to_string();
  }
  return os.str();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("poly_mul nvars mismatch: " + std::to_string(a.nvars()) + " vs " +
                         std::to_string(b.nvars()));
  Polynomial r(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

double evaluate(const Polynomial& p, std::span<const double> x) {
  if (x.size() < p.nvars()) throw DimensionError("evaluation point shorter than nvars");
  double s = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double v = c;
    for (const auto& t : m.terms())
      for (std::uint32_t e = 0; e < t.exp; ++e) v *= x[t.var];
    s += v;
  }
  return s;
}

}  // namespace sublevel::poly
