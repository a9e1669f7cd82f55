#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sublevel::poly {

using Var = std::uint32_t;

// Sparse exponent vector; terms sorted by variable, exponents > 0.
class Monomial {
 public:
  struct Term {
    Var var;
    std::uint32_t exp;
    bool operator==(const Term&) const = default;
  };

  Monomial() = default;
  explicit Monomial(std::vector<Term> terms);
  static Monomial variable(Var v, std::uint32_t exp = 1);

  std::span<const Term> terms() const { return terms_; }
  unsigned degree() const { return degree_; }
  bool is_constant() const { return terms_.empty(); }
  std::uint32_t exponent(Var v) const;
  std::vector<Var> variables() const;
  // One past the largest variable index, 0 for the constant.
  std::size_t span_vars() const { return terms_.empty() ? 0 : terms_.back().var + 1; }

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return terms_ == o.terms_; }
  // Graded order; within a degree, larger exponents on lower indices come first.
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class Polynomial {
 public:
  static constexpr double kDropTol = 1e-12;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, double c);
  static Polynomial variable(std::size_t nvars, Var v);

  void add_term(const Monomial& m, double c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, double>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  double coefficient(const Monomial& m) const;
  std::vector<Monomial> support() const;
  std::vector<Var> variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  bool operator==(const Polynomial& o) const = default;

  std::string to_string() const;

 private:
  void check_nvars(const Polynomial& o) const;

  std::size_t nvars_;
  std::map<Monomial, double> terms_;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
double evaluate(const Polynomial& p, std::span<const double> x);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

enum class Reduction : std::uint8_t { None, Involutory, Idempotent };

class ReductionRule {
 public:
  ReductionRule() = default;
  explicit ReductionRule(std::size_t nvars) : kinds_(nvars, Reduction::None) {}
  static ReductionRule uniform(std::size_t nvars, Reduction kind);

  Reduction kind(Var v) const { return v < kinds_.size() ? kinds_[v] : Reduction::None; }
  void set(Var v, Reduction kind);
  bool trivial() const;
  std::size_t size() const { return kinds_.size(); }

 private:
  std::vector<Reduction> kinds_;
};

Monomial reduce_monomial(const Monomial& m, const ReductionRule& rule);

class MomentDictionary {
 public:
  explicit MomentDictionary(ReductionRule rule = {});

  std::size_t index(const Monomial& m);
  std::optional<std::size_t> find(const Monomial& m) const;
  const Monomial& monomial(std::size_t idx) const { return monomials_.at(idx); }
  std::size_t size() const { return monomials_.size(); }
  const ReductionRule& rule() const { return rule_; }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

 private:
  ReductionRule rule_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> lookup_;
  bool frozen_ = false;
};

std::size_t riesz_index(MomentDictionary& dict, const Monomial& m);

std::vector<Monomial> monomial_basis(std::span<const Var> vars, unsigned d);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace sublevel::poly
