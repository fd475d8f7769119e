#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ksym/rational.hpp"

namespace ksym {

using Exponent = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with rational coefficients over a named
/// variable list. Zero coefficients are never stored. Binary operations
/// require identical variable lists (VariableMismatch otherwise).
class Poly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars);

  static Poly constant(std::vector<std::string> vars, const Rational& c);
  static Poly variable(std::vector<std::string> vars, std::size_t index);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t var_count() const noexcept { return vars_.size(); }
  // Index of `name`, or var_count() when absent.
  std::size_t var_index(const std::string& name) const;
  const Terms& terms() const noexcept { return terms_; }

  // Adds c x^exp; drops the term if the sum cancels.
  void add_term(const Exponent& exp, const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree() const;
  Rational coefficient(const Exponent& exp) const;

  Poly derivative(std::size_t var) const;
  std::vector<Poly> gradient() const;

  // Substitutes values[v] for variable v. All values share one variable list,
  // which becomes the result's.
  Poly compose(std::span<const Poly> values) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const Poly& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

Poly pow(const Poly& p, unsigned e);

}  // namespace ksym
