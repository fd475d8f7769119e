#include "ksym/poly.hpp"

#include <algorithm>
#include <numeric>

#include "ksym/error.hpp"

namespace ksym {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
  Poly p(std::move(vars));
  p.add_term(Exponent(p.var_count(), 0), c);
  return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t index) {
  Poly p(std::move(vars));
  if (index >= p.var_count()) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Exponent e(p.var_count(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t Poly::var_index(const std::string& name) const {
  return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), name) - vars_.begin());
}

void Poly::add_term(const Exponent& exp, const Rational& c) {
  if (exp.size() != vars_.size()) {
    throw Error(ErrorCode::VariableMismatch, "exponent length differs from variable count");
  }
  if (ksym::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (ksym::is_zero(it->second)) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                            terms_.begin()->first.end(),
                                            [](unsigned e) { return e == 0; }));
}

unsigned Poly::degree() const {
  if (terms_.empty()) return 0;
  const Exponent& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), 0u);
}

Rational Poly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Poly out(vars_);
  for (const auto& [exp, c] : terms_) {
    if (exp[var] == 0) continue;
    Exponent lowered = exp;
    --lowered[var];
    out.add_term(lowered, c * exp[var]);
  }
  return out;
}

std::vector<Poly> Poly::gradient() const {
  std::vector<Poly> out;
  out.reserve(vars_.size());
  for (std::size_t v = 0; v < vars_.size(); ++v) out.push_back(derivative(v));
  return out;
}

Poly Poly::compose(std::span<const Poly> values) const {
  if (values.size() != vars_.size()) {
    throw Error(ErrorCode::VariableMismatch, "compose: one value per variable required");
  }
  std::vector<std::string> target_vars;
  if (!values.empty()) {
    target_vars = values.front().vars();
    for (const Poly& v : values) {
      if (v.vars() != target_vars) {
        throw Error(ErrorCode::VariableMismatch, "compose: values use different variables");
      }
    }
  }
  // powers[v][e] = values[v]^e, filled on demand.
  std::vector<std::vector<Poly>> powers(values.size());
  auto power = [&](std::size_t v, unsigned e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target_vars, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * values[v]);
    return cache[e];
  };

  Poly out(target_vars);
  for (const auto& [exp, c] : terms_) {
    Poly term = Poly::constant(target_vars, c);
    for (std::size_t v = 0; v < exp.size(); ++v) {
      if (exp[v] != 0) term = term * power(v, exp[v]);
    }
    out += term;
  }
  return out;
}

void Poly::require_same_vars(const Poly& o) const {
  if (vars_ != o.vars_) throw Error(ErrorCode::VariableMismatch, "polynomials use different variables");
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_vars(o);
  for (const auto& [exp, c] : o.terms_) add_term(exp, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_vars(o);
  for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (ksym::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_vars(b);
  Poly out(a.vars_);
  Exponent e(a.var_count());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly pow(const Poly& p, unsigned e) {
  Poly out = Poly::constant(p.vars(), 1);
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

}  // namespace ksym
