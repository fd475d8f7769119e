#include "ksym/forms.hpp"

#include <charconv>
#include <numeric>

#include "ksym/error.hpp"

namespace ksym {

namespace {

// A term c dz^a ^ dz^b of a two-form on the total space z = (q, p).
struct AmbientTerm {
  std::size_t a;
  std::size_t b;
  Poly coeff;
};

std::vector<AmbientTerm> canonical_two_form(std::size_t n, std::size_t k, std::size_t r) {
  const auto vars = qp_vars(n, k);
  std::vector<AmbientTerm> terms;
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back({i, n * r + i, Poly::constant(vars, 1)});
  }
  return terms;
}

// Parses "q<i>" / "p<r>_<i>"; returns false on anything else.
bool parse_index(std::string_view digits, std::size_t& out) {
  if (digits.empty()) return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc{} && ptr == digits.data() + digits.size() && out >= 1;
}

Poly compose_with_section(const Poly& h, const Section& gamma) {
  const std::size_t n = gamma.n();
  const std::size_t k = gamma.k();
  const auto qs = q_vars(n);
  std::vector<Poly> values;
  values.reserve(h.var_count());
  for (const std::string& name : h.vars()) {
    std::size_t i = 0;
    std::size_t r = 0;
    if (name.size() > 1 && name[0] == 'q' && parse_index(std::string_view(name).substr(1), i) &&
        i <= n) {
      values.push_back(Poly::variable(qs, i - 1));
      continue;
    }
    const auto underscore = name.find('_');
    if (name.size() > 1 && name[0] == 'p' && underscore != std::string::npos &&
        parse_index(std::string_view(name).substr(1, underscore - 1), r) &&
        parse_index(std::string_view(name).substr(underscore + 1), i) && r <= k && i <= n) {
      values.push_back(gamma.components[r - 1].coeffs[i - 1]);
      continue;
    }
    throw Error(ErrorCode::VariableMismatch, "hamiltonian variable '" + name +
                                                 "' is not a chart or fibre coordinate for n=" +
                                                 std::to_string(n) + ", k=" + std::to_string(k));
  }
  if (values.empty()) return Poly::constant(qs, h.coefficient({}));
  return h.compose(values);
}

}  // namespace

std::vector<std::string> q_vars(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("q" + std::to_string(i));
  return vars;
}

std::string p_var(std::size_t r, std::size_t i) {
  return "p" + std::to_string(r) + "_" + std::to_string(i);
}

std::vector<std::string> qp_vars(std::size_t n, std::size_t k) {
  auto vars = q_vars(n);
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::size_t i = 1; i <= n; ++i) vars.push_back(p_var(r, i));
  }
  return vars;
}

TwoForm::TwoForm(std::size_t n) : n_(n), upper_(n * (n - (n > 0 ? 1 : 0)) / 2, Poly(q_vars(n))) {}

std::size_t TwoForm::offset(std::size_t i, std::size_t j) const {
  if (!(i < j && j < n_)) throw Error(ErrorCode::IndexOutOfRange, "two-form index needs i < j < n");
  // Rows i = 0..n-2 hold n-1-i entries each.
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

Poly& TwoForm::at(std::size_t i, std::size_t j) { return upper_[offset(i, j)]; }
const Poly& TwoForm::at(std::size_t i, std::size_t j) const { return upper_[offset(i, j)]; }

bool TwoForm::is_zero() const {
  for (const Poly& p : upper_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

TwoForm operator-(TwoForm a) {
  for (Poly& p : a.upper_) p = -p;
  return a;
}

void validate_section(const Section& gamma) {
  const std::size_t n = gamma.n();
  const auto qs = q_vars(n);
  for (const OneForm& component : gamma.components) {
    if (component.n() != n) throw Error(ErrorCode::VariableMismatch, "section components differ in n");
    for (const Poly& c : component.coeffs) {
      if (c.vars() != qs) {
        throw Error(ErrorCode::VariableMismatch, "section coefficients must use q1..q" + std::to_string(n));
      }
    }
  }
}

OneForm exterior_derivative(const Poly& f) { return OneForm{f.gradient()}; }

TwoForm exterior_derivative(const OneForm& gamma) {
  const std::size_t n = gamma.n();
  TwoForm out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.at(i, j) = gamma.coeffs[j].derivative(i) - gamma.coeffs[i].derivative(j);
    }
  }
  return out;
}

TwoForm pullback_omega(const Section& gamma, std::size_t r) {
  validate_section(gamma);
  const std::size_t n = gamma.n();
  const std::size_t k = gamma.k();
  if (r < 1 || r > k) throw Error(ErrorCode::IndexOutOfRange, "form index outside 1..k");
  const auto qs = q_vars(n);

  // The section as a map q -> z = (q, gamma_1(q), ..., gamma_k(q)).
  std::vector<Poly> z;
  for (std::size_t i = 0; i < n; ++i) z.push_back(Poly::variable(qs, i));
  for (const OneForm& component : gamma.components) {
    z.insert(z.end(), component.coeffs.begin(), component.coeffs.end());
  }
  std::vector<std::vector<Poly>> jacobian;
  jacobian.reserve(z.size());
  for (const Poly& za : z) jacobian.push_back(za.gradient());

  TwoForm out(n);
  for (const AmbientTerm& term : canonical_two_form(n, k, r)) {
    const Poly c = term.coeff.compose(z);
    const auto& ja = jacobian[term.a];
    const auto& jb = jacobian[term.b];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        out.at(i, j) += c * (ja[i] * jb[j] - ja[j] * jb[i]);
      }
    }
  }
  return out;
}

bool is_closed_section(const Section& gamma) {
  validate_section(gamma);
  bool closed = true;
  for (std::size_t r = 1; r <= gamma.k(); ++r) {
    const TwoForm d = exterior_derivative(gamma.components[r - 1]);
    if (pullback_omega(gamma, r) != -d) {
      throw Error(ErrorCode::InvariantBroken,
                  "pullback of Omega_" + std::to_string(r) + " disagrees with -d gamma_" +
                      std::to_string(r));
    }
    closed = closed && d.is_zero();
  }
  return closed;
}

std::optional<Poly> potential(const OneForm& gamma) {
  if (!exterior_derivative(gamma).is_zero()) return std::nullopt;
  const std::size_t n = gamma.n();
  Poly w(q_vars(n));
  // W(q) = int_0^1 sum_i gamma_i(tq) q^i dt, term by term.
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [exp, c] : gamma.coeffs[i].terms()) {
      Exponent raised = exp;
      ++raised[i];
      const unsigned deg = std::accumulate(exp.begin(), exp.end(), 0u);
      w.add_term(raised, c / Rational(deg + 1));
    }
  }
  return w;
}

HamiltonJacobiResult hamilton_jacobi_check(const Poly& h, std::span<const Poly> potentials) {
  if (potentials.empty()) throw Error(ErrorCode::VariableMismatch, "need at least one potential");
  const std::size_t n = potentials.front().var_count();
  const auto qs = q_vars(n);
  Section gamma;
  for (const Poly& w : potentials) {
    if (w.vars() != qs) {
      throw Error(ErrorCode::VariableMismatch, "potentials must use q1..q" + std::to_string(n));
    }
    gamma.components.push_back(exterior_derivative(w));
  }
  HamiltonJacobiResult out;
  out.composed = compose_with_section(h, gamma);
  out.solution = out.composed.is_constant();
  return out;
}

HamiltonJacobiResult hamilton_jacobi_check_section(const Poly& h, const Section& gamma) {
  if (!is_closed_section(gamma)) throw Error(ErrorCode::NotClosed, "section is not closed");
  HamiltonJacobiResult out;
  out.composed = compose_with_section(h, gamma);
  out.solution = out.composed.is_constant();
  return out;
}

}  // namespace ksym
