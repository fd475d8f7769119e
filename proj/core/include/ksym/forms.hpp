#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksym/poly.hpp"

namespace ksym {

// Chart coordinates q1..qn.
std::vector<std::string> q_vars(std::size_t n);
// Fibre coordinate p^r_i, written "p<r>_<i>" (both 1-based).
std::string p_var(std::size_t r, std::size_t i);
// q1..qn followed by p1_1..p1_n, ..., pk_1..pk_n.
std::vector<std::string> qp_vars(std::size_t n, std::size_t k);

// gamma = sum_i coeffs[i] dq^i with coefficients over q_vars(n).
struct OneForm {
  std::vector<Poly> coeffs;
  std::size_t n() const noexcept { return coeffs.size(); }
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

// sum_{i<j} c_ij dq^i ^ dq^j.
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  // Requires i < j < n.
  Poly& at(std::size_t i, std::size_t j);
  const Poly& at(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  friend TwoForm operator-(TwoForm a);
  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  std::size_t offset(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::vector<Poly> upper_;
};

// gamma = (gamma_1, ..., gamma_k), a section of the k-fold cotangent sum over
// one chart.
struct Section {
  std::vector<OneForm> components;
  std::size_t k() const noexcept { return components.size(); }
  std::size_t n() const noexcept { return components.empty() ? 0 : components.front().n(); }
};

// Checks that every component has n coefficients over q_vars(n).
void validate_section(const Section& gamma);

OneForm exterior_derivative(const Poly& f);
// (d gamma)_ij = d gamma_j / dq^i - d gamma_i / dq^j.
TwoForm exterior_derivative(const OneForm& gamma);

/// gamma^* Omega_r for Omega_r = sum_i dq^i ^ dp^r_i, computed by
/// substituting p^r_i = gamma_{r,i}(q) into the two-form on the total space
/// and pulling back through the Jacobian of the section. Equals -d gamma_r.
/// `r` is 1-based.
TwoForm pullback_omega(const Section& gamma, std::size_t r);

/// Every component is closed. Both d gamma_r and gamma^* Omega_r are
/// computed; disagreement raises InvariantBroken.
bool is_closed_section(const Section& gamma);

/// W with dW = gamma when gamma is closed (radial integration, exact for
/// polynomial coefficients); nullopt otherwise. W(0) = 0.
std::optional<Poly> potential(const OneForm& gamma);

struct HamiltonJacobiResult {
  bool solution = false;
  // H(q, gamma(q)) over q_vars(n).
  Poly composed;
};

/// gamma_r = dW_r, then H(q^i, dW_1/dq^i, ..., dW_k/dq^i); a solution iff the
/// composite is constant. H may use q<i> and p<r>_<i> with i <= n, r <= k.
HamiltonJacobiResult hamilton_jacobi_check(const Poly& h, std::span<const Poly> potentials);

/// Same check for a raw section; throws NotClosed unless the section is closed.
HamiltonJacobiResult hamilton_jacobi_check_section(const Poly& h, const Section& gamma);

}  // namespace ksym
