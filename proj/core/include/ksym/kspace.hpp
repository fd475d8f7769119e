#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ksym/error.hpp"
#include "ksym/matrix.hpp"
#include "ksym/subspace.hpp"

namespace ksym {

// Raised by KSymplecticSpace::create. Carries the offending form index
// (NotSkew, 1-based) or the common kernel (DegenerateCommonKernel).
class KSpaceError : public Error {
 public:
  KSpaceError(ErrorCode code, const std::string& message, std::size_t form_index = 0,
              std::optional<Subspace> common_kernel = std::nullopt)
      : Error(code, message), form_index_(form_index), common_kernel_(std::move(common_kernel)) {}

  std::size_t form_index() const noexcept { return form_index_; }
  const std::optional<Subspace>& common_kernel() const noexcept { return common_kernel_; }

 private:
  std::size_t form_index_;
  std::optional<Subspace> common_kernel_;
};

/// A vector space Q^N with k skew-symmetric forms omega_1..omega_k whose
/// kernels meet only in zero, N = n(k+1).
///
/// Forms are stored as matrices A_r with omega_r(u, v) = u^T A_r v, so the
/// elementary form e^i ^ e^j has A(i, j) = 1 and A(j, i) = -1. Form indices
/// are 1-based throughout the public API, matching the level argument l of
/// the orthogonal complements.
class KSymplecticSpace {
 public:
  /// Validates skewness, the trivial common kernel and divisibility of N by
  /// k + 1, in that order. Throws KSpaceError.
  static KSymplecticSpace create(std::size_t dim, std::vector<Matrix> forms);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t k() const noexcept { return forms_.size(); }
  std::size_t n() const noexcept { return dim_ / (forms_.size() + 1); }

  /// A_r for 1 <= r <= k.
  const Matrix& form(std::size_t r) const;
  std::span<const Matrix> forms() const noexcept { return forms_; }

  friend bool operator==(const KSymplecticSpace& a, const KSymplecticSpace& b) {
    return a.dim_ == b.dim_ && a.forms_ == b.forms_;
  }

 private:
  KSymplecticSpace(std::size_t dim, std::vector<Matrix> forms)
      : dim_(dim), forms_(std::move(forms)) {}

  std::size_t dim_;
  std::vector<Matrix> forms_;
};

/// omega_r(u, v) = u^T A_r v.
Rational eval_form(const KSymplecticSpace& s, std::size_t r, std::span<const Rational> u,
                   std::span<const Rational> v);

Subspace form_kernel(const KSymplecticSpace& s, std::size_t r);
// Intersection of ker omega_r over r <= level.
Subspace common_kernel(std::span<const Matrix> forms, std::size_t dim);

/// Skew matrices of sum_i dx^i ^ dy^r_i on coordinates
/// (x_1..x_n, y^1_1..y^1_n, ..., y^k_1..y^k_n).
std::vector<Matrix> canonical_forms(std::size_t n, std::size_t k);
KSymplecticSpace canonical_model(std::size_t n, std::size_t k);

// Coordinate index of y^r_i (1 <= r <= k, 0 <= i < n) in the canonical model.
inline std::size_t canonical_y_index(std::size_t n, std::size_t r, std::size_t i) {
  return n * r + i;
}
Subspace canonical_x_subspace(std::size_t n, std::size_t k);
Subspace canonical_y_subspace(std::size_t n, std::size_t k);

/// Forms diag(A1_r, -A2_r) on the direct sum.
KSymplecticSpace product_ominus(const KSymplecticSpace& s1, const KSymplecticSpace& s2);

struct RandomKSpace {
  KSymplecticSpace space;
  // P with forms P^T C_r P; P maps the generated space onto the canonical model.
  Matrix witness;
  // Preimage of the canonical y-subspace under P.
  Subspace polarization;
};

/// Deterministic in (n, k, seed). Entries of P are uniform on {-3..3};
/// singular draws are discarded.
RandomKSpace random_kspace(std::size_t n, std::size_t k, std::uint64_t seed);

/// Built-in spaces: "r3-2symp", "r6-2symp", "r6-5symp" and "canonical:n,k".
/// Throws ParseError for unknown names.
KSymplecticSpace fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace ksym
