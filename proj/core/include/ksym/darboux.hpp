#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ksym/kspace.hpp"
#include "ksym/matrix.hpp"
#include "ksym/subspace.hpp"

namespace ksym {

/// W = W^{perp,k} and dim W = n k.
bool check_polarization(const KSymplecticSpace& s, const Subspace& w);

/// Searches for a polarization with lagrangian completions at level k: first
/// from the sum of the form kernels (when k >= 2 and that sum is isotropic),
/// then from {0} under echelon order and seed-permuted orders. An empty
/// result does not prove that the space is unpolarizable.
std::optional<Subspace> find_polarization(const KSymplecticSpace& s, std::uint64_t seed);

/// Basis {e_i, f^r_i} in which omega_r = sum_i e_i^* ^ (f^r_i)^*.
struct DarbouxFrame {
  std::vector<Vector> e;               // n vectors spanning the complement
  std::vector<std::vector<Vector>> f;  // f[r-1][i] = f^r_i, spanning the polarization
  // Columns e_1..e_n, f^1_1..f^1_n, ..., f^k_1..f^k_n; P^T A_r P is the
  // canonical form matrix for every r.
  Matrix change_of_basis;
};

/// Linear Darboux normalization of a polarized space.
///
/// The complement V0 (given, or built by isotropic_complement) supplies e_i
/// as its echelon basis. The map w -> (-(i_w omega_r)|_{V0})_r is assembled
/// as an nk x nk matrix over that basis and inverted to obtain f^r_i. The
/// frame identity P^T A_r P = C_r is checked exactly before returning.
///
/// Errors: NotPolarized, ComplementFailed (bad or unconstructible V0),
/// SingularPhi.
DarbouxFrame darboux_map(const KSymplecticSpace& s, const Subspace& w,
                         const std::optional<Subspace>& complement = std::nullopt);

/// p : s1 -> s2 (an s2.dim() x s1.dim() matrix) is invertible and
/// p^T A2_r p = A1_r for every r.
bool is_ksymplectomorphism(const KSymplecticSpace& s1, const KSymplecticSpace& s2, const Matrix& p);

/// {(v, p v)} inside the (-)-product of s1 and s2.
Subspace graph_subspace(const KSymplecticSpace& s1, const KSymplecticSpace& s2, const Matrix& p);

struct GraphCriterion {
  Subspace graph;
  bool graph_is_lagrangian = false;
  bool is_ksymplectomorphism = false;
};

/// Evaluates both sides of the graph criterion. Throws NotIsomorphism when p
/// is singular.
GraphCriterion graph_criterion(const KSymplecticSpace& s1, const KSymplecticSpace& s2,
                               const Matrix& p);

}  // namespace ksym
