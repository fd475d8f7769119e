#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ksym/kspace.hpp"
#include "ksym/subspace.hpp"

namespace ksym {

/// W^{perp,l}: vectors v with omega_r(v, w) = 0 for every w in W and every
/// r <= l. Throws IndexOutOfRange unless 1 <= l <= k, AmbientMismatch when W
/// lives elsewhere.
Subspace l_orthogonal(const KSymplecticSpace& s, const Subspace& w, std::size_t level);

/// omega_r vanishes on W x W for every r <= level.
bool is_l_isotropic(const KSymplecticSpace& s, const Subspace& w, std::size_t level);
/// W^{perp,l} is contained in W.
bool is_l_coisotropic(const KSymplecticSpace& s, const Subspace& w, std::size_t level);

enum class Verdict { Yes, No, Unknown };

struct LagrangianVerdict {
  Verdict verdict = Verdict::No;
  // Present iff verdict == Yes: an l-isotropic U with V = W (+) U.
  std::optional<Subspace> witness;
};

/// Yes iff W is l-isotropic and some l-isotropic U has V = W (+) U. The
/// chain construction of isotropic_complement is tried first; when it stalls
/// the complement is solved for as the graph of a map from a coordinate
/// complement into W, whose isotropy conditions are linear once W is
/// isotropic. The answer is therefore always Yes or No.
LagrangianVerdict is_l_lagrangian(const KSymplecticSpace& s, const Subspace& w, std::size_t level);

struct SubspaceClassification {
  std::size_t level = 0;
  bool isotropic = false;
  bool coisotropic = false;
  LagrangianVerdict lagrangian;
};

SubspaceClassification classify(const KSymplecticSpace& s, const Subspace& w, std::size_t level);

/// Grows an l-isotropic U by one vector of U^{perp,l} \ U at a time until
/// U = U^{perp,l}. The adjoined vector is the first row of the echelon basis
/// of U^{perp,l} that U does not contain. Throws NotIsotropic if the input is
/// not l-isotropic.
Subspace lagrangian_completion(const KSymplecticSpace& s, const Subspace& u, std::size_t level);

/// For W = W^{perp,l}, builds an l-isotropic U with V = W (+) U by the chain
/// U_1 c U_2 c ..., each u_{i+1} taken from U_i^{perp,l} outside W + U_i
/// (echelon order). If the chain stalls before W + U = V, the complement is
/// solved for exactly instead. Throws PreconditionFailed if W != W^{perp,l}
/// and ConstructionIncomplete if no l-isotropic complement exists.
Subspace isotropic_complement(const KSymplecticSpace& s, const Subspace& w, std::size_t level);

namespace detail {

// The chain used by isotropic_complement without the fixed-point
// precondition. `shuffle_seed` permutes the candidate order; nullopt keeps
// echelon order. Returns nullopt when the chain stalls.
std::optional<Subspace> greedy_isotropic_complement(const KSymplecticSpace& s, const Subspace& w,
                                                    std::size_t level,
                                                    std::optional<std::uint64_t> shuffle_seed);

// lagrangian_completion with a permuted candidate order.
Subspace lagrangian_completion(const KSymplecticSpace& s, const Subspace& u, std::size_t level,
                               std::optional<std::uint64_t> shuffle_seed);

// Exact search for an l-isotropic complement of an l-isotropic W; nullopt
// iff none exists.
std::optional<Subspace> solve_isotropic_complement(const KSymplecticSpace& s, const Subspace& w,
                                                   std::size_t level);

}  // namespace detail

}  // namespace ksym
