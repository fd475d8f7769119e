#include "ksym/darboux.hpp"

#include <string>

#include "ksym/error.hpp"
#include "ksym/lagrangian.hpp"

namespace ksym {

namespace {

constexpr int kPolarizationAttempts = 64;

void check_map_shape(const KSymplecticSpace& s1, const KSymplecticSpace& s2, const Matrix& p) {
  if (s1.k() != s2.k()) throw Error(ErrorCode::MismatchedK, "spaces carry different numbers of forms");
  if (p.rows() != s2.dim() || p.cols() != s1.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "map is " + std::to_string(p.rows()) + "x" +
                                              std::to_string(p.cols()) + ", expected " +
                                              std::to_string(s2.dim()) + "x" +
                                              std::to_string(s1.dim()));
  }
}

Subspace resolve_complement(const KSymplecticSpace& s, const Subspace& w,
                            const std::optional<Subspace>& given) {
  if (!given) {
    try {
      return isotropic_complement(s, w, s.k());
    } catch (const Error& e) {
      throw Error(ErrorCode::ComplementFailed, std::string("no complement: ") + e.what());
    }
  }
  const Subspace& v0 = *given;
  if (v0.ambient_dim() != s.dim()) {
    throw Error(ErrorCode::AmbientMismatch, "complement lives in a different ambient space");
  }
  if (v0.dim() + w.dim() != s.dim() || !subspace_intersection(v0, w).is_zero()) {
    throw Error(ErrorCode::ComplementFailed, "given subspace is not a direct complement");
  }
  if (!is_l_isotropic(s, v0, s.k())) {
    throw Error(ErrorCode::ComplementFailed, "given complement is not k-isotropic");
  }
  return v0;
}

}  // namespace

bool check_polarization(const KSymplecticSpace& s, const Subspace& w) {
  if (w.ambient_dim() != s.dim()) {
    throw Error(ErrorCode::AmbientMismatch, "subspace lives in a different ambient space");
  }
  return w.dim() == s.n() * s.k() && l_orthogonal(s, w, s.k()) == w;
}

std::optional<Subspace> find_polarization(const KSymplecticSpace& s, std::uint64_t seed) {
  const std::size_t k = s.k();
  if (k >= 2) {
    Subspace kernels = Subspace::zero(s.dim());
    for (std::size_t r = 1; r <= k; ++r) kernels = subspace_sum(kernels, form_kernel(s, r));
    if (is_l_isotropic(s, kernels, k)) {
      Subspace w = lagrangian_completion(s, kernels, k);
      if (check_polarization(s, w)) return w;
    }
  }
  const Subspace origin = Subspace::zero(s.dim());
  for (int attempt = 0; attempt < kPolarizationAttempts; ++attempt) {
    std::optional<std::uint64_t> order;
    if (attempt > 0) order = seed * 1000003ULL + static_cast<std::uint64_t>(attempt);
    Subspace w = detail::lagrangian_completion(s, origin, k, order);
    if (w.dim() == s.n() * k) return w;
  }
  return std::nullopt;
}

DarbouxFrame darboux_map(const KSymplecticSpace& s, const Subspace& w,
                         const std::optional<Subspace>& complement) {
  if (!check_polarization(s, w)) {
    throw Error(ErrorCode::NotPolarized, "subspace is not a polarization");
  }
  const Subspace v0 = resolve_complement(s, w, complement);
  const std::size_t n = s.n();
  const std::size_t k = s.k();
  const std::size_t nk = n * k;

  const std::vector<Vector> e = v0.basis_vectors();
  const std::vector<Vector> w_basis = w.basis_vectors();

  // phi(w_j) in slot r, evaluated on e_i: -omega_r(w_j, e_i).
  Matrix phi(nk, nk);
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < nk; ++j) {
        phi((r - 1) * n + i, j) = -eval_form(s, r, w_basis[j], e[i]);
      }
    }
  }
  std::optional<Matrix> phi_inv = inverse(phi);
  if (!phi_inv) throw Error(ErrorCode::SingularPhi, "polarization map is singular");

  DarbouxFrame frame;
  frame.e = e;
  frame.f.assign(k, std::vector<Vector>(n, zero_vector(s.dim())));
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector& f = frame.f[r - 1][i];
      for (std::size_t j = 0; j < nk; ++j) {
        const Rational& c = (*phi_inv)(j, (r - 1) * n + i);
        if (is_zero(c)) continue;
        for (std::size_t t = 0; t < s.dim(); ++t) f[t] += c * w_basis[j][t];
      }
    }
  }

  std::vector<Vector> columns = frame.e;
  for (const auto& slot : frame.f) columns.insert(columns.end(), slot.begin(), slot.end());
  frame.change_of_basis = Matrix::from_columns(columns, s.dim());

  const Matrix& p = frame.change_of_basis;
  const Matrix pt = p.transpose();
  const std::vector<Matrix> canonical = canonical_forms(n, k);
  for (std::size_t r = 1; r <= k; ++r) {
    if (pt * s.form(r) * p != canonical[r - 1]) {
      throw Error(ErrorCode::InvariantBroken, "frame does not normalize form " + std::to_string(r));
    }
  }
  return frame;
}

bool is_ksymplectomorphism(const KSymplecticSpace& s1, const KSymplecticSpace& s2, const Matrix& p) {
  check_map_shape(s1, s2, p);
  if (!is_invertible(p)) return false;
  const Matrix pt = p.transpose();
  for (std::size_t r = 1; r <= s1.k(); ++r) {
    if (pt * s2.form(r) * p != s1.form(r)) return false;
  }
  return true;
}

Subspace graph_subspace(const KSymplecticSpace& s1, const KSymplecticSpace& s2, const Matrix& p) {
  check_map_shape(s1, s2, p);
  // Row i is (e_i, p e_i): [I | p^T].
  Matrix rows(s1.dim(), s1.dim() + s2.dim());
  for (std::size_t i = 0; i < s1.dim(); ++i) {
    rows(i, i) = 1;
    for (std::size_t j = 0; j < s2.dim(); ++j) rows(i, s1.dim() + j) = p(j, i);
  }
  return Subspace::span(rows);
}

GraphCriterion graph_criterion(const KSymplecticSpace& s1, const KSymplecticSpace& s2,
                               const Matrix& p) {
  check_map_shape(s1, s2, p);
  if (!is_invertible(p)) throw Error(ErrorCode::NotIsomorphism, "map is not invertible");
  const KSymplecticSpace product = product_ominus(s1, s2);
  GraphCriterion out{graph_subspace(s1, s2, p), false, false};
  out.graph_is_lagrangian = is_l_lagrangian(product, out.graph, product.k()).verdict == Verdict::Yes;
  out.is_ksymplectomorphism = is_ksymplectomorphism(s1, s2, p);
  return out;
}

}  // namespace ksym
