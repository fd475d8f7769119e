#include "ksym/lagrangian.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "ksym/error.hpp"

namespace ksym {

namespace {

void check_level(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  if (level < 1 || level > s.k()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "level " + std::to_string(level) + " outside 1.." + std::to_string(s.k()));
  }
  if (w.ambient_dim() != s.dim()) {
    throw Error(ErrorCode::AmbientMismatch, "subspace ambient dimension " +
                                                std::to_string(w.ambient_dim()) +
                                                " differs from space dimension " +
                                                std::to_string(s.dim()));
  }
}

std::vector<std::size_t> candidate_order(std::size_t count, std::optional<std::uint64_t> seed) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  if (seed) {
    // Fisher-Yates on the raw engine output; see random_kspace.
    std::mt19937_64 engine(*seed);
    for (std::size_t i = count; i > 1; --i) std::swap(order[i - 1], order[engine() % i]);
  }
  return order;
}

// First basis row of `pool` (in the given order) outside `avoid`.
std::optional<Vector> pick_outside(const Subspace& pool, const Subspace& avoid,
                                   std::optional<std::uint64_t> seed) {
  for (std::size_t idx : candidate_order(pool.dim(), seed)) {
    if (!avoid.contains(pool.basis().row(idx))) return pool.basis().row_vector(idx);
  }
  return std::nullopt;
}

Subspace adjoin(const Subspace& u, const Vector& v) {
  return Subspace::span(vstack(u.basis(), Matrix::from_rows(std::span(&v, 1), u.ambient_dim())));
}

}  // namespace

Subspace l_orthogonal(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  check_level(s, w, level);
  // omega_r(v, b) = v . (A_r b); the rows of B A_r^T are the functionals A_r b.
  Matrix constraints(0, s.dim());
  for (std::size_t r = 1; r <= level; ++r) {
    constraints = vstack(constraints, w.basis() * s.form(r).transpose());
  }
  return kernel(constraints);
}

bool is_l_isotropic(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  check_level(s, w, level);
  const Matrix& b = w.basis();
  const Matrix bt = b.transpose();
  for (std::size_t r = 1; r <= level; ++r) {
    if (!(b * s.form(r) * bt).is_zero()) return false;
  }
  return true;
}

bool is_l_coisotropic(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  return w.contains(l_orthogonal(s, w, level));
}

namespace detail {

std::optional<Subspace> greedy_isotropic_complement(const KSymplecticSpace& s, const Subspace& w,
                                                    std::size_t level,
                                                    std::optional<std::uint64_t> shuffle_seed) {
  check_level(s, w, level);
  Subspace u = Subspace::zero(s.dim());
  Subspace covered = w;
  std::uint64_t step = 0;
  while (!covered.is_full()) {
    const Subspace pool = l_orthogonal(s, u, level);
    std::optional<std::uint64_t> seed;
    if (shuffle_seed) seed = *shuffle_seed + 0x9e3779b97f4a7c15ULL * ++step;
    std::optional<Vector> next = pick_outside(pool, covered, seed);
    if (!next) return std::nullopt;
    u = adjoin(u, *next);
    covered = subspace_sum(w, u);
  }
  return u;
}

Subspace lagrangian_completion(const KSymplecticSpace& s, const Subspace& u, std::size_t level,
                               std::optional<std::uint64_t> shuffle_seed) {
  check_level(s, u, level);
  if (!is_l_isotropic(s, u, level)) {
    throw Error(ErrorCode::NotIsotropic,
                "completion seed is not " + std::to_string(level) + "-isotropic");
  }
  Subspace current = u;
  std::uint64_t step = 0;
  for (;;) {
    const Subspace perp = l_orthogonal(s, current, level);
    if (perp == current) return current;
    std::optional<std::uint64_t> seed;
    if (shuffle_seed) seed = *shuffle_seed + 0x9e3779b97f4a7c15ULL * ++step;
    // perp strictly contains current, so some basis row lies outside it.
    std::optional<Vector> next = pick_outside(perp, current, seed);
    current = adjoin(current, *next);
    if (!is_l_isotropic(s, current, level)) {
      throw Error(ErrorCode::InvariantBroken, "completion step destroyed isotropy");
    }
  }
}

std::optional<Subspace> solve_isotropic_complement(const KSymplecticSpace& s, const Subspace& w,
                                                   std::size_t level) {
  check_level(s, w, level);
  if (!is_l_isotropic(s, w, level)) return std::nullopt;
  const std::size_t dim = s.dim();
  const std::size_t d = w.dim();
  const Matrix& b = w.basis();

  // Coordinate complement C spanned by the non-pivot axes of W.
  std::vector<std::size_t> axes;
  for (std::size_t c = 0, p = 0; c < dim; ++c) {
    if (p < d && w.pivots()[p] == c) {
      ++p;
    } else {
      axes.push_back(c);
    }
  }
  const std::size_t m = axes.size();

  // U = {c + T c}, T c_a = sum_j t(a, j) b_j. As W is isotropic the
  // conditions omega_r(c_a + T c_a, c_a' + T c_a') = 0 are linear in t.
  const std::size_t unknowns = m * d;
  std::vector<Vector> rows;
  for (std::size_t r = 1; r <= level; ++r) {
    const Matrix& a = s.form(r);
    const Matrix ba = b * a;
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) {
        Vector row(unknowns + 1);
        for (std::size_t j = 0; j < d; ++j) {
          row[x * d + j] += ba(j, axes[y]);
          row[y * d + j] -= ba(j, axes[x]);
        }
        row[unknowns] = -a(axes[x], axes[y]);
        rows.push_back(std::move(row));
      }
    }
  }
  Vector t(unknowns);
  if (!rows.empty()) {
    const RrefResult red = rref(Matrix::from_rows(rows, unknowns + 1));
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      if (red.pivots[i] == unknowns) return std::nullopt;
      t[red.pivots[i]] = red.reduced(i, unknowns);
    }
  }

  Matrix u(m, dim);
  for (std::size_t x = 0; x < m; ++x) {
    u(x, axes[x]) = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(t[x * d + j])) continue;
      for (std::size_t c = 0; c < dim; ++c) u(x, c) += t[x * d + j] * b(j, c);
    }
  }
  Subspace out = Subspace::span(u);
  if (!is_l_isotropic(s, out, level) || !subspace_sum(out, w).is_full()) {
    throw Error(ErrorCode::InvariantBroken, "solved complement fails its own check");
  }
  return out;
}

}  // namespace detail

Subspace lagrangian_completion(const KSymplecticSpace& s, const Subspace& u, std::size_t level) {
  return detail::lagrangian_completion(s, u, level, std::nullopt);
}

Subspace isotropic_complement(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  if (l_orthogonal(s, w, level) != w) {
    throw Error(ErrorCode::PreconditionFailed,
                "subspace is not its own " + std::to_string(level) + "-orthogonal complement");
  }
  std::optional<Subspace> u = detail::greedy_isotropic_complement(s, w, level, std::nullopt);
  if (!u) u = detail::solve_isotropic_complement(s, w, level);
  if (!u || u->dim() + w.dim() != s.dim() || !subspace_intersection(*u, w).is_zero() ||
      !is_l_isotropic(s, *u, level)) {
    throw Error(ErrorCode::ConstructionIncomplete,
                "no " + std::to_string(level) + "-isotropic complement exists");
  }
  return *u;
}

LagrangianVerdict is_l_lagrangian(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  check_level(s, w, level);
  const Subspace perp = l_orthogonal(s, w, level);
  if (perp == w) return {Verdict::Yes, isotropic_complement(s, w, level)};
  if (level == s.k() || !perp.contains(w)) return {Verdict::No, std::nullopt};

  std::optional<Subspace> u = detail::greedy_isotropic_complement(s, w, level, std::nullopt);
  if (!u) u = detail::solve_isotropic_complement(s, w, level);
  if (u) return {Verdict::Yes, std::move(u)};
  return {Verdict::No, std::nullopt};
}

SubspaceClassification classify(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  SubspaceClassification out;
  out.level = level;
  out.isotropic = is_l_isotropic(s, w, level);
  out.coisotropic = is_l_coisotropic(s, w, level);
  out.lagrangian = is_l_lagrangian(s, w, level);
  return out;
}

}  // namespace ksym
