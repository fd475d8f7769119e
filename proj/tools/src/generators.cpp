#include "ksym_tools/generators.hpp"

#include "ksym/error.hpp"
#include "ksym/lagrangian.hpp"

namespace ksym::gen {

namespace {
constexpr int kMaxDraws = 10000;
}

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Vector random_vector(Rng& rng, std::size_t dim, long bound) {
  Vector v(dim);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t count) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < count; ++i) {
    Vector v = random_vector(rng, ambient);
    // Sparse rows make coordinate-aligned and degenerate cases common.
    for (auto& x : v) {
      if (rng.index(3) == 0) x = 0;
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(ambient, rows);
}

Subspace random_subspace(Rng& rng, std::size_t ambient) {
  return random_subspace(rng, ambient, rng.index(ambient + 1));
}

Vector random_member(Rng& rng, const Subspace& pool) {
  Vector v(pool.ambient_dim());
  if (pool.is_zero()) return v;
  while (is_zero(std::span<const Rational>(v))) {
    for (std::size_t r = 0; r < pool.dim(); ++r) {
      const long c = rng.uniform(-2, 2);
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * pool.basis()(r, j);
    }
  }
  return v;
}

Subspace random_isotropic(Rng& rng, const KSymplecticSpace& s, std::size_t level,
                          std::size_t steps) {
  Subspace u = Subspace::zero(s.dim());
  for (std::size_t i = 0; i < steps; ++i) {
    const Subspace pool = l_orthogonal(s, u, level);
    if (pool == u) break;
    Vector v = random_member(rng, pool);
    if (u.contains(v)) continue;
    std::vector<Vector> rows = u.basis_vectors();
    rows.push_back(std::move(v));
    u = Subspace::span(s.dim(), rows);
  }
  return u;
}

KSymplecticSpace random_generic_kspace(Rng& rng, std::size_t n, std::size_t k) {
  const std::size_t dim = n * (k + 1);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::vector<Matrix> forms;
    for (std::size_t r = 0; r < k; ++r) {
      Matrix a(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
          if (rng.index(2) == 0) continue;
          a(i, j) = rng.uniform(-2, 2);
          a(j, i) = -a(i, j);
        }
      }
      forms.push_back(std::move(a));
    }
    if (common_kernel(forms, dim).is_zero()) return KSymplecticSpace::create(dim, std::move(forms));
  }
  throw Error(ErrorCode::InvariantBroken, "random_generic_kspace: no nondegenerate draw");
}

Matrix random_invertible(Rng& rng, std::size_t dim) {
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) p(i, j) = rng.uniform(-3, 3);
    }
    if (is_invertible(p)) return p;
  }
  throw Error(ErrorCode::InvariantBroken, "random_invertible: no invertible draw");
}

Poly random_poly(Rng& rng, const std::vector<std::string>& vars, unsigned max_degree,
                 std::size_t max_terms) {
  Poly p(vars);
  const std::size_t terms = rng.index(max_terms + 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(vars.size(), 0);
    unsigned budget = static_cast<unsigned>(rng.index(max_degree + 1));
    while (budget > 0 && !vars.empty()) {
      ++e[rng.index(vars.size())];
      --budget;
    }
    const long num = rng.uniform(-5, 5);
    const long den = rng.uniform(1, 3);
    Rational c(num, den);
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

Section random_section(Rng& rng, std::size_t n, std::size_t k, unsigned max_degree) {
  const auto qs = q_vars(n);
  Section gamma;
  for (std::size_t r = 0; r < k; ++r) {
    OneForm component;
    for (std::size_t i = 0; i < n; ++i) component.coeffs.push_back(random_poly(rng, qs, max_degree, 4));
    gamma.components.push_back(std::move(component));
  }
  return gamma;
}

}  // namespace ksym::gen
