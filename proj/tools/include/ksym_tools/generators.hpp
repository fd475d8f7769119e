#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ksym/forms.hpp"
#include "ksym/kspace.hpp"
#include "ksym/poly.hpp"
#include "ksym/subspace.hpp"

// Seeded instance generators for property checks and benchmarks. All draws
// use the raw mt19937_64 stream so a seed means the same instance everywhere.
namespace ksym::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  long uniform(long lo, long hi);
  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  bool coin() { return (engine_() & 1U) != 0; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

Vector random_vector(Rng& rng, std::size_t dim, long bound = 3);

// Span of `count` random vectors; the dimension may fall short of `count`.
Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t count);
// Dimension drawn uniformly from 0..ambient.
Subspace random_subspace(Rng& rng, std::size_t ambient);

// Random combination of basis vectors of `pool`, never zero unless pool is.
Vector random_member(Rng& rng, const Subspace& pool);

// l-isotropic subspace grown one random member of U^{perp,l} at a time, with
// up to `steps` extensions.
Subspace random_isotropic(Rng& rng, const KSymplecticSpace& s, std::size_t level,
                          std::size_t steps);

// k random skew forms on Q^{n(k+1)} with small entries, redrawn until the
// common kernel is trivial. Not necessarily polarized.
KSymplecticSpace random_generic_kspace(Rng& rng, std::size_t n, std::size_t k);

// Random invertible matrix with entries in {-3..3}.
Matrix random_invertible(Rng& rng, std::size_t dim);

Poly random_poly(Rng& rng, const std::vector<std::string>& vars, unsigned max_degree,
                 std::size_t max_terms);

Section random_section(Rng& rng, std::size_t n, std::size_t k, unsigned max_degree);

}  // namespace ksym::gen
