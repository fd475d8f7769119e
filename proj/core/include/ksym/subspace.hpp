#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ksym/matrix.hpp"

namespace ksym {

// A linear subspace of Q^N held by its canonical basis: the nonzero rows of
// the reduced row-echelon form of any generating set. Two subspaces are equal
// exactly when their stored bases are entry-wise equal.
class Subspace {
 public:
  // The zero subspace of Q^0.
  Subspace() = default;

  // Row space of `generators`; rows may be dependent.
  static Subspace span(const Matrix& generators);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  // Span of the given coordinate axes.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> axes);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  // dim() x ambient_dim(), reduced row-echelon form, full row rank.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {v : m v = 0}.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

// {M b : b in s}; `m` is ambient_out x s.ambient_dim().
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace ksym
