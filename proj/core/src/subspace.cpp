#include "ksym/subspace.hpp"

#include <string>

#include "ksym/error.hpp"

namespace ksym {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch,
                std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                    " and " + std::to_string(b.ambient_dim()) + " differ");
  }
}

}  // namespace

Subspace Subspace::span(const Matrix& generators) {
  RrefResult red = rref(generators);
  Matrix basis(red.rank(), generators.cols());
  for (std::size_t r = 0; r < red.rank(); ++r) {
    for (std::size_t c = 0; c < generators.cols(); ++c) basis(r, c) = red.reduced(r, c);
  }
  return Subspace(std::move(basis), std::move(red.pivots));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> generators) {
  return span(Matrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(Matrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> axes) {
  std::vector<Vector> rows;
  rows.reserve(axes.size());
  for (std::size_t axis : axes) {
    if (axis >= ambient_dim) throw Error(ErrorCode::IndexOutOfRange, "coordinate axis out of range");
    rows.push_back(unit_vector(ambient_dim, axis));
  }
  return span(ambient_dim, rows);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "membership: vector length differs from ambient dimension");
  }
  // Reduce against the echelon basis; the residue vanishes iff v is a member.
  Vector residue(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational coeff = residue[pivots_[r]];
    if (ksym::is_zero(coeff)) continue;
    for (std::size_t c = pivots_[r]; c < ambient_dim(); ++c) {
      if (!ksym::is_zero(basis_(r, c))) residue[c] -= coeff * basis_(r, c);
    }
  }
  return ksym::is_zero(std::span<const Rational>(residue));
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "contains");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& m) {
  RrefResult red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;

  std::vector<Vector> generators;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank(); ++r) v[red.pivots[r]] = -red.reduced(r, free);
    generators.push_back(std::move(v));
  }
  return Subspace::span(n, generators);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersection");
  // With ann(S) = {v : s.v = 0 for s in S}: A n B = ann(ann(A) + ann(B)).
  const Subspace ann_a = kernel(a.basis());
  const Subspace ann_b = kernel(b.basis());
  return kernel(vstack(ann_a.basis(), ann_b.basis()));
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "image: map does not act on the subspace's ambient space");
  }
  // Rows of B M^T are the images of the basis rows of B.
  return Subspace::span(s.basis() * m.transpose());
}

}  // namespace ksym
