#include "ksym/kspace.hpp"

#include <charconv>
#include <random>

namespace ksym {

namespace {

Matrix wedge_sum(std::size_t dim, std::initializer_list<std::pair<std::size_t, std::size_t>> terms) {
  Matrix a(dim, dim);
  for (auto [i, j] : terms) {
    a(i, j) += 1;
    a(j, i) -= 1;
  }
  return a;
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw ParseError("bad fixture name '" + std::string(whole) + "'");
  }
  return value;
}

constexpr int kMaxWitnessDraws = 10000;

}  // namespace

KSymplecticSpace KSymplecticSpace::create(std::size_t dim, std::vector<Matrix> forms) {
  if (forms.empty()) throw KSpaceError(ErrorCode::BadDimension, "need at least one form");
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].rows() != dim || forms[r].cols() != dim) {
      throw KSpaceError(ErrorCode::ShapeMismatch,
                        "form " + std::to_string(r + 1) + " is not " + std::to_string(dim) + "x" +
                            std::to_string(dim),
                        r + 1);
    }
    if (!forms[r].is_skew()) {
      throw KSpaceError(ErrorCode::NotSkew, "form " + std::to_string(r + 1) + " is not skew-symmetric",
                        r + 1);
    }
  }
  Subspace common = common_kernel(forms, dim);
  if (!common.is_zero()) {
    throw KSpaceError(ErrorCode::DegenerateCommonKernel,
                      "forms share a kernel of dimension " + std::to_string(common.dim()), 0,
                      std::move(common));
  }
  if (dim % (forms.size() + 1) != 0) {
    throw KSpaceError(ErrorCode::BadDimension, "dimension " + std::to_string(dim) +
                                                   " is not divisible by k+1 = " +
                                                   std::to_string(forms.size() + 1));
  }
  return KSymplecticSpace(dim, std::move(forms));
}

const Matrix& KSymplecticSpace::form(std::size_t r) const {
  if (r < 1 || r > forms_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "form index " + std::to_string(r) + " outside 1.." +
                                                std::to_string(forms_.size()));
  }
  return forms_[r - 1];
}

Rational eval_form(const KSymplecticSpace& s, std::size_t r, std::span<const Rational> u,
                   std::span<const Rational> v) {
  if (u.size() != s.dim() || v.size() != s.dim()) {
    throw Error(ErrorCode::AmbientMismatch, "eval_form: vector length differs from space dimension");
  }
  return dot(u, s.form(r) * v);
}

Subspace form_kernel(const KSymplecticSpace& s, std::size_t r) { return kernel(s.form(r)); }

Subspace common_kernel(std::span<const Matrix> forms, std::size_t dim) {
  Matrix stacked(0, dim);
  for (const auto& a : forms) stacked = vstack(stacked, a);
  return kernel(stacked);
}

std::vector<Matrix> canonical_forms(std::size_t n, std::size_t k) {
  const std::size_t dim = n * (k + 1);
  std::vector<Matrix> forms;
  forms.reserve(k);
  for (std::size_t r = 1; r <= k; ++r) {
    Matrix a(dim, dim);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t y = canonical_y_index(n, r, i);
      a(i, y) = 1;
      a(y, i) = -1;
    }
    forms.push_back(std::move(a));
  }
  return forms;
}

KSymplecticSpace canonical_model(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw Error(ErrorCode::BadDimension, "canonical model needs n, k >= 1");
  return KSymplecticSpace::create(n * (k + 1), canonical_forms(n, k));
}

Subspace canonical_x_subspace(std::size_t n, std::size_t k) {
  std::vector<std::size_t> axes(n);
  for (std::size_t i = 0; i < n; ++i) axes[i] = i;
  return Subspace::coordinate(n * (k + 1), axes);
}

Subspace canonical_y_subspace(std::size_t n, std::size_t k) {
  std::vector<std::size_t> axes;
  for (std::size_t i = n; i < n * (k + 1); ++i) axes.push_back(i);
  return Subspace::coordinate(n * (k + 1), axes);
}

KSymplecticSpace product_ominus(const KSymplecticSpace& s1, const KSymplecticSpace& s2) {
  if (s1.k() != s2.k()) {
    throw Error(ErrorCode::MismatchedK, "product of a " + std::to_string(s1.k()) +
                                            "-symplectic and a " + std::to_string(s2.k()) +
                                            "-symplectic space");
  }
  std::vector<Matrix> forms;
  forms.reserve(s1.k());
  for (std::size_t r = 1; r <= s1.k(); ++r) {
    forms.push_back(block_diagonal(s1.form(r), -s2.form(r)));
  }
  return KSymplecticSpace::create(s1.dim() + s2.dim(), std::move(forms));
}

RandomKSpace random_kspace(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 || k == 0) throw Error(ErrorCode::BadDimension, "random_kspace needs n, k >= 1");
  const std::size_t dim = n * (k + 1);
  // Modulo of the raw engine output keeps the stream identical across
  // standard libraries, which distributions do not guarantee.
  std::mt19937_64 engine(seed);
  for (int attempt = 0; attempt < kMaxWitnessDraws; ++attempt) {
    Matrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        p(i, j) = static_cast<long>(engine() % 7) - 3;
      }
    }
    std::optional<Matrix> p_inv = inverse(p);
    if (!p_inv) continue;

    std::vector<Matrix> forms;
    const Matrix pt = p.transpose();
    for (const Matrix& c : canonical_forms(n, k)) forms.push_back(pt * c * p);
    KSymplecticSpace space = KSymplecticSpace::create(dim, std::move(forms));
    Subspace polarization = image(*p_inv, canonical_y_subspace(n, k));
    return RandomKSpace{std::move(space), std::move(p), std::move(polarization)};
  }
  throw Error(ErrorCode::InvariantBroken, "random_kspace: no invertible draw");
}

KSymplecticSpace fixture(std::string_view name) {
  if (name == "r3-2symp") {
    return KSymplecticSpace::create(3, {wedge_sum(3, {{0, 2}}), wedge_sum(3, {{1, 2}})});
  }
  if (name == "r6-2symp") {
    return KSymplecticSpace::create(
        6, {wedge_sum(6, {{0, 2}, {3, 5}}), wedge_sum(6, {{1, 2}, {4, 5}})});
  }
  if (name == "r6-5symp") {
    std::vector<Matrix> forms;
    for (std::size_t r = 0; r < 5; ++r) forms.push_back(wedge_sum(6, {{r, 5}}));
    return KSymplecticSpace::create(6, std::move(forms));
  }
  constexpr std::string_view prefix = "canonical:";
  if (name.starts_with(prefix)) {
    const std::string_view args = name.substr(prefix.size());
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ParseError("bad fixture name '" + std::string(name) + "'");
    return canonical_model(parse_count(args.substr(0, comma), name),
                           parse_count(args.substr(comma + 1), name));
  }
  throw ParseError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"r3-2symp", "r6-2symp", "r6-5symp", "canonical:n,k"};
}

}  // namespace ksym
