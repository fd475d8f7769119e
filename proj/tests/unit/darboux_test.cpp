#include <gtest/gtest.h>

#include "ksym_tools/generators.hpp"
#include "test_support.hpp"

namespace ksym {
namespace {

using test::axes;

void expect_canonical_frame(const KSymplecticSpace& s, const Matrix& p) {
  ASSERT_TRUE(is_invertible(p));
  const std::vector<Matrix> c = canonical_forms(s.n(), s.k());
  for (std::size_t r = 1; r <= s.k(); ++r) {
    ASSERT_EQ(p.transpose() * s.form(r) * p, c[r - 1]) << "form " << r;
  }
}

TEST(Polarization, Examples) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      ASSERT_TRUE(check_polarization(canonical_model(n, k), canonical_y_subspace(n, k)));
    }
  }
  const KSymplecticSpace s = test::r3();
  EXPECT_TRUE(check_polarization(s, axes(3, {1, 2})));
  EXPECT_FALSE(check_polarization(s, axes(3, {3})));
  EXPECT_THROW(check_polarization(s, Subspace::zero(4)), Error);
}

TEST(Polarization, SearchExamples) {
  const auto c = find_polarization(canonical_model(1, 2), 0);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->dim(), 2u);
  EXPECT_TRUE(check_polarization(canonical_model(1, 2), *c));

  const auto five = find_polarization(fixture("r6-5symp"), 0);
  ASSERT_TRUE(five.has_value());
  EXPECT_EQ(*five, axes(6, {1, 2, 3, 4, 5}));

  const auto r6 = find_polarization(fixture("r6-2symp"), 0);
  ASSERT_TRUE(r6.has_value());
  EXPECT_TRUE(check_polarization(fixture("r6-2symp"), *r6));
}

TEST(Polarization, SearchSucceedsOnGeneratedSpaces) {
  gen::Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const std::size_t k = 1 + rng.index(3);
    const RandomKSpace g = random_kspace(n, k, rng.next());
    const auto w = find_polarization(g.space, rng.next());
    ASSERT_TRUE(w.has_value());
    ASSERT_TRUE(check_polarization(g.space, *w));
    // For k >= 2 the polarization is unique.
    if (k >= 2) ASSERT_EQ(*w, g.polarization);
  }
}

TEST(Darboux, CanonicalModelGivesIdentity) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const KSymplecticSpace s = canonical_model(n, k);
      const DarbouxFrame frame = darboux_map(s, canonical_y_subspace(n, k), canonical_x_subspace(n, k));
      ASSERT_EQ(frame.change_of_basis, Matrix::identity(s.dim()));
      const DarbouxFrame computed = darboux_map(s, canonical_y_subspace(n, k));
      ASSERT_EQ(computed.change_of_basis, Matrix::identity(s.dim()));
    }
  }
}

TEST(Darboux, R3Frame) {
  const KSymplecticSpace s = test::r3();
  const DarbouxFrame frame = darboux_map(s, axes(3, {1, 2}), axes(3, {3}));
  ASSERT_EQ(frame.e.size(), 1u);
  EXPECT_EQ(frame.e[0], test::e(3, 3));
  ASSERT_EQ(frame.f.size(), 2u);
  // phi(e1) = (-1, 0), phi(e2) = (0, -1), so f^1 = -e1 and f^2 = -e2.
  EXPECT_EQ(frame.f[0][0], test::vec({-1, 0, 0}));
  EXPECT_EQ(frame.f[1][0], test::vec({0, -1, 0}));
  EXPECT_EQ(frame.change_of_basis, test::mat({{0, -1, 0}, {0, 0, -1}, {1, 0, 0}}));
  expect_canonical_frame(s, frame.change_of_basis);
  EXPECT_TRUE(is_ksymplectomorphism(canonical_model(1, 2), s, frame.change_of_basis));
}

TEST(Darboux, RandomPolarizedInstances) {
  gen::Rng rng(59);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const std::size_t k = 1 + rng.index(3);
    const RandomKSpace g = random_kspace(n, k, rng.next());
    const DarbouxFrame frame = darboux_map(g.space, g.polarization);
    expect_canonical_frame(g.space, frame.change_of_basis);
    // f vectors span the polarization, e vectors a complement of it.
    std::vector<Vector> fs;
    for (const auto& slot : frame.f) fs.insert(fs.end(), slot.begin(), slot.end());
    ASSERT_EQ(Subspace::span(g.space.dim(), fs), g.polarization);
    ASSERT_TRUE(subspace_intersection(Subspace::span(g.space.dim(), frame.e), g.polarization).is_zero());
  }
}

TEST(Darboux, Errors) {
  const KSymplecticSpace s = test::r3();
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code_of([&] { darboux_map(s, axes(3, {3})); }), ErrorCode::NotPolarized);
  // span{e1,e3} is not isotropic, so it is no valid complement.
  EXPECT_EQ(code_of([&] { darboux_map(s, axes(3, {1, 2}), axes(3, {1, 3})); }),
            ErrorCode::ComplementFailed);
  EXPECT_EQ(code_of([&] { darboux_map(s, axes(3, {1, 2}), axes(3, {2})); }),
            ErrorCode::ComplementFailed);
}

TEST(Symplecto, Examples) {
  const KSymplecticSpace plane = canonical_model(1, 1);
  EXPECT_TRUE(is_ksymplectomorphism(plane, plane, Matrix::identity(2)));
  EXPECT_FALSE(is_ksymplectomorphism(plane, plane, Rational(2) * Matrix::identity(2)));
  EXPECT_FALSE(is_ksymplectomorphism(plane, plane, Matrix(2, 2)));
  EXPECT_TRUE(is_ksymplectomorphism(test::r3(), test::r3(), Matrix::identity(3)));
}

TEST(Symplecto, WitnessDirections) {
  gen::Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const std::size_t k = 1 + rng.index(3);
    const RandomKSpace g = random_kspace(n, k, rng.next());
    const KSymplecticSpace c = canonical_model(n, k);
    ASSERT_TRUE(is_ksymplectomorphism(g.space, c, g.witness));
    ASSERT_TRUE(is_ksymplectomorphism(c, g.space, *inverse(g.witness)));
    // Polarization transport through the witness.
    ASSERT_TRUE(check_polarization(g.space, image(*inverse(g.witness), canonical_y_subspace(n, k))));
  }
}

TEST(Graph, Examples) {
  const KSymplecticSpace r3 = test::r3();
  const GraphCriterion id = graph_criterion(r3, r3, Matrix::identity(3));
  EXPECT_TRUE(id.graph_is_lagrangian);
  EXPECT_TRUE(id.is_ksymplectomorphism);
  EXPECT_EQ(id.graph, test::span_of(6, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}));

  const KSymplecticSpace plane = canonical_model(1, 1);
  const GraphCriterion twice = graph_criterion(plane, plane, Rational(2) * Matrix::identity(2));
  EXPECT_FALSE(twice.graph_is_lagrangian);
  EXPECT_FALSE(twice.is_ksymplectomorphism);

  try {
    graph_criterion(plane, plane, Matrix(2, 2));
    FAIL() << "expected NotIsomorphism";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotIsomorphism);
  }
  // Construction alone accepts a singular map.
  EXPECT_EQ(graph_subspace(plane, plane, Matrix(2, 2)).dim(), 2u);
}

TEST(Graph, WitnessGraphsAreLagrangian) {
  gen::Rng rng(67);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 1 + rng.index(2);
    const std::size_t k = 1 + rng.index(3);
    const RandomKSpace g = random_kspace(n, k, rng.next());
    const GraphCriterion gc = graph_criterion(g.space, canonical_model(n, k), g.witness);
    ASSERT_TRUE(gc.is_ksymplectomorphism);
    ASSERT_TRUE(gc.graph_is_lagrangian);
    const KSymplecticSpace prod = product_ominus(g.space, canonical_model(n, k));
    ASSERT_EQ(l_orthogonal(prod, gc.graph, k), gc.graph);
  }
}

}  // namespace
}  // namespace ksym
