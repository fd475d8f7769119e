#include <gtest/gtest.h>

#include "ksym/json_io.hpp"
#include "ksym_tools/generators.hpp"
#include "test_support.hpp"

namespace ksym {
namespace {

using io::json;

TEST(JsonIo, RationalsAsStringsOrIntegers) {
  EXPECT_EQ(io::to_json(Rational(-3) / 6), "-1/2");
  EXPECT_EQ(io::to_json(Rational(4)), "4");
  EXPECT_EQ(io::rational_from_json(json("10/4")), Rational(5, 2));
  EXPECT_EQ(io::rational_from_json(json(-7)), Rational(-7));
  for (const json& bad : {json("1/0"), json(1.5), json(nullptr), json("x"), json::array()}) {
    EXPECT_THROW(io::rational_from_json(bad), ParseError) << bad.dump();
  }
}

TEST(JsonIo, SpaceDocumentOfTheR3Example) {
  const json doc = json::parse(R"({"dim": 3, "k": 2,
      "forms": [[[0, 2, "1"]], [[1, 2, 1]]]})");
  EXPECT_EQ(io::space_from_json(doc), test::r3());
  EXPECT_EQ(io::space_from_json(io::to_json(test::r3())), test::r3());
}

TEST(JsonIo, SpaceSchemaViolations) {
  const char* bad[] = {
      R"({"dim": 3, "k": 2, "forms": [[[2, 0, "1"]], [[1, 2, "1"]]]})",
      R"({"dim": 3, "k": 2, "forms": [[[1, 1, "1"]], [[1, 2, "1"]]]})",
      R"({"dim": 3, "k": 2, "forms": [[[0, 3, "1"]], [[1, 2, "1"]]]})",
      R"({"dim": 3, "k": 2, "forms": [[[0, 2, "1"], [0, 2, "2"]], [[1, 2, "1"]]]})",
      R"({"dim": 3, "k": 2, "forms": [[[0, 2, "1/0"]], [[1, 2, "1"]]]})",
      R"({"dim": 3, "k": 2, "forms": [[[0, 2, "1"]]]})",
      R"({"dim": 3, "k": 0, "forms": []})",
      R"({"dim": -3, "k": 2, "forms": [[], []]})",
      R"({"k": 2, "forms": [[], []]})",
      R"({"dim": 3, "k": 2, "forms": [[[0, 2]], [[1, 2, "1"]]]})",
      R"([1, 2])",
  };
  for (const char* text : bad) {
    EXPECT_THROW(io::space_from_json(json::parse(text)), ParseError) << text;
  }
  // Well formed but degenerate: a domain error, not a parse error.
  try {
    io::space_from_json(json::parse(R"({"dim": 3, "k": 2, "forms": [[[0, 2, "1"]], [[0, 2, "1"]]]})"));
    FAIL() << "expected DegenerateCommonKernel";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateCommonKernel);
  }
}

TEST(JsonIo, RoundTripsRandomObjects) {
  gen::Rng rng(101);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.index(3);
    const std::size_t k = 1 + rng.index(3);
    const RandomKSpace g = random_kspace(n, k, rng.next());
    ASSERT_EQ(io::space_from_json(io::to_json(g.space)), g.space);
    ASSERT_EQ(io::matrix_from_json(io::to_json(g.witness)), g.witness);
    ASSERT_EQ(io::subspace_from_json(io::to_json(g.polarization)), g.polarization);
    const Vector v = gen::random_vector(rng, g.space.dim());
    ASSERT_EQ(io::vector_from_json(io::to_json(std::span<const Rational>(v))), v);

    const DarbouxFrame frame = darboux_map(g.space, g.polarization);
    const DarbouxFrame back = io::frame_from_json(io::to_json(frame));
    ASSERT_EQ(back.e, frame.e);
    ASSERT_EQ(back.f, frame.f);
    ASSERT_EQ(back.change_of_basis, frame.change_of_basis);

    const Poly p = gen::random_poly(rng, qp_vars(n, k), 3, 5);
    ASSERT_EQ(io::poly_from_json(io::to_json(p)), p);
    const Section gamma = gen::random_section(rng, n, k, 2);
    const Section gamma_back = io::section_from_json(io::to_json(gamma));
    ASSERT_EQ(gamma_back.components, gamma.components);
    const std::vector<Poly> ps = {p, p * Rational(-1, 3)};
    ASSERT_EQ(io::polys_from_json(io::to_json(ps)), ps);
  }
}

TEST(JsonIo, SubspaceIsCanonicalizedOnLoad) {
  const Subspace s = io::subspace_from_json(json::parse(R"({"ambient": 3, "basis": [[2, 4, 0], ["1", "2", "1"]]})"));
  EXPECT_EQ(s, test::span_of(3, {{1, 2, 0}, {0, 0, 1}}));
  EXPECT_THROW(io::subspace_from_json(json::parse(R"({"ambient": 2, "basis": [[1, 2, 3]]})")), ParseError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"([[1, 2], [3]])")), ParseError);
}

TEST(JsonIo, PolySchema) {
  const Poly p = io::poly_from_json(json::parse(
      R"({"vars": ["q1", "q2"], "terms": [{"exp": [1, 1], "coef": "2"}, {"exp": [0, 0], "coef": "-1/2"}]})"));
  EXPECT_EQ(p.coefficient({1, 1}), 2);
  EXPECT_EQ(p.coefficient({0, 0}), Rational(-1, 2));
  // Serialized terms are in ascending graded-lex order.
  const json out = io::to_json(p);
  EXPECT_EQ(out["terms"][0]["exp"], json::parse("[0, 0]"));
  EXPECT_THROW(io::poly_from_json(json::parse(R"({"vars": ["q1", "q1"], "terms": []})")), ParseError);
  EXPECT_THROW(io::poly_from_json(json::parse(R"({"vars": ["q1"], "terms": [{"exp": [1, 1], "coef": "1"}]})")),
               ParseError);
  EXPECT_THROW(io::section_from_json(json::array()), ParseError);
}

TEST(JsonIo, TwoFormListsNonzeroUpperEntries) {
  TwoForm f(3);
  f.at(0, 2) = Poly::constant(q_vars(3), 5);
  const json out = io::to_json(f);
  EXPECT_EQ(out["n"], 3);
  ASSERT_EQ(out["coeffs"].size(), 1u);
  EXPECT_EQ(out["coeffs"][0]["i"], 0);
  EXPECT_EQ(out["coeffs"][0]["j"], 2);
}

}  // namespace
}  // namespace ksym
