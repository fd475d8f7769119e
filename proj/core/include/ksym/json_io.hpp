#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "ksym/darboux.hpp"
#include "ksym/forms.hpp"
#include "ksym/kspace.hpp"
#include "ksym/matrix.hpp"
#include "ksym/poly.hpp"
#include "ksym/rational.hpp"
#include "ksym/subspace.hpp"

// Wire formats. Rationals are strings "p" or "p/q"; readers also accept JSON
// integers. Every reader throws ParseError on schema violations; a document
// that parses but describes an invalid space raises the domain error instead.
namespace ksym::io {

using nlohmann::json;

json to_json(const Rational& x);
Rational rational_from_json(const json& j);

json to_json(std::span<const Rational> v);
Vector vector_from_json(const json& j);

// Array of rows.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"ambient": N, "basis": [[...], ...]}; canonicalized on load.
json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

// {"dim": N, "k": K, "forms": [[[i, j, "p/q"], ...], ...]}: strict upper
// triangle triplets, 0-based, lower triangle implied by skewness.
json to_json(const KSymplecticSpace& s);
KSymplecticSpace space_from_json(const json& j);

// {"e": [v, ...], "f": [[v, ...], ...], "P": [[...], ...]} with f[r-1][i].
json to_json(const DarbouxFrame& frame);
DarbouxFrame frame_from_json(const json& j);

// {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}, ...]}, terms in
// ascending graded-lex order.
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

// Array of k arrays of n polynomials.
json to_json(const Section& gamma);
Section section_from_json(const json& j);

json to_json(std::span<const Poly> polys);
std::vector<Poly> polys_from_json(const json& j);

// Strict upper triangle {"n": n, "coeffs": [{"i": i, "j": j, "poly": ...}]}
// listing nonzero entries only.
json to_json(const TwoForm& form);

}  // namespace ksym::io
