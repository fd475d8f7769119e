#include "ksym/json_io.hpp"

#include <set>
#include <string>
#include <utility>

#include "ksym/error.hpp"

namespace ksym::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

json to_json(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const json& j) {
  Vector v;
  for (const auto& x : array(j, "vector")) v.push_back(rational_from_json(x));
  return v;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const json& j) {
  std::vector<Vector> rows;
  for (const auto& row : array(j, "matrix")) rows.push_back(vector_from_json(row));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw ParseError("matrix rows differ in length");
  }
  return Matrix::from_rows(rows, cols);
}

json to_json(const Subspace& s) {
  return json{{"ambient", s.ambient_dim()}, {"basis", to_json(s.basis())}};
}

Subspace subspace_from_json(const json& j) {
  const std::size_t ambient = count(field(j, "ambient"), "ambient");
  std::vector<Vector> rows;
  for (const auto& row : array(field(j, "basis"), "basis")) {
    rows.push_back(vector_from_json(row));
    if (rows.back().size() != ambient) {
      throw ParseError("basis vector of length " + std::to_string(rows.back().size()) +
                       " in ambient dimension " + std::to_string(ambient));
    }
  }
  return Subspace::span(ambient, rows);
}

json to_json(const KSymplecticSpace& s) {
  json forms = json::array();
  for (const Matrix& a : s.forms()) {
    json triplets = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = i + 1; j < s.dim(); ++j) {
        if (!is_zero(a(i, j))) triplets.push_back(json::array({i, j, to_json(a(i, j))}));
      }
    }
    forms.push_back(std::move(triplets));
  }
  return json{{"dim", s.dim()}, {"k", s.k()}, {"forms", std::move(forms)}};
}

KSymplecticSpace space_from_json(const json& j) {
  const std::size_t dim = count(field(j, "dim"), "dim");
  const std::size_t k = count(field(j, "k"), "k");
  const json& forms_json = array(field(j, "forms"), "forms");
  if (k == 0) throw ParseError("k must be positive");
  if (forms_json.size() != k) {
    throw ParseError("expected " + std::to_string(k) + " forms, found " +
                     std::to_string(forms_json.size()));
  }
  std::vector<Matrix> forms;
  for (const auto& triplets : forms_json) {
    Matrix a(dim, dim);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& t : array(triplets, "form")) {
      if (!t.is_array() || t.size() != 3) throw ParseError("form entries are [i, j, value] triplets");
      const std::size_t i = count(t[0], "triplet row");
      const std::size_t jj = count(t[1], "triplet column");
      if (i >= jj) throw ParseError("triplet (" + std::to_string(i) + ", " + std::to_string(jj) +
                                    ") is not strictly above the diagonal");
      if (jj >= dim) throw ParseError("triplet index out of range");
      if (!seen.emplace(i, jj).second) throw ParseError("duplicate triplet");
      const Rational v = rational_from_json(t[2]);
      a(i, jj) = v;
      a(jj, i) = -v;
    }
    forms.push_back(std::move(a));
  }
  return KSymplecticSpace::create(dim, std::move(forms));
}

json to_json(const DarbouxFrame& frame) {
  json e = json::array();
  for (const auto& v : frame.e) e.push_back(to_json(v));
  json f = json::array();
  for (const auto& slot : frame.f) {
    json row = json::array();
    for (const auto& v : slot) row.push_back(to_json(v));
    f.push_back(std::move(row));
  }
  return json{{"e", std::move(e)}, {"f", std::move(f)}, {"P", to_json(frame.change_of_basis)}};
}

DarbouxFrame frame_from_json(const json& j) {
  DarbouxFrame frame;
  for (const auto& v : array(field(j, "e"), "e")) frame.e.push_back(vector_from_json(v));
  for (const auto& slot : array(field(j, "f"), "f")) {
    std::vector<Vector> row;
    for (const auto& v : array(slot, "f slot")) row.push_back(vector_from_json(v));
    frame.f.push_back(std::move(row));
  }
  frame.change_of_basis = matrix_from_json(field(j, "P"));
  return frame;
}

json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [exp, c] : p.terms()) {
    terms.push_back(json{{"exp", exp}, {"coef", to_json(c)}});
  }
  return json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j) {
  std::vector<std::string> vars;
  std::set<std::string> distinct;
  for (const auto& v : array(field(j, "vars"), "vars")) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    vars.push_back(v.get<std::string>());
    if (!distinct.insert(vars.back()).second) throw ParseError("duplicate variable " + vars.back());
  }
  Poly p(vars);
  for (const auto& t : array(field(j, "terms"), "terms")) {
    Exponent exp;
    for (const auto& e : array(field(t, "exp"), "exp")) exp.push_back(static_cast<unsigned>(count(e, "exponent")));
    if (exp.size() != vars.size()) throw ParseError("exponent length differs from variable count");
    p.add_term(exp, rational_from_json(field(t, "coef")));
  }
  return p;
}

json to_json(const Section& gamma) {
  json out = json::array();
  for (const OneForm& component : gamma.components) out.push_back(to_json(component.coeffs));
  return out;
}

Section section_from_json(const json& j) {
  Section gamma;
  for (const auto& component : array(j, "section")) {
    gamma.components.push_back(OneForm{polys_from_json(component)});
  }
  if (gamma.components.empty()) throw ParseError("section needs at least one component");
  try {
    validate_section(gamma);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return gamma;
}

json to_json(std::span<const Poly> polys) {
  json out = json::array();
  for (const Poly& p : polys) out.push_back(to_json(p));
  return out;
}

std::vector<Poly> polys_from_json(const json& j) {
  std::vector<Poly> out;
  for (const auto& p : array(j, "polynomial list")) out.push_back(poly_from_json(p));
  return out;
}

json to_json(const TwoForm& form) {
  json coeffs = json::array();
  for (std::size_t i = 0; i < form.n(); ++i) {
    for (std::size_t j = i + 1; j < form.n(); ++j) {
      if (!form.at(i, j).is_zero()) {
        coeffs.push_back(json{{"i", i}, {"j", j}, {"poly", to_json(form.at(i, j))}});
      }
    }
  }
  return json{{"n", form.n()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace ksym::io
