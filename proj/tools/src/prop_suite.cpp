#include "ksym_tools/prop_suite.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <future>
#include <optional>

#include "ksym/darboux.hpp"
#include "ksym/error.hpp"
#include "ksym/forms.hpp"
#include "ksym/json_io.hpp"
#include "ksym/lagrangian.hpp"
#include "ksym_tools/generators.hpp"

namespace ksym::props {

namespace {

using nlohmann::json;

const std::vector<std::string> kLabels = {
    "kernel-rank",          "lattice-laws",        "lattice-modular",
    "orth-nesting",         "orth-zero",           "orth-antitone",
    "orth-double",          "orth-meet-kernels",   "orth-full-space",
    "orth-sum",             "orth-mixed-sum",      "orth-mixed-meet",
    "orth-triple",          "orth-dim-bound",      "iso-dim1",
    "coiso-codim1",         "iso-gram",            "iso-downward",
    "coiso-upward",         "lagr-fixed-point",    "lagr-maximal",
    "completion",           "complement",          "polarize-search",
    "darboux-exact",        "graph-iff",           "symplecto-group",
    "polarization-transport", "d-squared",         "fibers-pullback",
    "closed-exact",         "potential-exact",     "hj-constant-shift",
};

struct Outcome {
  std::string label;
  bool pass;
};

struct TrialResult {
  std::vector<Outcome> outcomes;
  std::vector<Failure> failures;
};

class Trial {
 public:
  Trial(std::size_t index, std::uint64_t seed) : index_(index), seed_(seed) {}

  // Runs `body`; a thrown Error counts as a failure of `label`.
  void check(const std::string& label, const std::function<bool()>& body,
             const std::function<json()>& instance) {
    bool pass = false;
    std::string message;
    try {
      pass = body();
      if (!pass) message = "property violated";
    } catch (const std::exception& e) {
      message = e.what();
    }
    result_.outcomes.push_back({label, pass});
    if (!pass) {
      json inst;
      try {
        inst = instance();
      } catch (const std::exception& e) {
        inst = json{{"unavailable", e.what()}};
      }
      result_.failures.push_back({label, index_, seed_, message, std::move(inst)});
    }
  }

  TrialResult take() { return std::move(result_); }

 private:
  std::size_t index_;
  std::uint64_t seed_;
  TrialResult result_;
};

json space_instance(const KSymplecticSpace& s, std::initializer_list<std::pair<const char*, const Subspace*>> subs) {
  json j{{"space", io::to_json(s)}};
  for (const auto& [name, sub] : subs) j[name] = io::to_json(*sub);
  return j;
}

// W restricted: vectors w in W with omega_r(w, W) = 0 for all r <= level,
// computed from Gram matrices in W's own coordinates.
Subspace restricted_kernel(const KSymplecticSpace& s, const Subspace& w, std::size_t level) {
  const Matrix& b = w.basis();
  Matrix stacked(0, w.dim());
  for (std::size_t r = 1; r <= level; ++r) {
    const Matrix gram = b * s.form(r) * b.transpose();
    stacked = vstack(stacked, gram.transpose());
  }
  const Subspace coords = kernel(stacked);
  return Subspace::span(coords.basis() * b);
}

Subspace random_part_of(gen::Rng& rng, const Subspace& w) {
  std::vector<Vector> rows;
  const std::size_t count = rng.index(w.dim() + 1);
  for (std::size_t i = 0; i < count; ++i) rows.push_back(gen::random_member(rng, w));
  return Subspace::span(w.ambient_dim(), rows);
}

Matrix perturb(gen::Rng& rng, const Matrix& p) {
  for (;;) {
    Matrix q = p;
    q(rng.index(q.rows()), rng.index(q.cols())) += rng.coin() ? 1 : -1;
    if (is_invertible(q)) return q;
  }
}

void lattice_checks(Trial& t, gen::Rng& rng, std::size_t dim) {
  const Subspace a = gen::random_subspace(rng, dim);
  const Subspace b = gen::random_subspace(rng, dim);
  const Subspace c = gen::random_subspace(rng, dim);
  auto inst = [&] {
    return json{{"a", io::to_json(a)}, {"b", io::to_json(b)}, {"c", io::to_json(c)}};
  };

  t.check("kernel-rank", [&] {
    const Matrix m = vstack(a.basis(), b.basis());
    const Subspace ker = kernel(m);
    for (const Vector& v : ker.basis_vectors()) {
      if (!is_zero(std::span<const Rational>(m * v))) return false;
    }
    return ker.dim() + rank(m) == m.cols();
  }, inst);

  t.check("lattice-laws", [&] {
    return subspace_sum(a, b) == subspace_sum(b, a) &&
           subspace_intersection(a, b) == subspace_intersection(b, a) &&
           subspace_sum(subspace_sum(a, b), c) == subspace_sum(a, subspace_sum(b, c)) &&
           subspace_intersection(subspace_intersection(a, b), c) ==
               subspace_intersection(a, subspace_intersection(b, c)) &&
           subspace_sum(a, a) == a && subspace_intersection(a, a) == a &&
           (subspace_sum(a, b).contains(a) && subspace_sum(a, b).contains(b)) &&
           (a.contains(subspace_intersection(a, b)) && b.contains(subspace_intersection(a, b))) &&
           ((a == b) == (a.contains(b) && b.contains(a)));
  }, inst);

  t.check("lattice-modular", [&] {
    return a.dim() + b.dim() == subspace_sum(a, b).dim() + subspace_intersection(a, b).dim();
  }, inst);
}

void orthogonal_checks(Trial& t, gen::Rng& rng, const KSymplecticSpace& s) {
  const std::size_t k = s.k();
  const std::size_t dim = s.dim();
  const Subspace v = gen::random_subspace(rng, dim);
  const Subspace w = gen::random_subspace(rng, dim);
  const std::size_t l = 1 + rng.index(k);
  const std::size_t l1 = 1 + rng.index(k);
  const std::size_t l2 = 1 + rng.index(k);
  const std::size_t lmin = std::min(l1, l2);
  auto inst = [&] {
    json j = space_instance(s, {{"V", &v}, {"W", &w}});
    j["l"] = l;
    j["l1"] = l1;
    j["l2"] = l2;
    return j;
  };

  t.check("orth-nesting", [&] {
    for (std::size_t lev = 2; lev <= k; ++lev) {
      if (!l_orthogonal(s, w, lev - 1).contains(l_orthogonal(s, w, lev))) return false;
    }
    return true;
  }, inst);

  t.check("orth-zero", [&] { return l_orthogonal(s, Subspace::zero(dim), l).is_full(); }, inst);

  t.check("orth-antitone", [&] {
    const Subspace part = random_part_of(rng, w);
    return l_orthogonal(s, part, l).contains(l_orthogonal(s, w, l));
  }, inst);

  t.check("orth-double", [&] {
    return l_orthogonal(s, l_orthogonal(s, w, l), l).contains(w);
  }, inst);

  t.check("orth-meet-kernels", [&] {
    return subspace_intersection(w, l_orthogonal(s, w, l)) == restricted_kernel(s, w, l);
  }, inst);

  t.check("orth-full-space", [&] {
    const Subspace full = Subspace::full(dim);
    return l_orthogonal(s, full, l) == common_kernel(s.forms().first(l), dim) &&
           l_orthogonal(s, full, k).is_zero();
  }, inst);

  t.check("orth-sum", [&] {
    return l_orthogonal(s, subspace_sum(v, w), l) ==
           subspace_intersection(l_orthogonal(s, v, l), l_orthogonal(s, w, l));
  }, inst);

  t.check("orth-mixed-sum", [&] {
    return l_orthogonal(s, subspace_intersection(v, w), lmin)
        .contains(subspace_sum(l_orthogonal(s, v, l1), l_orthogonal(s, w, l2)));
  }, inst);

  t.check("orth-mixed-meet", [&] {
    return l_orthogonal(s, subspace_sum(v, w), lmin)
        .contains(subspace_intersection(l_orthogonal(s, v, l1), l_orthogonal(s, w, l2)));
  }, inst);

  t.check("orth-triple", [&] {
    const Subspace inner = subspace_sum(l_orthogonal(s, v, l), l_orthogonal(s, w, l));
    const Subspace twice = l_orthogonal(s, l_orthogonal(s, inner, l), l);
    return l_orthogonal(s, subspace_intersection(v, w), l).contains(twice);
  }, inst);

  t.check("orth-dim-bound", [&] { return w.dim() + l_orthogonal(s, w, l).dim() <= 2 * dim; }, inst);

  t.check("iso-dim1", [&] {
    const Subspace line = gen::random_subspace(rng, dim, 1);
    if (line.dim() != 1) return true;
    for (std::size_t lev = 1; lev <= k; ++lev) {
      if (!is_l_isotropic(s, line, lev)) return false;
    }
    return true;
  }, inst);

  t.check("coiso-codim1", [&] {
    Vector normal = gen::random_vector(rng, dim);
    if (is_zero(std::span<const Rational>(normal))) normal[0] = 1;
    const Subspace hyper = kernel(Matrix::from_rows(std::span(&normal, 1), dim));
    return is_l_coisotropic(s, hyper, k);
  }, inst);

  const Subspace iso = gen::random_isotropic(rng, s, l, 1 + rng.index(dim));
  t.check("iso-gram", [&] {
    for (const Subspace* x : {&v, &w, &iso}) {
      if (is_l_isotropic(s, *x, l) != l_orthogonal(s, *x, l).contains(*x)) return false;
    }
    return is_l_isotropic(s, iso, l);
  }, [&] {
    json j = inst();
    j["iso"] = io::to_json(iso);
    return j;
  });

  t.check("iso-downward", [&] {
    for (std::size_t lev = 1; lev < l; ++lev) {
      if (!is_l_isotropic(s, iso, lev)) return false;
    }
    return true;
  }, [&] {
    json j = inst();
    j["iso"] = io::to_json(iso);
    return j;
  });

  t.check("coiso-upward", [&] {
    for (const Subspace* x : {&v, &w}) {
      if (!is_l_coisotropic(s, *x, l)) continue;
      for (std::size_t lev = l + 1; lev <= k; ++lev) {
        if (!is_l_coisotropic(s, *x, lev)) return false;
      }
    }
    return true;
  }, inst);
}

void lagrangian_checks(Trial& t, gen::Rng& rng, const KSymplecticSpace& s) {
  const std::size_t k = s.k();
  const std::size_t dim = s.dim();
  const std::size_t l = 1 + rng.index(k);
  const Subspace seed_iso = gen::random_isotropic(rng, s, l, rng.index(dim + 1));
  auto inst = [&] {
    json j = space_instance(s, {{"seed", &seed_iso}});
    j["l"] = l;
    return j;
  };

  std::optional<Subspace> completed;
  t.check("completion", [&] {
    completed = lagrangian_completion(s, seed_iso, l);
    return completed->contains(seed_iso) && l_orthogonal(s, *completed, l) == *completed &&
           is_l_isotropic(s, *completed, l);
  }, inst);

  if (completed) {
    t.check("complement", [&] {
      const Subspace u = isotropic_complement(s, *completed, l);
      return u.dim() + completed->dim() == dim &&
             subspace_intersection(u, *completed).is_zero() &&
             subspace_sum(u, *completed).is_full() && is_l_isotropic(s, u, l);
    }, [&] {
      json j = inst();
      j["completed"] = io::to_json(*completed);
      return j;
    });
  }

  // Any k-isotropic W that has a k-isotropic complement is its own k-complement.
  const Subspace iso_k = gen::random_isotropic(rng, s, k, rng.index(dim + 1));
  t.check("lagr-fixed-point", [&] {
    auto u = detail::greedy_isotropic_complement(s, iso_k, k, rng.next());
    if (!u) return true;
    return l_orthogonal(s, iso_k, k) == iso_k;
  }, [&] { return space_instance(s, {{"W", &iso_k}}); });

  t.check("lagr-maximal", [&] {
    const Subspace top = lagrangian_completion(s, iso_k, k);
    for (int i = 0; i < 4; ++i) {
      Vector x = gen::random_vector(rng, dim);
      if (top.contains(x)) continue;
      std::vector<Vector> rows = top.basis_vectors();
      rows.push_back(x);
      if (is_l_isotropic(s, Subspace::span(dim, rows), k)) return false;
    }
    return true;
  }, [&] { return space_instance(s, {{"W", &iso_k}}); });
}

void darboux_checks(Trial& t, gen::Rng& rng, std::size_t n, std::size_t k) {
  const RandomKSpace a = random_kspace(n, k, rng.next());
  const RandomKSpace b = random_kspace(n, k, rng.next());
  const KSymplecticSpace canon = canonical_model(n, k);
  auto inst = [&] {
    return json{{"space_a", io::to_json(a.space)}, {"witness_a", io::to_json(a.witness)},
                {"space_b", io::to_json(b.space)}, {"witness_b", io::to_json(b.witness)}};
  };

  t.check("polarize-search", [&] {
    auto w = find_polarization(a.space, rng.next());
    return w && check_polarization(a.space, *w);
  }, inst);

  t.check("darboux-exact", [&] {
    const DarbouxFrame frame = darboux_map(a.space, a.polarization);
    const Matrix& p = frame.change_of_basis;
    if (!is_invertible(p)) return false;
    const std::vector<Matrix> c = canonical_forms(n, k);
    for (std::size_t r = 1; r <= k; ++r) {
      if (p.transpose() * a.space.form(r) * p != c[r - 1]) return false;
    }
    return is_ksymplectomorphism(canon, a.space, p);
  }, inst);

  const Matrix a_inv = *inverse(a.witness);
  const Matrix b_inv = *inverse(b.witness);
  const Matrix a_to_b = b_inv * a.witness;

  t.check("symplecto-group", [&] {
    return is_ksymplectomorphism(a.space, canon, a.witness) &&
           is_ksymplectomorphism(canon, a.space, a_inv) &&
           is_ksymplectomorphism(a.space, b.space, a_to_b) &&
           is_ksymplectomorphism(b.space, a.space, *inverse(a_to_b)) &&
           is_ksymplectomorphism(a.space, a.space, *inverse(a_to_b) * a_to_b);
  }, inst);

  t.check("graph-iff", [&] {
    struct Case {
      const KSymplecticSpace* from;
      const KSymplecticSpace* to;
      Matrix map;
    };
    std::vector<Case> cases = {{&a.space, &canon, a.witness},
                               {&canon, &a.space, a_inv},
                               {&a.space, &b.space, a_to_b}};
    for (const Case& c : std::vector<Case>(cases)) {
      cases.push_back({c.from, c.to, perturb(rng, c.map)});
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const GraphCriterion g = graph_criterion(*cases[i].from, *cases[i].to, cases[i].map);
      if (g.graph_is_lagrangian != g.is_ksymplectomorphism) return false;
      if (i < 3 && !g.is_ksymplectomorphism) return false;
    }
    return true;
  }, inst);

  t.check("polarization-transport", [&] {
    const Subspace pulled = image(*inverse(a_to_b), b.polarization);
    return check_polarization(a.space, pulled) &&
           check_polarization(a.space, image(a_inv, canonical_y_subspace(n, k)));
  }, inst);
}

void forms_checks(Trial& t, gen::Rng& rng, std::size_t n, std::size_t k) {
  const auto qs = q_vars(n);
  const Poly f = gen::random_poly(rng, qs, 4, 6);
  const Section gamma = gen::random_section(rng, n, k, 3);
  std::vector<Poly> potentials;
  for (std::size_t r = 0; r < k; ++r) potentials.push_back(gen::random_poly(rng, qs, 4, 5));
  const Poly h = gen::random_poly(rng, qp_vars(n, k), 3, 5);
  auto inst = [&] {
    return json{{"f", io::to_json(f)}, {"section", io::to_json(gamma)},
                {"potentials", io::to_json(potentials)}, {"hamiltonian", io::to_json(h)}};
  };

  t.check("d-squared", [&] { return exterior_derivative(exterior_derivative(f)).is_zero(); }, inst);

  t.check("fibers-pullback", [&] {
    for (std::size_t r = 1; r <= k; ++r) {
      if (pullback_omega(gamma, r) != -exterior_derivative(gamma.components[r - 1])) return false;
    }
    return true;
  }, inst);

  t.check("closed-exact", [&] {
    Section exact;
    for (const Poly& w : potentials) exact.components.push_back(exterior_derivative(w));
    return is_closed_section(exact);
  }, inst);

  t.check("potential-exact", [&] {
    const OneForm df = exterior_derivative(f);
    auto w = potential(df);
    return w && exterior_derivative(*w) == df;
  }, inst);

  t.check("hj-constant-shift", [&] {
    std::vector<Poly> shifted = potentials;
    const Rational c(static_cast<long>(rng.uniform(-7, 7)));
    shifted[rng.index(k)] += Poly::constant(qs, c);
    return hamilton_jacobi_check(h, potentials).solution ==
           hamilton_jacobi_check(h, shifted).solution;
  }, inst);
}

TrialResult run_trial(const Options& options, std::size_t index) {
  const std::uint64_t seed = trial_seed(options.seed, index);
  gen::Rng rng(seed);
  Trial t(index, seed);
  const std::size_t n = 1 + rng.index(std::max<std::size_t>(options.n_max, 1));
  const std::size_t k = 1 + rng.index(std::max<std::size_t>(options.k_max, 1));

  const RandomKSpace polarized = random_kspace(n, k, rng.next());
  const KSymplecticSpace generic = gen::random_generic_kspace(rng, n, k);
  const KSymplecticSpace& any = rng.coin() ? generic : polarized.space;

  lattice_checks(t, rng, n * (k + 1));
  orthogonal_checks(t, rng, any);
  lagrangian_checks(t, rng, polarized.space);
  darboux_checks(t, rng, n, k);
  forms_checks(t, rng, n, k);
  return t.take();
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  // splitmix64 finalizer over (seed, trial).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Report run(const Options& options) {
  std::vector<TrialResult> results(options.trials);
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, options.trials));
  std::vector<std::future<void>> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < options.trials; i += jobs) results[i] = run_trial(options, i);
    }));
  }
  for (auto& f : workers) f.get();

  Report report;
  report.options = options;
  for (const auto& label : kLabels) report.labels[label];
  for (auto& r : results) {
    for (const Outcome& o : r.outcomes) {
      Counts& c = report.labels[o.label];
      (o.pass ? c.pass : c.fail) += 1;
    }
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

nlohmann::json to_json(const Report& report) {
  json labels = json::object();
  for (const auto& [name, c] : report.labels) labels[name] = json{{"pass", c.pass}, {"fail", c.fail}};
  json failures = json::array();
  for (const Failure& f : report.failures) {
    failures.push_back(json{{"label", f.label},
                            {"trial", f.trial},
                            {"trial_seed", f.trial_seed},
                            {"message", f.message},
                            {"instance", f.instance}});
  }
  return json{{"seed", report.options.seed},
              {"trials", report.options.trials},
              {"n_max", report.options.n_max},
              {"k_max", report.options.k_max},
              {"labels", std::move(labels)},
              {"failures", std::move(failures)},
              {"ok", report.ok()}};
}

const std::vector<std::string>& labels() { return kLabels; }

}  // namespace ksym::props
