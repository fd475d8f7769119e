#include "ksym_tools/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "ksym/darboux.hpp"
#include "ksym/error.hpp"
#include "ksym/forms.hpp"
#include "ksym/json_io.hpp"
#include "ksym/kspace.hpp"
#include "ksym/lagrangian.hpp"
#include "ksym_tools/prop_suite.hpp"

namespace ksym::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::string space_file;
  std::string fixture_name;
  std::string target_file;
  std::string target_fixture;
  std::string subspace_file;
  std::string complement_file;
  std::string map_file;
  std::string section_file;
  std::string hamiltonian_file;
  std::string potentials_file;
  std::size_t level = 0;
  std::size_t form = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t n_max = 2;
  std::size_t k_max = 3;
  std::size_t jobs = 1;
  std::size_t n = 1;
  std::size_t k = 1;
};

// Thrown for usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

KSymplecticSpace load_space(const std::string& file, const std::string& name, const char* what) {
  if (!file.empty() && !name.empty()) throw UsageError(std::string("give either a file or a fixture for the ") + what);
  if (!name.empty()) return fixture(name);
  if (file.empty()) throw UsageError(std::string("missing ") + what);
  return io::space_from_json(read_json(file));
}

KSymplecticSpace source_space(const Flags& f) { return load_space(f.space_file, f.fixture_name, "space"); }

Subspace load_subspace(const std::string& file, const char* what) {
  if (file.empty()) throw UsageError(std::string("missing --") + what);
  return io::subspace_from_json(read_json(file));
}

Matrix load_map(const Flags& f) {
  if (f.map_file.empty()) throw UsageError("missing --map");
  return io::matrix_from_json(read_json(f.map_file));
}

std::size_t level_or_k(const Flags& f, const KSymplecticSpace& s) { return f.level == 0 ? s.k() : f.level; }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

json error_document(const Error& e) {
  json body{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* ks = dynamic_cast<const KSpaceError*>(&e)) {
    if (ks->form_index() != 0) body["form_index"] = ks->form_index();
    if (ks->common_kernel()) body["common_kernel"] = io::to_json(*ks->common_kernel());
  }
  return json{{"error", std::move(body)}};
}

json cmd_validate(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  return json{{"valid", true}, {"dim", s.dim()}, {"n", s.n()}, {"k", s.k()}};
}

json cmd_kernel(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  if (f.form != 0) {
    return json{{"form", f.form}, {"kernel", io::to_json(form_kernel(s, f.form))}};
  }
  json kernels = json::array();
  for (std::size_t r = 1; r <= s.k(); ++r) kernels.push_back(io::to_json(form_kernel(s, r)));
  return json{{"kernels", std::move(kernels)}};
}

json cmd_orth(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  const Subspace w = load_subspace(f.subspace_file, "subspace");
  const std::size_t l = level_or_k(f, s);
  return json{{"level", l}, {"orthogonal", io::to_json(l_orthogonal(s, w, l))}};
}

json cmd_classify(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  const Subspace w = load_subspace(f.subspace_file, "subspace");
  const SubspaceClassification c = classify(s, w, level_or_k(f, s));
  json out{{"level", c.level},
           {"isotropic", c.isotropic},
           {"coisotropic", c.coisotropic},
           {"lagrangian", verdict_name(c.lagrangian.verdict)},
           {"result", verdict_name(c.lagrangian.verdict)}};
  if (c.lagrangian.witness) out["witness"] = io::to_json(*c.lagrangian.witness);
  return out;
}

json cmd_complete(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  const Subspace w = load_subspace(f.subspace_file, "subspace");
  const std::size_t l = level_or_k(f, s);
  return json{{"level", l}, {"lagrangian", io::to_json(lagrangian_completion(s, w, l))}};
}

json cmd_complement(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  const Subspace w = load_subspace(f.subspace_file, "subspace");
  const std::size_t l = level_or_k(f, s);
  return json{{"level", l}, {"complement", io::to_json(isotropic_complement(s, w, l))}};
}

json cmd_polarize(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  const auto w = find_polarization(s, f.seed);
  if (!w) return json{{"result", "unknown"}};
  return json{{"result", "found"}, {"polarization", io::to_json(*w)}};
}

json cmd_darboux(const Flags& f) {
  const KSymplecticSpace s = source_space(f);
  const Subspace w = load_subspace(f.subspace_file, "subspace");
  std::optional<Subspace> v0;
  if (!f.complement_file.empty()) v0 = load_subspace(f.complement_file, "complement");
  return io::to_json(darboux_map(s, w, v0));
}

json cmd_symplecto(const Flags& f) {
  const KSymplecticSpace s1 = source_space(f);
  const KSymplecticSpace s2 = load_space(f.target_file, f.target_fixture, "target");
  return json{{"is_ksymplectomorphism", is_ksymplectomorphism(s1, s2, load_map(f))}};
}

json cmd_graph_check(const Flags& f) {
  const KSymplecticSpace s1 = source_space(f);
  const KSymplecticSpace s2 = load_space(f.target_file, f.target_fixture, "target");
  const GraphCriterion g = graph_criterion(s1, s2, load_map(f));
  return json{{"graph", io::to_json(g.graph)},
              {"graph_is_lagrangian", g.graph_is_lagrangian},
              {"is_ksymplectomorphism", g.is_ksymplectomorphism},
              {"agree", g.graph_is_lagrangian == g.is_ksymplectomorphism}};
}

json cmd_closed(const Flags& f) {
  if (f.section_file.empty()) throw UsageError("missing --section");
  const Section gamma = io::section_from_json(read_json(f.section_file));
  const bool closed = is_closed_section(gamma);
  json out{{"closed", closed}};
  json pullbacks = json::array();
  for (std::size_t r = 1; r <= gamma.k(); ++r) pullbacks.push_back(io::to_json(pullback_omega(gamma, r)));
  out["pullbacks"] = std::move(pullbacks);
  if (closed) {
    std::vector<Poly> potentials;
    for (const OneForm& c : gamma.components) potentials.push_back(*potential(c));
    out["potentials"] = io::to_json(potentials);
  }
  return out;
}

json cmd_hj(const Flags& f) {
  if (f.hamiltonian_file.empty()) throw UsageError("missing --hamiltonian");
  if (f.potentials_file.empty() == f.section_file.empty()) {
    throw UsageError("give exactly one of --potentials and --section");
  }
  const Poly h = io::poly_from_json(read_json(f.hamiltonian_file));
  HamiltonJacobiResult r;
  if (!f.potentials_file.empty()) {
    r = hamilton_jacobi_check(h, io::polys_from_json(read_json(f.potentials_file)));
  } else {
    r = hamilton_jacobi_check_section(h, io::section_from_json(read_json(f.section_file)));
  }
  return json{{"solution", r.solution}, {"composed", io::to_json(r.composed)}};
}

json cmd_gen(const Flags& f) {
  if (f.n == 0 || f.k == 0) throw UsageError("--n and --k must be positive");
  const RandomKSpace g = random_kspace(f.n, f.k, f.seed);
  return json{{"space", io::to_json(g.space)},
              {"witness", io::to_json(g.witness)},
              {"polarization", io::to_json(g.polarization)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-symplectic linear algebra"};
  app.name("ksym");
  app.require_subcommand(1);
  Flags f;

  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", f.space_file, "Space JSON file");
    sub->add_option("--fixture", f.fixture_name, "Built-in space: r3-2symp, r6-2symp, r6-5symp, canonical:n,k");
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--target", f.target_file, "Target space JSON file");
    sub->add_option("--target-fixture", f.target_fixture, "Built-in target space");
    sub->add_option("--map", f.map_file, "Matrix JSON file, target dim x source dim");
  };
  auto add_subspace = [&](CLI::App* sub) {
    sub->add_option("--subspace", f.subspace_file, "Subspace JSON file");
    sub->add_option("--level", f.level, "Level l, 1..k (default k)")->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, std::function<json(const Flags&)>>> commands;
  auto command = [&](const char* name, const char* help, std::function<json(const Flags&)> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(body));
    return sub;
  };

  add_space(command("validate", "Check skewness and nondegeneracy", cmd_validate));
  {
    CLI::App* sub = command("kernel", "Kernels of the forms", cmd_kernel);
    add_space(sub);
    sub->add_option("--form", f.form, "Single form index r")->check(CLI::PositiveNumber);
  }
  for (auto [name, help, body] :
       {std::tuple{"orth", "l-th orthogonal complement", cmd_orth},
        std::tuple{"classify", "Isotropic, coisotropic and lagrangian tests", cmd_classify},
        std::tuple{"complete", "Extend an l-isotropic subspace to an l-lagrangian one", cmd_complete},
        std::tuple{"complement", "l-isotropic complement of W = W^{perp,l}", cmd_complement}}) {
    CLI::App* sub = command(name, help, body);
    add_space(sub);
    add_subspace(sub);
  }
  {
    CLI::App* sub = command("polarize", "Search for a polarization", cmd_polarize);
    add_space(sub);
    sub->add_option("--seed", f.seed, "Search seed");
  }
  {
    CLI::App* sub = command("darboux", "Darboux frame of a polarized space", cmd_darboux);
    add_space(sub);
    sub->add_option("--subspace", f.subspace_file, "Polarization JSON file");
    sub->add_option("--complement", f.complement_file, "Isotropic complement JSON file");
  }
  for (auto [name, help, body] :
       {std::tuple{"symplecto", "Test a map for k-symplecticity", cmd_symplecto},
        std::tuple{"graph-check", "Graph criterion in the product space", cmd_graph_check}}) {
    CLI::App* sub = command(name, help, body);
    add_space(sub);
    add_target(sub);
  }
  command("closed", "Closedness of a polynomial section", cmd_closed)
      ->add_option("--section", f.section_file, "Section JSON file");
  {
    CLI::App* sub = command("hj", "Hamilton-Jacobi check", cmd_hj);
    sub->add_option("--hamiltonian", f.hamiltonian_file, "Polynomial in q<i>, p<r>_<i>");
    sub->add_option("--potentials", f.potentials_file, "List of k potentials W_r(q)");
    sub->add_option("--section", f.section_file, "Closed section instead of potentials");
  }
  {
    CLI::App* sub = command("gen", "Random polarized space with its witness", cmd_gen);
    sub->add_option("--n", f.n, "n")->check(CLI::PositiveNumber);
    sub->add_option("--k", f.k, "k")->check(CLI::PositiveNumber);
    sub->add_option("--seed", f.seed, "Seed");
  }
  CLI::App* suite = app.add_subcommand("prop-suite", "Seeded property checks");
  suite->add_option("--seed", f.seed, "Seed");
  suite->add_option("--trials", f.trials, "Trial count");
  suite->add_option("--n-max", f.n_max, "Largest n")->check(CLI::PositiveNumber);
  suite->add_option("--k-max", f.k_max, "Largest k")->check(CLI::PositiveNumber);
  suite->add_option("--jobs", f.jobs, "Worker threads (0: hardware concurrency)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kParseError;
  }

  auto emit = [&](const json& doc) { out << doc.dump(2) << "\n"; };
  try {
    if (suite->parsed()) {
      props::Options o{f.seed, f.trials, f.n_max, f.k_max,
                       f.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : f.jobs};
      const props::Report report = props::run(o);
      emit(props::to_json(report));
      return report.ok() ? kOk : kDomainError;
    }
    for (const auto& [sub, body] : commands) {
      if (sub->parsed()) {
        emit(body(f));
        return kOk;
      }
    }
    throw UsageError("no command");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    emit(json{{"error", {{"code", "Usage"}, {"message", e.what()}}}});
    return kParseError;
  } catch (const Error& e) {
    emit(error_document(e));
    return e.code() == ErrorCode::Parse ? kParseError : kDomainError;
  } catch (const json::exception& e) {
    emit(json{{"error", {{"code", "Parse"}, {"message", e.what()}}}});
    return kParseError;
  }
}

}  // namespace ksym::cli
