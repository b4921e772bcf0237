#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fusioninv/classify.hpp"
#include "fusioninv/errors.hpp"
#include "fusioninv/invariants.hpp"
#include "fusioninv/io.hpp"
#include "fusioninv/lattice.hpp"
#include "fusioninv/symbols.hpp"

using namespace fusioninv;
using io::Json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3, kVerification = 4, kInternal = 5 };

struct RunConfig {
  unsigned precision = 50;
  double tol = 1e-9;
  double zero_tol = 1e-9;
  std::string max_denominator = "1000000";
  double rational_tol = 1e-30;
  std::uint64_t seed = 0;
  bool json = false;
  bool strict = false;

  NumericPolicy policy() const { return {precision, tol, zero_tol}; }
  RationalityOptions rationality() const { return {mpz_class(max_denominator), rational_tol}; }
};

/// Config-file values apply unless the same flag was given on the command line.
void apply_config(const std::string& path, RunConfig& cfg, const CLI::App& app) {
  const Json doc = Json::parse(io::read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw ParseError("config file must be a JSON object", path);
  auto given = [&](const char* flag) { return app.count(flag) > 0; };
  auto number = [&](const char* key) {
    if (!doc[key].is_number()) throw ParseError("expected a number", key);
    return doc[key].get<double>();
  };
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key == "precision") {
      if (!given("--precision")) cfg.precision = static_cast<unsigned>(number("precision"));
    } else if (key == "tol") {
      if (!given("--tol")) cfg.tol = number("tol");
    } else if (key == "zero_tol") {
      if (!given("--zero-tol")) cfg.zero_tol = number("zero_tol");
    } else if (key == "rational_tol") {
      if (!given("--rational-tol")) cfg.rational_tol = number("rational_tol");
    } else if (key == "max_denominator") {
      if (!given("--max-denominator"))
        cfg.max_denominator = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    } else if (key == "seed") {
      if (!given("--seed")) cfg.seed = it.value().get<std::uint64_t>();
    } else {
      throw ParseError("unknown config key", key);
    }
  }
}

void check_config(const RunConfig& cfg) {
  if (cfg.precision < 20) throw ArgumentError("--precision must be at least 20 digits");
  if (!(cfg.tol > 0) || !(cfg.zero_tol > 0) || !(cfg.rational_tol > 0))
    throw ArgumentError("tolerances must be positive");
  mpz_class d;
  if (d.set_str(cfg.max_denominator, 10) != 0 || d < 1) throw ArgumentError("--max-denominator must be a positive integer");
}

SystemPtr load_system(const std::string& path) { return FusionSystem::create(io::load_ring(path)); }

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json)
    std::cout << io::dump(j);
  else
    std::cout << text;
}

int cmd_validate(const RunConfig& cfg, const std::string& ring_path) {
  BasedRing ring = io::load_ring(ring_path);
  RingReport report = validate_ring(ring, cfg.strict);
  std::ostringstream text;
  text << "ring " << ring.name() << ": " << ring.size() << " basis elements, "
       << (report.multiplicity_free ? "multiplicity free" : "not multiplicity free") << "\n";
  for (const auto& v : report.violations) text << "  " << to_string(v.kind) << ": " << v.message << "\n";
  text << (report.clean() ? "clean\n" : std::to_string(report.violations.size()) + " violations\n");
  emit(cfg, io::to_json(ring, report), text.str());
  return report.clean() ? kOk : kValidation;
}

int cmd_aut(const RunConfig& cfg, const std::string& ring_path) {
  SystemPtr S = load_system(ring_path);
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["ring"] = S->ring().name();
  j["order"] = S->automorphisms().size();
  Json list = Json::array();
  std::ostringstream text;
  text << "order " << S->automorphisms().size() << "\n";
  for (const auto& rho : S->automorphisms()) {
    list.push_back(rho.cycle_string(S->ring()));
    text << "  " << rho.cycle_string(S->ring()) << "\n";
  }
  j["automorphisms"] = list;
  emit(cfg, j, text.str());
  return kOk;
}

int cmd_phi(const RunConfig& cfg, const std::string& ring_path) {
  SystemPtr S = load_system(ring_path);
  Json list = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < S->phi().size(); ++k) {
    list.push_back(io::phi_to_json(S->ring(), S->phi()[k]));
    text << k + 1 << "\t" << to_string(S->ring(), S->phi()[k]) << "\n";
  }
  emit(cfg, Json{{"schema_version", io::kSchemaVersion}, {"ring", S->ring().name()}, {"phi", list}}, text.str());
  return kOk;
}

int cmd_gamma(const RunConfig& cfg, const std::string& ring_path) {
  SystemPtr S = load_system(ring_path);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& t : S->gamma()) {
    list.push_back({S->ring().label(t.a), S->ring().label(t.b), S->ring().label(t.c)});
    text << t.index + 1 << "\t" << to_string(S->ring(), t) << "\n";
  }
  emit(cfg, Json{{"schema_version", io::kSchemaVersion}, {"ring", S->ring().name()}, {"gamma", list}}, text.str());
  return kOk;
}

int cmd_pentagon(const RunConfig& cfg, const std::string& ring_path, bool dump) {
  SystemPtr S = load_system(ring_path);
  const auto eqs = pentagon_instances(*S);
  const BasedRing& R = S->ring();
  Json j{{"schema_version", io::kSchemaVersion}, {"ring", R.name()}, {"count", eqs.size()}};
  std::ostringstream text;
  text << eqs.size() << " pentagon equations\n";
  if (dump) {
    Json list = Json::array();
    auto phi = [&](std::size_t k) { return to_string(R, S->phi()[k]); };
    for (const auto& eq : eqs) {
      Json lhs = Json::array(), rhs = Json::array();
      std::string line;
      for (const auto& t : eq.lhs) {
        lhs.push_back({phi(t[0]), phi(t[1])});
        line += phi(t[0]) + " " + phi(t[1]);
      }
      if (eq.lhs.empty()) line = "0";
      line += " = ";
      for (std::size_t g = 0; g < eq.rhs.size(); ++g) {
        const auto& t = eq.rhs[g];
        rhs.push_back({phi(t[0]), phi(t[1]), phi(t[2])});
        line += (g ? " + " : "") + phi(t[0]) + " " + phi(t[1]) + " " + phi(t[2]);
      }
      if (eq.rhs.empty()) line += "0";
      Json outer = Json::array();
      for (LabelId x : eq.outer) outer.push_back(R.label(x));
      list.push_back(Json{{"outer", outer}, {"lhs", lhs}, {"rhs", rhs}});
      text << line << "\n";
    }
    j["equations"] = list;
  }
  emit(cfg, j, text.str());
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& ring_path, const std::string& sol_path) {
  SystemPtr S = load_system(ring_path);
  Solution sol = io::load_solution(S, sol_path);
  VerificationReport report = verify_solution(sol, cfg.policy());
  std::ostringstream text;
  text << sol.name << ": " << (report.passed() ? "passed" : "FAILED") << "\n"
       << "  pentagon equations: " << report.pentagon_count << ", max residual " << format_real(report.max_residual, 6)
       << "\n"
       << "  pentagon failures: " << report.pentagon_failures.size() << "\n"
       << "  unit violations: " << report.unit_violations.size() << "\n"
       << "  vanishing Phi[a,a*,a; a; 1,1]: " << report.nonzero_violations.size() << "\n"
       << "  singular F-matrices: " << report.singular_blocks.size() << "\n";
  Json j = io::to_json(*S, report);
  j["solution"] = sol.name;
  emit(cfg, j, text.str());
  return report.passed() ? kOk : kVerification;
}

void write_or_print(const std::string& output, const Json& j, const std::string& summary) {
  if (output.empty()) {
    std::cout << io::dump(j);
  } else {
    io::write_file(output, io::dump(j));
    std::cout << summary << " written to " << output << "\n";
  }
}

int cmd_basis(const RunConfig& cfg, const std::string& ring_path, const std::string& zeros_path,
              const std::string& from_solution, const std::string& output) {
  SystemPtr S = load_system(ring_path);
  ZeroSet zeros;
  if (!zeros_path.empty() && !from_solution.empty())
    throw ArgumentError("--zeros and --from-solution are mutually exclusive");
  if (!zeros_path.empty()) zeros = io::parse_zero_set(*S, io::read_file(zeros_path));
  if (!from_solution.empty()) zeros = zero_set(io::load_solution(S, from_solution), cfg.zero_tol);
  InvariantBasis basis = invariant_basis(S, zeros);
  write_or_print(output, io::to_json(basis), std::to_string(basis.size()) + " monomials");
  return kOk;
}

int cmd_evaluate(const RunConfig& cfg, const std::string& ring_path, const std::string& sol_path,
                 const std::string& basis_path) {
  SystemPtr S = load_system(ring_path);
  Solution sol = io::load_solution(S, sol_path);
  InvariantBasis basis = io::parse_basis(S, io::read_file(basis_path));
  EvaluationRecord record = evaluate_basis(sol, basis, cfg.zero_tol);
  std::ostringstream text;
  for (std::size_t k = 0; k < record.values.size(); ++k)
    text << k + 1 << "\t" << (record.values[k] ? record.values[k]->to_string(20) : "undefined") << "\n";
  emit(cfg, io::to_json(record), text.str());
  return kOk;
}

int cmd_localize(const RunConfig& cfg, const std::string& ring_path, const std::string& basis_path) {
  SystemPtr S = load_system(ring_path);
  InvariantBasis basis = io::parse_basis(S, io::read_file(basis_path));
  const auto eqs = localize_pentagon(*S, basis.zeros, basis);
  std::ostringstream text;
  text << eqs.size() << " localized equations in " << basis.size() << " invariants\n";
  for (const auto& eq : eqs) {
    std::string line;
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      const auto& term = eq.terms[t];
      line += term.sign > 0 ? (t ? " + " : "") : (t ? " - " : "-");
      std::string factors;
      for (std::size_t j = 0; j < term.coordinates.size(); ++j) {
        if (term.coordinates[j] == 0) continue;
        if (!factors.empty()) factors += " ";
        factors += "m" + std::to_string(j + 1);
        if (term.coordinates[j] != 1) factors += "^" + term.coordinates[j].get_str();
      }
      line += factors.empty() ? "1" : factors;
    }
    text << line << " = 0\n";
  }
  emit(cfg, io::to_json(*S, eqs), text.str());
  return kOk;
}

int cmd_galois(const RunConfig& cfg, const std::string& ring_path, const std::string& sol_path) {
  SystemPtr S = load_system(ring_path);
  Solution sol = io::load_solution(S, sol_path);
  InvariantBasis basis = invariant_basis(S, zero_set(sol, cfg.zero_tol));
  EvaluationRecord record = evaluate_basis(sol, basis, cfg.zero_tol);
  RationalityVerdict verdict = rationality_check(record, cfg.rationality());
  std::ostringstream text;
  text << "rational: " << (verdict.rational ? "true" : "false") << "\n";
  for (std::size_t k = 0; k < verdict.values.size(); ++k)
    text << "  m" << k + 1 << " = " << (verdict.values[k] ? verdict.values[k]->get_str() : "irrational") << "\n";
  Json j = io::to_json(verdict);
  j["solution"] = sol.name;
  emit(cfg, j, text.str());
  return kOk;
}

int cmd_orbit(const RunConfig& cfg, const std::string& ring_path, const std::string& zeros_path) {
  SystemPtr S = load_system(ring_path);
  ZeroSet zeros = io::parse_zero_set(*S, io::read_file(zeros_path));
  ZeroSetOrbit orbit = zero_set_orbit(*S, zeros);
  std::ostringstream text;
  text << "group order " << S->automorphisms().size() << ", stabilizer order " << orbit.stabilizer.size()
       << ", orbit size " << orbit.orbit.size() << "\n";
  text << "stabilizer:";
  for (const auto& rho : orbit.stabilizer) text << " " << rho.cycle_string(S->ring());
  text << "\norbit representatives:";
  for (const auto& rho : orbit.representatives) text << " " << rho.cycle_string(S->ring());
  text << "\n";
  emit(cfg, io::to_json(*S, orbit), text.str());
  return kOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& ring_path, const std::vector<std::string>& sol_paths,
                 bool no_verify) {
  SystemPtr S = load_system(ring_path);
  std::vector<Solution> sols;
  for (const auto& p : sol_paths) sols.push_back(io::load_solution(S, p));
  ClassifyOptions options{cfg.policy(), !no_verify};
  ClassificationReport report = classify(S, sols, options);
  emit(cfg, io::to_json(*S, report), io::classification_table(*S, report));
  return kOk;
}

int cmd_gauge_test(const RunConfig& cfg, const std::string& ring_path, const std::string& sol_path, int n) {
  SystemPtr S = load_system(ring_path);
  Solution sol = io::load_solution(S, sol_path);
  const ZeroSet zeros = zero_set(sol, cfg.zero_tol);
  InvariantBasis basis = invariant_basis(S, zeros);
  const EvaluationRecord reference = evaluate_basis(sol, basis, cfg.zero_tol);
  int agree = 0, perturbed = 0, zero_sets_kept = 0;
  Real worst = 0;
  for (int k = 0; k < n; ++k) {
    GaugeVector g = sample_normalized_gauge(*S, cfg.seed + static_cast<std::uint64_t>(k));
    Solution moved = apply_gauge(sol, g, cfg.zero_tol);
    if (zero_set(moved, cfg.zero_tol) != zeros) continue;
    ++zero_sets_kept;
    EvaluationRecord record = evaluate_basis(moved, basis, cfg.zero_tol);
    for (std::size_t i = 0; i < record.values.size(); ++i) {
      Real d = (*record.values[i] - *reference.values[i]).abs();
      if (d > worst) worst = d;
    }
    if (evaluations_agree(reference, record, cfg.tol)) ++agree;
    Real shift = 0;
    for (std::size_t i = 0; i < sol.values.size(); ++i) {
      Real d = (moved.values[i] - sol.values[i]).abs();
      if (d > shift) shift = d;
    }
    if (shift > 1e-3) ++perturbed;
  }
  const bool ok = agree == n && zero_sets_kept == n && perturbed == n;
  Json j{{"schema_version", io::kSchemaVersion},
         {"solution", sol.name},
         {"gauges", n},
         {"seed", cfg.seed},
         {"invariants_agree", agree},
         {"zero_sets_preserved", zero_sets_kept},
         {"raw_values_perturbed", perturbed},
         {"max_invariant_deviation", format_real(worst, 6)},
         {"passed", ok}};
  std::ostringstream text;
  text << n << " gauges (seed " << cfg.seed << "): invariants agree " << agree << ", zero sets preserved "
       << zero_sets_kept << ", raw values perturbed " << perturbed << ", max deviation " << format_real(worst, 6)
       << "\n"
       << (ok ? "passed" : "FAILED") << "\n";
  emit(cfg, j, text.str());
  return ok ? kOk : kVerification;
}

int cmd_matrix(const std::string& ring_path, const std::string& zeros_path) {
  SystemPtr S = load_system(ring_path);
  ZeroSet zeros;
  if (!zeros_path.empty()) zeros = io::parse_zero_set(*S, io::read_file(zeros_path));
  std::cout << io::matrix_tsv(*S, build_exponent_matrix(*S, zeros));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauge and monoidal classification of multiplicity-free fusion categories", "fusioninv"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string config_path;
  app.add_option("--precision", cfg.precision, "working precision in decimal digits");
  app.add_option("--tol", cfg.tol, "absolute equality tolerance");
  app.add_option("--zero-tol", cfg.zero_tol, "values below this modulus count as zero");
  app.add_option("--max-denominator", cfg.max_denominator, "largest denominator accepted as rational");
  app.add_option("--rational-tol", cfg.rational_tol, "distance to the nearest rational accepted as exact");
  app.add_option("--seed", cfg.seed, "base seed for random gauges");
  app.add_option("--config", config_path, "JSON file with default settings")->check(CLI::ExistingFile);
  app.add_flag("--json", cfg.json, "emit JSON reports");
  app.add_flag("--strict", cfg.strict, "also check N_XY^Z = N_Y*X*^Z* when validating");

  std::string ring, solution, basis_path, zeros, from_solution, output;
  std::vector<std::string> solutions;
  bool dump = false, no_verify = false;
  int n = 100;

  auto* validate = app.add_subcommand("validate", "check the based-ring axioms");
  validate->add_option("ring", ring)->required();
  auto* aut = app.add_subcommand("aut", "list the based-ring automorphisms");
  aut->add_option("ring", ring)->required();
  auto* phi = app.add_subcommand("phi", "list the F-symbol variables in canonical order");
  phi->add_option("ring", ring)->required();
  auto* gamma = app.add_subcommand("gamma", "list the nonzero fusion triples");
  gamma->add_option("ring", ring)->required();
  auto* pentagon = app.add_subcommand("pentagon", "count or dump the pentagon equations");
  pentagon->add_option("ring", ring)->required();
  pentagon->add_flag("--dump", dump, "print every equation");
  auto* verify = app.add_subcommand("verify", "check a solution against the unit, pentagon and invertibility conditions");
  verify->add_option("ring", ring)->required();
  verify->add_option("solution", solution)->required();
  auto* basis = app.add_subcommand("invariant-basis", "compute a basis of gauge-invariant monomials");
  basis->add_option("ring", ring)->required();
  basis->add_option("--zeros", zeros, "zero-set file");
  basis->add_option("--from-solution", from_solution, "take the zero set of this solution");
  basis->add_option("-o,--output", output, "write the basis here instead of stdout");
  auto* evaluate = app.add_subcommand("evaluate", "evaluate a basis on a solution");
  evaluate->add_option("ring", ring)->required();
  evaluate->add_option("solution", solution)->required();
  evaluate->add_option("basis", basis_path)->required();
  auto* localize = app.add_subcommand("localize", "rewrite the pentagon equations in basis invariants");
  localize->add_option("ring", ring)->required();
  localize->add_option("basis", basis_path)->required();
  auto* galois = app.add_subcommand("galois", "test whether every basis invariant is rational");
  galois->add_option("ring", ring)->required();
  galois->add_option("solution", solution)->required();
  auto* orbit = app.add_subcommand("orbit", "stabilizer and orbit of a zero set under the automorphisms");
  orbit->add_option("ring", ring)->required();
  orbit->add_option("--zeros", zeros, "zero-set file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "group solutions into gauge and monoidal classes");
  classify_cmd->add_option("ring", ring)->required();
  classify_cmd->add_option("solutions", solutions)->required();
  classify_cmd->add_flag("--no-verify", no_verify, "skip pentagon verification of the inputs");
  auto* gauge_test = app.add_subcommand("gauge-test", "check invariants against random normalized gauges");
  gauge_test->add_option("ring", ring)->required();
  gauge_test->add_option("solution", solution)->required();
  gauge_test->add_option("--n", n, "number of gauges")->check(CLI::PositiveNumber);
  auto* matrix = app.add_subcommand("matrix", "dump the exponent matrix as tab-separated values");
  matrix->add_option("ring", ring)->required();
  matrix->add_option("--zeros", zeros, "zero-set file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (!config_path.empty()) apply_config(config_path, cfg, app);
    check_config(cfg);
    PrecisionScope precision(cfg.precision);
    if (*validate) return cmd_validate(cfg, ring);
    if (*aut) return cmd_aut(cfg, ring);
    if (*phi) return cmd_phi(cfg, ring);
    if (*gamma) return cmd_gamma(cfg, ring);
    if (*pentagon) return cmd_pentagon(cfg, ring, dump);
    if (*verify) return cmd_verify(cfg, ring, solution);
    if (*basis) return cmd_basis(cfg, ring, zeros, from_solution, output);
    if (*evaluate) return cmd_evaluate(cfg, ring, solution, basis_path);
    if (*localize) return cmd_localize(cfg, ring, basis_path);
    if (*galois) return cmd_galois(cfg, ring, solution);
    if (*orbit) return cmd_orbit(cfg, ring, zeros);
    if (*classify_cmd) return cmd_classify(cfg, ring, solutions, no_verify);
    if (*gauge_test) return cmd_gauge_test(cfg, ring, solution, n);
    if (*matrix) return cmd_matrix(ring, zeros);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  }
  return kUsage;
}
