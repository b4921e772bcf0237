#include "fusioninv/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "fusioninv/errors.hpp"

namespace fusioninv::io {

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON: " + std::string(e.what()), {}, line, column);
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError("missing member", key);
  return j[key];
}

std::string string_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw ParseError("expected a string", key);
}

LabelId label_member(const BasedRing& ring, const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) throw ParseError("expected a label string", key);
  auto x = ring.find(v.get<std::string>());
  if (!x) throw ParseError("unknown label '" + v.get<std::string>() + "'", key);
  return *x;
}

Json integer_json(const Integer& k) {
  if (k.fits_slong_p()) return k.get_si();
  return k.get_str();
}

Integer integer_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw ParseError("expected an integer", key);
}

Json labels(const BasedRing& ring, std::span<const LabelId> xs) {
  Json out = Json::array();
  for (LabelId x : xs) out.push_back(ring.label(x));
  return out;
}

std::string ring_name(const FusionSystem& system) { return system.ring().name(); }

ZeroSet zero_set_from(const FusionSystem& system, const Json& array, const char* field) {
  if (!array.is_array()) throw ParseError("expected an array of indices", field);
  std::vector<std::size_t> members;
  for (const auto& e : array) {
    PhiIndex p = phi_from_json(system.ring(), e);
    auto pos = system.phi_position(p);
    if (!pos) throw ParseError("index " + to_string(system.ring(), p) + " is not admissible", field);
    members.push_back(*pos);
  }
  return make_zero_set(std::move(members));
}

Json zero_array(const FusionSystem& system, const ZeroSet& zeros) {
  Json out = Json::array();
  for (std::size_t k : zeros.members) out.push_back(phi_to_json(system.ring(), system.phi()[k]));
  return out;
}

Json value_json(const Complex& z, unsigned digits) { return Json{{"re", z.re_string(digits)}, {"im", z.im_string(digits)}}; }

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path.string() + "'");
  out << contents;
}

namespace {

std::string inline_json(const Json& j) {
  if (!j.is_structured()) return j.dump();
  std::string out = j.is_object() ? "{" : "[";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ", ";
    first = false;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    out += inline_json(it.value());
  }
  return out + (j.is_object() ? "}" : "]");
}

/// Pretty printing that keeps short arrays and objects on one line.
void write_json(std::string& out, const Json& j, int indent) {
  std::string compact = inline_json(j);
  if (!j.is_structured() || j.empty() || compact.size() + static_cast<std::size_t>(indent) <= 100) {
    out += compact;
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    write_json(out, it.value(), indent + 2);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (object ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write_json(out, j, 0);
  return out + "\n";
}

BasedRing load_ring(const std::filesystem::path& path) {
  BasedRing ring = parse_ring(read_file(path));
  if (!ring.name().empty()) return ring;
  std::string stem = path.filename().string();
  stem = stem.substr(0, stem.find('.'));
  return BasedRing(stem, ring.labels(), ring.unit(), ring.duals(), ring.fusion_rules());
}

Json to_json(const BasedRing& ring) {
  Json out;
  out["name"] = ring.name();
  out["basis"] = ring.labels();
  out["unit"] = ring.label(ring.unit());
  Json dual = Json::object();
  for (LabelId x = 0; x < ring.size(); ++x) dual[ring.label(x)] = ring.label(ring.dual(x));
  out["dual"] = dual;
  Json fusion = Json::array();
  for (const auto& r : ring.fusion_rules()) {
    Json e = {ring.label(r.a), ring.label(r.b), ring.label(r.c)};
    if (r.multiplicity != 1) e.push_back(integer_json(r.multiplicity));
    fusion.push_back(e);
  }
  out["fusion"] = fusion;
  return out;
}

Json phi_to_json(const BasedRing& ring, const PhiIndex& p) {
  return Json{{"a", ring.label(p.a)}, {"b", ring.label(p.b)}, {"c", ring.label(p.c)},
              {"d", ring.label(p.d)}, {"e", ring.label(p.e)}, {"f", ring.label(p.f)}};
}

PhiIndex phi_from_json(const BasedRing& ring, const Json& j) {
  if (!j.is_object()) throw ParseError("an F-symbol index must be an object with members a..f");
  return {label_member(ring, j, "a"), label_member(ring, j, "b"), label_member(ring, j, "c"),
          label_member(ring, j, "d"), label_member(ring, j, "e"), label_member(ring, j, "f")};
}

Solution parse_solution(const SystemPtr& system, std::string_view text) {
  const Json doc = parse_json(text);
  const FusionSystem& S = *system;
  Solution sol{system, {}, {}, std::vector<Complex>(S.phi().size())};
  if (doc.contains("name") && doc["name"].is_string()) sol.name = doc["name"].get<std::string>();
  if (doc.contains("note") && doc["note"].is_string()) sol.note = doc["note"].get<std::string>();
  const Json& values = member(doc, "values");
  if (!values.is_array()) throw ParseError("values must be an array", "values");
  std::vector<bool> seen(S.phi().size(), false);
  for (std::size_t n = 0; n < values.size(); ++n) {
    const std::string field = "values[" + std::to_string(n) + "]";
    PhiIndex p;
    try {
      p = phi_from_json(S.ring(), values[n]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), field);
    }
    auto pos = S.phi_position(p);
    if (!pos) throw ParseError(to_string(S.ring(), p) + " is not an admissible index", field);
    if (seen[*pos]) throw ParseError("duplicate value for " + to_string(S.ring(), p), field);
    seen[*pos] = true;
    sol.values[*pos] = Complex::parse(string_member(values[n], "re"), string_member(values[n], "im"));
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw ParseError("missing value for " + to_string(S.ring(), S.phi()[k]), "values");
  return sol;
}

Solution load_solution(const SystemPtr& system, const std::filesystem::path& path) {
  Solution sol = parse_solution(system, read_file(path));
  if (sol.name.empty()) sol.name = path.stem().string();
  return sol;
}

Json to_json(const Solution& sol, unsigned digits) {
  check_domain(sol);
  const FusionSystem& S = *sol.system;
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = ring_name(S);
  out["name"] = sol.name;
  if (!sol.note.empty()) out["note"] = sol.note;
  Json values = Json::array();
  for (std::size_t k = 0; k < S.phi().size(); ++k) {
    Json e = phi_to_json(S.ring(), S.phi()[k]);
    e["re"] = sol.values[k].re_string(digits);
    e["im"] = sol.values[k].im_string(digits);
    values.push_back(std::move(e));
  }
  out["values"] = std::move(values);
  return out;
}

ZeroSet parse_zero_set(const FusionSystem& system, std::string_view text) {
  const Json doc = parse_json(text);
  return zero_set_from(system, member(doc, "zeros"), "zeros");
}

Json to_json(const FusionSystem& system, const ZeroSet& zeros) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = ring_name(system);
  out["zeros"] = zero_array(system, zeros);
  return out;
}

InvariantBasis parse_basis(const SystemPtr& system, std::string_view text) {
  const Json doc = parse_json(text);
  const FusionSystem& S = *system;
  InvariantBasis basis{system, zero_set_from(S, member(doc, "zeros"), "zeros"), {}};
  const Json& monomials = member(doc, "monomials");
  if (!monomials.is_array()) throw ParseError("monomials must be an array", "monomials");
  for (std::size_t n = 0; n < monomials.size(); ++n) {
    const std::string field = "monomials[" + std::to_string(n) + "]";
    const Json& exps = member(monomials[n], "exponents");
    if (!exps.is_array()) throw ParseError("exponents must be an array", field);
    std::map<std::size_t, Integer> acc;
    for (const auto& e : exps) {
      PhiIndex p = phi_from_json(S.ring(), e);
      auto pos = S.phi_position(p);
      if (!pos) throw ParseError(to_string(S.ring(), p) + " is not an admissible index", field);
      if (basis.zeros.contains(*pos)) throw ParseError("monomial uses a variable from the zero set", field);
      acc[*pos] += integer_member(e, "k");
    }
    InvariantMonomial m;
    for (auto& [pos, k] : acc)
      if (k != 0) m.exponents.emplace_back(pos, k);
    for (const auto& x : t_image(S, m))
      if (x != 0) throw ParseError("monomial is not gauge invariant", field);
    basis.monomials.push_back(std::move(m));
  }
  return basis;
}

Json to_json(const InvariantBasis& basis) {
  const FusionSystem& S = *basis.system;
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = ring_name(S);
  out["zeros"] = zero_array(S, basis.zeros);
  Json monomials = Json::array();
  for (const auto& m : basis.monomials) {
    Json exps = Json::array();
    for (const auto& [pos, k] : m.exponents) {
      Json e = phi_to_json(S.ring(), S.phi()[pos]);
      e["k"] = integer_json(k);
      exps.push_back(std::move(e));
    }
    monomials.push_back(Json{{"exponents", std::move(exps)}, {"display", to_string(S, m)}});
  }
  out["monomials"] = std::move(monomials);
  return out;
}

Json to_json(const FusionSystem& system, const VerificationReport& report) {
  const BasedRing& R = system.ring();
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = R.name();
  out["passed"] = report.passed();
  out["pentagon_count"] = report.pentagon_count;
  out["max_residual"] = format_real(report.max_residual, 6);
  Json unit = Json::array();
  for (std::size_t k : report.unit_violations) unit.push_back(to_string(R, system.phi()[k]));
  out["unit_violations"] = std::move(unit);
  Json nonzero = Json::array();
  for (std::size_t k : report.nonzero_violations) nonzero.push_back(to_string(R, system.phi()[k]));
  out["nonzero_violations"] = std::move(nonzero);
  const auto instances = report.pentagon_failures.empty() ? std::vector<PentagonEquation>{}
                                                          : pentagon_instances(system);
  Json failures = Json::array();
  for (const auto& f : report.pentagon_failures)
    failures.push_back(Json{{"instance", f.instance},
                            {"outer", labels(R, instances[f.instance].outer)},
                            {"residual", format_real(f.residual, 6)}});
  out["pentagon_failures"] = std::move(failures);
  Json singular = Json::array();
  for (const auto& b : report.singular_blocks)
    singular.push_back(Json{{"block", labels(R, b.abcd)}, {"det_modulus", format_real(b.det_modulus, 6)}});
  out["singular_blocks"] = std::move(singular);
  return out;
}

Json to_json(const EvaluationRecord& record, unsigned digits) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["solution"] = record.solution;
  Json values = Json::array();
  for (std::size_t k = 0; k < record.values.size(); ++k) {
    Json e{{"monomial_index", k}};
    if (record.values[k]) {
      e["re"] = record.values[k]->re_string(digits);
      e["im"] = record.values[k]->im_string(digits);
    } else {
      e["undefined"] = true;
    }
    values.push_back(std::move(e));
  }
  out["values"] = std::move(values);
  return out;
}

Json to_json(const RationalityVerdict& verdict) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["rational"] = verdict.rational;
  Json values = Json::array();
  for (const auto& q : verdict.values) values.push_back(q ? Json(q->get_str()) : Json(nullptr));
  out["values"] = std::move(values);
  return out;
}

Json to_json(const FusionSystem& system, const ZeroSetOrbit& orbit) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = ring_name(system);
  out["group_order"] = system.automorphisms().size();
  out["stabilizer_order"] = orbit.stabilizer.size();
  Json stab = Json::array();
  for (const auto& rho : orbit.stabilizer) stab.push_back(rho.cycle_string(system.ring()));
  out["stabilizer"] = std::move(stab);
  out["orbit_size"] = orbit.orbit.size();
  Json members = Json::array();
  for (std::size_t k = 0; k < orbit.orbit.size(); ++k)
    members.push_back(Json{{"automorphism", orbit.representatives[k].cycle_string(system.ring())},
                           {"zeros", zero_array(system, orbit.orbit[k])}});
  out["orbit"] = std::move(members);
  return out;
}

Json to_json(const FusionSystem& system, const std::vector<LocalizedEquation>& equations) {
  const auto instances = pentagon_instances(system);
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = ring_name(system);
  Json eqs = Json::array();
  for (const auto& eq : equations) {
    Json terms = Json::array();
    for (const auto& t : eq.terms) {
      Json coords = Json::array();
      for (std::size_t j = 0; j < t.coordinates.size(); ++j)
        if (t.coordinates[j] != 0) coords.push_back(Json{{"index", j}, {"k", integer_json(t.coordinates[j])}});
      terms.push_back(Json{{"sign", t.sign}, {"coordinates", std::move(coords)}});
    }
    eqs.push_back(Json{{"instance", eq.instance},
                       {"outer", labels(system.ring(), instances[eq.instance].outer)},
                       {"terms", std::move(terms)}});
  }
  out["equations"] = std::move(eqs);
  return out;
}

Json to_json(const FusionSystem& system, const ClassificationReport& report) {
  const BasedRing& R = system.ring();
  auto names = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (std::size_t i : idx) out.push_back(report.names[i]);
    return out;
  };
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = R.name();
  out["counts"] = Json{{"gauge", report.gauge_classes.size()},
                       {"monoidal", report.monoidal_classes.size()},
                       {"quarantined", report.quarantine.size()}};
  Json zs = Json::array();
  for (std::size_t k = 0; k < report.zero_sets.size(); ++k)
    zs.push_back(Json{{"id", k}, {"size", report.zero_sets[k].size()}, {"zeros", zero_array(system, report.zero_sets[k])}});
  out["zero_sets"] = std::move(zs);
  Json gauge = Json::array();
  for (std::size_t g = 0; g < report.gauge_classes.size(); ++g) {
    const auto& cls = report.gauge_classes[g];
    gauge.push_back(Json{{"id", g},
                         {"representative", report.names[cls.members.front()]},
                         {"members", names(cls.members)},
                         {"zero_set_id", cls.zero_set_id},
                         {"digest", evaluation_digest(cls.evaluations)}});
  }
  out["gauge_classes"] = std::move(gauge);
  Json mono = Json::array();
  for (std::size_t m = 0; m < report.monoidal_classes.size(); ++m) {
    const auto& cls = report.monoidal_classes[m];
    Json witnesses = Json::array();
    for (const auto& [g, rho] : cls.witnesses)
      witnesses.push_back(Json{{"gauge_class", g}, {"automorphism", rho.cycle_string(R)}});
    mono.push_back(Json{{"id", m},
                        {"gauge_classes", cls.gauge_classes},
                        {"members", names(cls.members)},
                        {"witnesses", std::move(witnesses)}});
  }
  out["monoidal_classes"] = std::move(mono);
  Json quarantine = Json::array();
  for (const auto& q : report.quarantine)
    quarantine.push_back(Json{{"solution", report.names[q.index]}, {"reason", q.reason}});
  out["quarantine"] = std::move(quarantine);
  return out;
}

Json to_json(const BasedRing& R, const RingReport& report) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["ring"] = R.name();
  out["clean"] = report.clean();
  out["multiplicity_free"] = report.multiplicity_free;
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(
        Json{{"kind", std::string(to_string(v.kind))}, {"witness", labels(R, v.witness)}, {"message", v.message}});
  out["violations"] = std::move(violations);
  return out;
}

std::string classification_table(const FusionSystem& system, const ClassificationReport& report) {
  const BasedRing& R = system.ring();
  std::ostringstream out;
  auto join = [&](const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i : idx) s += (s.empty() ? "" : ", ") + report.names[i];
    return s;
  };
  out << report.gauge_classes.size() << " gauge classes, " << report.monoidal_classes.size() << " monoidal classes\n\n";
  out << "gauge classes\n";
  out << std::left << std::setw(6) << "id" << std::setw(10) << "zero-set" << std::setw(18) << "digest" << "members\n";
  for (std::size_t g = 0; g < report.gauge_classes.size(); ++g) {
    const auto& cls = report.gauge_classes[g];
    out << std::left << std::setw(6) << g << std::setw(10) << cls.zero_set_id << std::setw(18)
        << evaluation_digest(cls.evaluations) << join(cls.members) << "\n";
  }
  out << "\nmonoidal classes\n";
  out << std::left << std::setw(6) << "id" << std::setw(16) << "gauge-classes" << "witnesses\n";
  for (std::size_t m = 0; m < report.monoidal_classes.size(); ++m) {
    const auto& cls = report.monoidal_classes[m];
    std::string ids;
    for (std::size_t g : cls.gauge_classes) ids += (ids.empty() ? "" : ",") + std::to_string(g);
    std::string witnesses;
    for (const auto& [g, rho] : cls.witnesses)
      witnesses += (witnesses.empty() ? "" : "; ") + std::to_string(g) + ": " + rho.cycle_string(R);
    out << std::left << std::setw(6) << m << std::setw(16) << ids << (witnesses.empty() ? "-" : witnesses) << "\n";
  }
  if (!report.quarantine.empty()) {
    out << "\nquarantined\n";
    for (const auto& q : report.quarantine) out << "  " << report.names[q.index] << ": " << q.reason << "\n";
  }
  return out.str();
}

std::string evaluation_digest(const EvaluationRecord& record, unsigned digits) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& v : record.values) {
    if (!v) {
      mix("undefined;");
      continue;
    }
    mix(v->re_string(digits) + "," + v->im_string(digits) + ";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string matrix_tsv(const FusionSystem& system, const ExponentMatrix& m) {
  std::ostringstream out;
  out << "# columns:";
  for (const auto& t : system.gamma()) out << "\t" << to_string(system.ring(), t);
  out << "\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    out << "# row " << i + 1 << ": " << to_string(system.ring(), system.phi()[m.row_labels[i]]) << "\n";
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << row[j].get_str();
    out << "\n";
  }
  return out.str();
}

}  // namespace fusioninv::io
