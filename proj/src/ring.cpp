#include "fusioninv/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "fusioninv/errors.hpp"

namespace fusioninv {

BasedRing::BasedRing(std::string name, std::vector<std::string> basis, LabelId unit, std::vector<LabelId> dual,
                     const std::vector<FusionRule>& fusion)
    : name_(std::move(name)), labels_(std::move(basis)), unit_(unit), dual_(std::move(dual)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ValidationError("a based ring needs at least one basis element");
  if (unit_ >= n) throw ValidationError("unit is not a basis element");
  if (dual_.size() != n) throw ValidationError("dual map must cover the basis");
  for (LabelId x : dual_)
    if (x >= n) throw ValidationError("dual map leaves the basis");
  n_.assign(n * n * n, Integer(0));
  products_.assign(n * n, {});
  for (const auto& r : fusion) {
    if (r.a >= n || r.b >= n || r.c >= n) throw ValidationError("fusion rule references an unknown label");
    if (r.multiplicity < 0) throw ValidationError("structure constants must be nonnegative");
    n_[(r.a * n + r.b) * n + r.c] = r.multiplicity;
  }
  for (LabelId a = 0; a < n; ++a)
    for (LabelId b = 0; b < n; ++b)
      for (LabelId c = 0; c < n; ++c) {
        const Integer& m = N(a, b, c);
        if (m == 0) continue;
        products_[a * n + b].push_back(c);
        if (m != 1) multiplicity_free_ = false;
      }
}

std::optional<LabelId> BasedRing::find(std::string_view id) const {
  auto it = std::find(labels_.begin(), labels_.end(), id);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<LabelId>(it - labels_.begin());
}

std::vector<FusionRule> BasedRing::fusion_rules() const {
  std::vector<FusionRule> out;
  for (LabelId a = 0; a < size(); ++a)
    for (LabelId b = 0; b < size(); ++b)
      for (LabelId c : products(a, b)) out.push_back({a, b, c, N(a, b, c)});
  return out;
}

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

LabelId label_of(const BasedRing& ring, const std::vector<std::string>& basis, const json& j,
                 const std::string& field) {
  if (!j.is_string()) throw ParseError("expected a label string", field);
  const auto& s = j.get_ref<const std::string&>();
  auto it = std::find(basis.begin(), basis.end(), s);
  if (it == basis.end()) throw ParseError("unknown label '" + s + "'", field);
  (void)ring;
  return static_cast<LabelId>(it - basis.begin());
}

Integer multiplicity_of(const json& j, const std::string& field) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_number_integer()) {
    long v = j.get<long>();
    if (v < 0) throw ParseError("structure constant must be nonnegative", field);
    return Integer(v);
  }
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0 || v < 0)
      throw ParseError("structure constant must be a nonnegative integer", field);
    return v;
  }
  throw ParseError("structure constant must be a nonnegative integer", field);
}

}  // namespace

BasedRing parse_ring(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON: " + std::string(e.what()), {}, line, column);
  }
  if (!doc.is_object()) throw ParseError("ring file must be a JSON object");
  for (const char* key : {"basis", "unit", "dual", "fusion"})
    if (!doc.contains(key)) throw ParseError("missing member", key);

  const json& jb = doc["basis"];
  if (!jb.is_array() || jb.empty()) throw ParseError("basis must be a nonempty array", "basis");
  std::vector<std::string> basis;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    if (!jb[i].is_string()) throw ParseError("basis labels must be strings", "basis[" + std::to_string(i) + "]");
    std::string s = jb[i].get<std::string>();
    if (s.empty()) throw ParseError("empty label", "basis[" + std::to_string(i) + "]");
    if (!seen.insert(s).second) throw ParseError("duplicate label '" + s + "'", "basis");
    basis.push_back(std::move(s));
  }
  if (name.empty() && doc.contains("name") && doc["name"].is_string()) name = doc["name"].get<std::string>();

  BasedRing probe;
  LabelId unit = label_of(probe, basis, doc["unit"], "unit");

  const json& jd = doc["dual"];
  if (!jd.is_object()) throw ParseError("dual must be an object", "dual");
  std::vector<LabelId> dual(basis.size(), basis.size());
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    LabelId x = label_of(probe, basis, json(it.key()), "dual");
    dual[x] = label_of(probe, basis, it.value(), "dual." + it.key());
  }
  for (LabelId x = 0; x < basis.size(); ++x)
    if (dual[x] == basis.size()) throw ParseError("no dual given for '" + basis[x] + "'", "dual");

  const json& jf = doc["fusion"];
  if (!jf.is_array()) throw ParseError("fusion must be an array", "fusion");
  std::vector<FusionRule> rules;
  std::set<std::tuple<LabelId, LabelId, LabelId>> triples;
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const std::string field = "fusion[" + std::to_string(i) + "]";
    const json& r = jf[i];
    if (!r.is_array() || r.size() < 3 || r.size() > 4)
      throw ParseError("fusion entries are [a, b, c] or [a, b, c, N]", field);
    FusionRule rule{label_of(probe, basis, r[0], field), label_of(probe, basis, r[1], field),
                    label_of(probe, basis, r[2], field), Integer(1)};
    if (r.size() == 4) rule.multiplicity = multiplicity_of(r[3], field);
    if (!triples.insert({rule.a, rule.b, rule.c}).second) throw ParseError("duplicate fusion triple", field);
    if (rule.multiplicity != 0) rules.push_back(std::move(rule));
  }
  return BasedRing(std::move(name), std::move(basis), unit, std::move(dual), rules);
}

std::string_view to_string(RingViolationKind kind) {
  switch (kind) {
    case RingViolationKind::UnitAxiom: return "unit-axiom";
    case RingViolationKind::Associativity: return "associativity";
    case RingViolationKind::DualNotInvolution: return "dual-not-involution";
    case RingViolationKind::DualUnit: return "dual-unit";
    case RingViolationKind::DualityCompatibility: return "duality-compatibility";
    case RingViolationKind::DualSymmetry: return "dual-symmetry";
  }
  return "unknown";
}

RingReport validate_ring(const BasedRing& ring, bool strict) {
  RingReport report;
  report.multiplicity_free = ring.multiplicity_free();
  const std::size_t n = ring.size();
  const LabelId one = ring.unit();
  auto add = [&](RingViolationKind kind, std::vector<LabelId> witness, std::string message) {
    report.violations.push_back({kind, std::move(witness), std::move(message)});
  };
  auto names = [&](std::initializer_list<LabelId> xs) {
    std::string s;
    for (LabelId x : xs) s += (s.empty() ? "" : ",") + ring.label(x);
    return "(" + s + ")";
  };

  for (LabelId x = 0; x < n; ++x)
    for (LabelId y = 0; y < n; ++y) {
      const Integer expected = x == y ? 1 : 0;
      if (ring.N(one, x, y) != expected || ring.N(x, one, y) != expected)
        add(RingViolationKind::UnitAxiom, {x, y}, "unit axiom fails at " + names({x, y}));
    }

  for (LabelId x = 0; x < n; ++x)
    for (LabelId y = 0; y < n; ++y)
      for (LabelId z = 0; z < n; ++z)
        for (LabelId w = 0; w < n; ++w) {
          Integer lhs = 0, rhs = 0;
          for (LabelId u : ring.products(x, y)) lhs += ring.N(x, y, u) * ring.N(u, z, w);
          for (LabelId v : ring.products(y, z)) rhs += ring.N(y, z, v) * ring.N(x, v, w);
          if (lhs != rhs)
            add(RingViolationKind::Associativity, {x, y, z, w},
                "associativity fails at " + names({x, y, z, w}) + ": " + lhs.get_str() + " != " + rhs.get_str());
        }

  if (ring.dual(one) != one) add(RingViolationKind::DualUnit, {one}, "dual of the unit is not the unit");
  for (LabelId x = 0; x < n; ++x)
    if (ring.dual(ring.dual(x)) != x)
      add(RingViolationKind::DualNotInvolution, {x}, "dual is not an involution at " + names({x}));

  for (LabelId x = 0; x < n; ++x)
    for (LabelId y = 0; y < n; ++y) {
      const Integer expected = y == ring.dual(x) ? 1 : 0;
      if (ring.N(x, y, one) != expected)
        add(RingViolationKind::DualityCompatibility, {x, y},
            "N" + names({x, y, one}) + " = " + ring.N(x, y, one).get_str() + ", expected " + expected.get_str());
    }

  if (strict)
    for (LabelId x = 0; x < n; ++x)
      for (LabelId y = 0; y < n; ++y)
        for (LabelId z = 0; z < n; ++z)
          if (ring.N(x, y, z) != ring.N(ring.dual(y), ring.dual(x), ring.dual(z)))
            add(RingViolationKind::DualSymmetry, {x, y, z}, "N is not symmetric under duals at " + names({x, y, z}));
  return report;
}

std::vector<FusionTriple> gamma_set(const BasedRing& ring) {
  std::vector<FusionTriple> out;
  for (LabelId a = 0; a < ring.size(); ++a)
    for (LabelId b = 0; b < ring.size(); ++b)
      for (LabelId c : ring.products(a, b)) out.push_back({a, b, c, out.size()});
  return out;
}

Integer n_extended(const BasedRing& ring, std::span<const LabelId> factors, LabelId target) {
  if (factors.empty()) throw ArgumentError("n_extended needs at least one factor");
  const std::size_t n = ring.size();
  std::vector<Integer> v(n, 0);
  v[factors[0]] = 1;
  for (std::size_t k = 1; k < factors.size(); ++k) {
    std::vector<Integer> next(n, 0);
    for (LabelId u = 0; u < n; ++u) {
      if (v[u] == 0) continue;
      for (LabelId w : ring.products(u, factors[k])) next[w] += v[u] * ring.N(u, factors[k], w);
    }
    v = std::move(next);
  }
  return v.at(target);
}

Automorphism::Automorphism(std::vector<LabelId> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (LabelId x : image_) {
    if (x >= image_.size() || hit[x]) throw ArgumentError("automorphism image is not a permutation");
    hit[x] = true;
  }
}

Automorphism Automorphism::identity(std::size_t n) {
  std::vector<LabelId> image(n);
  std::iota(image.begin(), image.end(), LabelId{0});
  return Automorphism(std::move(image));
}

bool Automorphism::is_identity() const {
  for (LabelId x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

Automorphism Automorphism::inverse() const {
  std::vector<LabelId> inv(image_.size());
  for (LabelId x = 0; x < image_.size(); ++x) inv[image_[x]] = x;
  return Automorphism(std::move(inv));
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (other.size() != size()) throw ArgumentError("composing automorphisms of different rings");
  std::vector<LabelId> out(size());
  for (LabelId x = 0; x < size(); ++x) out[x] = image_[other.image_[x]];
  return Automorphism(std::move(out));
}

std::string Automorphism::cycle_string(const BasedRing& ring) const {
  std::string out;
  std::vector<bool> done(size(), false);
  for (LabelId x = 0; x < size(); ++x) {
    if (done[x] || image_[x] == x) continue;
    out += "(";
    for (LabelId y = x; !done[y]; y = image_[y]) {
      if (y != x) out += " ";
      out += ring.label(y);
      done[y] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_automorphism(const BasedRing& ring, const Automorphism& rho) {
  const std::size_t n = ring.size();
  if (rho.size() != n || rho(ring.unit()) != ring.unit()) return false;
  for (LabelId x = 0; x < n; ++x)
    if (rho(ring.dual(x)) != ring.dual(rho(x))) return false;
  for (LabelId a = 0; a < n; ++a)
    for (LabelId b = 0; b < n; ++b)
      for (LabelId c = 0; c < n; ++c)
        if (ring.N(a, b, c) != ring.N(rho(a), rho(b), rho(c))) return false;
  return true;
}

namespace {

/// Label data preserved by every automorphism; used to prune candidate images.
std::vector<std::vector<std::string>> label_signatures(const BasedRing& ring) {
  const std::size_t n = ring.size();
  std::vector<std::vector<std::string>> out(n);
  for (LabelId x = 0; x < n; ++x) {
    std::vector<std::string> row;
    std::vector<std::string> square;
    for (LabelId y = 0; y < n; ++y) {
      square.push_back(ring.N(x, x, y).get_str());
      for (LabelId z = 0; z < n; ++z)
        row.push_back(ring.N(x, y, z).get_str() + "/" + ring.N(y, x, z).get_str() + "/" + ring.N(y, z, x).get_str());
    }
    std::sort(row.begin(), row.end());
    std::sort(square.begin(), square.end());
    row.insert(row.end(), square.begin(), square.end());
    row.push_back(ring.dual(x) == x ? "self-dual" : "paired");
    out[x] = std::move(row);
  }
  return out;
}

}  // namespace

std::vector<Automorphism> automorphism_group(const BasedRing& ring) {
  const std::size_t n = ring.size();
  const auto sig = label_signatures(ring);
  std::vector<LabelId> image(n, n);
  std::vector<bool> used(n, false);
  std::vector<Automorphism> out;

  // Checks every structure constant among the labels assigned so far (0..k).
  auto consistent = [&](LabelId k) {
    if (ring.dual(k) <= k && image[ring.dual(k)] != ring.dual(image[k])) return false;
    for (LabelId a = 0; a <= k; ++a)
      for (LabelId b = 0; b <= k; ++b)
        for (LabelId c = 0; c <= k; ++c) {
          if (a != k && b != k && c != k) continue;
          if (ring.N(a, b, c) != ring.N(image[a], image[b], image[c])) return false;
        }
    return true;
  };

  std::function<void(LabelId)> extend = [&](LabelId k) {
    if (k == n) {
      out.emplace_back(image);
      return;
    }
    for (LabelId y = 0; y < n; ++y) {
      if (used[y] || sig[k] != sig[y]) continue;
      if ((k == ring.unit()) != (y == ring.unit())) continue;
      image[k] = y;
      used[y] = true;
      if (consistent(k)) extend(k + 1);
      used[y] = false;
      image[k] = n;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

Automorphism parse_cycles(const BasedRing& ring, std::string_view text) {
  std::vector<LabelId> image(ring.size());
  std::iota(image.begin(), image.end(), LabelId{0});
  std::string s(text);
  auto trimmed = [](std::string t) {
    auto b = t.find_first_not_of(" \t\n");
    if (b == std::string::npos) return std::string();
    return t.substr(b, t.find_last_not_of(" \t\n") - b + 1);
  };
  s = trimmed(s);
  if (s.empty() || s == "id" || s == "()") return Automorphism(std::move(image));

  std::vector<bool> moved(ring.size(), false);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw ParseError("expected '(' in cycle notation '" + s + "'");
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis in '" + s + "'");
    std::string body = s.substr(pos + 1, close - pos - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<LabelId> cycle;
    for (std::string tok; in >> tok;) {
      auto x = ring.find(tok);
      if (!x) throw ParseError("unknown label '" + tok + "' in cycle notation");
      if (moved[*x]) throw ParseError("label '" + tok + "' appears in two cycles");
      moved[*x] = true;
      cycle.push_back(*x);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Automorphism(std::move(image));
}

}  // namespace fusioninv
