#include "fusioninv/fixtures.hpp"

#include <boost/math/constants/constants.hpp>
#include <string>
#include <utility>

#include "fusioninv/classify.hpp"
#include "fusioninv/errors.hpp"

namespace fusioninv::fixtures {

namespace {

BasedRing build(std::string name, std::vector<std::string> labels, const std::vector<std::string>& duals,
                const std::vector<std::array<std::string, 3>>& rules) {
  auto id = [&](const std::string& s) -> LabelId {
    for (LabelId x = 0; x < labels.size(); ++x)
      if (labels[x] == s) return x;
    throw InternalConsistencyError("fixture references unknown label " + s);
  };
  std::vector<LabelId> dual;
  for (const auto& d : duals) dual.push_back(id(d));
  std::vector<FusionRule> fusion;
  for (const auto& [a, b, c] : rules) fusion.push_back({id(a), id(b), id(c), Integer(1)});
  return BasedRing(std::move(name), std::move(labels), 0, std::move(dual), fusion);
}

Solution ones(const SystemPtr& system, std::string name) {
  return Solution{system, std::move(name), {}, std::vector<Complex>(system->phi().size(), Complex(1))};
}

LabelId label(const FusionSystem& system, const std::string& s) {
  auto x = system.ring().find(s);
  if (!x) throw DomainMismatch("ring '" + system.ring().name() + "' has no label " + s);
  return *x;
}

std::size_t phi(const FusionSystem& system, const std::string& a, const std::string& b, const std::string& c,
                const std::string& d, const std::string& e, const std::string& f) {
  return system.require_phi({label(system, a), label(system, b), label(system, c), label(system, d),
                             label(system, e), label(system, f)});
}

/// Sets the 2x2 block F_{τττ}^τ from 1/φ and 1/√φ for the given root φ of x² = x + 1.
Solution golden_point(const SystemPtr& system, std::string name, const Real& root) {
  Solution sol = ones(system, std::move(name));
  Complex inv_phi(Real(1) / root);
  Complex inv_sqrt = root > 0 ? Complex(1 / boost::multiprecision::sqrt(root))
                              : Complex(Real(0), -1 / boost::multiprecision::sqrt(-root));
  sol.values[phi(*system, "tau", "tau", "tau", "tau", "1", "1")] = inv_phi;
  sol.values[phi(*system, "tau", "tau", "tau", "tau", "1", "tau")] = inv_sqrt;
  sol.values[phi(*system, "tau", "tau", "tau", "tau", "tau", "1")] = inv_sqrt;
  sol.values[phi(*system, "tau", "tau", "tau", "tau", "tau", "tau")] = -inv_phi;
  return sol;
}

const std::array<std::string, 2> kAlpha = {"a+", "a-"};

std::string beta(int i) { return "b" + std::to_string(i); }

}  // namespace

BasedRing trivial_ring() { return build("trivial", {"1"}, {"1"}, {{"1", "1", "1"}}); }

BasedRing fibonacci_ring() {
  return build("fibonacci", {"1", "tau"}, {"1", "tau"},
               {{"1", "1", "1"}, {"1", "tau", "tau"}, {"tau", "1", "tau"}, {"tau", "tau", "1"}, {"tau", "tau", "tau"}});
}

BasedRing z3_ring() {
  const std::vector<std::string> g = {"1", "w", "w2"};
  std::vector<std::array<std::string, 3>> rules;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) rules.push_back({g[a], g[b], g[(a + b) % 3]});
  return build("z3", g, {"1", "w2", "w"}, rules);
}

BasedRing repds3_ring() {
  std::vector<std::string> labels = {"1", "eps", "b1", "b2", "b3", "b4", "a+", "a-"};
  std::vector<std::array<std::string, 3>> rules;
  for (const auto& x : labels) {
    rules.push_back({"1", x, x});
    if (x != "1") rules.push_back({x, "1", x});
  }
  rules.push_back({"eps", "eps", "1"});
  for (int i = 1; i <= 4; ++i) {
    rules.push_back({"eps", beta(i), beta(i)});
    rules.push_back({beta(i), "eps", beta(i)});
    for (const char* c : {"1", "eps"}) rules.push_back({beta(i), beta(i), c});
    rules.push_back({beta(i), beta(i), beta(i)});
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= 4; ++k)
        if (k != i && k != j) rules.push_back({beta(i), beta(j), beta(k)});
    }
    for (const auto& a : kAlpha)
      for (const auto& c : kAlpha) {
        rules.push_back({beta(i), a, c});
        rules.push_back({a, beta(i), c});
      }
  }
  for (int s = 0; s < 2; ++s) {
    const auto& a = kAlpha[s];
    const auto& other = kAlpha[1 - s];
    rules.push_back({"eps", a, other});
    rules.push_back({a, "eps", other});
    rules.push_back({a, a, "1"});
    rules.push_back({a, other, "eps"});
    for (int i = 1; i <= 4; ++i) {
      rules.push_back({a, a, beta(i)});
      rules.push_back({a, other, beta(i)});
    }
  }
  return build("repds3", labels, labels, rules);
}

Solution fibonacci_solution(const SystemPtr& system) {
  const Real root = (1 + boost::multiprecision::sqrt(Real(5))) / 2;
  Solution sol = golden_point(system, "fibonacci", root);
  sol.note = "golden-ratio F-matrix";
  return sol;
}

Solution yang_lee_solution(const SystemPtr& system) {
  const Real root = (1 - boost::multiprecision::sqrt(Real(5))) / 2;
  Solution sol = golden_point(system, "yang-lee", root);
  sol.note = "Galois conjugate of the Fibonacci point";
  return sol;
}

Solution z3_cocycle(const SystemPtr& system, int k) {
  Solution sol = ones(system, "z3-cocycle-" + std::to_string(k));
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (std::size_t n = 0; n < system->phi().size(); ++n) {
    const PhiIndex& p = system->phi()[n];
    const long a = static_cast<long>(p.a), b = static_cast<long>(p.b), c = static_cast<long>(p.c);
    const long carry = b + c - (b + c) % 3;
    const Real angle = two_pi * Real(k * a * carry) / 9;
    sol.values[n] = Complex(boost::multiprecision::cos(angle), boost::multiprecision::sin(angle));
  }
  sol.note = "cyclic 3-cocycle";
  return sol;
}

Solution all_ones(const SystemPtr& system, std::string name) { return ones(system, std::move(name)); }

ZeroSet repds3_pattern(const FusionSystem& system, int pattern) {
  std::vector<std::pair<int, int>> pairs;
  switch (pattern) {
    case 1: pairs = {{1, 2}, {2, 1}, {3, 3}, {4, 4}}; break;
    case 2: pairs = {{1, 2}, {2, 1}, {3, 4}, {4, 3}}; break;
    case 3: pairs = {{1, 1}, {2, 2}, {3, 3}, {4, 4}}; break;
    default: throw ArgumentError("Rep(D(S3)) zero patterns are numbered 1 to 3");
  }
  std::vector<std::size_t> zeros;
  auto add = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                 const std::string& e, const std::string& f) { zeros.push_back(phi(system, a, b, c, d, e, f)); };
  for (int i = 1; i <= 4; ++i) {
    add(beta(i), beta(i), beta(i), beta(i), beta(i), beta(i));
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        if (i != j && j != k && i != k) add(beta(i), beta(j), beta(i), beta(j), beta(k), beta(k));
  }
  for (const auto& [i, j] : pairs)
    for (int s = 0; s < 2; ++s) {
      const auto& a = kAlpha[s];
      const auto& o = kAlpha[1 - s];
      const auto bi = beta(i), bj = beta(j);
      add(bi, a, bj, a, a, o);
      add(bi, a, bj, a, o, a);
      add(bi, a, bj, o, a, a);
      add(bi, a, bj, o, o, o);
      add(a, bi, a, bj, a, o);
      add(a, bi, a, bj, o, a);
      add(a, bi, o, bj, a, a);
      add(a, bi, o, bj, o, o);
      add(a, a, a, o, bi, bj);
      add(a, a, o, a, bi, bj);
      add(a, o, a, a, bi, bj);
      add(o, a, a, a, bi, bj);
    }
  return make_zero_set(std::move(zeros));
}

std::vector<InvariantMonomial> repds3_products(const FusionSystem& system) {
  std::vector<InvariantMonomial> out;
  for (const auto& a : kAlpha)
    for (int i = 1; i <= 4; ++i) {
      std::size_t x = phi(system, a, a, a, a, beta(i), beta(i));
      std::size_t y = phi(system, a, beta(i), a, beta(i), a, a);
      InvariantMonomial m;
      m.exponents = {{std::min(x, y), Integer(1)}, {std::max(x, y), Integer(1)}};
      out.push_back(std::move(m));
    }
  return out;
}

namespace {

/// Pattern zeros, Φ_{αsαsαs}^{αs;βiβi} = values[s][i], every other entry 1.
Solution standin_base(const SystemPtr& system, int pattern, const std::array<std::array<mpq_class, 4>, 2>& values) {
  Solution sol = ones(system, {});
  for (std::size_t k : repds3_pattern(*system, pattern).members) sol.values[k] = Complex(0);
  for (int s = 0; s < 2; ++s)
    for (int i = 1; i <= 4; ++i)
      sol.values[phi(*system, kAlpha[s], kAlpha[s], kAlpha[s], kAlpha[s], beta(i), beta(i))] =
          Complex::from_rational(values[s][i - 1]);
  return sol;
}

std::array<std::array<mpq_class, 4>, 2> scaled(std::array<std::array<mpq_class, 4>, 2> v, int sign) {
  for (auto& row : v)
    for (auto& x : row) x *= sign;
  return v;
}

}  // namespace

std::vector<Solution> repds3_standins(const SystemPtr& system) {
  const FusionSystem& S = *system;
  const mpq_class big(2, 3), small(1, 6);
  std::vector<Solution> out;
  auto emit = [&](Solution base, const Automorphism& rho, const std::string& tag) {
    Solution sol = apply_automorphism(base, rho);
    sol.name = tag + " " + rho.cycle_string(S.ring());
    sol.note = "invariant-level stand-in";
    out.push_back(std::move(sol));
  };

  const std::array<std::array<mpq_class, 4>, 2> first = {{{big, big, small, small}, {big, big, small, small}}};
  for (int sign : {1, -1}) {
    Solution base = standin_base(system, 1, scaled(first, sign));
    for (const char* cycles : {"()", "(b2 b3)", "(b2 b3 b4)", "(b1 b3 b2)", "(b1 b3 b4 b2)", "(b1 b3)(b2 b4)"})
      emit(base, parse_cycles(S.ring(), cycles), sign > 0 ? "Z1+" : "Z1-");
  }

  const std::array<std::array<mpq_class, 4>, 2> second = {{{small, small, small, small}, {small, small, small, small}}};
  const ZeroSetOrbit orbit = zero_set_orbit(S, repds3_pattern(S, 2));
  for (int sign : {1, -1}) {
    Solution base = standin_base(system, 2, scaled(second, sign));
    for (const auto& rho : orbit.representatives) emit(base, rho.inverse(), sign > 0 ? "Z2+" : "Z2-");
  }

  const std::array<std::array<mpq_class, 4>, 2> third = {{{big, big, big, big}, {-big, -big, -big, -big}}};
  Solution base = standin_base(system, 3, third);
  emit(base, Automorphism::identity(S.ring().size()), "Z3");
  emit(base, parse_cycles(S.ring(), "(a+ a-)"), "Z3");
  return out;
}

std::vector<InvariantMonomial> fibonacci_reference_basis(const FusionSystem& system) {
  if (system.phi().size() != 15) throw DomainMismatch("the reference basis belongs to the Fibonacci ring");
  // Positions are 1-based in the listing below.
  const std::vector<std::vector<std::pair<std::size_t, long>>> table = {
      {{1, 1}},
      {{3, 1}},
      {{5, 1}},
      {{10, 1}},
      {{11, 1}},
      {{15, 1}},
      {{2, 1}, {4, 1}},
      {{6, 1}, {9, 1}},
      {{2, 1}, {6, 1}, {12, 1}},
      {{2, -1}, {6, -1}, {7, 1}},
      {{2, -1}, {6, -1}, {8, 1}},
      {{2, 1}, {6, 1}, {13, 1}, {14, 1}},
  };
  std::vector<InvariantMonomial> out;
  for (const auto& row : table) {
    InvariantMonomial m;
    for (const auto& [pos, k] : row) m.exponents.emplace_back(pos - 1, Integer(k));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace fusioninv::fixtures
