#include <gtest/gtest.h>

#include <algorithm>

#include "fusioninv/classify.hpp"
#include "fusioninv/errors.hpp"
#include "fusioninv/fixtures.hpp"
#include "../support/systems.hpp"

using namespace fusioninv;
using testing_support::phi;

namespace {

std::vector<Solution> fib_family() {
  const auto& S = testing_support::fib();
  const Solution fib = fixtures::fibonacci_solution(S);
  const Solution yl = fixtures::yang_lee_solution(S);
  return {fib, yl, apply_gauge(fib, sample_normalized_gauge(*S, 1)), apply_gauge(yl, sample_normalized_gauge(*S, 2)),
          apply_gauge(fib, sample_normalized_gauge(*S, 3))};
}

BasisCache& repds3_cache() {
  static BasisCache cache(testing_support::repds3());
  return cache;
}

bool is_rational_sum(const Complex& z) {
  for (auto q : {mpq_class(10, 3), mpq_class(-10, 3), mpq_class(4, 3), mpq_class(-4, 3), mpq_class(0)})
    if (approx_equal(z, Complex::from_rational(q), 1e-30)) return true;
  return false;
}

}  // namespace

TEST(Classify, GaugeEquivalenceIsAnEquivalenceRelation) {
  const auto family = fib_family();
  BasisCache cache(testing_support::fib());
  const std::size_t n = family.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = gauge_equivalent(cache, family[i], family[j]);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(rel[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(rel[i][j], rel[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k]) EXPECT_TRUE(rel[i][k]);
    }
  }
  EXPECT_TRUE(rel[0][2]);
  EXPECT_TRUE(rel[0][4]);
  EXPECT_TRUE(rel[1][3]);
  EXPECT_FALSE(rel[0][1]);
  EXPECT_TRUE(gauge_equivalent(family[0], family[2]));
}

TEST(Classify, DifferentZeroSetsAreNotGaugeEquivalent) {
  const auto& S = testing_support::repds3();
  const auto standins = fixtures::repds3_standins(S);
  EXPECT_FALSE(gauge_equivalent(repds3_cache(), standins[0], standins[1]));
  EXPECT_FALSE(gauge_equivalent(repds3_cache(), standins[0], standins[6]));
  EXPECT_TRUE(gauge_equivalent(repds3_cache(), standins[0], standins[0]));
}

TEST(Classify, FibonacciAndYangLeeAreNotMonoidallyEquivalent) {
  const auto family = fib_family();
  EXPECT_FALSE(monoidal_equivalent(family[0], family[1]).has_value());
  auto w = monoidal_equivalent(family[0], family[2]);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->is_identity());
}

TEST(Classify, AutomorphismImagesHaveWitnesses) {
  const auto& S = testing_support::z3();
  BasisCache cache(S);
  for (int k = 0; k < 3; ++k) {
    const Solution sol = fixtures::z3_cocycle(S, k);
    for (const auto& rho : S->automorphisms())
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Solution moved = apply_automorphism(apply_gauge(sol, sample_normalized_gauge(*S, seed)), rho);
        auto w = monoidal_equivalent(cache, sol, moved);
        ASSERT_TRUE(w.has_value());
      }
  }
  // x -> -x acts on the cocycle classes by (-1)^2 = 1, so the two nontrivial
  // classes stay apart even up to automorphism.
  EXPECT_FALSE(gauge_equivalent(cache, fixtures::z3_cocycle(S, 1), fixtures::z3_cocycle(S, 2)));
  EXPECT_FALSE(monoidal_equivalent(cache, fixtures::z3_cocycle(S, 1), fixtures::z3_cocycle(S, 2)).has_value());
  EXPECT_FALSE(monoidal_equivalent(cache, fixtures::z3_cocycle(S, 0), fixtures::z3_cocycle(S, 1)).has_value());
}

TEST(Classify, PermutedPatternWitness) {
  const auto& S = testing_support::repds3();
  const auto standins = fixtures::repds3_standins(S);
  const Solution& plain = standins[0];
  const Solution& swapped = standins[1];
  ASSERT_EQ(swapped.name, "Z1+ (b2 b3)");
  auto w = monoidal_equivalent(repds3_cache(), plain, swapped);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(apply_automorphism(*S, zero_set(plain), *w), zero_set(swapped));
  // The opposite sign branch on the same pattern is not equivalent.
  EXPECT_FALSE(monoidal_equivalent(repds3_cache(), plain, standins[7]).has_value());
}

TEST(Classify, StandinWitnessesUnderGaugeAndAutomorphism) {
  const auto& S = testing_support::repds3();
  const Solution base = fixtures::repds3_standins(S)[0];
  const auto& group = S->automorphisms();
  for (std::size_t i = 0; i < group.size(); i += 11) {
    Solution moved = apply_automorphism(apply_gauge(base, sample_normalized_gauge(*S, i)), group[i]);
    auto w = monoidal_equivalent(repds3_cache(), base, moved);
    ASSERT_TRUE(w.has_value()) << i;
    EXPECT_EQ(apply_automorphism(*S, zero_set(base), *w), zero_set(moved));
  }
}

TEST(Classify, FibonacciFamilyReport) {
  const auto& S = testing_support::fib();
  auto family = fib_family();
  family.push_back(fixtures::all_ones(S, "not-a-solution"));
  ClassificationReport r = classify(S, family);
  EXPECT_EQ(r.gauge_classes.size(), 2u);
  EXPECT_EQ(r.monoidal_classes.size(), 2u);
  ASSERT_EQ(r.quarantine.size(), 1u);
  EXPECT_EQ(r.quarantine[0].index, 5u);
  EXPECT_EQ(r.gauge_classes[0].members, (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(r.gauge_classes[1].members, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(r.zero_sets.size(), 1u);
}

TEST(Classify, TrivialAndZ3Reports) {
  const auto& T = testing_support::trivial();
  std::vector<Solution> one = {fixtures::all_ones(T, "one")};
  ClassificationReport r = classify(T, one);
  EXPECT_EQ(r.gauge_classes.size(), 1u);
  EXPECT_EQ(r.monoidal_classes.size(), 1u);

  const auto& S = testing_support::z3();
  std::vector<Solution> cocycles = {fixtures::z3_cocycle(S, 0), fixtures::z3_cocycle(S, 1), fixtures::z3_cocycle(S, 2)};
  ClassificationReport z = classify(S, cocycles);
  EXPECT_EQ(z.gauge_classes.size(), 3u);
  EXPECT_EQ(z.monoidal_classes.size(), 3u);
  // Adding the involution image of a cocycle merges it into the original's monoidal class.
  cocycles.push_back(apply_automorphism(fixtures::z3_cocycle(S, 1), S->automorphisms()[1]));
  ClassificationReport with_image = classify(S, cocycles);
  ASSERT_EQ(with_image.monoidal_classes.size(), 3u);
  EXPECT_EQ(with_image.monoidal_classes[1].members, (std::vector<std::size_t>{1, 3}));
}

TEST(Classify, PartitionProperties) {
  const auto& S = testing_support::fib();
  const auto family = fib_family();
  ClassificationReport r = classify(S, family);
  std::vector<int> seen(family.size(), 0);
  for (const auto& g : r.gauge_classes)
    for (auto m : g.members) ++seen[m];
  for (int c : seen) EXPECT_EQ(c, 1);
  for (const auto& mc : r.monoidal_classes) {
    std::vector<std::size_t> members;
    for (auto g : mc.gauge_classes)
      members.insert(members.end(), r.gauge_classes[g].members.begin(), r.gauge_classes[g].members.end());
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, mc.members);
  }
}

TEST(Classify, EvaluationsAgree) {
  EvaluationRecord a{"a", {Complex(1), Complex(2)}};
  EvaluationRecord b{"b", {Complex(1), Complex(Real("2.0000000001"))}};
  EXPECT_TRUE(evaluations_agree(a, b, 1e-9));
  EXPECT_FALSE(evaluations_agree(a, b, 1e-12));
  EvaluationRecord c{"c", {Complex(1)}};
  EXPECT_FALSE(evaluations_agree(a, c, 1e-9));
}

TEST(Classify, BasisCacheReusesBases) {
  BasisCache cache(testing_support::fib());
  const InvariantBasis& first = cache.get(ZeroSet{});
  EXPECT_EQ(&first, &cache.get(ZeroSet{}));
  EXPECT_EQ(first.size(), 12u);
}

TEST(Orbits, PatternStabilizers) {
  const auto& S = *testing_support::repds3();
  const std::size_t expected_stab[] = {8, 16, 48};
  const std::size_t expected_orbit[] = {6, 3, 1};
  std::size_t total = 0;
  for (int p = 1; p <= 3; ++p) {
    const ZeroSet z = fixtures::repds3_pattern(S, p);
    ZeroSetOrbit o = zero_set_orbit(S, z);
    EXPECT_EQ(o.stabilizer.size(), expected_stab[p - 1]);
    EXPECT_EQ(o.orbit.size(), expected_orbit[p - 1]);
    EXPECT_EQ(o.stabilizer.size() * o.orbit.size(), S.automorphisms().size());
    EXPECT_TRUE(std::is_sorted(o.orbit.begin(), o.orbit.end()));
    ASSERT_EQ(o.representatives.size(), o.orbit.size());
    for (std::size_t k = 0; k < o.orbit.size(); ++k)
      EXPECT_EQ(apply_automorphism(S, z, o.representatives[k]), o.orbit[k]);
    for (const auto& rho : o.stabilizer) EXPECT_EQ(apply_automorphism(S, z, rho), z);
    total += o.orbit.size();
  }
  EXPECT_EQ(total, 10u);
}

TEST(Orbits, SmallRings) {
  const auto& S = *testing_support::fib();
  ZeroSetOrbit o = zero_set_orbit(S, ZeroSet{});
  EXPECT_EQ(o.stabilizer.size(), 1u);
  EXPECT_EQ(o.orbit.size(), 1u);
  const auto& Z = *testing_support::z3();
  ZeroSetOrbit z = zero_set_orbit(Z, make_zero_set({Z.require_phi(phi(Z, "w", "w", "w", "1", "w2", "w2"))}));
  EXPECT_EQ(z.stabilizer.size(), 1u);
  EXPECT_EQ(z.orbit.size(), 2u);
}

TEST(Symmetrize, Z3InvolutionPair) {
  const auto& S = *testing_support::z3();
  InvariantMonomial first;
  for (const auto& p : {phi(S, "w", "w", "w", "1", "w2", "w2"), phi(S, "w", "w2", "w", "w", "1", "1"),
                        phi(S, "w", "1", "w", "w2", "w", "w")})
    first.exponents.emplace_back(S.require_phi(p), 1);
  std::sort(first.exponents.begin(), first.exponents.end());
  const InvariantMonomial monomials[] = {first};
  SymmetrizedSum sum = symmetrize(S, monomials);
  ASSERT_EQ(sum.terms.size(), 2u);
  const Automorphism& rho = S.automorphisms()[1];
  EXPECT_NE(apply_automorphism(S, first, rho), first);
  std::vector<InvariantMonomial> moved;
  for (const auto& t : sum.terms) moved.push_back(apply_automorphism(S, t, rho));
  std::sort(moved.begin(), moved.end(), [](const auto& x, const auto& y) { return x.exponents < y.exponents; });
  auto terms = sum.terms;
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.exponents < y.exponents; });
  EXPECT_EQ(moved, terms);
}

TEST(Symmetrize, FixedMonomialIsItsOwnSum) {
  const auto& S = *testing_support::z3();
  InvariantMonomial unit;
  unit.exponents.emplace_back(0, 1);
  const InvariantMonomial monomials[] = {unit};
  SymmetrizedSum sum = symmetrize(S, monomials);
  ASSERT_EQ(sum.terms.size(), 1u);
  EXPECT_EQ(sum.terms[0], unit);
}

TEST(Symmetrize, RepDS3ProductSums) {
  const auto& S = testing_support::repds3();
  const auto products = fixtures::repds3_products(*S);
  SymmetrizedSum sum = symmetrize(*S, products);
  EXPECT_EQ(sum.terms.size(), 8u);
  for (const auto& sol : fixtures::repds3_standins(S)) {
    auto value = evaluate_sum(sol, sum);
    ASSERT_TRUE(value.has_value()) << sol.name;
    EXPECT_TRUE(is_rational_sum(*value)) << sol.name << " " << value->to_string(10);
    for (std::size_t i = 0; i < S->automorphisms().size(); i += 9) {
      auto moved = evaluate_sum(apply_automorphism(sol, S->automorphisms()[i]), sum);
      ASSERT_TRUE(approx_equal(*moved, *value, 1e-30));
    }
  }
}
