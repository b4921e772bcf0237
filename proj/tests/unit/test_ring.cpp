#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fusioninv/errors.hpp"
#include "fusioninv/fixtures.hpp"
#include "fusioninv/ring.hpp"

using namespace fusioninv;

namespace {

const char* kFib = R"({"basis": ["1", "tau"], "unit": "1", "dual": {"1": "1", "tau": "tau"},
  "fusion": [["1","1","1"], ["1","tau","tau"], ["tau","1","tau"], ["tau","tau","1"], ["tau","tau","tau"]]})";

bool has_violation(const RingReport& r, RingViolationKind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const auto& v) { return v.kind == kind; });
}

}  // namespace

TEST(Ring, ParsesFibonacci) {
  BasedRing ring = parse_ring(kFib, "fib");
  EXPECT_EQ(ring.size(), 2u);
  EXPECT_EQ(ring.name(), "fib");
  EXPECT_EQ(ring.N(1, 1, 0), 1);
  EXPECT_EQ(ring.N(1, 1, 1), 1);
  EXPECT_EQ(ring.N(0, 1, 0), 0);
  EXPECT_TRUE(ring.multiplicity_free());
  EXPECT_TRUE(validate_ring(ring).clean());
}

TEST(Ring, ParsesTrivialAndExplicitMultiplicity) {
  BasedRing ring = parse_ring(R"({"basis":["1"],"unit":"1","dual":{"1":"1"},"fusion":[["1","1","1",1]]})");
  EXPECT_EQ(ring.size(), 1u);
  EXPECT_TRUE(validate_ring(ring).clean());
}

TEST(Ring, RejectsUnknownLabel) {
  try {
    parse_ring(R"({"basis":["1"],"unit":"1","dual":{"1":"1"},"fusion":[["1","sigma","1"]]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("sigma"), std::string::npos);
    EXPECT_EQ(e.field(), "fusion[0]");
  }
}

TEST(Ring, RejectsDuplicatesAndSyntaxErrors) {
  EXPECT_THROW(parse_ring(R"({"basis":["1","1"],"unit":"1","dual":{"1":"1"},"fusion":[]})"), ParseError);
  EXPECT_THROW(parse_ring(R"({"basis":["1"],"unit":"1","dual":{"1":"1"},"fusion":[["1","1","1"],["1","1","1"]]})"),
               ParseError);
  try {
    parse_ring("{\n  \"basis\": [\"1\",\n  ]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_ring(R"({"basis":["1"],"dual":{"1":"1"},"fusion":[]})"), ParseError);
}

TEST(Ring, NonAssociativeRingIsReported) {
  // Z3 with w*w = w instead of w2.
  BasedRing ring = parse_ring(R"({"basis":["1","w","w2"],"unit":"1","dual":{"1":"1","w":"w2","w2":"w"},
    "fusion":[["1","1","1"],["1","w","w"],["1","w2","w2"],["w","1","w"],["w2","1","w2"],
              ["w","w","w"],["w","w2","1"],["w2","w","1"],["w2","w2","w"]]})");
  RingReport report = validate_ring(ring);
  ASSERT_TRUE(has_violation(report, RingViolationKind::Associativity));
  const auto& v = *std::find_if(report.violations.begin(), report.violations.end(),
                                [](const auto& x) { return x.kind == RingViolationKind::Associativity; });
  EXPECT_EQ(v.witness.size(), 4u);
}

TEST(Ring, DeletingTheTauChannelLeavesAnAssociativeRing) {
  // tau * tau = 1 is Z2, which is associative; validation must stay clean.
  BasedRing ring = parse_ring(R"({"basis":["1","tau"],"unit":"1","dual":{"1":"1","tau":"tau"},
    "fusion":[["1","1","1"],["1","tau","tau"],["tau","1","tau"],["tau","tau","1"]]})");
  EXPECT_TRUE(validate_ring(ring).clean());
}

TEST(Ring, BadDualIsReported) {
  BasedRing ring = parse_ring(R"({"basis":["1","tau"],"unit":"1","dual":{"1":"1","tau":"1"},
    "fusion":[["1","1","1"],["1","tau","tau"],["tau","1","tau"],["tau","tau","1"],["tau","tau","tau"]]})");
  RingReport report = validate_ring(ring);
  EXPECT_TRUE(has_violation(report, RingViolationKind::DualityCompatibility));
  EXPECT_TRUE(has_violation(report, RingViolationKind::DualNotInvolution));
}

TEST(Ring, UnitAxiomViolation) {
  BasedRing ring = parse_ring(R"({"basis":["1","x"],"unit":"1","dual":{"1":"1","x":"x"},
    "fusion":[["1","1","1"],["1","x","x"],["x","1","1"],["x","x","1"]]})");
  EXPECT_TRUE(has_violation(validate_ring(ring), RingViolationKind::UnitAxiom));
}

TEST(Ring, StrictDualSymmetry) {
  for (auto ring : {fixtures::fibonacci_ring(), fixtures::z3_ring(), fixtures::repds3_ring()})
    EXPECT_TRUE(validate_ring(ring, true).clean()) << ring.name();
}

TEST(Ring, NonMultiplicityFreeParses) {
  BasedRing ring = parse_ring(R"({"basis":["1","x"],"unit":"1","dual":{"1":"1","x":"x"},
    "fusion":[["1","1","1"],["1","x","x"],["x","1","x"],["x","x","1"],["x","x","x",2]]})");
  EXPECT_FALSE(ring.multiplicity_free());
  EXPECT_FALSE(validate_ring(ring).multiplicity_free);
}

TEST(Ring, GammaSets) {
  auto fib = gamma_set(fixtures::fibonacci_ring());
  ASSERT_EQ(fib.size(), 5u);
  EXPECT_EQ(fib[0], (FusionTriple{0, 0, 0}));
  EXPECT_EQ(fib[3], (FusionTriple{1, 1, 0}));
  EXPECT_EQ(fib[4], (FusionTriple{1, 1, 1}));
  for (std::size_t i = 0; i < fib.size(); ++i) EXPECT_EQ(fib[i].index, i);
  EXPECT_EQ(gamma_set(fixtures::trivial_ring()).size(), 1u);
  const BasedRing ds = fixtures::repds3_ring();
  auto g = gamma_set(ds);
  EXPECT_EQ(g.size(), 116u);
  for (LabelId x = 0; x < ds.size(); ++x)
    EXPECT_NE(std::find(g.begin(), g.end(), FusionTriple{x, ds.dual(x), 0}), g.end());
}

TEST(Ring, ExtendedStructureConstants) {
  BasedRing fib = fixtures::fibonacci_ring();
  const std::vector<LabelId> ttt = {1, 1, 1};
  const std::vector<LabelId> tt = {1, 1};
  const std::vector<LabelId> ones = {0, 0, 0, 0};
  EXPECT_EQ(n_extended(fib, ttt, 1), 2);
  EXPECT_EQ(n_extended(fib, tt, 0), 1);
  EXPECT_EQ(n_extended(fib, ones, 0), 1);
  const std::vector<LabelId> single = {1};
  EXPECT_EQ(n_extended(fib, single, 1), 1);
  EXPECT_EQ(n_extended(fib, single, 0), 0);
}

TEST(Ring, ExtendedConstantsIndependentOfAssociation) {
  for (const BasedRing& R : {fixtures::fibonacci_ring(), fixtures::z3_ring(), fixtures::repds3_ring()}) {
    const std::size_t n = R.size();
    for (LabelId x = 0; x < n; ++x)
      for (LabelId y = 0; y < n; ++y)
        for (LabelId z = 0; z < n; ++z)
          for (LabelId w = 0; w < n; ++w) {
            // Right-to-left: N_{x(yz)}^w = sum_v N_{yz}^v N_{xv}^w.
            Integer right = 0;
            for (LabelId v : R.products(y, z)) right += R.N(y, z, v) * R.N(x, v, w);
            const std::vector<LabelId> f = {x, y, z};
            ASSERT_EQ(n_extended(R, f, w), right);
          }
  }
}

TEST(Ring, AutomorphismGroups) {
  EXPECT_EQ(automorphism_group(fixtures::fibonacci_ring()).size(), 1u);
  BasedRing z3 = fixtures::z3_ring();
  auto g = automorphism_group(z3);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_TRUE(g[0].is_identity());
  EXPECT_EQ(g[1].cycle_string(z3), "(w w2)");
}

TEST(Ring, RepDS3AutomorphismGroupStructure) {
  BasedRing ring = fixtures::repds3_ring();
  auto group = automorphism_group(ring);
  ASSERT_EQ(group.size(), 48u);
  EXPECT_TRUE(std::is_sorted(group.begin(), group.end()));
  std::set<Automorphism> set(group.begin(), group.end());
  for (const auto& x : group) {
    EXPECT_TRUE(set.count(x.inverse()));
    for (const auto& y : group) ASSERT_TRUE(set.count(x.compose(y)));
  }
  // Z2 x S4: the swap of a+ and a- is central, and the beta permutations form S4.
  Automorphism swap = parse_cycles(ring, "(a+ a-)");
  for (const auto& x : group) EXPECT_EQ(x.compose(swap), swap.compose(x));
  std::size_t fixing_alpha = 0;
  for (const auto& x : group)
    if (x(*ring.find("a+")) == *ring.find("a+")) ++fixing_alpha;
  EXPECT_EQ(fixing_alpha, 24u);
  // Every automorphism maps Gamma onto itself.
  auto gamma = gamma_set(ring);
  for (const auto& x : group)
    for (const auto& t : gamma) EXPECT_NE(ring.N(x(t.a), x(t.b), x(t.c)), 0);
}

TEST(Ring, GroupOrderDividesFactorial) {
  for (const BasedRing& R : {fixtures::trivial_ring(), fixtures::fibonacci_ring(), fixtures::z3_ring(),
                             fixtures::repds3_ring()}) {
    Integer factorial = 1;
    for (std::size_t k = 2; k <= R.size(); ++k) factorial *= static_cast<unsigned long>(k);
    const Integer order = static_cast<unsigned long>(automorphism_group(R).size());
    EXPECT_EQ(factorial % order, 0) << R.name();
  }
}

TEST(Ring, CycleNotation) {
  BasedRing ring = fixtures::repds3_ring();
  Automorphism rho = parse_cycles(ring, "(b1 b3 b4 b2)");
  EXPECT_TRUE(is_automorphism(ring, rho));
  EXPECT_EQ(rho.cycle_string(ring), "(b1 b3 b4 b2)");
  EXPECT_EQ(parse_cycles(ring, "()").cycle_string(ring), "()");
  EXPECT_TRUE(parse_cycles(ring, "id").is_identity());
  EXPECT_EQ(parse_cycles(ring, "(b1 b2)(a+ a-)").cycle_string(ring), "(b1 b2)(a+ a-)");
  EXPECT_THROW(parse_cycles(ring, "(b1 zz)"), ParseError);
  EXPECT_THROW(parse_cycles(ring, "(b1 b2"), ParseError);
  EXPECT_FALSE(is_automorphism(ring, parse_cycles(ring, "(1 eps)")));
  EXPECT_FALSE(is_automorphism(ring, parse_cycles(ring, "(eps b1)")));
}
