#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fusioninv/classify.hpp"
#include "fusioninv/errors.hpp"
#include "fusioninv/fixtures.hpp"
#include "fusioninv/io.hpp"
#include "../support/systems.hpp"

using namespace fusioninv;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fusioninv_test_" + name);
}

}  // namespace

TEST(Io, RingRoundTrip) {
  for (const BasedRing& ring : {fixtures::fibonacci_ring(), fixtures::repds3_ring()}) {
    const std::string text = io::dump(io::to_json(ring));
    BasedRing back = parse_ring(text, ring.name());
    EXPECT_EQ(back.labels(), ring.labels());
    EXPECT_EQ(back.duals(), ring.duals());
    EXPECT_EQ(io::dump(io::to_json(back)), text);
  }
}

TEST(Io, LoadRingUsesNameOrStem) {
  const auto path = temp_path("sample.ring.json");
  io::Json j = io::to_json(fixtures::fibonacci_ring());
  j.erase("name");
  io::write_file(path, io::dump(j));
  EXPECT_EQ(io::load_ring(path).name(), "fusioninv_test_sample");
  std::filesystem::remove(path);
  EXPECT_THROW(io::load_ring(temp_path("does-not-exist.json")), ParseError);
}

TEST(Io, SolutionRoundTrip) {
  const auto& S = testing_support::fib();
  for (const Solution& sol : {fixtures::fibonacci_solution(S), fixtures::yang_lee_solution(S)}) {
    const std::string text = io::dump(io::to_json(sol));
    Solution back = io::parse_solution(S, text);
    EXPECT_EQ(back.name, sol.name);
    for (std::size_t i = 0; i < sol.values.size(); ++i)
      ASSERT_TRUE(approx_equal(back.values[i], sol.values[i], 1e-45));
    EXPECT_EQ(io::dump(io::to_json(back)), text);
  }
}

TEST(Io, SolutionErrors) {
  const auto& S = testing_support::fib();
  io::Json j = io::to_json(fixtures::fibonacci_solution(S));
  io::Json missing = j;
  missing["values"].erase(missing["values"].begin());
  EXPECT_THROW(io::parse_solution(S, io::dump(missing)), ParseError);
  io::Json duplicate = j;
  duplicate["values"].push_back(j["values"][0]);
  EXPECT_THROW(io::parse_solution(S, io::dump(duplicate)), ParseError);
  io::Json inadmissible = j;
  inadmissible["values"][0]["d"] = "tau";
  EXPECT_THROW(io::parse_solution(S, io::dump(inadmissible)), ParseError);
  io::Json bad_number = j;
  bad_number["values"][0]["re"] = "one";
  EXPECT_THROW(io::parse_solution(S, io::dump(bad_number)), ParseError);
  EXPECT_THROW(io::parse_solution(S, "[1, 2"), ParseError);
}

TEST(Io, ZeroSetRoundTrip) {
  const auto& S = *testing_support::repds3();
  const ZeroSet z = fixtures::repds3_pattern(S, 2);
  EXPECT_EQ(io::parse_zero_set(S, io::dump(io::to_json(S, z))), z);
}

TEST(Io, BasisRoundTrip) {
  const auto& S = testing_support::fib();
  InvariantBasis basis = invariant_basis(S, make_zero_set({}));
  io::Json j = io::to_json(basis);
  EXPECT_EQ(j["monomials"].size(), 12u);
  InvariantBasis back = io::parse_basis(S, io::dump(j));
  EXPECT_EQ(back.monomials, basis.monomials);
  EXPECT_EQ(back.zeros, basis.zeros);
}

TEST(Io, BasisRejectsNonInvariantMonomials) {
  const auto& S = testing_support::fib();
  io::Json j = io::to_json(invariant_basis(S, ZeroSet{}));
  io::Json m = {{"exponents", io::Json::array({io::phi_to_json(S->ring(), S->phi()[1])})}};
  m["exponents"][0]["k"] = 1;
  j["monomials"].push_back(m);
  EXPECT_THROW(io::parse_basis(S, io::dump(j)), ParseError);
}

TEST(Io, ReportsCarrySchemaVersion) {
  const auto& S = testing_support::fib();
  std::vector<Solution> sols = {fixtures::fibonacci_solution(S), fixtures::yang_lee_solution(S)};
  ClassificationReport r = classify(S, sols);
  io::Json j = io::to_json(*S, r);
  EXPECT_EQ(j["schema_version"], io::kSchemaVersion);
  const std::string table = io::classification_table(*S, r);
  EXPECT_NE(table.find("2 gauge classes, 2 monoidal classes"), std::string::npos);
  EXPECT_EQ(io::dump(io::to_json(*S, r)), io::dump(j));
}

TEST(Io, DigestIsStable) {
  const auto& S = testing_support::fib();
  InvariantBasis basis = invariant_basis(S, ZeroSet{});
  const Solution fib = fixtures::fibonacci_solution(S);
  const std::string d = io::evaluation_digest(evaluate_basis(fib, basis));
  EXPECT_EQ(d, io::evaluation_digest(evaluate_basis(apply_gauge(fib, sample_normalized_gauge(*S, 4)), basis)));
  EXPECT_NE(d, io::evaluation_digest(evaluate_basis(fixtures::yang_lee_solution(S), basis)));
}

TEST(Io, MatrixDump) {
  const auto& S = *testing_support::fib();
  const std::string tsv = io::matrix_tsv(S, build_exponent_matrix(S, ZeroSet{}));
  EXPECT_EQ(tsv.front(), '#');
  std::size_t data_lines = 0;
  std::istringstream in(tsv);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') ++data_lines;
  EXPECT_EQ(data_lines, 15u);
}
