#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusioninv/invariants.hpp"
#include "fusioninv/symbols.hpp"

namespace fusioninv {

/// Invariant bases keyed by zero set, computed on first use.
class BasisCache {
 public:
  explicit BasisCache(SystemPtr system) : system_(std::move(system)) {}

  const InvariantBasis& get(const ZeroSet& zeros);
  const SystemPtr& system() const noexcept { return system_; }

 private:
  SystemPtr system_;
  std::map<ZeroSet, std::unique_ptr<InvariantBasis>> bases_;
};

/// Componentwise comparison; both records must be fully defined.
bool evaluations_agree(const EvaluationRecord& x, const EvaluationRecord& y, double tol);

/// Same zero set and equal basis evaluations within policy.tol.
bool gauge_equivalent(const Solution& s1, const Solution& s2, const NumericPolicy& policy = {});
bool gauge_equivalent(BasisCache& cache, const Solution& s1, const Solution& s2,
                      const NumericPolicy& policy = {});

/// First ρ (lexicographic) with ρ·Z(s1) = Z(s2) and F1(m) = F2(ρ·m) on the basis for Z(s1).
std::optional<Automorphism> monoidal_equivalent(const Solution& s1, const Solution& s2,
                                                const NumericPolicy& policy = {});
std::optional<Automorphism> monoidal_equivalent(BasisCache& cache, const Solution& s1, const Solution& s2,
                                                const NumericPolicy& policy = {});

struct ClassifyOptions {
  NumericPolicy numeric;
  bool verify = true;  // quarantine solutions that fail verify_solution
};

struct GaugeClass {
  std::vector<std::size_t> members;  // input indices, ascending; members[0] represents
  std::size_t zero_set_id = 0;       // index into ClassificationReport::zero_sets
  EvaluationRecord evaluations;      // of the representative
};

struct MonoidalClass {
  std::vector<std::size_t> gauge_classes;  // ascending; the first represents
  std::vector<std::size_t> members;        // input indices, ascending
  /// For each non-representative gauge class: ρ with F_rep(m) = F_class(ρ·m).
  std::vector<std::pair<std::size_t, Automorphism>> witnesses;
};

struct QuarantinedSolution {
  std::size_t index;
  std::string reason;
};

struct ClassificationReport {
  std::vector<std::string> names;
  std::vector<ZeroSet> zero_sets;  // distinct, in order of first appearance
  std::vector<GaugeClass> gauge_classes;
  std::vector<MonoidalClass> monoidal_classes;
  std::vector<QuarantinedSolution> quarantine;
};

ClassificationReport classify(const SystemPtr& system, std::span<const Solution> solutions,
                              const ClassifyOptions& options = {});
ClassificationReport classify(BasisCache& cache, std::span<const Solution> solutions,
                              const ClassifyOptions& options = {});

struct ZeroSetOrbit {
  std::vector<Automorphism> stabilizer;
  std::vector<ZeroSet> orbit;                // sorted
  std::vector<Automorphism> representatives; // first ρ (lexicographic) with ρ·zeros = orbit[k]
};

ZeroSetOrbit zero_set_orbit(const FusionSystem& system, const ZeroSet& zeros);

/// Σ over the deduplicated Aut-orbits of the given monomials.
struct SymmetrizedSum {
  std::vector<InvariantMonomial> terms;
};

SymmetrizedSum symmetrize(const FusionSystem& system, std::span<const InvariantMonomial> monomials);

/// nullopt if any term is undefined.
std::optional<Complex> evaluate_sum(const Solution& sol, const SymmetrizedSum& sum,
                                    double zero_tol = NumericPolicy{}.zero_tol);

}  // namespace fusioninv
