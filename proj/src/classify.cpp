#include "fusioninv/classify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "fusioninv/errors.hpp"

namespace fusioninv {

const InvariantBasis& BasisCache::get(const ZeroSet& zeros) {
  auto it = bases_.find(zeros);
  if (it == bases_.end())
    it = bases_.emplace(zeros, std::make_unique<InvariantBasis>(invariant_basis(system_, zeros))).first;
  return *it->second;
}

bool evaluations_agree(const EvaluationRecord& x, const EvaluationRecord& y, double tol) {
  if (x.values.size() != y.values.size()) return false;
  for (std::size_t k = 0; k < x.values.size(); ++k) {
    if (!x.values[k] || !y.values[k]) return false;
    if (!approx_equal(*x.values[k], *y.values[k], tol)) return false;
  }
  return true;
}

bool gauge_equivalent(BasisCache& cache, const Solution& s1, const Solution& s2, const NumericPolicy& policy) {
  const ZeroSet z1 = zero_set(s1, policy.zero_tol);
  if (zero_set(s2, policy.zero_tol) != z1) return false;
  const InvariantBasis& basis = cache.get(z1);
  return evaluations_agree(evaluate_basis(s1, basis, policy.zero_tol), evaluate_basis(s2, basis, policy.zero_tol),
                           policy.tol);
}

bool gauge_equivalent(const Solution& s1, const Solution& s2, const NumericPolicy& policy) {
  check_domain(s1);
  BasisCache cache(s1.system);
  return gauge_equivalent(cache, s1, s2, policy);
}

std::optional<Automorphism> monoidal_equivalent(BasisCache& cache, const Solution& s1, const Solution& s2,
                                                const NumericPolicy& policy) {
  check_domain(s1);
  check_domain(s2);
  const FusionSystem& S = *cache.system();
  const ZeroSet z1 = zero_set(s1, policy.zero_tol);
  const ZeroSet z2 = zero_set(s2, policy.zero_tol);
  if (z1.size() != z2.size()) return std::nullopt;
  std::optional<EvaluationRecord> reference;
  for (const auto& rho : S.automorphisms()) {
    if (apply_automorphism(S, z1, rho) != z2) continue;
    const InvariantBasis& basis = cache.get(z1);
    if (!reference) reference = evaluate_basis(s1, basis, policy.zero_tol);
    const EvaluationRecord moved = evaluate_basis(apply_automorphism(s2, rho), basis, policy.zero_tol);
    if (evaluations_agree(*reference, moved, policy.tol)) return rho;
  }
  return std::nullopt;
}

std::optional<Automorphism> monoidal_equivalent(const Solution& s1, const Solution& s2, const NumericPolicy& policy) {
  check_domain(s1);
  BasisCache cache(s1.system);
  return monoidal_equivalent(cache, s1, s2, policy);
}

ClassificationReport classify(const SystemPtr& system, std::span<const Solution> solutions,
                              const ClassifyOptions& options) {
  BasisCache cache(system);
  return classify(cache, solutions, options);
}

ClassificationReport classify(BasisCache& cache, std::span<const Solution> solutions, const ClassifyOptions& options) {
  const SystemPtr& system = cache.system();
  const NumericPolicy& policy = options.numeric;
  ClassificationReport report;

  std::vector<std::size_t> zero_ids(solutions.size());
  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const Solution& sol = solutions[i];
    report.names.push_back(sol.name);
    if (!sol.system || sol.system->ring().labels() != system->ring().labels() ||
        sol.values.size() != system->phi().size()) {
      report.quarantine.push_back({i, "solution belongs to a different ring"});
      continue;
    }
    if (options.verify) {
      VerificationReport v = verify_solution(sol, policy);
      if (!v.passed()) {
        report.quarantine.push_back({i, "verification failed (max pentagon residual " + format_real(v.max_residual, 6) +
                                            ", " + std::to_string(v.unit_violations.size()) + " unit, " +
                                            std::to_string(v.singular_blocks.size()) + " singular blocks)"});
        continue;
      }
    }
    ZeroSet z = zero_set(sol, policy.zero_tol);
    auto it = std::find(report.zero_sets.begin(), report.zero_sets.end(), z);
    zero_ids[i] = static_cast<std::size_t>(it - report.zero_sets.begin());
    if (it == report.zero_sets.end()) report.zero_sets.push_back(std::move(z));
    accepted.push_back(i);
  }

  for (std::size_t i : accepted) {
    const InvariantBasis& basis = cache.get(report.zero_sets[zero_ids[i]]);
    EvaluationRecord record = evaluate_basis(solutions[i], basis, policy.zero_tol);
    bool placed = false;
    for (auto& cls : report.gauge_classes) {
      if (cls.zero_set_id != zero_ids[i] || !evaluations_agree(cls.evaluations, record, policy.tol)) continue;
      cls.members.push_back(i);
      placed = true;
      break;
    }
    if (!placed) report.gauge_classes.push_back({{i}, zero_ids[i], std::move(record)});
  }

  for (std::size_t g = 0; g < report.gauge_classes.size(); ++g) {
    const GaugeClass& cls = report.gauge_classes[g];
    const Solution& candidate = solutions[cls.members.front()];
    bool placed = false;
    for (auto& mono : report.monoidal_classes) {
      const GaugeClass& rep = report.gauge_classes[mono.gauge_classes.front()];
      auto rho = monoidal_equivalent(cache, solutions[rep.members.front()], candidate, policy);
      if (!rho) continue;
      mono.gauge_classes.push_back(g);
      mono.members.insert(mono.members.end(), cls.members.begin(), cls.members.end());
      mono.witnesses.emplace_back(g, *rho);
      placed = true;
      break;
    }
    if (!placed) report.monoidal_classes.push_back({{g}, cls.members, {}});
  }
  for (auto& mono : report.monoidal_classes) std::sort(mono.members.begin(), mono.members.end());
  return report;
}

ZeroSetOrbit zero_set_orbit(const FusionSystem& system, const ZeroSet& zeros) {
  std::vector<std::pair<ZeroSet, Automorphism>> images;
  ZeroSetOrbit out;
  for (const auto& rho : system.automorphisms()) {
    ZeroSet image = apply_automorphism(system, zeros, rho);
    if (image == zeros) out.stabilizer.push_back(rho);
    auto it = std::find_if(images.begin(), images.end(), [&](const auto& e) { return e.first == image; });
    if (it == images.end()) images.emplace_back(std::move(image), rho);
  }
  std::sort(images.begin(), images.end());
  for (auto& [z, rho] : images) {
    out.orbit.push_back(std::move(z));
    out.representatives.push_back(std::move(rho));
  }
  return out;
}

SymmetrizedSum symmetrize(const FusionSystem& system, std::span<const InvariantMonomial> monomials) {
  SymmetrizedSum sum;
  std::set<std::vector<std::pair<std::size_t, Integer>>> seen;
  for (const auto& m : monomials)
    for (const auto& rho : system.automorphisms()) {
      InvariantMonomial image = apply_automorphism(system, m, rho);
      if (seen.insert(image.exponents).second) sum.terms.push_back(std::move(image));
    }
  return sum;
}

std::optional<Complex> evaluate_sum(const Solution& sol, const SymmetrizedSum& sum, double zero_tol) {
  Complex total(0);
  for (const auto& m : sum.terms) {
    auto v = evaluate_monomial(sol, m, zero_tol);
    if (!v) return std::nullopt;
    total += *v;
  }
  return total;
}

}  // namespace fusioninv
