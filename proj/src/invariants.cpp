#include "fusioninv/invariants.hpp"

#include <algorithm>
#include <utility>

#include "fusioninv/errors.hpp"

namespace fusioninv {

SparseRow InvariantMonomial::as_row() const {
  SparseRow row;
  for (const auto& [pos, k] : exponents) row.push_back(pos, k);
  return row;
}

InvariantMonomial InvariantMonomial::from_row(const SparseRow& row) {
  InvariantMonomial m;
  m.exponents.assign(row.terms().begin(), row.terms().end());
  return m;
}

IntVector t_image(const FusionSystem& system, const InvariantMonomial& m) {
  IntVector out(system.gamma().size(), Integer(0));
  for (const auto& [pos, k] : m.exponents)
    for (const auto& [g, e] : system.t_image(pos)) out[g] += k * e;
  return out;
}

std::string to_string(const FusionSystem& system, const InvariantMonomial& m) {
  std::string out;
  auto append = [&](bool positive) {
    for (const auto& [pos, k] : m.exponents) {
      if ((k > 0) != positive) continue;
      if (!out.empty()) out += " * ";
      out += to_string(system.ring(), system.phi()[pos]);
      if (k != 1) out += "^" + k.get_str();
    }
  };
  append(true);
  append(false);
  return out.empty() ? "1" : out;
}

InvariantMonomial apply_automorphism(const FusionSystem& system, const InvariantMonomial& m,
                                     const Automorphism& rho) {
  require_automorphism(system, rho);
  InvariantMonomial out;
  for (const auto& [pos, k] : m.exponents)
    out.exponents.emplace_back(system.require_phi(apply_automorphism(system.phi()[pos], rho)), k);
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

InvariantBasis invariant_basis(const SystemPtr& system, const ZeroSet& zeros) {
  if (!system) throw ArgumentError("invariant_basis needs a ring");
  for (std::size_t k : zeros.members)
    if (k >= system->phi().size()) throw DomainMismatch("zero set does not belong to this ring");
  const ExponentMatrix A = build_exponent_matrix(*system, zeros);
  const TransformPair pair = hnf_with_transform(A.rows);

  std::vector<SparseRow> kernel;
  for (const SparseRow& h : kernel_basis_sparse(pair)) {
    SparseRow row;
    for (const auto& [i, k] : h.terms()) row.push_back(A.row_labels[i], k);
    kernel.push_back(std::move(row));
  }
  const std::size_t rank = kernel.size();
  kernel = hermite_normal_form(std::move(kernel), system->phi().size());
  if (kernel.size() != rank) throw InternalConsistencyError("kernel rows are linearly dependent");

  InvariantBasis basis{system, zeros, {}};
  basis.monomials.reserve(kernel.size());
  for (const auto& row : kernel) basis.monomials.push_back(InvariantMonomial::from_row(row));
  return basis;
}

std::optional<Complex> evaluate_monomial(const Solution& sol, const InvariantMonomial& m, double zero_tol) {
  check_domain(sol);
  Complex value(1);
  bool vanishes = false;
  for (const auto& [pos, k] : m.exponents) {
    if (pos >= sol.values.size()) throw DomainMismatch("monomial does not belong to the solution's ring");
    const Complex& v = sol.values[pos];
    if (is_zero(v, zero_tol)) {
      if (k < 0) return std::nullopt;
      vanishes = true;
      continue;
    }
    if (k == 1)
      value *= v;
    else if (k == -1)
      value /= v;
    else
      value *= v.pow(k);
  }
  if (vanishes) return Complex(0);
  return value;
}

bool EvaluationRecord::all_defined() const {
  return std::all_of(values.begin(), values.end(), [](const auto& v) { return v.has_value(); });
}

EvaluationRecord evaluate_basis(const Solution& sol, const InvariantBasis& basis, double zero_tol) {
  check_domain(sol);
  if (!basis.system || basis.system->phi().size() != sol.system->phi().size() ||
      basis.system->ring().labels() != sol.system->ring().labels())
    throw DomainMismatch("basis and solution '" + sol.name + "' belong to different rings");
  if (zero_set(sol, zero_tol) != basis.zeros)
    throw ZeroSetMismatch("solution '" + sol.name + "' has a different zero set than the basis");
  EvaluationRecord record{sol.name, {}};
  record.values.reserve(basis.size());
  for (const auto& m : basis.monomials) record.values.push_back(evaluate_monomial(sol, m, zero_tol));
  return record;
}

namespace {

LatticeCoordinates coordinates_for(const InvariantBasis& basis) {
  std::vector<SparseRow> rows;
  rows.reserve(basis.size());
  for (const auto& m : basis.monomials) rows.push_back(m.as_row());
  return LatticeCoordinates(std::move(rows), basis.system->phi().size());
}

SparseRow term_row(std::span<const std::size_t> positions) {
  std::vector<std::size_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  SparseRow row;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    row.push_back(sorted[i], Integer(static_cast<long>(j - i)));
    i = j;
  }
  return row;
}

}  // namespace

std::optional<IntVector> basis_coordinates(const InvariantBasis& basis, const InvariantMonomial& m) {
  return coordinates_for(basis).coordinates(m.as_row());
}

std::vector<LocalizedEquation> localize_pentagon(const FusionSystem& system, const ZeroSet& zeros,
                                                 const InvariantBasis& basis) {
  if (basis.zeros != zeros) throw ZeroSetMismatch("basis was computed for a different zero set");
  const LatticeCoordinates lattice = coordinates_for(basis);
  const auto instances = pentagon_instances(system);

  std::vector<LocalizedEquation> out;
  for (std::size_t n = 0; n < instances.size(); ++n) {
    const auto& eq = instances[n];
    std::vector<std::pair<int, SparseRow>> surviving;
    auto consider = [&](int sign, std::span<const std::size_t> positions) {
      for (std::size_t pos : positions)
        if (zeros.contains(pos)) return;
      surviving.emplace_back(sign, term_row(positions));
    };
    for (const auto& t : eq.lhs) consider(1, t);
    for (const auto& t : eq.rhs) consider(-1, t);
    if (surviving.empty()) continue;

    LocalizedEquation local{n, {}};
    const SparseRow& denominator = surviving.front().second;
    for (const auto& [sign, row] : surviving) {
      SparseRow ratio = row;
      ratio.subtract_multiple(Integer(1), denominator);
      auto coords = lattice.coordinates(ratio);
      if (!coords) throw InternalConsistencyError("pentagon term ratio is not in the invariant lattice");
      local.terms.push_back({sign, std::move(*coords)});
    }
    out.push_back(std::move(local));
  }
  return out;
}

Complex evaluate_localized(const LocalizedEquation& eq, const std::vector<Complex>& basis_values) {
  Complex sum(0);
  for (const auto& term : eq.terms) {
    if (term.coordinates.size() != basis_values.size()) throw ArgumentError("coordinate length mismatch");
    Complex product(term.sign);
    for (std::size_t j = 0; j < basis_values.size(); ++j)
      if (term.coordinates[j] != 0) product *= basis_values[j].pow(term.coordinates[j]);
    sum += product;
  }
  return sum;
}

std::optional<mpq_class> rational_value(const Complex& z, const RationalityOptions& options) {
  using boost::multiprecision::abs;
  if (abs(z.im()) >= options.tol) return std::nullopt;
  mpq_class q = best_rational(z.re(), options.max_denominator);
  if (abs(z.re() - Complex::from_rational(q).re()) >= options.tol) return std::nullopt;
  return q;
}

RationalityVerdict rationality_check(const EvaluationRecord& record, const RationalityOptions& options) {
  RationalityVerdict verdict;
  for (const auto& v : record.values) {
    std::optional<mpq_class> q;
    if (v) q = rational_value(*v, options);
    if (!q) verdict.rational = false;
    verdict.values.push_back(std::move(q));
  }
  return verdict;
}

CoverageReport phi_coverage_check(const InvariantBasis& basis) {
  const std::size_t n = basis.system->phi().size();
  std::vector<bool> seen(n, false);
  for (const auto& m : basis.monomials)
    for (const auto& [pos, k] : m.exponents) seen[pos] = true;
  CoverageReport report;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (seen[pos] || basis.zeros.contains(pos)) continue;
    report.covered = false;
    report.uncovered.push_back(pos);
  }
  return report;
}

}  // namespace fusioninv
