#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusioninv/lattice.hpp"
#include "fusioninv/numeric.hpp"
#include "fusioninv/symbols.hpp"

namespace fusioninv {

/// Π φ^k over a sparse support of Φ positions (ascending, nonzero exponents).
struct InvariantMonomial {
  std::vector<std::pair<std::size_t, Integer>> exponents;

  SparseRow as_row() const;
  static InvariantMonomial from_row(const SparseRow& row);
  friend bool operator==(const InvariantMonomial&, const InvariantMonomial&) = default;
};

/// Net gauge weight of a monomial over Γ (zero vector iff gauge invariant).
IntVector t_image(const FusionSystem& system, const InvariantMonomial& m);

/// Display form: variables in canonical Φ order, positive exponents before negative.
std::string to_string(const FusionSystem& system, const InvariantMonomial& m);

InvariantMonomial apply_automorphism(const FusionSystem& system, const InvariantMonomial& m,
                                     const Automorphism& rho);

/// A basis of the gauge-invariant monomials supported on Φ \ zeros.
struct InvariantBasis {
  SystemPtr system;
  ZeroSet zeros;
  std::vector<InvariantMonomial> monomials;

  std::size_t size() const noexcept { return monomials.size(); }
};

/// Exponent matrix → HNF with transform → kernel rows → monomials. The kernel
/// lattice is put in Hermite normal form, so the result depends only on the zero set.
InvariantBasis invariant_basis(const SystemPtr& system, const ZeroSet& zeros);

/// nullopt (UNDEFINED) iff a negative exponent sits on a value below zero_tol.
std::optional<Complex> evaluate_monomial(const Solution& sol, const InvariantMonomial& m,
                                         double zero_tol = NumericPolicy{}.zero_tol);

struct EvaluationRecord {
  std::string solution;
  std::vector<std::optional<Complex>> values;

  bool all_defined() const;
};

/// Throws ZeroSetMismatch when zero_set(sol) differs from basis.zeros.
EvaluationRecord evaluate_basis(const Solution& sol, const InvariantBasis& basis,
                                double zero_tol = NumericPolicy{}.zero_tol);

/// Coordinates of the lattice vector of m in the basis; nullopt if m is not in its span.
std::optional<IntVector> basis_coordinates(const InvariantBasis& basis, const InvariantMonomial& m);

/// Σ_k sign_k · Π_j m_j^{coords_kj} = 0 over basis monomials m_j; the term with all
/// coordinates zero is the constant (the chosen denominator).
struct LocalizedTerm {
  int sign = 1;
  IntVector coordinates;
};

struct LocalizedEquation {
  std::size_t instance = 0;  // index into pentagon_instances
  std::vector<LocalizedTerm> terms;
};

/// Divides every pentagon instance by its canonical-first surviving term and rewrites
/// the ratios in basis coordinates. Instances whose terms all vanish are dropped.
std::vector<LocalizedEquation> localize_pentagon(const FusionSystem& system, const ZeroSet& zeros,
                                                 const InvariantBasis& basis);

/// Σ_k sign_k Π_j values_j^{coords_kj}.
Complex evaluate_localized(const LocalizedEquation& eq, const std::vector<Complex>& basis_values);

struct RationalityOptions {
  mpz_class max_denominator = 1000000;
  double tol = 1e-30;
};

struct RationalityVerdict {
  bool rational = true;
  std::vector<std::optional<mpq_class>> values;  // nullopt where not rational
};

/// A value passes when |im| < tol and re is within tol of p/q with q <= max_denominator.
std::optional<mpq_class> rational_value(const Complex& z, const RationalityOptions& options = {});
RationalityVerdict rationality_check(const EvaluationRecord& record, const RationalityOptions& options = {});

struct CoverageReport {
  bool covered = true;
  std::vector<std::size_t> uncovered;  // Φ positions
};

/// Every φ ∈ Φ \ zeros must carry a nonzero exponent in some basis monomial.
CoverageReport phi_coverage_check(const InvariantBasis& basis);

}  // namespace fusioninv
