#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusioninv/numeric.hpp"
#include "fusioninv/ring.hpp"

namespace fusioninv {

/// The F-symbol variable Φ_{abc}^{d;ef}: e is the channel of a⊗b, f of b⊗c.
struct PhiIndex {
  LabelId a, b, c, d, e, f;

  friend bool operator==(const PhiIndex&, const PhiIndex&) = default;
};

/// Canonical order: (a,b,c,d) lexicographic, then f, then e. Within an F-matrix block
/// this enumerates entries column by column.
bool canonical_less(const PhiIndex& x, const PhiIndex& y);

/// True iff γ_ab^e, γ_ec^d, γ_bc^f and γ_af^d are all in Γ.
bool admissible(const BasedRing& ring, const PhiIndex& p);

/// Φ(R,B) in canonical order. Throws NotMultiplicityFree.
std::vector<PhiIndex> phi_set(const BasedRing& ring);

std::string to_string(const BasedRing& ring, const PhiIndex& p);
std::string to_string(const BasedRing& ring, const FusionTriple& t);

/// One multiplicity-free pentagon identity
///   Σ_lhs Φ_{fcd}^{e;ih} Φ_{abh}^{e;fj} = Σ_g Φ_{abc}^{i;fg} Φ_{agd}^{e;ij} Φ_{bcd}^{j;gh}
/// for the outer labels (a,b,c,d,e,f,h,i,j). Terms hold positions into Φ. The left side
/// is empty when γ_fh^e ∉ Γ.
struct PentagonEquation {
  std::array<LabelId, 9> outer;
  std::vector<std::array<std::size_t, 2>> lhs;
  std::vector<std::array<std::size_t, 3>> rhs;
  std::vector<LabelId> rhs_labels;  // the summed g of each rhs term
};

/// Immutable bundle of a validated multiplicity-free ring with Γ, Φ, lookups and
/// its automorphism group.
class FusionSystem {
 public:
  /// Throws NotMultiplicityFree or ValidationError (ring axioms violated).
  static std::shared_ptr<const FusionSystem> create(BasedRing ring);

  const BasedRing& ring() const noexcept { return ring_; }
  std::span<const FusionTriple> gamma() const noexcept { return gamma_; }
  std::span<const PhiIndex> phi() const noexcept { return phi_; }
  const std::vector<Automorphism>& automorphisms() const noexcept { return automorphisms_; }

  std::optional<std::size_t> gamma_index(LabelId a, LabelId b, LabelId c) const;
  std::optional<std::size_t> phi_position(const PhiIndex& p) const;
  std::size_t require_phi(const PhiIndex& p) const;

  /// Contiguous Φ ranges sharing (a,b,c,d): the F-matrix blocks.
  struct Block {
    std::size_t begin, end;
    std::vector<LabelId> rows;  // e channels, ascending
    std::vector<LabelId> cols;  // f channels, ascending
  };
  std::span<const Block> blocks() const noexcept { return blocks_; }

  /// Gauge weight t(φ) as (Γ index, exponent) pairs, Γ-ascending, zeros dropped.
  const std::vector<std::pair<std::size_t, int>>& t_image(std::size_t phi_pos) const {
    return t_images_.at(phi_pos);
  }

 private:
  explicit FusionSystem(BasedRing ring);

  static std::uint64_t pack(const PhiIndex& p, std::size_t n);

  BasedRing ring_;
  std::vector<FusionTriple> gamma_;
  std::vector<std::size_t> gamma_lookup_;  // dense |B|^3, npos when absent
  std::vector<PhiIndex> phi_;
  std::unordered_map<std::uint64_t, std::size_t> phi_lookup_;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::pair<std::size_t, int>>> t_images_;
  std::vector<Automorphism> automorphisms_;
};

using SystemPtr = std::shared_ptr<const FusionSystem>;

std::vector<PentagonEquation> pentagon_instances(const FusionSystem& system);

/// A point F: Φ → k, values aligned with system->phi().
struct Solution {
  SystemPtr system;
  std::string name;
  std::string note;
  std::vector<Complex> values;

  const Complex& at(const PhiIndex& p) const { return values.at(system->require_phi(p)); }
};

/// Throws DomainMismatch unless sol.values covers exactly sol.system's Φ.
void check_domain(const Solution& sol);

struct PentagonResidual {
  std::size_t instance;
  Real residual;
};

struct SingularBlock {
  std::array<LabelId, 4> abcd;
  Real det_modulus;
};

struct VerificationReport {
  std::vector<std::size_t> unit_violations;      // Φ_{a1b}^c != 1
  std::vector<std::size_t> nonzero_violations;   // Φ_{aa*a}^{a;11} ≈ 0
  std::vector<PentagonResidual> pentagon_failures;
  std::vector<SingularBlock> singular_blocks;
  std::size_t pentagon_count = 0;
  Real max_residual = 0;

  bool passed() const noexcept {
    return unit_violations.empty() && nonzero_violations.empty() && pentagon_failures.empty() &&
           singular_blocks.empty();
  }
};

VerificationReport verify_solution(const Solution& sol, const NumericPolicy& policy = {});

/// Positions into Φ, ascending.
struct ZeroSet {
  std::vector<std::size_t> members;

  bool contains(std::size_t pos) const;
  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
  friend auto operator<=>(const ZeroSet&, const ZeroSet&) = default;
};

ZeroSet make_zero_set(std::vector<std::size_t> members);
ZeroSet zero_set(const Solution& sol, double zero_tol = NumericPolicy{}.zero_tol);

/// g: Γ → k^×, aligned with system->gamma().
struct GaugeVector {
  std::vector<Complex> values;
};

bool is_normalized(const FusionSystem& system, const GaugeVector& g);

/// (g·F)_{abc}^{d;ef} = g_ab^e g_ec^d F_{abc}^{d;ef} (g_bc^f)^{-1} (g_af^d)^{-1}.
/// Throws ArgumentError on a zero gauge entry.
Solution apply_gauge(const Solution& sol, const GaugeVector& g, double zero_tol = NumericPolicy{}.zero_tol);

/// Entry-wise product (g·h)(γ) = g(γ) h(γ).
GaugeVector compose(const GaugeVector& g, const GaugeVector& h);

/// Deterministic in seed; 1 on γ_{a1}^a and γ_{1b}^b, elsewhere ±p/q with p,q ∈ [1,100].
GaugeVector sample_normalized_gauge(const FusionSystem& system, std::uint64_t seed);

/// ρ·Φ_{abc}^{d;ef} = Φ_{ρ(a)ρ(b)ρ(c)}^{ρ(d);ρ(e)ρ(f)}.
PhiIndex apply_automorphism(const PhiIndex& p, const Automorphism& rho);
ZeroSet apply_automorphism(const FusionSystem& system, const ZeroSet& zeros, const Automorphism& rho);
/// (ρ·F)(φ) = F(ρ·φ). Note zero_set(ρ·F) = ρ⁻¹·zero_set(F).
Solution apply_automorphism(const Solution& sol, const Automorphism& rho);

/// Throws DomainMismatch if rho is not an automorphism of the system's ring.
void require_automorphism(const FusionSystem& system, const Automorphism& rho);

}  // namespace fusioninv
