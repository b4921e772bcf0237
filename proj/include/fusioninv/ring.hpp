#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusioninv {

using Integer = mpz_class;

/// Position of a basis element in the declared basis order.
using LabelId = std::size_t;

struct FusionRule {
  LabelId a, b, c;
  Integer multiplicity;
};

/// A based ring: basis labels, unit, duality and structure constants N_{ab}^c.
/// Constructed unchecked; run validate_ring before relying on the axioms.
class BasedRing {
 public:
  BasedRing() = default;
  BasedRing(std::string name, std::vector<std::string> basis, LabelId unit,
            std::vector<LabelId> dual, const std::vector<FusionRule>& fusion);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(LabelId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<LabelId> find(std::string_view id) const;
  LabelId unit() const noexcept { return unit_; }
  LabelId dual(LabelId x) const { return dual_.at(x); }
  const std::vector<LabelId>& duals() const noexcept { return dual_; }

  const Integer& N(LabelId a, LabelId b, LabelId c) const { return n_[(a * size() + b) * size() + c]; }
  bool admissible(LabelId a, LabelId b, LabelId c) const { return N(a, b, c) != 0; }
  /// Labels c with N_{ab}^c != 0, ascending.
  const std::vector<LabelId>& products(LabelId a, LabelId b) const { return products_[a * size() + b]; }

  bool multiplicity_free() const noexcept { return multiplicity_free_; }
  /// Nonzero structure constants in canonical (a,b,c) order.
  std::vector<FusionRule> fusion_rules() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  LabelId unit_ = 0;
  std::vector<LabelId> dual_;
  std::vector<Integer> n_;
  std::vector<std::vector<LabelId>> products_;
  bool multiplicity_free_ = true;
};

/// Parses the JSON ring format
/// {"basis": [...], "unit": "1", "dual": {...}, "fusion": [["a","b","c",N], ...]}.
/// Throws ParseError with the JSON location or offending field.
BasedRing parse_ring(std::string_view text, std::string name = {});

enum class RingViolationKind {
  UnitAxiom,
  Associativity,
  DualNotInvolution,
  DualUnit,
  DualityCompatibility,
  DualSymmetry,
};

std::string_view to_string(RingViolationKind kind);

struct RingViolation {
  RingViolationKind kind;
  std::vector<LabelId> witness;
  std::string message;
};

struct RingReport {
  std::vector<RingViolation> violations;
  bool multiplicity_free = true;

  bool clean() const noexcept { return violations.empty(); }
};

/// Checks the unit, associativity and duality axioms. With `strict`, also checks
/// N_{XY}^Z == N_{Y*X*}^{Z*}.
RingReport validate_ring(const BasedRing& ring, bool strict = false);

/// γ_{ab}^c: a nonzero structure constant.
struct FusionTriple {
  LabelId a, b, c;
  std::size_t index = 0;

  friend bool operator==(const FusionTriple& x, const FusionTriple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

/// Γ(R,B) in lexicographic (a,b,c) order; index i at position i.
std::vector<FusionTriple> gamma_set(const BasedRing& ring);

/// N_{X1...Xn}^Y by left-to-right contraction. For one factor returns δ_{X1,Y}.
Integer n_extended(const BasedRing& ring, std::span<const LabelId> factors, LabelId target);

/// A basis permutation; image[x] = ρ(x).
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<LabelId> image);
  static Automorphism identity(std::size_t n);

  LabelId operator()(LabelId x) const { return image_.at(x); }
  const std::vector<LabelId>& image() const noexcept { return image_; }
  std::size_t size() const noexcept { return image_.size(); }
  bool is_identity() const;
  Automorphism inverse() const;
  /// (this ∘ other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other) const;
  /// Disjoint-cycle notation over the ring's labels, "()" for the identity.
  std::string cycle_string(const BasedRing& ring) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<LabelId> image_;
};

bool is_automorphism(const BasedRing& ring, const Automorphism& rho);

/// All structure-preserving basis permutations fixing the unit, in lexicographic
/// order of their image lists (identity first).
std::vector<Automorphism> automorphism_group(const BasedRing& ring);

/// Parses "(a b)(c d e)" cycle notation; "()" or "id" is the identity.
Automorphism parse_cycles(const BasedRing& ring, std::string_view text);

}  // namespace fusioninv
