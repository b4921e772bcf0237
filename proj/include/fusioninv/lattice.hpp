#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fusioninv/ring.hpp"
#include "fusioninv/symbols.hpp"

namespace fusioninv {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Sparse integer row: (column, value) pairs, columns ascending, no stored zeros.
class SparseRow {
 public:
  SparseRow() = default;
  static SparseRow from_dense(const IntVector& v);
  static SparseRow unit(std::size_t column);

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t nonzeros() const noexcept { return terms_.size(); }
  /// Column of the first nonzero entry; only valid when !empty().
  std::size_t leading_column() const { return terms_.front().first; }
  const Integer& leading_value() const { return terms_.front().second; }
  Integer at(std::size_t column) const;
  /// Entry at `column`, or nullptr when it is zero.
  const Integer* find(std::size_t column) const;
  const std::vector<std::pair<std::size_t, Integer>>& terms() const noexcept { return terms_; }

  /// this -= q * other
  void subtract_multiple(const Integer& q, const SparseRow& other);
  void negate();
  IntVector to_dense(std::size_t dim) const;

  void push_back(std::size_t column, Integer value);

  friend bool operator==(const SparseRow&, const SparseRow&) = default;

 private:
  std::vector<std::pair<std::size_t, Integer>> terms_;
};

/// Rows: exponent vectors of t(φ) over Γ for φ ∈ Φ× = Φ \ zeros.
struct ExponentMatrix {
  std::vector<std::size_t> row_labels;  // Φ positions, canonical order
  std::size_t columns = 0;              // |Γ|
  IntMatrix rows;
};

ExponentMatrix build_exponent_matrix(const FusionSystem& system, const ZeroSet& zeros);

/// H·A = HA with H unimodular and HA in row Hermite normal form. H is stored
/// sparsely because it is |Φ×| square.
struct TransformPair {
  std::vector<SparseRow> H;
  IntMatrix HA;
  std::size_t rank = 0;  // nonzero rows of HA, which come first
};

/// Row HNF: pivot columns strictly increasing, pivots positive, entries above a pivot
/// in [0, pivot), zero rows last. Exact GMP arithmetic.
TransformPair hnf_with_transform(const IntMatrix& A);

/// HNF without the transform, sparse in and out. Zero rows are dropped.
std::vector<SparseRow> hermite_normal_form(std::vector<SparseRow> rows, std::size_t columns);
IntMatrix hermite_normal_form(const IntMatrix& rows);

/// Rows of H whose HA row is zero, in H order: a basis of the left kernel of A.
std::vector<IntVector> kernel_basis(const TransformPair& pair);
std::vector<SparseRow> kernel_basis_sparse(const TransformPair& pair);

/// Same integer row span. Throws ArgumentError on a dimension mismatch.
bool lattice_equal(std::span<const IntVector> lhs, std::span<const IntVector> rhs);

/// Solves x·B = v over the integers for a fixed basis B (rows linearly independent).
class LatticeCoordinates {
 public:
  LatticeCoordinates(std::vector<SparseRow> basis, std::size_t dim);

  std::size_t rank() const noexcept { return basis_size_; }
  std::size_t dim() const noexcept { return dim_; }
  /// Integer coordinates of v in the basis, or nullopt if v is not in the lattice.
  std::optional<IntVector> coordinates(const SparseRow& v) const;
  bool contains(const SparseRow& v) const { return coordinates(v).has_value(); }

 private:
  std::size_t dim_;
  std::size_t basis_size_;
  std::vector<SparseRow> hnf_;        // HNF of the basis
  std::vector<SparseRow> transform_;  // hnf_ = transform_ · basis
};

IntMatrix to_dense(std::span<const SparseRow> rows, std::size_t dim);

}  // namespace fusioninv
