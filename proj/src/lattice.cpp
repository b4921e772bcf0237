#include "fusioninv/lattice.hpp"

#include <algorithm>
#include <utility>

#include "fusioninv/errors.hpp"

namespace fusioninv {

SparseRow SparseRow::from_dense(const IntVector& v) {
  SparseRow row;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) row.terms_.emplace_back(j, v[j]);
  return row;
}

SparseRow SparseRow::unit(std::size_t column) {
  SparseRow row;
  row.terms_.emplace_back(column, Integer(1));
  return row;
}

Integer SparseRow::at(std::size_t column) const {
  const Integer* v = find(column);
  return v ? *v : Integer(0);
}

const Integer* SparseRow::find(std::size_t column) const {
  if (terms_.empty() || terms_.back().first < column) return nullptr;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), column,
                             [](const auto& t, std::size_t c) { return t.first < c; });
  if (it == terms_.end() || it->first != column) return nullptr;
  return &it->second;
}

void SparseRow::subtract_multiple(const Integer& q, const SparseRow& other) {
  if (q == 0 || other.terms_.empty()) return;
  // In place when the other row's support is already contained in ours.
  bool contained = other.terms_.size() <= terms_.size();
  auto probe = terms_.cbegin();
  for (auto y = other.terms_.cbegin(); contained && y != other.terms_.cend(); ++y) {
    while (probe != terms_.cend() && probe->first < y->first) ++probe;
    contained = probe != terms_.cend() && probe->first == y->first;
  }
  if (contained) {
    auto x = terms_.begin();
    bool cancelled = false;
    for (const auto& [col, v] : other.terms_) {
      while (x->first < col) ++x;
      mpz_submul(x->second.get_mpz_t(), q.get_mpz_t(), v.get_mpz_t());
      cancelled |= x->second == 0;
    }
    if (cancelled) std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
    return;
  }
  std::vector<std::pair<std::size_t, Integer>> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto x = terms_.begin();
  auto y = other.terms_.begin();
  while (x != terms_.end() || y != other.terms_.end()) {
    if (y == other.terms_.end() || (x != terms_.end() && x->first < y->first)) {
      out.push_back(std::move(*x++));
    } else if (x == terms_.end() || y->first < x->first) {
      out.emplace_back(y->first, Integer());
      mpz_mul(out.back().second.get_mpz_t(), q.get_mpz_t(), y->second.get_mpz_t());
      mpz_neg(out.back().second.get_mpz_t(), out.back().second.get_mpz_t());
      ++y;
    } else {
      mpz_submul(x->second.get_mpz_t(), q.get_mpz_t(), y->second.get_mpz_t());
      if (x->second != 0) out.push_back(std::move(*x));
      ++x;
      ++y;
    }
  }
  terms_ = std::move(out);
}

void SparseRow::negate() {
  for (auto& t : terms_) t.second = -t.second;
}

IntVector SparseRow::to_dense(std::size_t dim) const {
  IntVector v(dim, Integer(0));
  for (const auto& [j, x] : terms_) {
    if (j >= dim) throw ArgumentError("sparse row exceeds the requested dimension");
    v[j] = x;
  }
  return v;
}

void SparseRow::push_back(std::size_t column, Integer value) {
  if (!terms_.empty() && terms_.back().first >= column) throw ArgumentError("sparse row columns must increase");
  if (value != 0) terms_.emplace_back(column, std::move(value));
}

IntMatrix to_dense(std::span<const SparseRow> rows, std::size_t dim) {
  IntMatrix out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.to_dense(dim));
  return out;
}

ExponentMatrix build_exponent_matrix(const FusionSystem& system, const ZeroSet& zeros) {
  ExponentMatrix m;
  m.columns = system.gamma().size();
  for (std::size_t k = 0; k < system.phi().size(); ++k) {
    if (zeros.contains(k)) continue;
    IntVector row(m.columns, Integer(0));
    for (const auto& [g, e] : system.t_image(k)) row[g] = e;
    m.row_labels.push_back(k);
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

struct Reduction {
  std::vector<SparseRow> rows;
  std::vector<SparseRow> transform;  // empty when not tracked
  std::size_t rank = 0;
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Row HNF by repeated Euclidean steps on each column; the transform, when tracked,
/// receives every row operation applied to the matrix. Rows are bucketed by leading
/// column so each column only touches the rows that start there. Output order: pivot
/// rows by column, then the zero rows in input order.
Reduction reduce(std::vector<SparseRow> rows, std::size_t columns, bool track) {
  const std::size_t m = rows.size();
  std::vector<SparseRow> A = std::move(rows);
  std::vector<SparseRow> H;
  if (track) {
    H.reserve(m);
    for (std::size_t i = 0; i < m; ++i) H.push_back(SparseRow::unit(i));
  }

  std::vector<std::vector<std::size_t>> bucket(columns);
  for (std::size_t k = 0; k < m; ++k)
    if (!A[k].empty()) {
      if (A[k].leading_column() >= columns) throw ArgumentError("row exceeds the column count");
      bucket[A[k].leading_column()].push_back(k);
    }

  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(m, false);
  for (std::size_t j = 0; j < columns; ++j) {
    std::vector<std::size_t> cand = std::move(bucket[j]);
    if (cand.empty()) continue;
    std::sort(cand.begin(), cand.end());
    while (cand.size() > 1) {
      std::size_t p = cand.front();
      for (std::size_t k : cand)
        if (mpz_cmpabs(A[k].leading_value().get_mpz_t(), A[p].leading_value().get_mpz_t()) < 0) p = k;
      std::vector<std::size_t> next = {p};
      for (std::size_t k : cand) {
        if (k == p) continue;
        Integer q = trunc_div(A[k].leading_value(), A[p].leading_value());
        A[k].subtract_multiple(q, A[p]);
        if (track) H[k].subtract_multiple(q, H[p]);
        if (A[k].empty()) continue;
        if (A[k].leading_column() == j)
          next.push_back(k);
        else
          bucket[A[k].leading_column()].push_back(k);
      }
      std::sort(next.begin(), next.end());
      cand = std::move(next);
    }
    const std::size_t p = cand.front();
    if (A[p].leading_value() < 0) {
      A[p].negate();
      if (track) H[p].negate();
    }
    const Integer& pivot = A[p].leading_value();
    for (std::size_t i : pivots) {
      const Integer* v = A[i].find(j);
      if (!v) continue;
      Integer q = floor_div(*v, pivot);
      if (q == 0) continue;
      A[i].subtract_multiple(q, A[p]);
      if (track) H[i].subtract_multiple(q, H[p]);
    }
    pivots.push_back(p);
    is_pivot[p] = true;
  }

  Reduction out;
  out.rank = pivots.size();
  std::vector<std::size_t> order = pivots;
  for (std::size_t k = 0; k < m; ++k)
    if (!is_pivot[k]) order.push_back(k);
  out.rows.reserve(m);
  for (std::size_t k : order) out.rows.push_back(std::move(A[k]));
  if (track) {
    out.transform.reserve(m);
    for (std::size_t k : order) out.transform.push_back(std::move(H[k]));
  }
  return out;
}

std::vector<SparseRow> sparse_rows(const IntMatrix& A) {
  std::vector<SparseRow> rows;
  rows.reserve(A.size());
  for (const auto& v : A) rows.push_back(SparseRow::from_dense(v));
  return rows;
}

std::size_t common_width(std::span<const IntVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw ArgumentError("matrix rows have different lengths");
  return n;
}

}  // namespace

TransformPair hnf_with_transform(const IntMatrix& A) {
  const std::size_t columns = common_width(A);
  Reduction red = reduce(sparse_rows(A), columns, true);
  TransformPair out;
  out.H = std::move(red.transform);
  out.HA = to_dense(red.rows, columns);
  out.rank = red.rank;
  return out;
}

std::vector<SparseRow> hermite_normal_form(std::vector<SparseRow> rows, std::size_t columns) {
  Reduction red = reduce(std::move(rows), columns, false);
  red.rows.resize(red.rank);
  return std::move(red.rows);
}

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  const std::size_t columns = common_width(rows);
  return to_dense(hermite_normal_form(sparse_rows(rows), columns), columns);
}

std::vector<SparseRow> kernel_basis_sparse(const TransformPair& pair) {
  return {pair.H.begin() + static_cast<std::ptrdiff_t>(pair.rank), pair.H.end()};
}

std::vector<IntVector> kernel_basis(const TransformPair& pair) {
  return to_dense(kernel_basis_sparse(pair), pair.H.size());
}

bool lattice_equal(std::span<const IntVector> lhs, std::span<const IntVector> rhs) {
  const std::size_t n = lhs.empty() ? common_width(rhs) : common_width(lhs);
  if (!rhs.empty() && common_width(rhs) != n) throw ArgumentError("dimension mismatch in lattice comparison");
  IntMatrix a(lhs.begin(), lhs.end());
  IntMatrix b(rhs.begin(), rhs.end());
  return hermite_normal_form(sparse_rows(a), n) == hermite_normal_form(sparse_rows(b), n);
}

LatticeCoordinates::LatticeCoordinates(std::vector<SparseRow> basis, std::size_t dim)
    : dim_(dim), basis_size_(basis.size()) {
  for (const auto& row : basis)
    if (!row.empty() && row.terms().back().first >= dim) throw ArgumentError("basis vector exceeds dimension");
  Reduction red = reduce(std::move(basis), dim, true);
  if (red.rank != basis_size_) throw ArgumentError("lattice basis vectors are linearly dependent");
  hnf_ = std::move(red.rows);
  transform_ = std::move(red.transform);
}

std::optional<IntVector> LatticeCoordinates::coordinates(const SparseRow& v) const {
  SparseRow w = v;
  IntVector y(basis_size_, Integer(0));
  for (std::size_t k = 0; k < hnf_.size() && !w.empty(); ++k) {
    const std::size_t col = hnf_[k].leading_column();
    if (w.leading_column() < col) return std::nullopt;
    if (w.leading_column() > col) continue;
    const Integer& p = hnf_[k].leading_value();
    if (!mpz_divisible_p(w.leading_value().get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    Integer q = w.leading_value() / p;
    w.subtract_multiple(q, hnf_[k]);
    y[k] = std::move(q);
  }
  if (!w.empty()) return std::nullopt;
  IntVector x(basis_size_, Integer(0));
  for (std::size_t k = 0; k < basis_size_; ++k) {
    if (y[k] == 0) continue;
    for (const auto& [j, h] : transform_[k].terms()) x[j] += y[k] * h;
  }
  return x;
}

}  // namespace fusioninv
