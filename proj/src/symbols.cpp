#include "fusioninv/symbols.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>
#include <utility>

#include "fusioninv/errors.hpp"

namespace fusioninv {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

auto key(const PhiIndex& p) { return std::tie(p.a, p.b, p.c, p.d, p.f, p.e); }

}  // namespace

bool canonical_less(const PhiIndex& x, const PhiIndex& y) { return key(x) < key(y); }

bool admissible(const BasedRing& ring, const PhiIndex& p) {
  const std::size_t n = ring.size();
  if (p.a >= n || p.b >= n || p.c >= n || p.d >= n || p.e >= n || p.f >= n) return false;
  return ring.admissible(p.a, p.b, p.e) && ring.admissible(p.e, p.c, p.d) && ring.admissible(p.b, p.c, p.f) &&
         ring.admissible(p.a, p.f, p.d);
}

std::vector<PhiIndex> phi_set(const BasedRing& ring) {
  if (!ring.multiplicity_free()) throw NotMultiplicityFree("ring '" + ring.name() + "' is not multiplicity free");
  const std::size_t n = ring.size();
  std::vector<PhiIndex> out;
  for (LabelId a = 0; a < n; ++a)
    for (LabelId b = 0; b < n; ++b)
      for (LabelId c = 0; c < n; ++c)
        for (LabelId d = 0; d < n; ++d)
          for (LabelId f : ring.products(b, c)) {
            if (!ring.admissible(a, f, d)) continue;
            for (LabelId e : ring.products(a, b))
              if (ring.admissible(e, c, d)) out.push_back({a, b, c, d, e, f});
          }
  return out;
}

std::string to_string(const BasedRing& ring, const PhiIndex& p) {
  return "Phi[" + ring.label(p.a) + "," + ring.label(p.b) + "," + ring.label(p.c) + "; " + ring.label(p.d) + "; " +
         ring.label(p.e) + "," + ring.label(p.f) + "]";
}

std::string to_string(const BasedRing& ring, const FusionTriple& t) {
  return "gamma[" + ring.label(t.a) + "," + ring.label(t.b) + "; " + ring.label(t.c) + "]";
}

std::shared_ptr<const FusionSystem> FusionSystem::create(BasedRing ring) {
  if (!ring.multiplicity_free()) throw NotMultiplicityFree("ring '" + ring.name() + "' is not multiplicity free");
  RingReport report = validate_ring(ring);
  if (!report.clean())
    throw ValidationError("ring '" + ring.name() + "' is not a based ring: " + report.violations.front().message);
  return std::shared_ptr<const FusionSystem>(new FusionSystem(std::move(ring)));
}

std::uint64_t FusionSystem::pack(const PhiIndex& p, std::size_t n) {
  std::uint64_t k = 0;
  for (LabelId x : {p.a, p.b, p.c, p.d, p.e, p.f}) k = k * n + x;
  return k;
}

FusionSystem::FusionSystem(BasedRing ring) : ring_(std::move(ring)) {
  const std::size_t n = ring_.size();
  gamma_ = gamma_set(ring_);
  gamma_lookup_.assign(n * n * n, npos);
  for (const auto& t : gamma_) gamma_lookup_[(t.a * n + t.b) * n + t.c] = t.index;

  phi_ = phi_set(ring_);
  phi_lookup_.reserve(phi_.size());
  for (std::size_t i = 0; i < phi_.size(); ++i) phi_lookup_.emplace(pack(phi_[i], n), i);

  for (std::size_t i = 0; i < phi_.size();) {
    const PhiIndex& p = phi_[i];
    Block block{i, i, {}, {}};
    while (block.end < phi_.size()) {
      const PhiIndex& q = phi_[block.end];
      if (q.a != p.a || q.b != p.b || q.c != p.c || q.d != p.d) break;
      block.rows.push_back(q.e);
      block.cols.push_back(q.f);
      ++block.end;
    }
    for (auto* v : {&block.rows, &block.cols}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    i = block.end;
    blocks_.push_back(std::move(block));
  }

  t_images_.reserve(phi_.size());
  for (const auto& p : phi_) {
    std::vector<std::pair<std::size_t, int>> terms = {{*gamma_index(p.a, p.b, p.e), 1},
                                                      {*gamma_index(p.e, p.c, p.d), 1},
                                                      {*gamma_index(p.b, p.c, p.f), -1},
                                                      {*gamma_index(p.a, p.f, p.d), -1}};
    std::sort(terms.begin(), terms.end());
    std::vector<std::pair<std::size_t, int>> merged;
    for (const auto& [g, k] : terms) {
      if (!merged.empty() && merged.back().first == g)
        merged.back().second += k;
      else
        merged.emplace_back(g, k);
    }
    std::erase_if(merged, [](const auto& t) { return t.second == 0; });
    t_images_.push_back(std::move(merged));
  }
  automorphisms_ = automorphism_group(ring_);
}

std::optional<std::size_t> FusionSystem::gamma_index(LabelId a, LabelId b, LabelId c) const {
  const std::size_t n = ring_.size();
  if (a >= n || b >= n || c >= n) return std::nullopt;
  std::size_t k = gamma_lookup_[(a * n + b) * n + c];
  if (k == npos) return std::nullopt;
  return k;
}

std::optional<std::size_t> FusionSystem::phi_position(const PhiIndex& p) const {
  if (!admissible(ring_, p)) return std::nullopt;
  auto it = phi_lookup_.find(pack(p, ring_.size()));
  if (it == phi_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FusionSystem::require_phi(const PhiIndex& p) const {
  auto pos = phi_position(p);
  if (!pos) throw DomainMismatch("index is not an admissible F-symbol of ring '" + ring_.name() + "'");
  return *pos;
}

std::vector<PentagonEquation> pentagon_instances(const FusionSystem& system) {
  const BasedRing& R = system.ring();
  const std::size_t n = R.size();
  auto at = [&](LabelId a, LabelId b, LabelId c, LabelId d, LabelId e, LabelId f) {
    return system.require_phi({a, b, c, d, e, f});
  };
  std::vector<PentagonEquation> out;
  for (LabelId a = 0; a < n; ++a)
    for (LabelId b = 0; b < n; ++b)
      for (LabelId c = 0; c < n; ++c)
        for (LabelId d = 0; d < n; ++d)
          for (LabelId e = 0; e < n; ++e)
            for (LabelId f : R.products(a, b))
              for (LabelId h : R.products(c, d))
                for (LabelId i : R.products(f, c)) {
                  if (!R.admissible(i, d, e)) continue;
                  for (LabelId j : R.products(b, h)) {
                    if (!R.admissible(a, j, e)) continue;
                    PentagonEquation eq;
                    eq.outer = {a, b, c, d, e, f, h, i, j};
                    if (R.admissible(f, h, e)) eq.lhs.push_back({at(f, c, d, e, i, h), at(a, b, h, e, f, j)});
                    for (LabelId g : R.products(b, c)) {
                      if (!R.admissible(a, g, i) || !R.admissible(g, d, j)) continue;
                      eq.rhs.push_back({at(a, b, c, i, f, g), at(a, g, d, e, i, j), at(b, c, d, j, g, h)});
                      eq.rhs_labels.push_back(g);
                    }
                    out.push_back(std::move(eq));
                  }
                }
  return out;
}

void check_domain(const Solution& sol) {
  if (!sol.system) throw DomainMismatch("solution '" + sol.name + "' has no ring");
  if (sol.values.size() != sol.system->phi().size())
    throw DomainMismatch("solution '" + sol.name + "' has " + std::to_string(sol.values.size()) +
                         " values but the ring has " + std::to_string(sol.system->phi().size()) + " F-symbols");
}

namespace {

Complex determinant(std::vector<std::vector<Complex>> m) {
  const std::size_t n = m.size();
  Complex det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (m[r][col].norm() > m[pivot][col].norm()) pivot = r;
    if (m[pivot][col].norm() == 0) return Complex(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Complex inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex factor = m[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace

VerificationReport verify_solution(const Solution& sol, const NumericPolicy& policy) {
  check_domain(sol);
  const FusionSystem& S = *sol.system;
  const BasedRing& R = S.ring();
  VerificationReport report;
  const Complex one(1);

  for (std::size_t k = 0; k < S.phi().size(); ++k) {
    const PhiIndex& p = S.phi()[k];
    if (p.b == R.unit() && !approx_equal(sol.values[k], one, policy.tol)) report.unit_violations.push_back(k);
    if (p.b == R.dual(p.a) && p.c == p.a && p.d == p.a && p.e == R.unit() && p.f == R.unit() &&
        is_zero(sol.values[k], policy.zero_tol))
      report.nonzero_violations.push_back(k);
  }

  const auto equations = pentagon_instances(S);
  report.pentagon_count = equations.size();
  for (std::size_t k = 0; k < equations.size(); ++k) {
    const auto& eq = equations[k];
    Complex diff(0);
    for (const auto& t : eq.lhs) diff += sol.values[t[0]] * sol.values[t[1]];
    for (const auto& t : eq.rhs) diff -= sol.values[t[0]] * sol.values[t[1]] * sol.values[t[2]];
    Real r = diff.abs();
    if (r > report.max_residual) report.max_residual = r;
    if (r > policy.tol) report.pentagon_failures.push_back({k, r});
  }

  for (const auto& block : S.blocks()) {
    const std::size_t dim = block.rows.size();
    if (dim != block.cols.size()) {
      const PhiIndex& p = S.phi()[block.begin];
      report.singular_blocks.push_back({{p.a, p.b, p.c, p.d}, Real(0)});
      continue;
    }
    std::vector<std::vector<Complex>> m(dim, std::vector<Complex>(dim, Complex(0)));
    for (std::size_t k = block.begin; k < block.end; ++k) {
      const PhiIndex& p = S.phi()[k];
      auto r = std::lower_bound(block.rows.begin(), block.rows.end(), p.e) - block.rows.begin();
      auto c = std::lower_bound(block.cols.begin(), block.cols.end(), p.f) - block.cols.begin();
      m[r][c] = sol.values[k];
    }
    Real modulus = determinant(std::move(m)).abs();
    if (modulus < policy.tol) {
      const PhiIndex& p = S.phi()[block.begin];
      report.singular_blocks.push_back({{p.a, p.b, p.c, p.d}, modulus});
    }
  }
  return report;
}

bool ZeroSet::contains(std::size_t pos) const { return std::binary_search(members.begin(), members.end(), pos); }

ZeroSet make_zero_set(std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return ZeroSet{std::move(members)};
}

ZeroSet zero_set(const Solution& sol, double zero_tol) {
  check_domain(sol);
  ZeroSet out;
  for (std::size_t k = 0; k < sol.values.size(); ++k)
    if (is_zero(sol.values[k], zero_tol)) out.members.push_back(k);
  return out;
}

bool is_normalized(const FusionSystem& system, const GaugeVector& g) {
  if (g.values.size() != system.gamma().size()) return false;
  const LabelId one = system.ring().unit();
  for (const auto& t : system.gamma())
    if ((t.a == one || t.b == one) && !approx_equal(g.values[t.index], Complex(1), 1e-30)) return false;
  return true;
}

Solution apply_gauge(const Solution& sol, const GaugeVector& g, double zero_tol) {
  check_domain(sol);
  const FusionSystem& S = *sol.system;
  if (g.values.size() != S.gamma().size()) throw DomainMismatch("gauge vector does not match the ring's triples");
  for (const auto& v : g.values)
    if (is_zero(v, zero_tol)) throw ArgumentError("gauge entries must be nonzero");
  Solution out = sol;
  for (std::size_t k = 0; k < S.phi().size(); ++k) {
    Complex factor(1);
    for (const auto& [gamma, exponent] : S.t_image(k)) factor *= g.values[gamma].pow(exponent);
    out.values[k] = sol.values[k] * factor;
  }
  return out;
}

GaugeVector compose(const GaugeVector& g, const GaugeVector& h) {
  if (g.values.size() != h.values.size()) throw ArgumentError("gauge vectors of different length");
  GaugeVector out;
  out.values.reserve(g.values.size());
  for (std::size_t k = 0; k < g.values.size(); ++k) out.values.push_back(g.values[k] * h.values[k]);
  return out;
}

GaugeVector sample_normalized_gauge(const FusionSystem& system, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(1, 100);
  std::bernoulli_distribution negative(0.5);
  const LabelId one = system.ring().unit();
  GaugeVector g;
  for (const auto& t : system.gamma()) {
    if (t.a == one || t.b == one) {
      g.values.emplace_back(1);
      continue;
    }
    int p = numerator(rng);
    int q = numerator(rng);
    if (negative(rng)) p = -p;
    g.values.push_back(Complex::from_rational(mpq_class(p, q)));
  }
  return g;
}

PhiIndex apply_automorphism(const PhiIndex& p, const Automorphism& rho) {
  return {rho(p.a), rho(p.b), rho(p.c), rho(p.d), rho(p.e), rho(p.f)};
}

void require_automorphism(const FusionSystem& system, const Automorphism& rho) {
  if (!is_automorphism(system.ring(), rho))
    throw DomainMismatch("permutation is not an automorphism of ring '" + system.ring().name() + "'");
}

ZeroSet apply_automorphism(const FusionSystem& system, const ZeroSet& zeros, const Automorphism& rho) {
  require_automorphism(system, rho);
  std::vector<std::size_t> out;
  out.reserve(zeros.size());
  for (std::size_t k : zeros.members) out.push_back(system.require_phi(apply_automorphism(system.phi()[k], rho)));
  return make_zero_set(std::move(out));
}

Solution apply_automorphism(const Solution& sol, const Automorphism& rho) {
  check_domain(sol);
  const FusionSystem& S = *sol.system;
  require_automorphism(S, rho);
  Solution out = sol;
  for (std::size_t k = 0; k < S.phi().size(); ++k)
    out.values[k] = sol.values[S.require_phi(apply_automorphism(S.phi()[k], rho))];
  return out;
}

}  // namespace fusioninv
