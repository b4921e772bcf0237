#pragma once

#include <string>
#include <vector>

#include "fusioninv/invariants.hpp"
#include "fusioninv/ring.hpp"
#include "fusioninv/symbols.hpp"

/// Reference rings and points used by the tests, the CLI data generator and the
/// python package.
namespace fusioninv::fixtures {

BasedRing trivial_ring();
/// Labels "1", "tau".
BasedRing fibonacci_ring();
/// Labels "1", "w", "w2".
BasedRing z3_ring();
/// Rep(D(S3)) with labels "1", "eps", "b1".."b4", "a+", "a-".
BasedRing repds3_ring();

/// F_{τττ}^τ = [[1/φ, 1/√φ], [1/√φ, −1/φ]] with φ the golden ratio, 1 elsewhere.
Solution fibonacci_solution(const SystemPtr& system);
/// Galois conjugate of the Fibonacci point: φ → (1−√5)/2, so 1/√φ is imaginary.
Solution yang_lee_solution(const SystemPtr& system);
/// F_{abc} = exp(2πi k a (b + c − [b+c]) / 9) on the Z3 ring.
Solution z3_cocycle(const SystemPtr& system, int k);
Solution all_ones(const SystemPtr& system, std::string name);

/// Zero sets of the three Rep(D(S3)) patterns (1-based pattern number).
ZeroSet repds3_pattern(const FusionSystem& system, int pattern);

/// m_{s,i} = Φ_{αsαsαs}^{αs;βiβi} Φ_{αsβiαs}^{βi;αsαs}, ordered (α+, β1..β4), (α−, β1..β4).
std::vector<InvariantMonomial> repds3_products(const FusionSystem& system);

/// Twenty invariant-level stand-ins: pattern zeros, the Φ_{αsαsαs}^{αs;βiβi} entries
/// carrying the known product values (±2/3, ±1/6), every other entry 1. Not pentagon solutions.
std::vector<Solution> repds3_standins(const SystemPtr& system);

/// The standard twelve-monomial Fibonacci basis s1..s12 over our Φ order.
std::vector<InvariantMonomial> fibonacci_reference_basis(const FusionSystem& system);

}  // namespace fusioninv::fixtures
