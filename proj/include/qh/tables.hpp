#ifndef QH_TABLES_HPP
#define QH_TABLES_HPP

#include "qh/qring.hpp"

#include <random>

namespace qh {

// Quantum-homology table of the one-point blow-up restricted to the span of
// pt, the exceptional-divisor powers and the unit: basis pt, E^{n-1}, ..., E,
// 1l with complementary E-powers pairing to -1, and the single line class of
// area delta carrying <E^i, E^j, E^k> = -1 exactly when i+j+k = 2n-1.
// Optionally the quantum entries are scaled by `scale`.
RingSpec make_blowup_ring(long n, const Exponent& delta, const Rational& scale = Rational(1));

// Rank-2 table (pt, 1l) with point classes L_p of area omega_p and
// <pt,pt,pt>_{L_p} = v_p; always associative.
RingSpec make_sphere_ring(const std::vector<std::pair<Exponent, Rational>>& point_invariants);

// Rank-3 projective-plane-shaped table: basis pt, h, 1l with h.h = 1 and
// <pt,pt,h>_L = v on a single chern-3 class of the given area.
RingSpec make_plane_ring(const Exponent& omega, const Rational& v);

// Intersection ring of P^k with zero quantum part (plus optional idle classes
// that carry no invariants).
RingSpec make_projective_space_ring(long k, std::size_t idle_classes = 0);

// Seeded random table from the associative families above (used by the
// cross-module equivalence harnesses).
RingSpec random_associative_ring(std::mt19937_64& rng);

// Fully random admissible table: random degrees, pairing, classes and
// entries.  Not necessarily associative; wdvv checking is off.
RingSpec random_admissible_ring(std::mt19937_64& rng);

} // namespace qh

#endif
