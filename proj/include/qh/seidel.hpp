#ifndef QH_SEIDEL_HPP
#define QH_SEIDEL_HPP

#include "qh/blowup.hpp"
#include "qh/qring.hpp"

#include <map>
#include <string>

namespace qh {

// Normalized-Hamiltonian extrema of a loop; the trivial loop has both zero.
struct LoopData {
    Exponent k_max;
    Exponent k_min;
};

// Per-section values: `coupling` is the t-exponent of the section's term
// (minus the coupling-class value) and `vert_chern` the vertical Chern
// number, so along fiber classes coupling drops by omega(beta) while
// vert_chern grows by c_1(beta).
struct SectionTerm {
    Exponent coupling;
    long vert_chern = 0;
};

struct SectionLedger {
    std::string reference_section;
    SectionTerm reference;
    std::map<std::string, SectionTerm> entries; // fiber-class label -> values
};

struct SeidelElement {
    QHElement element;
    SectionLedger ledger;
    LoopData loop;
    bool maximal_shape = false; // leading section term claimed at t^{K_max}
};

// Checks ledger additivity against the class table and, for elements flagged
// with the maximal shape, that every term sits at K_max or K_max - omega.
// Returns human-readable problems; empty when consistent.
std::vector<std::string> seidel_consistency(const SeidelElement& s, const RingSpec& spec);

// Assembles a_max (x) q^{m_max} t^{K_max} plus the energy-indexed tail, with
// the matching ledger.  Tail contributions are basis coordinate vectors per
// class label; classes must have positive energy (NonPositiveEnergyTail).
SeidelElement seidel_from_leading(const RingSpec& spec, std::size_t leading_class, long m_max,
                                  const LoopData& loop,
                                  const std::vector<std::pair<std::string, Vec>>& tail,
                                  const Rational& leading_coeff = Rational(1));

// Quantum product of the underlying elements.
QHElement seidel_compose(const SeidelElement& s1, const SeidelElement& s2, const RingSpec& spec,
                         const Floor& working_floor = Floor());

// kappa_0 = K_max minus the leading t-exponent of the unit coefficient.
Exponent kappa0_extract(const SeidelElement& s, const RingSpec& spec);

struct KappaReport {
    Exponent kappa0, kappa0_inv, kappa0_blow, kappa0_blow_inv;
    Exponent kdiff_base, kdiff_blow;
    bool loop_contract_ok = false; // K_max - K_min agrees between base and blow-up
    bool sum_base_ok = false;      // kappa0 + kappa0' = K_max - K_min
    bool sum_blow_ok = false;
    bool match_plain_ok = false; // blow-up kappa0 equals base kappa0
    bool match_inv_ok = false;
    std::string to_string() const;
};

// The kappa-exponent identities for a loop, its inverse, and their blow-ups.
KappaReport k2_relations_check(const SeidelElement& s, const SeidelElement& s_inv,
                               const RingSpec& spec, const SeidelElement& s_blow,
                               const SeidelElement& s_blow_inv, const RingSpec& blow_spec);

// Projects the blow-up Seidel element to the quotient ring and normalizes by
// the inverse of its unit coefficient, then validates the unit pattern
// u = 1 + r s t^{kappa0}(1 + x) with kappa0 > 0.
RElement su_unit_normalize(const SeidelElement& s_blow, const RRing& ring,
                           const RingSpec& blowup_spec, const Exponent& working_floor);

struct InverseWitness {
    Exponent class_energy; // kappa0 - delta, the energy of the forced class
    long s_power = 0;
    Rational coefficient;
};

// Inverts u by the closed form and reads off the guaranteed nonvanishing
// coefficient of s^{n-2} t^{delta-kappa0} (s t^{2delta-kappa0} when n = 2).
InverseWitness extract_inverse_witness(const RElement& u, const RRing& ring,
                                       const Exponent& kappa0, const Exponent& working_floor);

} // namespace qh

#endif
