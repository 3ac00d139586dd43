#include "qh/seidel.hpp"

#include "qh/errors.hpp"

#include <sstream>

namespace qh {

std::vector<std::string> seidel_consistency(const SeidelElement& s, const RingSpec& spec) {
    std::vector<std::string> problems;
    if (s.loop.k_max < s.loop.k_min) problems.push_back("K_max below K_min");
    for (const auto& [label, term] : s.ledger.entries) {
        auto ci = spec.class_index(label);
        if (!ci || *ci == kZeroClass) {
            problems.push_back("ledger entry for unknown class '" + label + "'");
            continue;
        }
        const auto& c = spec.cls(*ci);
        if (term.coupling != s.ledger.reference.coupling - c.omega)
            problems.push_back("coupling of '" + label + "' breaks additivity");
        if (term.vert_chern != s.ledger.reference.vert_chern + c.chern)
            problems.push_back("vertical Chern of '" + label + "' breaks additivity");
    }
    // every term of the element must match the reference or a ledger entry
    for (std::size_t i = 0; i < s.element.coeffs().size(); ++i) {
        for (const auto& t : s.element.coeff(i).terms()) {
            bool matches = (t.t_exp == s.ledger.reference.coupling &&
                            t.q_power == -s.ledger.reference.vert_chern);
            for (const auto& [label, term] : s.ledger.entries) {
                (void)label;
                matches = matches ||
                          (t.t_exp == term.coupling && t.q_power == -term.vert_chern);
            }
            if (!matches)
                problems.push_back("term " + spec.basis[i].name + " q^" +
                                   std::to_string(t.q_power) + " t^(" + to_string(t.t_exp) +
                                   ") has no ledger section");
        }
    }
    if (s.maximal_shape) {
        if (s.ledger.reference.coupling != s.loop.k_max)
            problems.push_back("reference section does not sit at K_max");
        for (const auto& [label, term] : s.ledger.entries) {
            auto ci = spec.class_index(label);
            if (ci && *ci != kZeroClass && !(spec.cls(*ci).omega > 0))
                problems.push_back("tail class '" + label + "' without positive energy");
            if (term.coupling >= s.loop.k_max)
                problems.push_back("tail section at or above K_max");
        }
    }
    return problems;
}

SeidelElement seidel_from_leading(const RingSpec& spec, std::size_t leading_class, long m_max,
                                  const LoopData& loop,
                                  const std::vector<std::pair<std::string, Vec>>& tail,
                                  const Rational& leading_coeff) {
    SeidelElement s;
    s.loop = loop;
    s.maximal_shape = true;
    s.element = QHElement(spec.dim());
    s.element.set_coeff(leading_class, NovikovElement::monomial(leading_coeff, m_max, loop.k_max));
    s.ledger.reference_section = "sigma_max";
    s.ledger.reference = {loop.k_max, -m_max};
    for (const auto& [label, coords] : tail) {
        auto ci = spec.class_index(label);
        if (!ci) throw ValidationError("tail class '" + label + "' not in the table");
        if (*ci == kZeroClass)
            throw NonPositiveEnergyTail("tail may not use the zero class");
        const auto& c = spec.cls(*ci);
        if (!(c.omega > 0))
            throw NonPositiveEnergyTail("tail class '" + label + "' has energy " +
                                        to_string(c.omega));
        if (coords.size() != spec.dim()) throw ValidationError("tail coordinate size mismatch");
        for (std::size_t i = 0; i < spec.dim(); ++i) {
            if (coords[i] == 0) continue;
            s.element.set_coeff(
                i, s.element.coeff(i) + NovikovElement::monomial(coords[i], m_max - c.chern,
                                                                 loop.k_max - c.omega));
        }
        s.ledger.entries[label] = {loop.k_max - c.omega, -m_max + c.chern};
    }
    return s;
}

QHElement seidel_compose(const SeidelElement& s1, const SeidelElement& s2, const RingSpec& spec,
                         const Floor& working_floor) {
    return quantum_product(s1.element, s2.element, spec, working_floor);
}

Exponent kappa0_extract(const SeidelElement& s, const RingSpec& spec) {
    const NovikovElement& lambda = s.element.coeff(spec.unit_index);
    auto lead = lambda.leading();
    if (!lead) throw ZeroUnitCoefficient("the unit coefficient vanishes");
    return s.loop.k_max - lead->t_exp;
}

std::string KappaReport::to_string() const {
    std::ostringstream os;
    os << "kappa0 = " << qh::to_string(kappa0) << ", kappa0' = " << qh::to_string(kappa0_inv)
       << ", blow-up kappa0 = " << qh::to_string(kappa0_blow)
       << ", blow-up kappa0' = " << qh::to_string(kappa0_blow_inv) << "\n";
    os << "K_max - K_min: base " << qh::to_string(kdiff_base) << ", blow-up "
       << qh::to_string(kdiff_blow) << (loop_contract_ok ? " (equal)" : " (UNEQUAL)") << "\n";
    os << "kappa0 + kappa0' = K_max - K_min: " << (sum_base_ok ? "holds" : "FAILS") << "\n";
    os << "blow-up kappa0 + kappa0' = K_max - K_min: " << (sum_blow_ok ? "holds" : "FAILS")
       << "\n";
    os << "blow-up kappa0 = kappa0: " << (match_plain_ok ? "holds" : "FAILS") << "\n";
    os << "blow-up kappa0' = kappa0': " << (match_inv_ok ? "holds" : "FAILS");
    return os.str();
}

KappaReport k2_relations_check(const SeidelElement& s, const SeidelElement& s_inv,
                               const RingSpec& spec, const SeidelElement& s_blow,
                               const SeidelElement& s_blow_inv, const RingSpec& blow_spec) {
    KappaReport r;
    r.kappa0 = kappa0_extract(s, spec);
    r.kappa0_inv = kappa0_extract(s_inv, spec);
    r.kappa0_blow = kappa0_extract(s_blow, blow_spec);
    r.kappa0_blow_inv = kappa0_extract(s_blow_inv, blow_spec);
    r.kdiff_base = s.loop.k_max - s.loop.k_min;
    r.kdiff_blow = s_blow.loop.k_max - s_blow.loop.k_min;
    r.loop_contract_ok = (r.kdiff_base == r.kdiff_blow);
    r.sum_base_ok = (r.kappa0 + r.kappa0_inv == r.kdiff_base);
    r.sum_blow_ok = (r.kappa0_blow + r.kappa0_blow_inv == r.kdiff_blow);
    r.match_plain_ok = (r.kappa0_blow == r.kappa0);
    r.match_inv_ok = (r.kappa0_blow_inv == r.kappa0_inv);
    return r;
}

RElement su_unit_normalize(const SeidelElement& s_blow, const RRing& ring,
                           const RingSpec& blowup_spec, const Exponent& working_floor) {
    const NovikovElement& lambda = s_blow.element.coeff(blowup_spec.unit_index);
    if (lambda.is_zero()) throw PatternViolation("unit coefficient vanishes");
    if (!lambda.is_unit())
        throw PatternViolation("unit coefficient is not a unit: " + lambda.to_string());
    RElement w = phi_e(s_blow.element, blowup_spec, ring);
    Exponent max_lead(0);
    for (const auto& c : w.coeffs())
        if (!c.is_zero()) max_lead = std::max(max_lead, c.lead_t_or_zero());
    NovikovElement inv_lambda = nov_invert(lambda, working_floor - max_lead);
    RElement u(ring);
    for (std::size_t k = 0; k < w.coeffs().size(); ++k)
        u.set_coeff(k, w.coeff(k) * inv_lambda);
    u = u.truncated(Floor(working_floor));
    validate_u_shape(u, ring, Exponent(0), /*pattern_error=*/true);
    return u;
}

InverseWitness extract_inverse_witness(const RElement& u, const RRing& ring,
                                       const Exponent& kappa0, const Exponent& working_floor) {
    const long slot = (ring.n == 2) ? 1 : ring.n - 2;
    const Exponent target =
        (ring.n == 2) ? 2 * ring.delta - kappa0 : ring.delta - kappa0;
    Exponent floor = std::min(working_floor, target);
    RElement v = lemma_u_inverse(u, ring, floor);
    for (const auto& t : v.coeff(static_cast<std::size_t>(slot)).terms()) {
        if (t.t_exp == target && t.q_power == 0) {
            return {kappa0 - ring.delta, slot, t.coeff};
        }
    }
    throw WitnessAbsent("no term at s^" + std::to_string(slot) + " t^(" + to_string(target) +
                        ") down to the working floor");
}

} // namespace qh
