#include "qh/blowup.hpp"

#include "qh/errors.hpp"

#include <sstream>

namespace qh {

RRing::RRing(long n_, Exponent delta_) : n(n_), delta(std::move(delta_)) {
    if (n < 2) throw ValidationError("quotient ring needs n >= 2");
    if (delta <= 0) throw ValidationError("blow-up parameter delta must be positive");
}

RElement RElement::one(const RRing& ring) {
    RElement e(ring);
    e.coeffs_[0] = NovikovElement(Rational(1));
    return e;
}

RElement RElement::monomial(const RRing& ring, const Rational& coeff, long s_power,
                            const Exponent& t_exp) {
    return from_raw(ring, {{s_power, NovikovElement::monomial(coeff, 0, t_exp)}});
}

RElement RElement::from_raw(const RRing& ring,
                            const std::vector<std::pair<long, NovikovElement>>& raw) {
    RElement e(ring);
    for (const auto& [power, c] : raw) {
        if (power < 0) throw ValidationError("negative s-power");
        long k = power;
        NovikovElement v = c;
        // s^{n+j} = s^{1+j} t^{-delta}
        while (k >= ring.n) {
            k -= ring.n - 1;
            v = mul_monomial(v, Rational(1), 0, -ring.delta);
        }
        e.coeffs_[static_cast<std::size_t>(k)] = e.coeffs_[static_cast<std::size_t>(k)] + v;
    }
    return e;
}

bool RElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool RElement::is_one() const {
    if (coeffs_.empty() || !coeffs_[0].is_scalar_one()) return false;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

RElement RElement::truncated(const Floor& floor) const {
    RElement e = *this;
    for (auto& c : e.coeffs_) c = c.truncated(floor);
    return e;
}

RElement operator+(const RElement& a, const RElement& b) {
    RElement e;
    e.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < e.coeffs_.size(); ++k) {
        if (k < a.coeffs_.size() && k < b.coeffs_.size())
            e.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        else if (k < a.coeffs_.size())
            e.coeffs_[k] = a.coeffs_[k];
        else
            e.coeffs_[k] = b.coeffs_[k];
    }
    return e;
}

RElement operator-(const RElement& a, const RElement& b) {
    RElement nb = b;
    for (auto& c : nb.coeffs_) c.negate();
    return a + nb;
}

bool operator==(const RElement& a, const RElement& b) { return a.coeffs_ == b.coeffs_; }

RElement r_mul(const RElement& a, const RElement& b, const RRing& ring,
               const Floor& working_floor) {
    std::vector<std::pair<long, NovikovElement>> raw;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i).is_zero() && !a.coeff(i).floor()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            if (b.coeff(j).is_zero() && !b.coeff(j).floor()) continue;
            raw.push_back({static_cast<long>(i + j), a.coeff(i) * b.coeff(j)});
        }
    }
    RElement e = RElement::from_raw(ring, raw);
    if (working_floor) e = e.truncated(working_floor);
    return e;
}

std::pair<RElement, RElement> idempotents(const RRing& ring) {
    RElement e2 = RElement::monomial(ring, Rational(1), ring.n - 1, ring.delta);
    RElement e1 = RElement::one(ring) - e2;
    return {e1, e2};
}

NovikovElement f_homomorphism(const RElement& a, const RRing& ring, const Floor& working_floor) {
    const Exponent step = -ring.delta / Rational(ring.n - 1);
    NovikovElement out;
    for (std::size_t k = 0; k < a.coeffs().size(); ++k)
        out = out + mul_monomial(a.coeff(k), Rational(1), 0, Exponent(static_cast<long>(k)) * step);
    if (working_floor) out = out.truncated(working_floor);
    return out;
}

RElement invert_generic(const RElement& u, const RRing& ring, const Exponent& working_floor) {
    const NovikovElement& c0 = u.coeff(0);
    if (c0.is_zero()) throw NotAUnit("e1-component vanishes (zero constant coefficient)");
    if (!c0.is_unit()) throw NotAUnit("e1-component is not a unit of the coefficient field");
    NovikovElement fu = f_homomorphism(u, ring);
    if (fu.is_zero()) throw NotAUnit("e2-component vanishes (F(u) = 0)");
    if (!fu.is_unit()) throw NotAUnit("e2-component is not a unit (F(u) has a leading tie)");
    NovikovElement inv_c0 = nov_invert(c0, working_floor - ring.delta);
    NovikovElement inv_fu = nov_invert(fu, working_floor - ring.delta);
    // v = inv_c0 e1 + e2 inv_fu, with e2 lambda = s^{n-1} t^delta lambda
    RElement v(ring);
    v.set_coeff(0, inv_c0);
    v.set_coeff(static_cast<std::size_t>(ring.n - 1),
                mul_monomial(inv_fu - inv_c0, Rational(1), 0, ring.delta));
    v = v.truncated(Floor(working_floor));
    for (const auto& c : v.coeffs())
        if (!floor_leq(c.floor(), Floor(working_floor)))
            throw FloorTooHigh("inverse not determined down to the requested floor");
    return v;
}

bool is_x_element(const RElement& a) {
    for (const auto& c : a.coeffs())
        for (const auto& t : c.terms())
            if (t.t_exp >= 0) return false;
    return true;
}

UShape validate_u_shape(const RElement& u, const RRing& ring, const Exponent& min_kappa0,
                        bool pattern_error) {
    auto bad = [&](const std::string& msg) -> ValidationError {
        if (pattern_error) return PatternViolation(msg);
        return ShapeViolation(msg);
    };
    if (u.coeffs().empty()) throw bad("empty element");
    if (!u.coeff(0).is_scalar_one())
        throw bad("constant coefficient is " + u.coeff(0).to_string() + ", expected exactly 1");
    // global leading term of u - 1 must be a single term at s^1
    std::optional<Exponent> kappa0;
    for (std::size_t k = 1; k < u.coeffs().size(); ++k) {
        auto l = u.coeff(k).leading();
        if (!l) continue;
        if (!kappa0 || l->t_exp > *kappa0) kappa0 = l->t_exp;
    }
    if (!kappa0) throw bad("no s-terms: r = 0");
    for (std::size_t k = 1; k < u.coeffs().size(); ++k) {
        for (const auto& t : u.coeff(k).terms()) {
            if (t.q_power != 0)
                throw bad("term with a q-power at s^" + std::to_string(k));
            if (t.t_exp == *kappa0 && k != 1)
                throw bad("leading term sits at s^" + std::to_string(k) + ", expected s^1");
        }
    }
    const auto& c1 = u.coeff(1);
    auto l1 = c1.leading();
    if (!l1 || l1->t_exp != *kappa0) throw bad("leading term does not sit at s^1");
    if (c1.terms().size() > 1 && c1.terms()[1].t_exp == *kappa0)
        throw bad("tie at the leading exponent of the s-coefficient");
    if (!(*kappa0 > min_kappa0))
        throw bad("leading exponent kappa0 = " + to_string(*kappa0) + " not above " +
                  to_string(min_kappa0));
    UShape shape;
    shape.r = l1->coeff;
    shape.kappa0 = *kappa0;
    // x-lift: (u - 1 - r s t^{kappa0}) / (r s t^{kappa0}) taken termwise with
    // s-degrees shifted down by one
    RElement x(ring);
    for (std::size_t k = 1; k < u.coeffs().size(); ++k) {
        std::vector<NovikovTerm> terms;
        for (const auto& t : u.coeff(k).terms()) {
            if (k == 1 && t.t_exp == *kappa0) continue;
            terms.push_back({t.coeff / shape.r, 0, t.t_exp - *kappa0});
        }
        Floor f = u.coeff(k).floor() ? Floor(*u.coeff(k).floor() - *kappa0) : Floor();
        x.set_coeff(k - 1, NovikovElement::from_terms(std::move(terms), f));
    }
    if (!is_x_element(x)) throw bad("tail terms do not all lie below t^0");
    shape.x = std::move(x);
    return shape;
}

RElement lemma_u_inverse(const RElement& u, const RRing& ring, const Exponent& working_floor) {
    UShape shape = validate_u_shape(u, ring, ring.delta);
    const Exponent k0 = shape.kappa0;
    const Exponent head_exp = (ring.n == 2) ? 2 * ring.delta - k0 : ring.delta - k0;
    // u = e1 + e2 r s t^{k0} (1 + x'), x' = x + (1/r) s^{n-2} t^{delta-k0}
    RElement xp = shape.x + RElement::monomial(ring, Rational(1) / shape.r, ring.n - 2,
                                               ring.delta - k0);
    const Exponent series_floor = working_floor - head_exp;
    RElement g = RElement::one(ring);
    RElement power = RElement::one(ring);
    RElement neg_xp(ring);
    neg_xp = RElement(ring) - xp;
    while (!power.is_zero()) {
        power = r_mul(power, neg_xp, ring, Floor(series_floor));
        g = g + power;
    }
    RElement head = RElement::monomial(ring, Rational(1) / shape.r,
                                       ring.n == 2 ? 1 : ring.n - 2, head_exp);
    auto [e1, e2] = idempotents(ring);
    RElement v = e1 + r_mul(head, g, ring, Floor(working_floor));
    v = v.truncated(Floor(working_floor));
    for (const auto& c : v.coeffs())
        if (!floor_leq(c.floor(), Floor(working_floor)))
            throw FloorTooHigh("closed-form inverse not determined down to the requested floor");
    return v;
}

RElement phi_e(const QHElement& a, const RingSpec& blowup_spec, const RRing& ring) {
    if (blowup_spec.n != ring.n)
        throw ValidationError("quotient ring dimension does not match the table");
    auto deg = a.degree(blowup_spec);
    if (!deg || (*deg != 2 * blowup_spec.n && !a.is_zero()))
        throw DegreeMismatch("projection needs a homogeneous element of top degree");
    RElement out(ring);
    for (std::size_t i = 0; i < blowup_spec.dim(); ++i) {
        const auto& c = a.coeff(i);
        if (c.is_zero() && !c.floor()) continue;
        if (!blowup_spec.basis[i].e_power) continue; // the ideal part is dropped
        long k = *blowup_spec.basis[i].e_power;
        if (k < 0 || k >= ring.n) throw ValidationError("exceptional power out of range");
        // degree 2n forces q-power = k on every term; strip it
        std::vector<NovikovTerm> terms;
        for (const auto& t : c.terms()) terms.push_back({t.coeff, 0, t.t_exp});
        out.set_coeff(static_cast<std::size_t>(k),
                      out.coeff(static_cast<std::size_t>(k)) +
                          NovikovElement::from_terms(std::move(terms), c.floor()));
    }
    return out;
}

std::string RElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero() && !coeffs_[k].floor()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].to_string(true) << ")";
        if (k == 1)
            os << "*s";
        else if (k > 1)
            os << "*s^" << k;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace qh
