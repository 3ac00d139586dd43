#include "qh/novikov.hpp"

#include "qh/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qh {

Floor floor_max(const Floor& a, const Floor& b) {
    if (!a) return b;
    if (!b) return a;
    return *a >= *b ? a : b;
}

bool floor_leq(const Floor& a, const Floor& b) {
    if (!a) return true;
    if (!b) return false;
    return *a <= *b;
}

bool operator==(const NovikovTerm& a, const NovikovTerm& b) {
    return a.q_power == b.q_power && a.t_exp == b.t_exp && a.coeff == b.coeff;
}

namespace {

// Sort key: t_exp descending, then q_power descending.
bool term_before(const NovikovTerm& a, const NovikovTerm& b) {
    if (a.t_exp != b.t_exp) return a.t_exp > b.t_exp;
    return a.q_power > b.q_power;
}

bool same_slot(const NovikovTerm& a, const NovikovTerm& b) {
    return a.t_exp == b.t_exp && a.q_power == b.q_power;
}

} // namespace

NovikovElement::NovikovElement(const Rational& scalar) {
    if (scalar != 0) terms_.push_back({scalar, 0, Exponent(0)});
}

NovikovElement NovikovElement::monomial(const Rational& coeff, long q_power, const Exponent& t_exp) {
    NovikovElement e;
    if (coeff != 0) e.terms_.push_back({coeff, q_power, t_exp});
    return e;
}

NovikovElement NovikovElement::from_terms(std::vector<NovikovTerm> terms, Floor floor) {
    std::sort(terms.begin(), terms.end(), term_before);
    NovikovElement e;
    e.floor_ = std::move(floor);
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (e.floor_ && t.t_exp < *e.floor_) continue;
        if (!e.terms_.empty() && same_slot(e.terms_.back(), t)) {
            e.terms_.back().coeff += t.coeff;
            if (e.terms_.back().coeff == 0) e.terms_.pop_back();
        } else {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

bool NovikovElement::is_scalar_one() const {
    return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].q_power == 0 &&
           terms_[0].t_exp == 0;
}

std::optional<NovikovTerm> NovikovElement::leading() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front();
}

Exponent NovikovElement::lead_t_or_zero() const {
    if (terms_.empty()) return Exponent(0);
    return terms_.front().t_exp;
}

bool NovikovElement::is_unit() const {
    if (terms_.empty()) return false;
    return terms_.size() == 1 || terms_[1].t_exp < terms_[0].t_exp;
}

NovikovElement& NovikovElement::negate() {
    for (auto& t : terms_) t.coeff = -t.coeff;
    return *this;
}

NovikovElement NovikovElement::truncated(const Floor& floor) const {
    NovikovElement e;
    e.floor_ = floor_max(floor_, floor);
    for (const auto& t : terms_) {
        if (e.floor_ && t.t_exp < *e.floor_) break; // sorted descending
        e.terms_.push_back(t);
    }
    return e;
}

NovikovElement operator+(const NovikovElement& a, const NovikovElement& b) {
    NovikovElement e;
    e.floor_ = floor_max(a.floor_, b.floor_);
    e.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    auto push = [&](const NovikovTerm& t) {
        if (e.floor_ && t.t_exp < *e.floor_) return;
        if (t.coeff != 0) e.terms_.push_back(t);
    };
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (same_slot(*ia, *ib)) {
            NovikovTerm t{ia->coeff + ib->coeff, ia->q_power, ia->t_exp};
            push(t);
            ++ia;
            ++ib;
        } else if (term_before(*ia, *ib)) {
            push(*ia++);
        } else {
            push(*ib++);
        }
    }
    for (; ia != a.terms_.end(); ++ia) push(*ia);
    for (; ib != b.terms_.end(); ++ib) push(*ib);
    return e;
}

NovikovElement operator-(const NovikovElement& a) {
    NovikovElement e = a;
    e.negate();
    return e;
}

NovikovElement operator-(const NovikovElement& a, const NovikovElement& b) { return a + (-b); }

NovikovElement operator*(const NovikovElement& a, const NovikovElement& b) {
    // Result floor: unknown tails multiply against the other factor's leading
    // part first, so knowledge stops at max(fa + lead_t(b), fb + lead_t(a)).
    Floor f;
    if (a.floor_) f = floor_max(f, Floor(*a.floor_ + b.lead_t_or_zero()));
    if (b.floor_) f = floor_max(f, Floor(*b.floor_ + a.lead_t_or_zero()));
    std::vector<NovikovTerm> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Exponent ex = ta.t_exp + tb.t_exp;
            if (f && ex < *f) continue;
            prod.push_back({ta.coeff * tb.coeff, ta.q_power + tb.q_power, ex});
        }
    return NovikovElement::from_terms(std::move(prod), f);
}

NovikovElement operator*(const Rational& c, const NovikovElement& a) {
    NovikovElement e;
    e.floor_ = a.floor_;
    if (c == 0) return e;
    e.terms_ = a.terms_;
    for (auto& t : e.terms_) t.coeff *= c;
    return e;
}

bool operator==(const NovikovElement& a, const NovikovElement& b) {
    return a.floor_ == b.floor_ && a.terms_ == b.terms_;
}

NovikovElement mul_monomial(const NovikovElement& a, const Rational& coeff, long q_power,
                            const Exponent& t_exp) {
    std::vector<NovikovTerm> terms;
    if (coeff != 0) {
        terms.reserve(a.terms().size());
        for (const auto& t : a.terms())
            terms.push_back({t.coeff * coeff, t.q_power + q_power, t.t_exp + t_exp});
    }
    Floor f = a.floor() ? Floor(*a.floor() + t_exp) : Floor();
    return NovikovElement::from_terms(std::move(terms), f);
}

NovikovElement nov_invert(const NovikovElement& a, const Exponent& working_floor) {
    auto lead = a.leading();
    if (!lead) throw ZeroElement("cannot invert an element with no terms");
    if (!a.is_unit())
        throw NotAUnit("second term at the leading t-exponent " + to_string(lead->t_exp));
    const Exponent k0 = lead->t_exp;
    const Rational inv_coeff = Rational(1) / lead->coeff;
    const long inv_q = -lead->q_power;
    // The series for (1+x)^{-1} sits at t-exponent offset k0 from the final
    // result, so it is truncated at working_floor + k0.
    const Exponent series_floor = working_floor + k0;
    NovikovElement x = (mul_monomial(a, inv_coeff, inv_q, -k0) - NovikovElement(Rational(1)))
                           .truncated(Floor(series_floor));
    NovikovElement acc{Rational(1)};
    NovikovElement power{Rational(1)};
    const NovikovElement neg_x = -x;
    while (!power.is_zero()) {
        power = (power * neg_x).truncated(Floor(series_floor));
        acc = acc + power; // operator+ carries the truncation floor along
    }
    NovikovElement result = mul_monomial(acc, inv_coeff, inv_q, -k0).truncated(Floor(working_floor));
    if (!floor_leq(result.floor(), Floor(working_floor)))
        throw FloorTooHigh("inverse only known above t^(" + to_string(*result.floor()) +
                           "), requested floor " + to_string(working_floor));
    // An exactly known monomial inverts exactly; drop the artificial floor.
    if (a.terms().size() == 1 && !a.floor()) {
        return NovikovElement::monomial(inv_coeff, inv_q, -k0);
    }
    return result;
}

bool agree_above(const NovikovElement& a, const NovikovElement& b, const Exponent& bound) {
    if (!floor_leq(a.floor(), Floor(bound)) || !floor_leq(b.floor(), Floor(bound)))
        throw FloorTooHigh("operands not known down to t^(" + to_string(bound) + ")");
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (true) {
        // sorted descending: the first term below the bound ends the scan
        bool ea = (ia == a.terms().end()) || ia->t_exp < bound;
        bool eb = (ib == b.terms().end()) || ib->t_exp < bound;
        if (ea || eb) return ea && eb;
        if (!(*ia == *ib)) return false;
        ++ia;
        ++ib;
    }
}

std::string NovikovElement::to_string(bool show_floor) const {
    std::ostringstream os;
    if (terms_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            bool has_factor = (t.q_power != 0) || (t.t_exp != 0);
            bool wrote = false;
            if (!has_factor || c != 1) {
                os << qh::to_string(c);
                wrote = true;
            }
            if (t.q_power != 0) {
                if (wrote) os << "*";
                os << "q^" << t.q_power;
                wrote = true;
            }
            if (t.t_exp != 0) {
                if (wrote) os << "*";
                os << "t^(" << qh::to_string(t.t_exp) << ")";
            }
        }
    }
    if (show_floor && floor_) os << " + O(t^(" << qh::to_string(*floor_) << "))";
    return os.str();
}

} // namespace qh
