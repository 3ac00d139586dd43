#ifndef QH_NOVIKOV_HPP
#define QH_NOVIKOV_HPP

#include "qh/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

// Exponents of the formal variable t.  The period group of a symplectic form
// is realized here by exact rationals; injectivity of the period map is a
// validation duty of the table loaders, not of this type.
using Exponent = Rational;

// A floor of "none" means the element is known exactly (no truncation).
// Otherwise terms with t-exponent below the floor have been discarded and
// are unknown.
using Floor = std::optional<Exponent>;

// max under the convention that an absent floor is -infinity.
Floor floor_max(const Floor& a, const Floor& b);
bool floor_leq(const Floor& a, const Floor& b); // a <= b, none = -inf

struct NovikovTerm {
    Rational coeff;   // nonzero
    long q_power = 0; // integer grading variable, degree 2 per power
    Exponent t_exp;   // t-exponent; terms are kept sorted by decreasing t_exp
};

bool operator==(const NovikovTerm& a, const NovikovTerm& b);

// Truncated generalized Laurent series r_1 q^{d_1} t^{k_1} + ... with exact
// rational coefficients and exponents.  Terms are strictly sorted by
// (t_exp desc, q_power desc) and coalesced; no zero coefficients; every term
// has t_exp >= floor when a floor is present.
class NovikovElement {
  public:
    NovikovElement() = default;
    explicit NovikovElement(const Rational& scalar);
    static NovikovElement monomial(const Rational& coeff, long q_power, const Exponent& t_exp);
    // Assembles from arbitrary term order, coalescing and dropping zeros.
    static NovikovElement from_terms(std::vector<NovikovTerm> terms, Floor floor = std::nullopt);

    const std::vector<NovikovTerm>& terms() const { return terms_; }
    const Floor& floor() const { return floor_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar_one() const;

    // Term of maximal t-exponent, ties broken by maximal q-power; empty for 0.
    std::optional<NovikovTerm> leading() const;
    // Largest t-exponent, 0 if the element has no terms (floor product rule).
    Exponent lead_t_or_zero() const;

    // A unit of the coefficient ring: nonempty, and no second term shares the
    // leading t-exponent (such an element is r q^d t^k (1 + lower order)).
    bool is_unit() const;

    NovikovElement& negate();
    // Raises the floor to at least `floor` and drops the terms below it.
    NovikovElement truncated(const Floor& floor) const;

    std::string to_string(bool show_floor = false) const;

    friend NovikovElement operator+(const NovikovElement& a, const NovikovElement& b);
    friend NovikovElement operator-(const NovikovElement& a, const NovikovElement& b);
    friend NovikovElement operator-(const NovikovElement& a);
    friend NovikovElement operator*(const NovikovElement& a, const NovikovElement& b);
    friend NovikovElement operator*(const Rational& c, const NovikovElement& a);
    // Exact equality of the truncated representations (terms and floor).
    friend bool operator==(const NovikovElement& a, const NovikovElement& b);

  private:
    std::vector<NovikovTerm> terms_;
    Floor floor_;
};

// Multiplication by a single monomial (exact shift, floor shifts along).
NovikovElement mul_monomial(const NovikovElement& a, const Rational& coeff, long q_power,
                            const Exponent& t_exp);

// Multiplicative inverse to the given working floor, by geometric series on
// a / lead(a).  Throws ZeroElement when a has no terms, NotAUnit when a
// second term sits at the leading t-exponent, and FloorTooHigh when a's own
// floor leaves the inverse unknown at working_floor.
NovikovElement nov_invert(const NovikovElement& a, const Exponent& working_floor);

// True when a and b agree on every term with t-exponent >= bound.  Both
// arguments must be known there (floor <= bound), else FloorTooHigh.
bool agree_above(const NovikovElement& a, const NovikovElement& b, const Exponent& bound);

} // namespace qh

#endif
