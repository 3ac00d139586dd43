#ifndef QH_BLOWUP_HPP
#define QH_BLOWUP_HPP

#include "qh/novikov.hpp"
#include "qh/qring.hpp"

#include <string>
#include <vector>

namespace qh {

// The quotient algebra Lambda[s]/(s^n = s t^{-delta}).
struct RRing {
    long n = 2;
    Exponent delta;
    RRing(long n_, Exponent delta_);
};

// Element in canonical reduced form: coefficient of s^k at index k, k < n.
class RElement {
  public:
    RElement() = default;
    explicit RElement(const RRing& ring) : coeffs_(static_cast<std::size_t>(ring.n)) {}
    static RElement one(const RRing& ring);
    static RElement monomial(const RRing& ring, const Rational& coeff, long s_power,
                             const Exponent& t_exp);
    // Reduces arbitrary s-power terms via s^{n+j} -> s^{1+j} t^{-delta}.
    static RElement from_raw(const RRing& ring,
                             const std::vector<std::pair<long, NovikovElement>>& raw);

    const std::vector<NovikovElement>& coeffs() const { return coeffs_; }
    const NovikovElement& coeff(std::size_t k) const { return coeffs_.at(k); }
    void set_coeff(std::size_t k, NovikovElement e) { coeffs_.at(k) = std::move(e); }
    bool is_zero() const;
    bool is_one() const;

    RElement truncated(const Floor& floor) const;
    std::string to_string() const;

    friend RElement operator+(const RElement& a, const RElement& b);
    friend RElement operator-(const RElement& a, const RElement& b);
    friend bool operator==(const RElement& a, const RElement& b);

  private:
    std::vector<NovikovElement> coeffs_;
};

// Product reduced by the defining relation; exact on kept terms.
RElement r_mul(const RElement& a, const RElement& b, const RRing& ring,
               const Floor& working_floor = Floor());

// e1 = 1 - s^{n-1} t^delta and e2 = s^{n-1} t^delta: orthogonal idempotents
// summing to 1 with s e1 = 0.
std::pair<RElement, RElement> idempotents(const RRing& ring);

// The evaluation s -> t^{-delta/(n-1)}; a ring homomorphism onto the Novikov
// field with exponent group enlarged by delta/(n-1).
NovikovElement f_homomorphism(const RElement& a, const RRing& ring,
                              const Floor& working_floor = Floor());

// Componentwise inversion: e1-component inverted in e1 Lambda (the constant
// coefficient), e2-component through F and the section lambda -> e2 lambda.
// NotAUnit names the vanishing component.
RElement invert_generic(const RElement& u, const RRing& ring, const Exponent& working_floor);

// The validated shape u = 1 + r s t^{kappa0} (1 + x) with x in the set of
// strictly-negative-exponent elements.
struct UShape {
    Rational r;
    Exponent kappa0;
    RElement x; // any lift; only r s t^{kappa0} x is well defined
};

// Structural check of the closed-form hypothesis; min_kappa0 is delta for
// the closed-form inverse and 0 for the Seidel-unit pattern.
UShape validate_u_shape(const RElement& u, const RRing& ring, const Exponent& min_kappa0,
                        bool pattern_error = false);

// Closed-form inverse 1 - s^{n-1} t^delta + (1/r) s^{n-2} t^{delta-kappa0}(1+y)
// (n = 2: 1 - s t^delta + (1/r) s t^{2 delta - kappa0}(1+y)), computed to the
// working floor.  ShapeViolation when u fails the pattern.
RElement lemma_u_inverse(const RElement& u, const RRing& ring, const Exponent& working_floor);

// Every term has strictly negative t-exponent (the paper's set of
// perturbations 1+x with geometric-series inverses).
bool is_x_element(const RElement& a);

// Projects a degree-2n element modulo the ideal spanned by the untagged
// basis classes and sends E^k (x) q^k to s^k.
RElement phi_e(const QHElement& a, const RingSpec& blowup_spec, const RRing& ring);

} // namespace qh

#endif
