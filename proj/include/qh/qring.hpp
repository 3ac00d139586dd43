#ifndef QH_QRING_HPP
#define QH_QRING_HPP

#include "qh/linalg.hpp"
#include "qh/novikov.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qh {

// One homology basis class.  e_power marks exceptional classes of a one-point
// blow-up: e_power k means the class is the k-fold self-intersection of the
// exceptional divisor (k = 0 is the unit); classes without the mark span the
// part coming from the blown-up manifold.
struct BasisClass {
    std::string name;
    long degree = 0; // even, 0..2n
    std::optional<long> e_power;
};

// An effective curve class with its area, Chern number and divisor pairings.
// The zero class is implicit and never listed.
struct EffectiveClass {
    std::string label;
    Exponent omega;  // > 0, pairwise distinct across classes
    long chern = 0;  // c_1(beta)
    std::map<std::string, long> divisor_pairings; // degree 2n-2 basis name -> beta . H
};

// Index into RingSpec::classes, or kZeroClass for the zero class.
inline constexpr long kZeroClass = -1;

enum class WdvvMode { Off, Warn, Error };

// Triple Gromov-Witten key: class index and a sorted basis-index triple.
using Gw3Key = std::tuple<long, std::size_t, std::size_t, std::size_t>;
Gw3Key make_gw3_key(long cls, std::size_t i, std::size_t j, std::size_t k);

// Higher-point key: class index and the full sorted insertion multiset
// (descendent order, basis index); the three product slots are part of it.
using GwHigherKey = std::pair<long, std::vector<std::pair<long, std::size_t>>>;

// A finite quantum-homology table: basis with intersection pairing, effective
// classes, and Gromov-Witten invariants.  Immutable after validate().
struct RingSpec {
    long n = 0; // half complex dimension
    std::vector<BasisClass> basis;
    Mat pairing; // symmetric, invertible, nonzero only between complementary degrees
    std::vector<EffectiveClass> classes;
    std::map<Gw3Key, Rational> gw3;
    std::map<GwHigherKey, Rational> gw_higher;
    WdvvMode wdvv_mode = WdvvMode::Warn;
    // Classes are complete up to this energy; deeper truncation requests fail.
    std::optional<Exponent> omega_complete;

    // filled by validate()
    std::size_t unit_index = 0;
    Mat dual; // dual[i] = coordinates of xi_i^* over the basis
    std::vector<std::string> warnings;

    void validate();

    std::size_t pt_index() const { return 0; }
    std::size_t dim() const { return basis.size(); }
    const EffectiveClass& cls(long idx) const { return classes.at(static_cast<std::size_t>(idx)); }
    Exponent omega_of(long idx) const { return idx == kZeroClass ? Exponent(0) : cls(idx).omega; }
    long chern_of(long idx) const { return idx == kZeroClass ? 0 : cls(idx).chern; }
    std::optional<std::size_t> basis_index(const std::string& name) const;
    std::optional<long> class_index(const std::string& label) const;

    // Dimension filter for 3-point invariants: deg_i+deg_j+deg_k = 4n-2c_1.
    bool admissible3(long cls_idx, std::size_t i, std::size_t j, std::size_t k) const;
    // Dimension filter for all-tau_0 p-point invariants.
    bool admissible_higher(long cls_idx, const std::vector<std::pair<long, std::size_t>>& ins) const;

    // Table lookup with forced-zero rules: inadmissible entries and nonzero-
    // class unit insertions are 0; zero-class unit insertions come from the
    // pairing.  Absent otherwise -> MissingTableEntry (or 0 with missing_ok).
    Rational gw3_value(long cls_idx, std::size_t i, std::size_t j, std::size_t k,
                       bool missing_ok = false) const;
};

// Element of the quantum homology module: one Novikov coefficient per basis
// class.
class QHElement {
  public:
    QHElement() = default;
    explicit QHElement(std::size_t dim) : coeffs_(dim) {}
    static QHElement basis_element(const RingSpec& spec, std::size_t i);
    static QHElement unit(const RingSpec& spec);

    std::vector<NovikovElement>& coeffs() { return coeffs_; }
    const std::vector<NovikovElement>& coeffs() const { return coeffs_; }
    const NovikovElement& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, NovikovElement e) { coeffs_.at(i) = std::move(e); }

    bool is_zero() const;
    // Homogeneous iff 2 q_power + deg(xi_i) is constant across all terms.
    bool is_graded(const RingSpec& spec) const;
    std::optional<long> degree(const RingSpec& spec) const;

    QHElement truncated(const Floor& floor) const;
    std::string to_string(const RingSpec& spec) const;

    friend QHElement operator+(const QHElement& a, const QHElement& b);
    friend QHElement operator-(const QHElement& a, const QHElement& b);
    friend bool operator==(const QHElement& a, const QHElement& b);

  private:
    std::vector<NovikovElement> coeffs_;
};

QHElement scale(const NovikovElement& c, const QHElement& a);

// Duals xi_i^* with pairing(xi_j^*, xi_i) = delta_ij.  SingularPairing if the
// pairing matrix is degenerate (validate() already rejects that).
std::vector<QHElement> dual_basis(const RingSpec& spec);

// The quantum product, extended bilinearly over Novikov coefficients.  With a
// working floor, classes whose whole contribution falls below it are skipped
// and the result is truncated there.
QHElement quantum_product(const QHElement& a, const QHElement& b, const RingSpec& spec,
                          const Floor& working_floor = Floor());

struct StrongUniruledWitness {
    std::string a, b, cls; // <a, b, pt>_cls != 0 with a, b below top degree
};

struct IdealVerdict {
    bool ideal = true;
    std::optional<StrongUniruledWitness> witness;
};

// Q_- (the span of below-top-degree classes) is an ideal iff no quantum
// invariant with a point insertion and two Q_- insertions is nonzero; the
// first violation is returned as a strong-uniruledness witness.
IdealVerdict q_minus_ideal_test(const RingSpec& spec);

struct AnnihilationReport {
    bool pt_annihilates = true;
    std::optional<std::string> witness_class; // first basis class with pt*a != 0
    IdealVerdict ideal;
    bool agree = true;
};

// pt*a = 0 for all a in Q_-, checked by computing the products; the verdict
// must agree with q_minus_ideal_test.
AnnihilationReport pt_annihilation_test(const RingSpec& spec);

struct UnitFormResult {
    bool conforming = false;
    NovikovElement lambda; // unit coefficient
    QHElement remainder;   // the Q_- part
};

// Decomposes u = 1l (x) lambda + x and checks lambda is a Novikov unit.
// Requires a spec that passed q_minus_ideal_test (HypothesisViolation else).
UnitFormResult unit_form_check(const QHElement& u, const RingSpec& spec);

// Structure constants of the bulk-deformed product at the point with the
// given coordinates over the basis, from the higher-point table, truncated at
// the working floor and at the maximal insertion count present in the table.
NovikovElement deformed_structure_constants(const RingSpec& spec, const Vec& at, std::size_t i,
                                            std::size_t j, std::size_t k,
                                            const Exponent& working_floor);

struct WdvvReport {
    bool associative = true;
    std::string violation; // first violating triple, when any
};

// Optional associativity diagnostic over the finite table (missing entries
// read as zero here).
WdvvReport wdvv_report(const RingSpec& spec);

} // namespace qh

#endif
