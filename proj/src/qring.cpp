#include "qh/qring.hpp"

#include "qh/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qh {

Gw3Key make_gw3_key(long cls, std::size_t i, std::size_t j, std::size_t k) {
    std::array<std::size_t, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    return {cls, t[0], t[1], t[2]};
}

std::optional<std::size_t> RingSpec::basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return i;
    return std::nullopt;
}

std::optional<long> RingSpec::class_index(const std::string& label) const {
    if (label == "0") return kZeroClass;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label) return static_cast<long>(i);
    return std::nullopt;
}

bool RingSpec::admissible3(long cls_idx, std::size_t i, std::size_t j, std::size_t k) const {
    long total = basis[i].degree + basis[j].degree + basis[k].degree;
    return total == 4 * n - 2 * chern_of(cls_idx);
}

bool RingSpec::admissible_higher(long cls_idx,
                                 const std::vector<std::pair<long, std::size_t>>& ins) const {
    // complex virtual dimension n + c_1 + p - 3 must match constraint
    // codimensions plus descendent orders
    long p = static_cast<long>(ins.size());
    long cut = n + chern_of(cls_idx) + p - 3;
    long need = 0;
    for (const auto& [tau, idx] : ins) need += tau + (n - basis[idx].degree / 2);
    return need == cut;
}

void RingSpec::validate() {
    auto fail = [](const std::string& msg) { throw ValidationError(msg); };
    if (n < 1) fail("half-dimension n must be >= 1");
    if (basis.empty()) fail("empty basis");
    std::set<std::string> names;
    std::size_t n_pt = 0, n_top = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& b = basis[i];
        if (!names.insert(b.name).second) fail("duplicate basis name '" + b.name + "'");
        if (b.degree < 0 || b.degree > 2 * n) fail("basis '" + b.name + "' degree out of range");
        if (b.degree % 2 != 0)
            fail("basis '" + b.name + "' has odd degree; only even classes are supported");
        if (b.degree == 0) ++n_pt;
        if (b.degree == 2 * n) {
            ++n_top;
            unit_index = i;
        }
    }
    if (n_pt != 1 || basis[0].degree != 0) fail("exactly one degree-0 class, at index 0 (pt)");
    if (n_top != 1) fail("exactly one top-degree class (the unit) required");

    if (pairing.size() != basis.size()) fail("pairing matrix size mismatch");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (pairing[i].size() != basis.size()) fail("pairing matrix not square");
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (pairing[i][j] != pairing[j][i]) fail("pairing not symmetric");
            if (pairing[i][j] != 0 && basis[i].degree + basis[j].degree != 2 * n)
                fail("pairing nonzero between non-complementary degrees (" + basis[i].name + ", " +
                     basis[j].name + ")");
        }
    }
    auto inv = mat_inverse(pairing);
    if (!inv) throw SingularPairing("intersection pairing is not invertible");
    dual = *inv;

    std::set<std::string> labels;
    std::set<Exponent> omegas;
    for (const auto& c : classes) {
        if (c.label == "0") fail("class label '0' is reserved for the zero class");
        if (!labels.insert(c.label).second) fail("duplicate class label '" + c.label + "'");
        if (c.omega <= 0) fail("class '" + c.label + "' must have positive omega");
        if (!omegas.insert(c.omega).second)
            fail("omega values must be pairwise distinct (period map injectivity); '" + c.label +
                 "' repeats one");
        for (const auto& [divisor, val] : c.divisor_pairings) {
            (void)val;
            auto idx = basis_index(divisor);
            if (!idx || basis[*idx].degree != 2 * n - 2)
                fail("class '" + c.label + "' pairs against '" + divisor +
                     "' which is not a degree 2n-2 basis class");
        }
    }

    for (const auto& [key, value] : gw3) {
        auto [ci, i, j, k] = key;
        if (ci != kZeroClass && (ci < 0 || ci >= static_cast<long>(classes.size())))
            fail("gw3 entry with unknown class index");
        if (i >= dim() || j >= dim() || k >= dim()) fail("gw3 entry with bad basis index");
        std::string where = "gw3 entry (" + (ci == kZeroClass ? std::string("0") : cls(ci).label) +
                            "; " + basis[i].name + ", " + basis[j].name + ", " + basis[k].name + ")";
        if (value != 0 && !admissible3(ci, i, j, k))
            fail(where + " violates the dimension filter");
        bool has_unit = (i == unit_index || j == unit_index || k == unit_index);
        if (has_unit && ci != kZeroClass && value != 0)
            fail(where + ": nonzero invariant with a fundamental-class insertion");
        if (has_unit && ci == kZeroClass) {
            // degenerate classical triple: must match the pairing
            std::size_t a = i, b = j;
            if (i == unit_index) {
                a = j;
                b = k;
            } else if (j == unit_index) {
                a = i;
                b = k;
            }
            if (value != pairing[a][b])
                fail(where + " disagrees with the intersection pairing");
        }
    }

    for (const auto& [key, value] : gw_higher) {
        const auto& [ci, ins] = key;
        if (ci != kZeroClass && (ci < 0 || ci >= static_cast<long>(classes.size())))
            fail("gw_higher entry with unknown class index");
        if (!std::is_sorted(ins.begin(), ins.end())) fail("gw_higher key not canonical");
        for (const auto& [tau, idx] : ins) {
            if (tau < 0) fail("gw_higher entry with negative descendent order");
            if (idx >= dim()) fail("gw_higher entry with bad basis index");
        }
        bool all_tau0 = std::all_of(ins.begin(), ins.end(), [](auto& p) { return p.first == 0; });
        if (value != 0 && all_tau0 && !admissible_higher(ci, ins))
            fail("gw_higher entry violates the dimension filter");
    }

    if (wdvv_mode != WdvvMode::Off) {
        auto report = wdvv_report(*this);
        if (!report.associative) {
            if (wdvv_mode == WdvvMode::Error)
                throw ValidationError("associativity violation at " + report.violation);
            warnings.push_back("associativity violation at " + report.violation);
        }
    }
}

Rational RingSpec::gw3_value(long cls_idx, std::size_t i, std::size_t j, std::size_t k,
                             bool missing_ok) const {
    if (!admissible3(cls_idx, i, j, k)) return Rational(0);
    bool has_unit = (i == unit_index || j == unit_index || k == unit_index);
    if (has_unit) {
        if (cls_idx != kZeroClass) return Rational(0); // fundamental-class axiom
        std::size_t a = i, b = j;
        if (i == unit_index) {
            a = j;
            b = k;
        } else if (j == unit_index) {
            a = i;
            b = k;
        }
        return pairing[a][b];
    }
    auto it = gw3.find(make_gw3_key(cls_idx, i, j, k));
    if (it != gw3.end()) return it->second;
    if (missing_ok) return Rational(0);
    throw MissingTableEntry("no invariant for (" +
                            (cls_idx == kZeroClass ? std::string("0") : cls(cls_idx).label) + "; " +
                            basis[i].name + ", " + basis[j].name + ", " + basis[k].name +
                            ") and the dimension filter does not force it to vanish");
}

QHElement QHElement::basis_element(const RingSpec& spec, std::size_t i) {
    QHElement e(spec.dim());
    e.coeffs_[i] = NovikovElement(Rational(1));
    return e;
}

QHElement QHElement::unit(const RingSpec& spec) { return basis_element(spec, spec.unit_index); }

bool QHElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool QHElement::is_graded(const RingSpec& spec) const { return degree(spec).has_value(); }

std::optional<long> QHElement::degree(const RingSpec& spec) const {
    std::optional<long> deg;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (const auto& t : coeffs_[i].terms()) {
            long d = 2 * t.q_power + spec.basis[i].degree;
            if (!deg)
                deg = d;
            else if (*deg != d)
                return std::nullopt;
        }
    }
    if (!deg) return 0; // the zero element is homogeneous of any degree
    return deg;
}

QHElement QHElement::truncated(const Floor& floor) const {
    QHElement e = *this;
    for (auto& c : e.coeffs_) c = c.truncated(floor);
    return e;
}

QHElement operator+(const QHElement& a, const QHElement& b) {
    QHElement e(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < e.coeffs_.size(); ++i) {
        if (i < a.coeffs_.size() && i < b.coeffs_.size())
            e.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        else if (i < a.coeffs_.size())
            e.coeffs_[i] = a.coeffs_[i];
        else
            e.coeffs_[i] = b.coeffs_[i];
    }
    return e;
}

QHElement operator-(const QHElement& a, const QHElement& b) {
    QHElement nb = b;
    for (auto& c : nb.coeffs_) c.negate();
    return a + nb;
}

bool operator==(const QHElement& a, const QHElement& b) { return a.coeffs_ == b.coeffs_; }

QHElement scale(const NovikovElement& c, const QHElement& a) {
    QHElement e(a.coeffs().size());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) e.coeffs()[i] = c * a.coeff(i);
    return e;
}

std::string QHElement::to_string(const RingSpec& spec) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero() && !coeffs_[i].floor()) continue;
        if (!first) os << " + ";
        first = false;
        os << spec.basis[i].name << "*[" << coeffs_[i].to_string(true) << "]";
    }
    if (first) os << "0";
    return os.str();
}

std::vector<QHElement> dual_basis(const RingSpec& spec) {
    auto inv = mat_inverse(spec.pairing);
    if (!inv) throw SingularPairing("intersection pairing is not invertible");
    std::vector<QHElement> duals;
    duals.reserve(spec.dim());
    for (std::size_t i = 0; i < spec.dim(); ++i) {
        QHElement e(spec.dim());
        for (std::size_t m = 0; m < spec.dim(); ++m)
            if ((*inv)[i][m] != 0) e.set_coeff(m, NovikovElement((*inv)[i][m]));
        duals.push_back(std::move(e));
    }
    return duals;
}

QHElement quantum_product(const QHElement& a, const QHElement& b, const RingSpec& spec,
                          const Floor& working_floor) {
    if (!a.is_graded(spec) || !b.is_graded(spec))
        throw ValidationError("quantum_product requires graded inputs");
    QHElement result(spec.dim());
    for (std::size_t ia = 0; ia < spec.dim(); ++ia) {
        if (a.coeff(ia).is_zero()) continue;
        for (std::size_t ib = 0; ib < spec.dim(); ++ib) {
            if (b.coeff(ib).is_zero()) continue;
            NovikovElement cc = a.coeff(ia) * b.coeff(ib);
            if (cc.is_zero()) continue;
            for (long ci = kZeroClass; ci < static_cast<long>(spec.classes.size()); ++ci) {
                Exponent omega = spec.omega_of(ci);
                if (working_floor && cc.lead_t_or_zero() - omega < *working_floor) continue;
                for (std::size_t k = 0; k < spec.dim(); ++k) {
                    if (!spec.admissible3(ci, ia, ib, k)) continue;
                    Rational v = spec.gw3_value(ci, ia, ib, k);
                    if (v == 0) continue;
                    NovikovElement w = mul_monomial(cc, v, -spec.chern_of(ci), -omega);
                    for (std::size_t m = 0; m < spec.dim(); ++m) {
                        if (spec.dual[k][m] == 0) continue;
                        result.coeffs()[m] = result.coeffs()[m] + spec.dual[k][m] * w;
                    }
                }
            }
        }
    }
    if (working_floor) result = result.truncated(working_floor);
    return result;
}

IdealVerdict q_minus_ideal_test(const RingSpec& spec) {
    for (const auto& [key, value] : spec.gw3) {
        if (value == 0) continue;
        auto [ci, i, j, k] = key; // sorted ascending, pt has index 0
        if (ci == kZeroClass) continue;
        if (i != spec.pt_index()) continue;
        if (j == spec.unit_index || k == spec.unit_index) continue;
        return {false, StrongUniruledWitness{spec.basis[j].name, spec.basis[k].name,
                                             spec.cls(ci).label}};
    }
    return {true, std::nullopt};
}

AnnihilationReport pt_annihilation_test(const RingSpec& spec) {
    AnnihilationReport report;
    report.ideal = q_minus_ideal_test(spec);
    QHElement pt = QHElement::basis_element(spec, spec.pt_index());
    for (std::size_t a = 0; a < spec.dim(); ++a) {
        if (a == spec.unit_index) continue;
        QHElement p = quantum_product(pt, QHElement::basis_element(spec, a), spec);
        if (!p.is_zero()) {
            report.pt_annihilates = false;
            report.witness_class = spec.basis[a].name;
            break;
        }
    }
    report.agree = (report.pt_annihilates == report.ideal.ideal);
    return report;
}

UnitFormResult unit_form_check(const QHElement& u, const RingSpec& spec) {
    auto verdict = q_minus_ideal_test(spec);
    if (!verdict.ideal)
        throw HypothesisViolation("unit_form_check requires a table without a strong-uniruledness "
                                  "witness; found <" +
                                  verdict.witness->a + ", " + verdict.witness->b + ", pt>_" +
                                  verdict.witness->cls);
    UnitFormResult r;
    r.lambda = u.coeff(spec.unit_index);
    r.remainder = u;
    r.remainder.set_coeff(spec.unit_index, NovikovElement());
    r.conforming = r.lambda.is_unit();
    return r;
}

NovikovElement deformed_structure_constants(const RingSpec& spec, const Vec& at, std::size_t i,
                                            std::size_t j, std::size_t k,
                                            const Exponent& working_floor) {
    if (at.size() != spec.dim())
        throw ValidationError("coordinate vector size does not match the basis");
    if (spec.omega_complete && working_floor < -*spec.omega_complete)
        throw TableExhausted("floor " + to_string(working_floor) +
                             " is below the table's certified energy cap t^(-" +
                             to_string(*spec.omega_complete) + ")");
    NovikovElement out;
    for (long ci = kZeroClass; ci < static_cast<long>(spec.classes.size()); ++ci) {
        Exponent omega = spec.omega_of(ci);
        if (-omega < working_floor) continue;
        Rational v3 = spec.gw3_value(ci, i, j, k, /*missing_ok=*/false);
        if (v3 != 0) out = out + NovikovElement::monomial(v3, -spec.chern_of(ci), -omega);
    }
    // Taylor terms from the higher-point table: an entry with insertion
    // multiset M containing (0,i),(0,j),(0,k) contributes
    // value * prod T_c^{m_c} / prod m_c! over the leftover multiset.
    std::vector<std::pair<long, std::size_t>> base{{0, i}, {0, j}, {0, k}};
    std::sort(base.begin(), base.end());
    for (const auto& [key, value] : spec.gw_higher) {
        const auto& [ci, ins] = key;
        if (value == 0) continue;
        if (ci != kZeroClass && -spec.cls(ci).omega < working_floor) continue;
        if (std::any_of(ins.begin(), ins.end(), [](auto& p) { return p.first > 0; })) continue;
        if (ins.size() <= 3) continue;
        // multiset difference ins - base
        std::vector<std::pair<long, std::size_t>> rest;
        {
            auto it = base.begin();
            bool ok = true;
            for (const auto& e : ins) {
                if (it != base.end() && e == *it)
                    ++it;
                else
                    rest.push_back(e);
            }
            ok = (it == base.end());
            if (!ok) continue;
        }
        Rational factor = value;
        std::size_t run = 0;
        for (std::size_t idx = 0; idx < rest.size(); ++idx) {
            factor *= at[rest[idx].second];
            run = (idx > 0 && rest[idx] == rest[idx - 1]) ? run + 1 : 1;
            factor /= Rational(static_cast<long>(run));
        }
        if (factor == 0) continue;
        out = out + NovikovElement::monomial(factor, -spec.chern_of(ci), -spec.omega_of(ci));
    }
    return out.truncated(Floor(working_floor));
}

WdvvReport wdvv_report(const RingSpec& spec) {
    // exact comparison over the formal universe of listed classes; missing
    // table entries read as zero for this diagnostic
    RingSpec relaxed = spec;
    struct Guard {}; // products below use missing_ok through a local lambda
    auto product = [&](const QHElement& x, const QHElement& y) {
        QHElement result(spec.dim());
        for (std::size_t ia = 0; ia < spec.dim(); ++ia) {
            if (x.coeff(ia).is_zero()) continue;
            for (std::size_t ib = 0; ib < spec.dim(); ++ib) {
                if (y.coeff(ib).is_zero()) continue;
                NovikovElement cc = x.coeff(ia) * y.coeff(ib);
                if (cc.is_zero()) continue;
                for (long ci = kZeroClass; ci < static_cast<long>(spec.classes.size()); ++ci) {
                    for (std::size_t k = 0; k < spec.dim(); ++k) {
                        if (!spec.admissible3(ci, ia, ib, k)) continue;
                        Rational v = spec.gw3_value(ci, ia, ib, k, /*missing_ok=*/true);
                        if (v == 0) continue;
                        NovikovElement w =
                            mul_monomial(cc, v, -spec.chern_of(ci), -spec.omega_of(ci));
                        for (std::size_t m = 0; m < spec.dim(); ++m) {
                            if (spec.dual[k][m] == 0) continue;
                            result.coeffs()[m] = result.coeffs()[m] + spec.dual[k][m] * w;
                        }
                    }
                }
            }
        }
        return result;
    };
    for (std::size_t i = 0; i < spec.dim(); ++i)
        for (std::size_t j = i; j < spec.dim(); ++j)
            for (std::size_t k = j; k < spec.dim(); ++k) {
                QHElement bi = QHElement::basis_element(spec, i);
                QHElement bj = QHElement::basis_element(spec, j);
                QHElement bk = QHElement::basis_element(spec, k);
                QHElement left = product(product(bi, bj), bk);
                QHElement right = product(bi, product(bj, bk));
                if (!(left == right)) {
                    return {false, "(" + spec.basis[i].name + ", " + spec.basis[j].name + ", " +
                                       spec.basis[k].name + ")"};
                }
            }
    return {true, ""};
}

} // namespace qh
