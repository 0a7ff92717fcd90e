#pragma once

#include <optional>
#include <string>

#include "mouldlab/flexion.hpp"

namespace mouldlab {

enum class Verdict { holds, fails };
enum class CheckMode { strict, corrected };

/// Variable arrangements realizing the interleavings of the blocks
/// (1..i) and (i+1..r); each entry lists, per argument slot, the index of
/// the variable placed there.
inline std::vector<std::vector<int>> interleavings(int i, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> arrangement;
    arrangement.reserve(r);
    auto rec = [&](auto&& self, int a, int b) -> void {
        if (a > i && b > r) {
            out.push_back(arrangement);
            return;
        }
        if (a <= i) {
            arrangement.push_back(a);
            self(self, a + 1, b);
            arrangement.pop_back();
        }
        if (b <= r) {
            arrangement.push_back(b);
            self(self, a, b + 1);
            arrangement.pop_back();
        }
    };
    rec(rec, 1, i + 1);
    return out;
}

/// Sum of the depth-r component of A over the given variable arrangements.
inline RatFun arrangement_sum(const Mould& A, int r,
                              const std::vector<std::vector<int>>& arrangements) {
    std::vector<RatFun> terms;
    terms.reserve(arrangements.size());
    const RatFun comp = A.component(r);
    if (comp.is_zero()) return RatFun(r);
    for (const auto& w : arrangements) {
        std::vector<std::vector<int>> rows;
        rows.reserve(r);
        for (int t = 0; t < r; ++t) rows.push_back(detail::unit_row(w[t], r));
        terms.push_back(comp.substitute(rows, r));
    }
    return RatFun::sum(r, terms);
}

/// Shuffle sum A(sh((x_1..x_i),(x_{i+1}..x_r))) of the depth-r component.
inline RatFun shuffle_sum(const Mould& A, int r, int i) {
    return arrangement_sum(A, r, interleavings(i, r));
}

struct Witness {
    int depth = 0;
    std::string kind;
    std::vector<std::vector<int>> arrangements;  // empty for non-arrangement residues
    RatFun residue;
};

struct CheckReport {
    std::string property;
    std::map<int, Verdict> verdicts;  // depths >= 2; depth 1 is informational only
    std::map<int, Scalar> constants;  // extracted constants, corrected modes
    std::vector<Witness> witnesses;
    std::string depth1_info;

    bool holds() const {
        for (const auto& [r, v] : verdicts)
            if (v == Verdict::fails) return false;
        return true;
    }
    Scalar constant(int r) const {
        auto it = constants.find(r);
        return it == constants.end() ? Scalar() : it->second;
    }
};

inline CheckReport check_alternal(const Mould& A) {
    CheckReport rep;
    rep.property = "alternal";
    for (int r = 2; r <= A.max_depth(); ++r) {
        rep.verdicts[r] = Verdict::holds;
        for (int i = 1; i <= r - 1; ++i) {
            auto arrangements = interleavings(i, r);
            RatFun res = arrangement_sum(A, r, arrangements);
            if (!res.is_zero()) {
                rep.verdicts[r] = Verdict::fails;
                rep.witnesses.push_back(
                    {r, "shuffle(" + std::to_string(i) + ")", arrangements, res});
                break;
            }
        }
    }
    return rep;
}

inline CheckReport check_push_invariant(const Mould& A) {
    require_side(A, Side::u, "check_push_invariant");
    CheckReport rep;
    rep.property = "push";
    Mould pushed = push_u(A);
    if (A.max_depth() >= 1) {
        RatFun res = A.component(1) - pushed.component(1);
        rep.depth1_info = res.is_zero() ? "depth-1 even" : "depth-1 not even";
    }
    for (int r = 2; r <= A.max_depth(); ++r) {
        RatFun res = A.component(r) - pushed.component(r);
        if (res.is_zero()) {
            rep.verdicts[r] = Verdict::holds;
        } else {
            rep.verdicts[r] = Verdict::fails;
            rep.witnesses.push_back({r, "push", {}, res});
        }
    }
    return rep;
}

namespace detail {

/// Sum of all cyclic rotations of the depth-r component of B.
inline RatFun cyclic_sum(const Mould& B, int r, std::vector<std::vector<int>>* arrangements) {
    std::vector<std::vector<int>> rots;
    for (int k = 0; k < r; ++k) {
        std::vector<int> w(r);
        for (int t = 0; t < r; ++t) w[t] = (t + k) % r + 1;
        rots.push_back(w);
    }
    if (arrangements) *arrangements = rots;
    return arrangement_sum(B, r, rots);
}

/// Handles the shared strict/corrected classification of a residue that must
/// be zero (strict) or a constant -r c_r (corrected).
inline void classify_constant_residue(CheckReport& rep, int r, CheckMode mode, const RatFun& res,
                                      const std::string& kind,
                                      const std::vector<std::vector<int>>& arrangements) {
    if (res.is_zero()) {
        rep.verdicts[r] = Verdict::holds;
        if (mode == CheckMode::corrected) rep.constants[r] = Scalar();
        return;
    }
    if (mode == CheckMode::corrected && res.is_constant()) {
        rep.verdicts[r] = Verdict::holds;
        rep.constants[r] = res.constant_value() / Rat(-r);
        return;
    }
    rep.verdicts[r] = Verdict::fails;
    rep.witnesses.push_back({r, kind, arrangements, res});
}

}  // namespace detail

/// Cyclic-rotation sum of each depth: zero (strict) or the constant -r c_r
/// (corrected, with c_r extracted).  Non-constant sums fail with a witness.
inline CheckReport check_circ_neutral(const Mould& B, CheckMode mode) {
    require_side(B, Side::v, "check_circ_neutral");
    CheckReport rep;
    rep.property = mode == CheckMode::strict ? "circneutral" : "circneutral/corrected";
    for (int r = 2; r <= B.max_depth(); ++r) {
        std::vector<std::vector<int>> rots;
        RatFun res = detail::cyclic_sum(B, r, &rots);
        detail::classify_constant_residue(rep, r, mode, res, "cyclic", rots);
    }
    return rep;
}

/// Single-letter shuffle sum of each depth: zero or the constant -r c_r.
inline CheckReport check_first_alternality(const Mould& B, CheckMode mode) {
    require_side(B, Side::v, "check_first_alternality");
    CheckReport rep;
    rep.property = mode == CheckMode::strict ? "firstalt" : "firstalt/corrected";
    for (int r = 2; r <= B.max_depth(); ++r) {
        auto arrangements = interleavings(1, r);
        RatFun res = arrangement_sum(B, r, arrangements);
        detail::classify_constant_residue(rep, r, mode, res, "shuffle(1)", arrangements);
    }
    return rep;
}

enum class FayClass { zero, linear, general };

struct FayReport {
    std::map<int, FayClass> classes;  // depths >= 2
    std::map<int, RatFun> residues;   // the nonzero residues
    std::string depth1_info;

    bool strict() const {
        for (const auto& [r, c] : classes)
            if (c != FayClass::zero) return false;
        return true;
    }
};

/// Residue of the operator applied to dar_inv(A), classified per depth as
/// zero, a polynomial of degree <= 1, or a general rational function.
inline FayReport fay_defect(const Mould& A) {
    require_side(A, Side::u, "fay_defect");
    FayReport rep;
    Mould F = fay_operator(dar_inv(A));
    if (A.max_depth() >= 1)
        rep.depth1_info = F.component(1).is_zero() ? "depth-1 zero" : "depth-1 nonzero";
    for (int r = 2; r <= A.max_depth(); ++r) {
        RatFun res = F.component(r);
        if (res.is_zero()) {
            rep.classes[r] = FayClass::zero;
        } else if (res.is_polynomial() && res.num().degree() <= 1) {
            rep.classes[r] = FayClass::linear;
            rep.residues[r] = res;
        } else {
            rep.classes[r] = FayClass::general;
            rep.residues[r] = res;
        }
    }
    return rep;
}

/// Matches a depth-r residue against the shape s (x_2+...+x_r) and returns
/// the extracted c_r = -s/r; nothing when the shape differs.
inline std::optional<Scalar> match_linear_fay_residue(const RatFun& res, int r) {
    if (res.is_zero()) return Scalar();
    if (!res.is_polynomial()) return std::nullopt;
    Monomial m2(r, 0);
    m2[1] = 1;
    auto it = res.num().terms().find(m2);
    if (it == res.num().terms().end()) return std::nullopt;
    Scalar s = it->second;
    Poly expect = Poly::from_form(detail::range_row(2, r, r)) * s;
    if (res.num() != expect) return std::nullopt;
    return s / Rat(-r);
}

/// Matches every residue against -r c_r (x_2+...+x_r) and extracts the c_r;
/// nothing if some depth has a residue of a different shape.
inline std::optional<std::map<int, Scalar>> fay_constants(const FayReport& rep) {
    std::map<int, Scalar> out;
    for (const auto& [r, cls] : rep.classes) {
        if (cls == FayClass::zero) {
            out[r] = Scalar();
            continue;
        }
        auto c = match_linear_fay_residue(rep.residues.at(r), r);
        if (!c) return std::nullopt;
        out[r] = *c;
    }
    return out;
}

/// Membership report for the space of polynomial moulds F whose associated
/// M = delta_inv(F) is alternal, push-invariant and has circ-neutral swap up
/// to a constant mould; cross-validated through the residue route on F.
struct KrvReport {
    CheckReport alternal, push, circ;
    FayReport fay;
    std::map<int, Scalar> constants;
    bool member = false;
    bool routes_agree = false;
};

inline KrvReport check_krv_ell(const Mould& F) {
    require_side(F, Side::u, "check_krv_ell");
    KrvReport rep;
    Mould M = delta_inv(F);
    rep.alternal = check_alternal(M);
    rep.push = check_push_invariant(M);
    rep.circ = check_circ_neutral(swap_mould(M), CheckMode::corrected);
    rep.fay = fay_defect(F);
    rep.member = rep.alternal.holds() && rep.push.holds() && rep.circ.holds();
    rep.constants = rep.circ.constants;
    auto fc = fay_constants(rep.fay);
    rep.routes_agree = fc.has_value();
    if (fc)
        for (const auto& [r, c] : *fc)
            if (c != rep.circ.constant(r)) rep.routes_agree = false;
    return rep;
}

/// Three-way equivalence harness: evaluates the residue route on dur M and
/// the two swap routes, then checks that the verdicts and the extracted
/// constants coincide (and match the expected constants when given).
struct EquivReport {
    bool applicable = false;
    CheckReport alternal, push;
    CheckReport firstalt, circ;
    FayReport fay;
    bool verdicts_match = false;
    bool constants_match = false;
    bool all_hold = false;
    std::map<int, Scalar> constants;
};

inline EquivReport verify_equivalences(
    const Mould& M, const std::optional<std::map<int, Scalar>>& expected = std::nullopt) {
    require_side(M, Side::u, "verify_equivalences");
    EquivReport rep;
    rep.alternal = check_alternal(M);
    rep.push = check_push_invariant(M);
    if (!rep.alternal.holds() || !rep.push.holds()) {
        rep.applicable = false;
        return rep;
    }
    rep.applicable = true;
    Mould S = swap_mould(M);
    rep.firstalt = check_first_alternality(S, CheckMode::corrected);
    rep.circ = check_circ_neutral(S, CheckMode::corrected);
    rep.fay = fay_defect(delta(M));

    rep.verdicts_match = true;
    rep.constants_match = true;
    bool all = true;
    for (int r = 2; r <= M.max_depth(); ++r) {
        bool h1 = rep.firstalt.verdicts[r] == Verdict::holds;
        bool h2 = rep.circ.verdicts[r] == Verdict::holds;
        std::optional<Scalar> c3;
        if (rep.fay.classes[r] == FayClass::zero)
            c3 = Scalar();
        else
            c3 = match_linear_fay_residue(rep.fay.residues.at(r), r);
        bool h3 = c3.has_value();
        if (!(h1 == h2 && h2 == h3)) {
            rep.verdicts_match = false;
            all = false;
            continue;
        }
        if (!h1) {
            all = false;
            continue;
        }
        Scalar c1 = rep.firstalt.constant(r);
        Scalar c2 = rep.circ.constant(r);
        if (c1 != c2 || c2 != *c3) rep.constants_match = false;
        if (expected) {
            auto it = expected->find(r);
            Scalar ce = it == expected->end() ? Scalar() : it->second;
            if (c1 != ce) rep.constants_match = false;
        }
        rep.constants[r] = c1;
    }
    rep.all_hold = all && rep.verdicts_match && rep.constants_match;
    return rep;
}

}  // namespace mouldlab
