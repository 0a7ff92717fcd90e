#pragma once

#include "mouldlab/mould.hpp"

namespace mouldlab {

struct OrderInsufficient : std::runtime_error {
    explicit OrderInsufficient(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidDecomposition : std::runtime_error {
    explicit InvalidDecomposition(const std::string& what) : std::runtime_error(what) {}
};

/// Decomposition of the word (x_1..x_r) into a = (x_1..x_i), b = (x_{i+1}..x_j),
/// c = (x_{j+1}..x_r) with 0 <= i < j <= r.
struct Decomposition {
    int i, j, r;

    Decomposition(int i_, int j_, int r_) : i(i_), j(j_), r(r_) {
        if (!(0 <= i && i < j && j <= r))
            throw InvalidDecomposition("Decomposition: need 0 <= i < j <= r");
    }
    int a_len() const { return i; }
    int b_len() const { return j - i; }
    int c_len() const { return r - j; }
};

enum class FlexionKind { a_ceil_c, a_floor_c, left_floor_b, right_floor_b };

/// Argument rows for the four flexions of a decomposition, over r variables.
///
/// a_ceil_c: the last letter of a absorbs the sum of b (plain c when a is
/// empty); a_floor_c: the first letter of c absorbs the sum of b (plain a
/// when c is empty).  The two v-side flexions subtract the neighbouring
/// letter of b instead.
inline std::vector<std::vector<int>> flexion_rows(FlexionKind kind, const Decomposition& d) {
    const int i = d.i, j = d.j, r = d.r;
    std::vector<std::vector<int>> rows;
    switch (kind) {
        case FlexionKind::a_ceil_c:
            if (i == 0) {
                for (int k = j + 1; k <= r; ++k) rows.push_back(detail::unit_row(k, r));
            } else {
                for (int k = 1; k <= i - 1; ++k) rows.push_back(detail::unit_row(k, r));
                rows.push_back(detail::range_row(i, j, r));
                for (int k = j + 1; k <= r; ++k) rows.push_back(detail::unit_row(k, r));
            }
            return rows;
        case FlexionKind::a_floor_c:
            if (j == r) {
                for (int k = 1; k <= i; ++k) rows.push_back(detail::unit_row(k, r));
            } else {
                for (int k = 1; k <= i; ++k) rows.push_back(detail::unit_row(k, r));
                rows.push_back(detail::range_row(i + 1, j + 1, r));
                for (int k = j + 2; k <= r; ++k) rows.push_back(detail::unit_row(k, r));
            }
            return rows;
        case FlexionKind::left_floor_b:
            // (x_{i+1}-x_i, ..., x_j-x_i); requires a nonempty
            if (i == 0) throw InvalidDecomposition("left_floor_b: a must be nonempty");
            for (int k = i + 1; k <= j; ++k) {
                std::vector<int> row(r, 0);
                row[k - 1] = 1;
                row[i - 1] -= 1;
                rows.push_back(row);
            }
            return rows;
        case FlexionKind::right_floor_b:
            // (x_{i+1}-x_{j+1}, ..., x_j-x_{j+1}); requires c nonempty
            if (j == r) throw InvalidDecomposition("right_floor_b: c must be nonempty");
            for (int k = i + 1; k <= j; ++k) {
                std::vector<int> row(r, 0);
                row[k - 1] = 1;
                row[j] -= 1;
                rows.push_back(row);
            }
            return rows;
    }
    throw InvalidDecomposition("flexion_rows: bad kind");
}

/// The flexion derivation:
///   (arat(M).Q)(u_1..u_r) = sum over w = abc with b, ac nonempty of
///       (Q(a]c) - Q(a[c)) M(b).
inline Mould arat_apply(const Mould& M, const Mould& Q) {
    require_side(M, Side::u, "arat_apply");
    require_side(Q, Side::u, "arat_apply");
    int depth = std::min(M.max_depth(), Q.max_depth());
    Mould out(Side::u, depth);
    for (int r = 1; r <= depth; ++r) {
        std::vector<RatFun> terms;
        for (int i = 0; i <= r - 1; ++i) {
            for (int j = i + 1; j <= r; ++j) {
                if (i == 0 && j == r) continue;  // ac must be nonempty
                Decomposition d(i, j, r);
                if (M.component(d.b_len()).is_zero()) continue;
                int qdepth = d.a_len() + d.c_len();
                if (Q.component(qdepth).is_zero()) continue;
                std::vector<std::vector<int>> brows;
                for (int k = i + 1; k <= j; ++k) brows.push_back(detail::unit_row(k, r));
                RatFun mb = detail::eval_component(M, d.b_len(), brows, r);
                RatFun q1 = detail::eval_component(Q, qdepth,
                                                   flexion_rows(FlexionKind::a_ceil_c, d), r);
                RatFun q2 = detail::eval_component(Q, qdepth,
                                                   flexion_rows(FlexionKind::a_floor_c, d), r);
                terms.push_back((q1 - q2) * mb);
            }
        }
        out.set_component(r, RatFun::sum(r, terms));
    }
    return out;
}

/// Darit(N) = dar . arat(delta_inv N) . dar_inv on the mould part; the
/// generator maps to N itself and the bracket generator is annihilated.
inline Mould darit_apply(const Mould& N, const Mould& R) {
    require_side(N, Side::u, "darit_apply");
    if (!N.empty_value().is_zero())
        throw BadEmptyValue("darit_apply: N must have zero empty value");
    return dar(arat_apply(delta_inv(N), dar_inv(R)));
}

inline MouldA darit_apply(const Mould& N, const MouldA& R) {
    Mould body = darit_apply(N, R.body);
    if (R.a_coeff != 0) body = add(body, scale(N, R.a_coeff));
    return MouldA(0, std::move(body));
}

/// Dari(A,B) = Darit(A).B - Darit(B).A.
inline Mould dari_bracket(const Mould& A, const Mould& B) {
    return sub(darit_apply(A, B), darit_apply(B, A));
}

/// exp(Darit(N)).R truncated: sum_{n=0}^{order} Darit(N)^n . R / n!.
/// Stops once a term vanishes below the truncation depth; if that never
/// happens within the requested order, the truncation cannot be trusted.
inline MouldA darit_exp_apply(const Mould& N, const MouldA& R, int order) {
    require_side(N, Side::u, "darit_exp_apply");
    if (!N.empty_value().is_zero())
        throw BadEmptyValue("darit_exp_apply: N must have zero empty value");
    if (order < 0) throw OrderInsufficient("darit_exp_apply: negative order");
    MouldA acc = R;
    MouldA term = R;
    for (int n = 1;; ++n) {
        term = scale(darit_apply(N, term), Rat(1, n));
        if (term.is_zero()) return acc;
        if (n > order)
            throw OrderInsufficient("darit_exp_apply: series not stable at requested order");
        acc = add(acc, term);
    }
}

inline Mould darit_exp_apply(const Mould& N, const Mould& R, int order) {
    return darit_exp_apply(N, MouldA::from_mould(R), order).body;
}

/// Truncated mu-exponential: requires empty value 0, returns empty value 1.
inline Mould mu_exp(const Mould& P) {
    if (!P.empty_value().is_zero()) throw BadEmptyValue("mu_exp: empty value must be 0");
    Mould acc = Mould::unit(P.max_depth(), P.side());
    Mould term = acc;
    for (int n = 1; n <= P.max_depth(); ++n) {
        term = scale(mu(term, P), Rat(1, n));
        if (term.is_zero()) break;
        acc = add(acc, term);
    }
    return acc;
}

/// Truncated mu-logarithm: requires empty value 1, returns empty value 0.
inline Mould mu_log(const Mould& G) {
    if (G.empty_value() != Scalar(1)) throw BadEmptyValue("mu_log: empty value must be 1");
    Mould X = sub(G, Mould::unit(G.max_depth(), G.side()));
    Mould acc = X;
    Mould pw = X;
    for (int n = 2; n <= G.max_depth(); ++n) {
        pw = mu(pw, X);
        if (pw.is_zero()) break;
        acc = add(acc, scale(pw, Rat(n % 2 == 0 ? -1 : 1, n)));
    }
    return acc;
}

}  // namespace mouldlab
