#pragma once

#include <map>
#include <vector>

#include "mouldlab/ratfun.hpp"

namespace mouldlab {

struct SideMismatch : std::runtime_error {
    explicit SideMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct BadEmptyValue : std::runtime_error {
    explicit BadEmptyValue(const std::string& what) : std::runtime_error(what) {}
};

enum class Side { u, v };

inline const char* side_name(Side s) { return s == Side::u ? "u" : "v"; }

/// Depth-indexed family of rational functions; the depth-r component is a
/// RatFun of arity r.  Components above max_depth are undefined (not zero):
/// every operation truncates its result to the minimum input max_depth.
/// Components at depths <= max_depth that are absent from the map are zero.
class Mould {
public:
    Mould() : side_(Side::u), max_depth_(0) {}
    Mould(Side side, int max_depth, Scalar empty = Scalar())
        : side_(side), empty_(std::move(empty)), max_depth_(max_depth) {}

    static Mould zero(int max_depth, Side side = Side::u) { return Mould(side, max_depth); }
    static Mould unit(int max_depth, Side side = Side::u) {
        return Mould(side, max_depth, Scalar(1));
    }
    /// Mould concentrated in a single depth.
    static Mould concentrated(int max_depth, const RatFun& component, Side side = Side::u) {
        Mould m(side, max_depth);
        m.set_component(component.arity(), component);
        return m;
    }

    Side side() const { return side_; }
    int max_depth() const { return max_depth_; }
    const Scalar& empty_value() const { return empty_; }
    void set_empty_value(Scalar s) { empty_ = std::move(s); }
    const std::map<int, RatFun>& components() const { return comps_; }

    const RatFun component(int r) const {
        if (r < 1 || r > max_depth_)
            throw std::out_of_range("Mould::component: depth outside truncation");
        auto it = comps_.find(r);
        return it == comps_.end() ? RatFun(r) : it->second;
    }

    void set_component(int r, RatFun f) {
        if (r < 1 || r > max_depth_)
            throw std::out_of_range("Mould::set_component: depth outside truncation");
        if (f.arity() != r) throw ArityMismatch("Mould::set_component");
        if (f.is_zero())
            comps_.erase(r);
        else
            comps_[r] = std::move(f);
    }

    bool is_zero() const { return empty_.is_zero() && comps_.empty(); }

    /// Smallest depth >= 1 with a nonzero component; 0 when there is none.
    int min_depth() const { return comps_.empty() ? 0 : comps_.begin()->first; }

private:
    Side side_;
    Scalar empty_;
    int max_depth_;
    std::map<int, RatFun> comps_;
};

inline void require_side(const Mould& m, Side s, const char* op) {
    if (m.side() != s)
        throw SideMismatch(std::string(op) + ": expected a " + side_name(s) + "-side mould");
}
inline void require_same_side(const Mould& a, const Mould& b, const char* op) {
    if (a.side() != b.side()) throw SideMismatch(std::string(op) + ": side mismatch");
}

/// Equality up to the common truncation.
inline bool mould_equal(const Mould& a, const Mould& b) {
    if (a.side() != b.side() || a.empty_value() != b.empty_value()) return false;
    int d = std::min(a.max_depth(), b.max_depth());
    for (int r = 1; r <= d; ++r)
        if (!ratfun_equal(a.component(r), b.component(r))) return false;
    return true;
}

inline Mould add(const Mould& a, const Mould& b) {
    require_same_side(a, b, "add");
    Mould r(a.side(), std::min(a.max_depth(), b.max_depth()), a.empty_value() + b.empty_value());
    for (int d = 1; d <= r.max_depth(); ++d) r.set_component(d, a.component(d) + b.component(d));
    return r;
}
inline Mould sub(const Mould& a, const Mould& b) {
    require_same_side(a, b, "sub");
    Mould r(a.side(), std::min(a.max_depth(), b.max_depth()), a.empty_value() - b.empty_value());
    for (int d = 1; d <= r.max_depth(); ++d) r.set_component(d, a.component(d) - b.component(d));
    return r;
}
inline Mould scale(const Mould& a, const Scalar& s) {
    Mould r(a.side(), a.max_depth(), a.empty_value() * s);
    for (const auto& [d, f] : a.components()) r.set_component(d, f * s);
    return r;
}
inline Mould scale(const Mould& a, const Rat& q) { return scale(a, Scalar(q)); }
inline Mould neg(const Mould& a) { return scale(a, Scalar(-1)); }

namespace detail {

inline std::vector<int> unit_row(int var, int arity) {
    std::vector<int> r(arity, 0);
    r[var - 1] = 1;
    return r;
}
/// Row for x_lo + x_{lo+1} + ... + x_hi, scaled by sign.
inline std::vector<int> range_row(int lo, int hi, int arity, int sign = 1) {
    std::vector<int> r(arity, 0);
    for (int k = lo; k <= hi; ++k) r[k - 1] = sign;
    return r;
}

/// Evaluates the depth-d component of A at the given argument rows.
inline RatFun eval_component(const Mould& A, int d, const std::vector<std::vector<int>>& rows,
                             int out_arity) {
    if (d == 0) return RatFun::constant(out_arity, A.empty_value());
    RatFun c = A.component(d);
    if (c.is_zero()) return RatFun(out_arity);
    return c.substitute(rows, out_arity);
}

/// Renumbers variables of a depth-d component into arity out_arity at offset.
inline RatFun embed(const Mould& A, int d, int offset, int out_arity) {
    std::vector<std::vector<int>> rows;
    rows.reserve(d);
    for (int k = 1; k <= d; ++k) rows.push_back(unit_row(offset + k, out_arity));
    return eval_component(A, d, rows, out_arity);
}

}  // namespace detail

/// Componentwise product of the depth-r value with u_1...u_r.
inline Mould dar(const Mould& A) {
    require_side(A, Side::u, "dar");
    Mould r(Side::u, A.max_depth(), A.empty_value());
    for (const auto& [d, f] : A.components()) {
        RatFun g = f;
        for (int k = 1; k <= d; ++k) g = g.times_form(LinearForm::unit(k, d));
        r.set_component(d, g);
    }
    return r;
}
inline Mould dar_inv(const Mould& A) {
    require_side(A, Side::u, "dar_inv");
    Mould r(Side::u, A.max_depth(), A.empty_value());
    for (const auto& [d, f] : A.components()) {
        RatFun g = f;
        for (int k = 1; k <= d; ++k) g = g.over_form(LinearForm::unit(k, d));
        r.set_component(d, g);
    }
    return r;
}
/// Componentwise product with u_1 + ... + u_r.
inline Mould dur(const Mould& A) {
    require_side(A, Side::u, "dur");
    Mould r(Side::u, A.max_depth(), A.empty_value());
    for (const auto& [d, f] : A.components())
        r.set_component(d, f.times_form(LinearForm{std::vector<int>(d, 1)}));
    return r;
}
inline Mould dur_inv(const Mould& A) {
    require_side(A, Side::u, "dur_inv");
    Mould r(Side::u, A.max_depth(), A.empty_value());
    for (const auto& [d, f] : A.components())
        r.set_component(d, f.over_form(LinearForm{std::vector<int>(d, 1)}));
    return r;
}
inline Mould delta(const Mould& A) { return dar(dur(A)); }
inline Mould delta_inv(const Mould& A) { return dar_inv(dur_inv(A)); }

/// push_u A(u_1,...,u_r) = A(-u_1-...-u_r, u_1,...,u_{r-1}), iterated.
inline Mould push_u(const Mould& A, int power = 1) {
    require_side(A, Side::u, "push_u");
    Mould r(Side::u, A.max_depth(), A.empty_value());
    for (const auto& [d, f] : A.components()) {
        int n = ((power % (d + 1)) + d + 1) % (d + 1);  // order d+1 in depth d
        RatFun g = f;
        for (int step = 0; step < n; ++step) {
            std::vector<std::vector<int>> rows;
            rows.reserve(d);
            rows.push_back(detail::range_row(1, d, d, -1));
            for (int k = 2; k <= d; ++k) rows.push_back(detail::unit_row(k - 1, d));
            g = g.substitute(rows, d);
        }
        r.set_component(d, g);
    }
    return r;
}

/// push_v B(v_1,...,v_r) = B(-v_r, v_1-v_r, ..., v_{r-1}-v_r), iterated.
inline Mould push_v(const Mould& B, int power = 1) {
    require_side(B, Side::v, "push_v");
    Mould r(Side::v, B.max_depth(), B.empty_value());
    for (const auto& [d, f] : B.components()) {
        int n = ((power % (d + 1)) + d + 1) % (d + 1);
        RatFun g = f;
        for (int step = 0; step < n; ++step) {
            std::vector<std::vector<int>> rows;
            rows.reserve(d);
            std::vector<int> first(d, 0);
            first[d - 1] = -1;
            rows.push_back(first);
            for (int k = 2; k <= d; ++k) {
                std::vector<int> row(d, 0);
                row[k - 2] = 1;
                row[d - 1] = -1;
                rows.push_back(row);
            }
            g = g.substitute(rows, d);
        }
        r.set_component(d, g);
    }
    return r;
}

/// circ B(v_1,...,v_r) = B(v_2,...,v_r,v_1), iterated; order r in depth r.
inline Mould circ(const Mould& B, int power = 1) {
    require_side(B, Side::v, "circ");
    Mould r(Side::v, B.max_depth(), B.empty_value());
    for (const auto& [d, f] : B.components()) {
        int n = ((power % d) + d) % d;
        if (n == 0) {
            r.set_component(d, f);
            continue;
        }
        std::vector<std::vector<int>> rows;
        rows.reserve(d);
        for (int k = 1; k <= d; ++k) rows.push_back(detail::unit_row((k - 1 + n) % d + 1, d));
        r.set_component(d, f.substitute(rows, d));
    }
    return r;
}

/// swap A(v_1,...,v_r) = A(v_r, v_{r-1}-v_r, ..., v_1-v_2) from the u side,
/// and its inverse from the v side; an involution.
inline Mould swap_mould(const Mould& A) {
    Mould r(A.side() == Side::u ? Side::v : Side::u, A.max_depth(), A.empty_value());
    for (const auto& [d, f] : A.components()) {
        std::vector<std::vector<int>> rows;
        rows.reserve(d);
        if (A.side() == Side::u) {
            rows.push_back(detail::unit_row(d, d));
            for (int k = 2; k <= d; ++k) {
                std::vector<int> row(d, 0);
                row[d - k] = 1;      // v_{r-k+1}
                row[d - k + 1] = -1; // -v_{r-k+2}
                rows.push_back(row);
            }
        } else {
            for (int k = 1; k <= d; ++k) rows.push_back(detail::range_row(1, d - k + 1, d));
        }
        r.set_component(d, f.substitute(rows, d));
    }
    return r;
}

/// mu(A,B)(u_1,...,u_r) = sum_i A(u_1,...,u_i) B(u_{i+1},...,u_r).
inline Mould mu(const Mould& A, const Mould& B) {
    require_same_side(A, B, "mu");
    Mould r(A.side(), std::min(A.max_depth(), B.max_depth()),
            A.empty_value() * B.empty_value());
    for (int d = 1; d <= r.max_depth(); ++d) {
        std::vector<RatFun> terms;
        for (int i = 0; i <= d; ++i) {
            RatFun left = i == 0 ? RatFun::constant(d, A.empty_value())
                                 : detail::embed(A, i, 0, d);
            if (left.is_zero()) continue;
            RatFun right = i == d ? RatFun::constant(d, B.empty_value())
                                  : detail::embed(B, d - i, i, d);
            if (right.is_zero()) continue;
            terms.push_back(left * right);
        }
        r.set_component(d, RatFun::sum(d, terms));
    }
    return r;
}

inline Mould lu(const Mould& A, const Mould& B) { return sub(mu(A, B), mu(B, A)); }

/// Fay operator: the sum of the r+1 substitutions of Definition-style data;
/// in depth 1 it is B(u_1) + B(-u_1).
inline Mould fay_operator(const Mould& B) {
    require_side(B, Side::u, "fay_operator");
    Mould out(Side::u, B.max_depth(), B.empty_value());
    for (const auto& [d, f] : B.components()) {
        std::vector<RatFun> terms;
        terms.push_back(f);
        {
            // B(u_2,...,u_r, -(u_1+...+u_r))
            std::vector<std::vector<int>> rows;
            for (int k = 1; k <= d - 1; ++k) rows.push_back(detail::unit_row(k + 1, d));
            rows.push_back(detail::range_row(1, d, d, -1));
            terms.push_back(f.substitute(rows, d));
        }
        for (int i = 1; i <= d - 1; ++i) {
            // B(u_2,...,u_i, -(u_1+...+u_i), u_1+...+u_{i+1}, u_{i+2},...,u_r)
            std::vector<std::vector<int>> rows;
            for (int k = 1; k <= i - 1; ++k) rows.push_back(detail::unit_row(k + 1, d));
            rows.push_back(detail::range_row(1, i, d, -1));
            rows.push_back(detail::range_row(1, i + 1, d));
            for (int k = i + 2; k <= d; ++k) rows.push_back(detail::unit_row(k, d));
            terms.push_back(f.substitute(rows, d));
        }
        out.set_component(d, RatFun::sum(d, terms));
    }
    return out;
}

/// Element of the extension of the mould space by the formal generator `a`:
/// a rational multiple of `a` plus an ordinary mould.
struct MouldA {
    Rat a_coeff;
    Mould body;

    MouldA() : a_coeff(0) {}
    MouldA(Rat q, Mould m) : a_coeff(std::move(q)), body(std::move(m)) {}
    /// The generator itself, at the given truncation.
    static MouldA generator(int max_depth) { return MouldA(1, Mould::zero(max_depth)); }
    static MouldA from_mould(Mould m) { return MouldA(0, std::move(m)); }

    bool is_zero() const { return a_coeff == 0 && body.is_zero(); }
};

inline MouldA add(const MouldA& x, const MouldA& y) {
    return MouldA(x.a_coeff + y.a_coeff, add(x.body, y.body));
}
inline MouldA scale(const MouldA& x, const Rat& q) {
    return MouldA(x.a_coeff * q, scale(x.body, q));
}

/// Bracket on the extended space: lu(Q, a) = dur Q.
inline MouldA lu(const MouldA& x, const MouldA& y) {
    Mould body = add(lu(x.body, y.body),
                     sub(scale(dur(x.body), y.a_coeff), scale(dur(y.body), x.a_coeff)));
    return MouldA(0, std::move(body));
}

inline bool moulda_equal(const MouldA& x, const MouldA& y) {
    return x.a_coeff == y.a_coeff && mould_equal(x.body, y.body);
}

}  // namespace mouldlab
