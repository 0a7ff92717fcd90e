#pragma once

#include <map>
#include <sstream>
#include <string>

#include "mouldlab/rational.hpp"

namespace mouldlab {

/// Monomial in the formal odd-zeta symbols: zeta index (odd, >= 3) -> exponent (> 0).
using ZetaMono = std::map<int, int>;

/// Element of the coefficient ring Q[z3, z5, z7, ...].
///
/// The odd-zeta symbols are free commutative variables; no relation between
/// them is assumed and no even-index symbol exists.  Terms with coefficient
/// zero are never stored, so the default-constructed Scalar is 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(int n) { if (n != 0) terms_[{}] = Rat(n); }
    Scalar(const Rat& q) { if (q != 0) terms_[{}] = q; }

    static Scalar zeta(int index, int power = 1) {
        if (index < 3 || index % 2 == 0)
            throw std::invalid_argument("Scalar::zeta: index must be odd and >= 3");
        Scalar s;
        if (power != 0)
            s.terms_[ZetaMono{{index, power}}] = 1;
        else
            s.terms_[{}] = 1;
        return s;
    }

    bool is_zero() const { return terms_.empty(); }

    /// True iff the value lies in Q (no zeta symbol appears).
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rat rational_part() const {
        auto it = terms_.find(ZetaMono{});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Coefficient of the given zeta monomial.
    Rat coeff(const ZetaMono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const std::map<ZetaMono, Rat>& terms() const { return terms_; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [m, q] : o.terms_) add_term(m, q);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [m, q] : o.terms_) add_term(m, -q);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [m, q] : a.terms_) r.terms_[m] = -q;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ma, qa] : a.terms_)
            for (const auto& [mb, qb] : b.terms_) {
                ZetaMono m = ma;
                for (const auto& [idx, e] : mb) m[idx] += e;
                r.add_term(m, qa * qb);
            }
        return r;
    }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    friend Scalar operator*(const Scalar& a, const Rat& q) {
        Scalar r;
        if (q == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = c * q;
        return r;
    }
    friend Scalar operator*(const Rat& q, const Scalar& a) { return a * q; }
    Scalar operator/(const Rat& q) const {
        if (q == 0) throw std::invalid_argument("Scalar: division by zero");
        return *this * (Rat(1) / q);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.terms_ < b.terms_; }

    void add_term(const ZetaMono& m, const Rat& q) {
        if (q == 0) return;
        auto [it, inserted] = terms_.emplace(m, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    std::map<ZetaMono, Rat> terms_;
};

inline std::string zeta_mono_str(const ZetaMono& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, e] : m) {
        if (!first) os << "*";
        first = false;
        os << "z" << idx;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

/// Canonical rendering: "0", "1/2", "z3", "(2/3)*z3*z5", "z3 + 2".
inline std::string scalar_str(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : s.terms()) {
        Rat a = q;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.empty()) {
            os << rat_str(a);
        } else if (a == 1) {
            os << zeta_mono_str(m);
        } else {
            bool frac = denominator(a) != 1;
            os << (frac ? "(" : "") << rat_str(a) << (frac ? ")" : "") << "*" << zeta_mono_str(m);
        }
    }
    return os.str();
}

}  // namespace mouldlab
