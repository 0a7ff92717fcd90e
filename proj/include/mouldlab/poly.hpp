#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "mouldlab/scalar.hpp"

namespace mouldlab {

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent vector; length equals the arity of the owning Poly.
using Monomial = std::vector<int>;

/// Nonzero integer linear form in x_1..x_arity, normalized so that the
/// integer content is 1 and the first nonzero coefficient is positive.
/// The sign and content stripped by normalization are returned separately.
struct LinearForm {
    std::vector<int> coeffs;

    int arity() const { return (int)coeffs.size(); }

    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.coeffs < b.coeffs; }
    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs; }

    /// Normalizes raw coefficients.  Returns nothing if the form is zero,
    /// otherwise the normalized form and the integer s with raw = s * form.
    static std::optional<std::pair<LinearForm, Int>> normalize(const std::vector<int>& raw) {
        long long g = 0;
        int first_nz = 0;
        for (int c : raw) {
            g = std::gcd(g, (long long)c);
            if (first_nz == 0 && c != 0) first_nz = c;
        }
        if (first_nz == 0) return std::nullopt;
        if (first_nz < 0) g = -g;
        LinearForm f;
        f.coeffs.reserve(raw.size());
        for (int c : raw) f.coeffs.push_back((int)(c / g));
        return std::make_pair(std::move(f), Int(g));
    }

    static LinearForm unit(int var, int arity) {
        LinearForm f;
        f.coeffs.assign(arity, 0);
        f.coeffs[var - 1] = 1;
        return f;
    }
};

/// Sparse multivariate polynomial over Scalar in a fixed number of variables.
class Poly {
public:
    Poly() : arity_(0) {}
    explicit Poly(int arity) : arity_(arity) {}

    static Poly constant(int arity, const Scalar& s) {
        Poly p(arity);
        if (!s.is_zero()) p.terms_[Monomial(arity, 0)] = s;
        return p;
    }
    static Poly monomial(int arity, const Monomial& m, const Scalar& s = Scalar(1)) {
        if ((int)m.size() != arity) throw ArityMismatch("Poly::monomial");
        Poly p(arity);
        if (!s.is_zero()) p.terms_[m] = s;
        return p;
    }
    static Poly variable(int var, int arity) {
        Monomial m(arity, 0);
        m[var - 1] = 1;
        return monomial(arity, m);
    }
    static Poly from_form(const std::vector<int>& coeffs) {
        Poly p((int)coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            Monomial m(coeffs.size(), 0);
            m[i] = 1;
            p.terms_[m] = Scalar((int)coeffs[i]);
        }
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [m, s] : terms_)
            d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
        return d;
    }

    /// True iff the polynomial is a constant (possibly zero).
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Monomial(arity_, 0));
    }
    Scalar constant_value() const {
        auto it = terms_.find(Monomial(arity_, 0));
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Monomial& m, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [m, s] : o.terms_) add_term(m, s);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_arity(o);
        for (const auto& [m, s] : o.terms_) add_term(m, -s);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(const Poly& a) {
        Poly r(a.arity_);
        for (const auto& [m, s] : a.terms_) r.terms_[m] = -s;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_arity(b);
        Poly r(a.arity_);
        for (const auto& [ma, sa] : a.terms_)
            for (const auto& [mb, sb] : b.terms_) {
                Monomial m(a.arity_);
                for (int i = 0; i < a.arity_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, sa * sb);
            }
        return r;
    }
    friend Poly operator*(const Poly& a, const Scalar& s) {
        Poly r(a.arity_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
        return r;
    }
    friend Poly operator*(const Scalar& s, const Poly& a) { return a * s; }
    friend Poly operator*(const Poly& a, const Rat& q) { return a * Scalar(q); }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Composes with x_i -> rows[i] (integer linear forms over out_arity
    /// variables; zero rows are allowed and kill the corresponding terms).
    Poly substitute(const std::vector<std::vector<int>>& rows, int out_arity) const {
        if ((int)rows.size() != arity_) throw ArityMismatch("Poly::substitute: row count");
        std::vector<Poly> forms;
        forms.reserve(arity_);
        for (const auto& r : rows) {
            if ((int)r.size() != out_arity) throw ArityMismatch("Poly::substitute: row arity");
            forms.push_back(Poly::from_form(r));
        }
        // memoized powers of each substituted form
        std::vector<std::vector<Poly>> pow(arity_);
        for (int i = 0; i < arity_; ++i) pow[i].push_back(Poly::constant(out_arity, Scalar(1)));
        auto power = [&](int var, int e) -> const Poly& {
            auto& v = pow[var];
            while ((int)v.size() <= e) v.push_back(v.back() * forms[var]);
            return v[e];
        };
        Poly out(out_arity);
        for (const auto& [m, s] : terms_) {
            Poly t = Poly::constant(out_arity, s);
            for (int i = 0; i < arity_ && !t.is_zero(); ++i)
                if (m[i] != 0) t = t * power(i, m[i]);
            out += t;
        }
        return out;
    }

    /// Exact division by a linear form; nullopt when not divisible.
    std::optional<Poly> divide_by_form(const LinearForm& L) const {
        if (L.arity() != arity_) throw ArityMismatch("Poly::divide_by_form");
        if (is_zero()) return Poly(arity_);
        int k = 0;
        while (L.coeffs[k] == 0) ++k;
        const Rat c(L.coeffs[k]);
        Poly rest = Poly::from_form(L.coeffs) - Poly::variable(k + 1, arity_) * c;

        Poly r = *this;
        Poly q(arity_);
        while (!r.is_zero()) {
            // highest x_{k+1}-degree slice of the remainder
            int d = 0;
            for (const auto& [m, s] : r.terms_) d = std::max(d, m[k]);
            if (d == 0) return std::nullopt;
            Poly slice(arity_);
            for (const auto& [m, s] : r.terms_) {
                if (m[k] != d) continue;
                Monomial mm = m;
                mm[k] = d - 1;
                slice.add_term(mm, s * (Rat(1) / c));
            }
            q += slice;
            r -= slice * (Poly::variable(k + 1, arity_) * c) + slice * rest;
        }
        return q;
    }

    /// gcd of numerators / lcm of denominators over all rational coefficients,
    /// signed by the leading (first stored) term; 0 for the zero polynomial.
    Rat content() const {
        Int num_gcd = 0, den_lcm = 1;
        int sign = 0;
        for (const auto& [m, s] : terms_)
            for (const auto& [zm, q] : s.terms()) {
                Int n = numerator(q), d = denominator(q);
                if (sign == 0) sign = n < 0 ? -1 : 1;
                num_gcd = gcd(num_gcd, abs(n));
                den_lcm = lcm(den_lcm, d);
            }
        if (sign == 0) return 0;
        return Rat(sign * num_gcd, den_lcm);
    }

private:
    void check_arity(const Poly& o) const {
        if (arity_ != o.arity_) throw ArityMismatch("Poly: arity mismatch");
    }

    int arity_;
    std::map<Monomial, Scalar> terms_;
};

}  // namespace mouldlab
