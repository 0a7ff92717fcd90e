#pragma once

#include <map>
#include <vector>

#include "mouldlab/poly.hpp"

namespace mouldlab {

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

/// Rational function whose denominator is a multiset of integer linear forms.
/// Every operation renormalizes: denominator forms that exactly divide the
/// numerator are cancelled, and zero is always {num = 0, den = {}}.
class RatFun {
public:
    RatFun() : arity_(0) {}
    explicit RatFun(int arity) : arity_(arity), num_(arity) {}
    explicit RatFun(Poly num) : arity_(num.arity()), num_(std::move(num)) { normalize(); }
    RatFun(Poly num, std::map<LinearForm, int> den)
        : arity_(num.arity()), num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFun constant(int arity, const Scalar& s) {
        return RatFun(Poly::constant(arity, s));
    }

    int arity() const { return arity_; }
    bool is_zero() const { return num_.is_zero(); }
    const Poly& num() const { return num_; }
    const std::map<LinearForm, int>& den() const { return den_; }

    bool is_polynomial() const { return den_.empty(); }

    /// True iff the value is a constant scalar (denominator fully cancelled).
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Scalar constant_value() const { return num_.constant_value(); }

    Poly den_poly() const {
        Poly d = Poly::constant(arity_, Scalar(1));
        for (const auto& [f, mult] : den_)
            for (int i = 0; i < mult; ++i) d = d * Poly::from_form(f.coeffs);
        return d;
    }

    friend RatFun operator-(const RatFun& a) {
        RatFun r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        a.check_arity(b);
        std::map<LinearForm, int> den = a.den_;
        for (const auto& [f, m] : b.den_) den[f] += m;
        return RatFun(a.num_ * b.num_, std::move(den));
    }
    friend RatFun operator*(const RatFun& a, const Scalar& s) {
        if (s.is_zero()) return RatFun(a.arity_);
        RatFun r(a.num_ * s, a.den_);
        return r;
    }
    friend RatFun operator*(const Scalar& s, const RatFun& a) { return a * s; }
    friend RatFun operator*(const RatFun& a, const Rat& q) { return a * Scalar(q); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) { return sum(a.arity_, {a, b}); }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return sum(a.arity_, {a, -b}); }

    /// n-ary sum over the least common denominator.
    static RatFun sum(int arity, const std::vector<RatFun>& terms) {
        std::map<LinearForm, int> common;
        for (const auto& t : terms) {
            if (t.arity_ != arity) throw ArityMismatch("RatFun::sum");
            for (const auto& [f, m] : t.den_) {
                auto& cur = common[f];
                cur = std::max(cur, m);
            }
        }
        Poly num(arity);
        for (const auto& t : terms) {
            if (t.is_zero()) continue;
            Poly lifted = t.num_;
            for (const auto& [f, m] : common) {
                auto it = t.den_.find(f);
                int missing = m - (it == t.den_.end() ? 0 : it->second);
                for (int i = 0; i < missing; ++i) lifted = lifted * Poly::from_form(f.coeffs);
            }
            num += lifted;
        }
        return RatFun(std::move(num), std::move(common));
    }

    /// Multiplies by a single normalized linear form (denominator insertion
    /// happens through the constructor instead).
    RatFun times_form(const LinearForm& f) const {
        auto it = den_.find(f);
        if (it != den_.end()) {
            auto den = den_;
            if (--den[f] == 0) den.erase(f);
            return RatFun(num_, std::move(den));
        }
        return RatFun(num_ * Poly::from_form(f.coeffs), den_);
    }

    RatFun over_form(const LinearForm& f) const {
        auto den = den_;
        den[f] += 1;
        return RatFun(num_, std::move(den));
    }

    /// Composes with x_i -> rows[i] over out_arity variables.  Every
    /// denominator form must map to a nonzero form.
    RatFun substitute(const std::vector<std::vector<int>>& rows, int out_arity) const {
        if ((int)rows.size() != arity_) throw ArityMismatch("RatFun::substitute");
        if (is_zero()) return RatFun(out_arity);
        Poly num = num_.substitute(rows, out_arity);
        std::map<LinearForm, int> den;
        Rat scale = 1;
        for (const auto& [f, mult] : den_) {
            std::vector<int> img(out_arity, 0);
            for (int i = 0; i < arity_; ++i)
                for (int j = 0; j < out_arity; ++j) img[j] += f.coeffs[i] * rows[i][j];
            auto norm = LinearForm::normalize(img);
            if (!norm)
                throw DenominatorVanishes("substitution sent a denominator form to zero");
            den[norm->first] += mult;
            for (int i = 0; i < mult; ++i) scale /= Rat(norm->second);
        }
        return RatFun(num * scale, std::move(den));
    }

    /// Cross-multiplied exact equality.
    friend bool ratfun_equal(const RatFun& a, const RatFun& b) {
        a.check_arity(b);
        if (a.den_ == b.den_) return a.num_ == b.num_;
        RatFun d = a - b;
        return d.is_zero();
    }
    friend bool operator==(const RatFun& a, const RatFun& b) { return ratfun_equal(a, b); }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

private:
    void check_arity(const RatFun& o) const {
        if (arity_ != o.arity_) throw ArityMismatch("RatFun: arity mismatch");
    }

    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = den_.begin(); it != den_.end();) {
                auto q = num_.divide_by_form(it->first);
                if (q) {
                    num_ = std::move(*q);
                    progress = true;
                    if (--it->second == 0)
                        it = den_.erase(it);
                    if (num_.is_zero()) {
                        den_.clear();
                        return;
                    }
                } else {
                    ++it;
                }
            }
        }
    }

    int arity_;
    Poly num_;
    std::map<LinearForm, int> den_;
};

}  // namespace mouldlab
