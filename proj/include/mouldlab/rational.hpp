#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mouldlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    return Rat(num, den);
}

inline Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

/// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ...; B_n = 0 for odd n >= 3.
inline Rat bernoulli(int n) {
    static std::vector<Rat> cache{Rat(1)};
    while ((int)cache.size() <= n) {
        int m = (int)cache.size();
        Rat acc = 0;
        for (int k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * cache[k];
        cache.push_back(-acc / Rat(m + 1));
    }
    return cache[n];
}

inline std::string rat_str(const Rat& q) {
    return q.str();
}

/// Parses "p", "-p" or "p/q" with integer p, q.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return Rat(num, den);
}

}  // namespace mouldlab
