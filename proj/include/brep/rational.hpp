#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace brep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense matrix over Q, row-major.
using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    RatMatrix c(n, std::vector<Rational>(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < p; ++l)
                c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

inline RatMatrix rat_kron(const RatMatrix& a, const RatMatrix& b) {
    std::size_t ra = a.size(), rb = b.size();
    std::size_t ca = ra ? a[0].size() : 0, cb = rb ? b[0].size() : 0;
    RatMatrix c(ra * rb, std::vector<Rational>(ca * cb, 0));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l)
                    c[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return c;
}

inline Rational rat_trace(const RatMatrix& a) {
    Rational t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// "num/den" with the "/den" dropped for integers.
inline std::string rat_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace brep
