#pragma once

#include <complex>
#include <vector>

#include "brep/rational.hpp"

namespace brep {

// q-th cyclotomic polynomial, monic, exact integer coefficients,
// index 0 = constant term.
std::vector<Integer> cyclotomic_polynomial(int q);

// Exact element of Q(eps_q), eps a fixed primitive q-th root of unity.
// Stored as a rational coefficient vector of length deg(Phi_q), fully
// reduced mod Phi_q, so equality is coefficient-wise.
class CycNum {
  public:
    CycNum() : q_(1) {}  // zero of Q(eps_1) = Q
    CycNum(int q, std::vector<Rational> coeffs);

    static CycNum zero(int q);
    static CycNum one(int q);
    static CycNum from_rational(int q, const Rational& r);
    // canonical representative of eps^(k mod q)
    static CycNum root_power(int q, long k);

    int q() const { return q_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    // throws std::domain_error on zero
    CycNum inverse() const;
    // complex conjugation, eps -> eps^(q-1)
    CycNum conj() const;

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // evaluation at eps = exp(2*pi*i/q), for floating-point cross-checks
    std::complex<double> to_complex() const;

  private:
    int q_;
    std::vector<Rational> coeffs_;
};

using CycMatrix = std::vector<std::vector<CycNum>>;

CycMatrix cyc_identity(int q, std::size_t n);
CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b);
CycNum cyc_trace(int q, const CycMatrix& a);
bool cyc_eq(const CycMatrix& a, const CycMatrix& b);

}  // namespace brep
