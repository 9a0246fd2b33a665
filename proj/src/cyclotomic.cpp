#include "brep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace brep {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Integer> poly_divide_exact(std::vector<Integer> num,
                                       const std::vector<Integer>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<Integer> quot(dn - dd + 1, 0);
    for (int i = dn - dd; i >= 0; --i) {
        Integer c = num[i + dd] / den[dd];
        quot[i] = c;
        for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("non-exact polynomial division");
    return quot;
}

// Per-q context: Phi_q and the reductions of eps^k, k in [0,q).
struct Context {
    int q;
    int deg;
    std::vector<Integer> phi;
    std::vector<std::vector<Rational>> power;  // power[k] = eps^k mod Phi_q

    explicit Context(int qq) : q(qq) {
        phi = cyclotomic_polynomial(q);
        deg = static_cast<int>(phi.size()) - 1;
        power.resize(q);
        std::vector<Rational> cur(deg, 0);
        if (deg > 0) cur[0] = 1;
        for (int k = 0; k < q; ++k) {
            power[k] = cur;
            // multiply by eps
            std::vector<Rational> next(deg, 0);
            Rational top = cur.empty() ? Rational(0) : cur[deg - 1];
            for (int i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
            if (deg > 0) next[0] = 0;
            if (top != 0)
                for (int i = 0; i < deg; ++i)
                    next[i] -= top * Rational(phi[i]);
            cur = std::move(next);
        }
    }
};

const Context& context(int q) {
    static std::map<int, Context> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, Context(q)).first;
    return it->second;
}

// reduce a polynomial of arbitrary degree mod Phi_q
std::vector<Rational> reduce(const Context& ctx, std::vector<Rational> p) {
    int dd = ctx.deg;
    for (int i = static_cast<int>(p.size()) - 1; i >= dd; --i) {
        Rational c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        for (int j = 0; j < dd; ++j) p[i - dd + j] -= c * Rational(ctx.phi[j]);
    }
    p.resize(dd);
    return p;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q >= 1");
    if (q == 1) return {-1, 1};  // x - 1
    // divide x^q - 1 by Phi_d for all proper divisors d
    std::vector<Integer> num(q + 1, 0);
    num[0] = -1;
    num[q] = 1;
    for (int d = 1; d < q; ++d)
        if (q % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

CycNum::CycNum(int q, std::vector<Rational> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
    const Context& ctx = context(q);
    if (static_cast<int>(coeffs_.size()) != ctx.deg)
        coeffs_ = reduce(ctx, std::move(coeffs_));
}

CycNum CycNum::zero(int q) {
    return CycNum(q, std::vector<Rational>(context(q).deg, 0));
}

CycNum CycNum::one(int q) { return from_rational(q, 1); }

CycNum CycNum::from_rational(int q, const Rational& r) {
    std::vector<Rational> c(context(q).deg, 0);
    if (!c.empty()) c[0] = r;
    // q = 1: Q(eps) = Q represented with deg(Phi_1) = 1 coefficient
    return CycNum(q, std::move(c));
}

CycNum CycNum::root_power(int q, long k) {
    const Context& ctx = context(q);
    long m = ((k % q) + q) % q;
    return CycNum(q, ctx.power[m]);
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (q_ != o.q_) throw std::invalid_argument("CycNum: mismatched q");
    std::vector<Rational> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return CycNum(q_, std::move(c));
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return CycNum(q_, std::move(c));
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (q_ != o.q_) throw std::invalid_argument("CycNum: mismatched q");
    const Context& ctx = context(q_);
    std::vector<Rational> p(2 * ctx.deg, 0);
    for (int i = 0; i < ctx.deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < ctx.deg; ++j)
            if (o.coeffs_[j] != 0) p[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return CycNum(q_, reduce(ctx, std::move(p)));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: division by zero");
    const Context& ctx = context(q_);
    // extended Euclid in Q[x]: u*this + v*Phi = gcd = const
    std::vector<Rational> r0(ctx.phi.size());
    for (std::size_t i = 0; i < ctx.phi.size(); ++i) r0[i] = Rational(ctx.phi[i]);
    std::vector<Rational> r1(coeffs_);
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> u0{0}, u1{1};  // coefficients of `this`
    auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    while (deg(r1) > 0) {
        // r0 = qout*r1 + r2
        std::vector<Rational> r2(r0), qout(std::max(deg(r0) - deg(r1) + 1, 1), 0);
        for (int i = deg(r0) - deg(r1); i >= 0; --i) {
            Rational c = r2[i + deg(r1)] / r1.back();
            qout[i] = c;
            for (int j = 0; j <= deg(r1); ++j) r2[i + j] -= c * r1[j];
        }
        while (!r2.empty() && r2.back() == 0) r2.pop_back();
        // u2 = u0 - qout*u1
        std::vector<Rational> u2(std::max(u0.size(), qout.size() + u1.size()), 0);
        for (std::size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
        for (std::size_t i = 0; i < qout.size(); ++i)
            for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= qout[i] * u1[j];
        while (u2.size() > 1 && u2.back() == 0) u2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw std::logic_error("CycNum: gcd with Phi_q not constant");
    Rational g = r1[0];
    for (auto& c : u1) c /= g;
    return CycNum(q_, std::move(u1));
}

CycNum CycNum::conj() const {
    // apply the Galois map eps -> eps^(q-1)
    const Context& ctx = context(q_);
    CycNum out = CycNum::zero(q_);
    for (int k = 0; k < ctx.deg; ++k) {
        if (coeffs_[k] == 0) continue;
        long e = (static_cast<long>(k) * (q_ - 1)) % q_;
        CycNum term = root_power(q_, e);
        std::vector<Rational> c(term.coeffs_);
        for (auto& x : c) x *= coeffs_[k];
        out = out + CycNum(q_, std::move(c));
    }
    return out;
}

bool CycNum::operator==(const CycNum& o) const {
    return q_ == o.q_ && coeffs_ == o.coeffs_;
}

std::complex<double> CycNum::to_complex() const {
    std::complex<double> eps = std::polar(1.0, 2.0 * M_PI / q_);
    std::complex<double> acc = 0.0, pw = 1.0;
    for (const auto& c : coeffs_) {
        acc += c.convert_to<double>() * pw;
        pw *= eps;
    }
    return acc;
}

CycMatrix cyc_identity(int q, std::size_t n) {
    CycMatrix m(n, std::vector<CycNum>(n, CycNum::zero(q)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = CycNum::one(q);
    return m;
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    int q = n && !a[0].empty() ? a[0][0].q() : 1;
    CycMatrix c(n, std::vector<CycNum>(p, CycNum::zero(q)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t l = 0; l < p; ++l)
                if (!b[j][l].is_zero()) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

CycNum cyc_trace(int q, const CycMatrix& a) {
    CycNum t = CycNum::zero(q);
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

bool cyc_eq(const CycMatrix& a, const CycMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace brep
