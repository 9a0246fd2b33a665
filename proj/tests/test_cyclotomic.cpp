#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "brep/cyclotomic.hpp"

using namespace brep;

namespace {

CycNum random_cyc(int q, std::mt19937& rng) {
    int deg = static_cast<int>(cyclotomic_polynomial(q).size()) - 1;
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(deg);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return CycNum(q, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(9) == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<Integer>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(15).size() == 9);  // phi(15) = 8
}

TEST_CASE("root powers") {
    CHECK(CycNum::root_power(3, 0) == CycNum::one(3));
    CHECK(CycNum::root_power(3, 3) == CycNum::one(3));
    // eps^2 = -1 - eps mod x^2+x+1
    CycNum e2 = CycNum::root_power(3, 2);
    CHECK(e2.coeffs() == std::vector<Rational>{-1, -1});
    CHECK(CycNum::root_power(3, -1) == e2);
}

TEST_CASE("basic identities") {
    CycNum e = CycNum::root_power(3, 1);
    CHECK(e * CycNum::root_power(3, 2) == CycNum::one(3));
    CHECK(CycNum::one(3) + e + CycNum::root_power(3, 2) == CycNum::zero(3));
    CHECK(e.conj() == CycNum::root_power(3, 2));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    for (int q : {1, 3, 5, 9}) {
        for (int t = 0; t < 40; ++t) {
            CycNum a = random_cyc(q, rng), b = random_cyc(q, rng), c = random_cyc(q, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("inverses") {
    std::mt19937 rng(11);
    for (int q : {1, 3, 5, 9}) {
        int done = 0;
        while (done < 100) {
            CycNum x = random_cyc(q, rng);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == CycNum::one(q));
            ++done;
        }
    }
    CHECK_THROWS_AS(CycNum::zero(3).inverse(), std::domain_error);
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    std::mt19937 rng(13);
    for (int q : {1, 3, 5, 9}) {
        for (int t = 0; t < 30; ++t) {
            CycNum a = random_cyc(q, rng), b = random_cyc(q, rng);
            CHECK(a.conj().conj() == a);
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("double-precision soundness") {
    std::mt19937 rng(17);
    for (int q : {3, 5, 9}) {
        for (int t = 0; t < 20; ++t) {
            CycNum a = random_cyc(q, rng), b = random_cyc(q, rng);
            std::complex<double> za = a.to_complex(), zb = b.to_complex();
            CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9);
            CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-9);
            CHECK(std::abs(a.conj().to_complex() - std::conj(za)) < 1e-9);
        }
        // eps^q = 1 numerically
        CHECK(std::abs(CycNum::root_power(q, 1).to_complex() -
                       std::polar(1.0, 2 * M_PI / q)) < 1e-9);
    }
}
