#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "convav/arith.hpp"
#include "convav/errors.hpp"
#include "convav/step_conv.hpp"
#include "test_util.hpp"

using namespace convav;

namespace {

// Independent oracle: composite midpoint quadrature of the defining integral
// int_0^x G1(x-s) G2(s) ds.  Touches only the summatory tables.
double convolve_midpoint(const SummatoryTable& G1, const SummatoryTable& G2, double x,
                         double step) {
    const long n = static_cast<long>(std::ceil(x / step));
    const double h = x / static_cast<double>(n);
    double acc = 0.0;
    for (long i = 0; i < n; ++i) {
        const double s = (static_cast<double>(i) + 0.5) * h;
        acc += G1(x - s) * G2(s);
    }
    return acc * h;
}

}  // namespace

TEST_CASE("laplace_convolve of psi with itself") {
    const ArithSeq lam = sieve_von_mangoldt(20);
    const SummatoryTable psi = summatory(lam);

    CHECK(laplace_convolve(psi, psi, 4.0) == 0.0);  // support starts after 4
    CHECK(laplace_convolve(psi, psi, -1.0) == 0.0);

    // x = 10 against a very fine midpoint rule (step 1e-6)
    const double exact = laplace_convolve(psi, psi, 10.0);
    const double oracle = convolve_midpoint(psi, psi, 10.0, 1e-6);
    CHECK(rel_diff(exact, oracle) <= 1e-5);
}

TEST_CASE("laplace_convolve vs midpoint oracle, random points") {
    const std::int64_t N = 500;
    const ArithSeq lam = sieve_von_mangoldt(N);
    const SummatoryTable psi = summatory(lam);
    const ConvKernel kern = kernel_build({&lam, &lam});

    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, static_cast<double>(N));
    for (int i = 0; i < 20; ++i) {
        // snap to the quadrature step so the integrand's jumps land on cell
        // boundaries, where the midpoint rule is exact for step functions
        const double x = std::round(u(rng) * 1e4) / 1e4;
        const double exact = kern.eval(x);
        const double oracle = convolve_midpoint(psi, psi, x, 1e-4);
        if (std::abs(exact) < 1.0)
            CHECK(std::abs(exact - oracle) <= 1e-8);
        else
            CHECK(rel_diff(exact, oracle) <= 1e-6);
    }
}

TEST_CASE("commutativity") {
    const std::int64_t N = 300;
    const ArithSeq lam = sieve_von_mangoldt(N);
    const ArithSeq r2 = seq_perfect_powers(N, 2);
    const SummatoryTable psi = summatory(lam);
    const SummatoryTable R2 = summatory(r2);
    for (double x : {7.5, 50.0, 123.456, 299.9})
        CHECK(rel_diff(laplace_convolve(psi, R2, x), laplace_convolve(R2, psi, x)) <= 1e-12);
}

TEST_CASE("Kronecker delta kernels have the exact polynomial form") {
    const std::int64_t N = 40;
    const ArithSeq d3 = seq_kronecker(N, 3);
    const ArithSeq d5 = seq_kronecker(N, 5);
    const ArithSeq d7 = seq_kronecker(N, 7);

    SUBCASE("d = 2") {
        const ConvKernel k = kernel_build({&d3, &d5});
        CHECK(k.eval(7.9) == 0.0);
        CHECK(k.eval(8.0) == 0.0);
        for (double x : {9.5, 20.0, 39.0})
            CHECK(k.eval(x) == doctest::Approx(x - 8.0).epsilon(1e-15));
    }
    SUBCASE("d = 3") {
        const ConvKernel k = kernel_build({&d3, &d5, &d7});
        CHECK(k.eval(14.99) == 0.0);
        for (double x : {16.0, 25.5, 39.0})
            CHECK(k.eval(x) == doctest::Approx((x - 15.0) * (x - 15.0) / 2.0).epsilon(1e-15));
    }
    SUBCASE("d = 4") {
        const ArithSeq d2 = seq_kronecker(N, 2);
        const ConvKernel k = kernel_build({&d3, &d5, &d7, &d2});
        CHECK(k.eval(16.5) == 0.0);
        for (double x : {18.0, 30.25})
            CHECK(k.eval(x) ==
                  doctest::Approx(std::pow(x - 17.0, 3.0) / 6.0).epsilon(1e-15));
    }
}

TEST_CASE("nested d = 2 equals laplace_convolve exactly") {
    const std::int64_t N = 100;
    const ArithSeq lam = sieve_von_mangoldt(N);
    const SummatoryTable psi = summatory(lam);
    for (double x : {0.0, 6.5, 55.25, 100.0})
        CHECK(nested_convolve({&lam, &lam}, x) == laplace_convolve(psi, psi, x));
}

TEST_CASE("support lower bound") {
    const std::int64_t N = 60;
    const ArithSeq lam = sieve_von_mangoldt(N);   // min support 2
    const ArithSeq r2 = seq_perfect_powers(N, 2); // min support 1
    const ArithSeq d5 = seq_kronecker(N, 5);      // min support 5
    CHECK(nested_convolve({&lam, &r2, &d5}, 7.999) == 0.0);
    CHECK(nested_convolve({&lam, &r2, &d5}, 8.5) > 0.0);
}

TEST_CASE("kernel_build matches nested_convolve and handles psi * R2") {
    const std::int64_t N = 50;
    const ArithSeq lam = sieve_von_mangoldt(N);
    const ArithSeq r2 = seq_perfect_powers(N, 2);
    const ConvKernel k = kernel_build({&lam, &r2});
    CHECK(k.eval(0.0) == 0.0);
    for (double x : {7.5, 10.0, 32.1})
        CHECK(k.eval(x) == nested_convolve({&lam, &r2}, x));

    const SummatoryTable psi = summatory(lam);
    const SummatoryTable R2 = summatory(r2);
    CHECK(rel_diff(k.eval(10.0), convolve_midpoint(psi, R2, 10.0, 1e-5)) <= 1e-5);
    CHECK_THROWS_AS(k.eval(51.0), out_of_table);
}
