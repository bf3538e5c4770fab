#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "muskat/errors.hpp"
#include "muskat/grid.hpp"
#include "muskat/operators.hpp"
#include "muskat/quadrature.hpp"
#include "muskat/random_fields.hpp"

using namespace muskat;
namespace {
constexpr double kPi = std::numbers::pi;

GridFunction cosine_mode(const Grid& g, double k, double amp = 1.0, double phase = 0.0) {
    std::vector<double> s(g.size());
    for (int n = 0; n < g.size(); ++n) s[n] = amp * std::cos(k * g.point(n) + phase);
    return GridFunction::from_samples(g, s);
}
}  // namespace

TEST_CASE("grid construction and wavenumbers") {
    const Grid g = make_grid(kPi, 8);
    CHECK(g.spacing() == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(g.wavenumber(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.spacing() * g.size() == 2.0 * g.half_length());  // exact in binary

    CHECK_THROWS_AS(make_grid(kPi, 7), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(kPi, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(-1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, 8), std::invalid_argument);

    const Grid big = make_grid(50.0, 1024);
    CHECK(big.nyquist() == doctest::Approx(512.0 * kPi / 50.0).epsilon(1e-15));
}

TEST_CASE("round trip and Parseval over random fields") {
    const Grid g(2.0 * kPi, 128);
    std::mt19937_64 eng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> s(g.size());
        for (double& v : s) v = (eng() >> 11) * (1.0 / 9007199254740992.0) - 0.5;
        const GridFunction f = GridFunction::from_samples(g, s);
        const GridFunction back = GridFunction::from_spectrum(g, f.spectrum());
        double err = 0.0, scale = 0.0;
        for (int n = 0; n < g.size(); ++n) {
            err = std::max(err, std::abs(back.samples()[n] - s[n]));
            scale = std::max(scale, std::abs(s[n]));
        }
        CHECK(err <= 1e-12 * scale);

        // sample-side vs spectrum-side L2
        double sample_side = 0.0;
        for (double v : s) sample_side += v * v;
        sample_side *= g.spacing();
        double spec_side = std::norm(f.spectrum()[0]);
        for (int j = 1; j < g.num_modes(); ++j)
            spec_side += (j == g.num_modes() - 1 ? 1.0 : 2.0) * std::norm(f.spectrum()[j]);
        spec_side *= 2.0 * g.half_length();
        CHECK(sample_side == doctest::Approx(spec_side).epsilon(1e-12));
    }
}

TEST_CASE("multipliers act as eigenvalues on pure modes") {
    const Grid g(kPi, 64);
    const GridFunction f = cosine_mode(g, 3.0);
    const GridFunction lam = lambda_power(f, 1.0);
    const GridFunction expected = f * 3.0;
    CHECK((lam - expected).max_abs() <= 1e-12);

    // derivative of sin is cos
    const GridFunction s = cosine_mode(g, 1.0, 1.0, -kPi / 2);  // sin(x)
    const GridFunction ds = derivative(s);
    const GridFunction c = cosine_mode(g, 1.0);
    CHECK((ds - c).max_abs() <= 1e-12);

    // non-finite symbol raises
    SymbolFn bad{[](double k) { return std::complex<double>(1.0 / (k - 3.0), 0.0); },
                 SymbolParity::even_real, "pole"};
    CHECK_THROWS_AS(apply_multiplier(f, bad), numeric_domain_error);
}

TEST_CASE("weighted fractional derivative with constant weight") {
    // |D|^{3/2,phi} with kappa == 1: phi is the constant
    // int_0^inf (1-cos h)/h^2 dh; the quadrature oracle integrates to M
    // and brackets the tail by 1/M +- 2/M^2, landing on pi/2
    const double m_end = 2000.0;
    const double constant = quad::adaptive_simpson(
                                [](double h) { return quad::one_minus_cos_over_h2(h); }, 0.0,
                                m_end, 1e-12, 48) +
                            1.0 / m_end;
    CHECK(std::abs(constant - kPi / 2) <= 2.0 / (m_end * m_end) + 1e-7);

    const Grid g(kPi, 64);
    const GridFunction f = cosine_mode(g, 2.0);
    SymbolFn weighted{[&](double k) {
                          return std::complex<double>(
                              k > 0.0 ? std::pow(k, 1.5) * (kPi / 2) : 0.0, 0.0);
                      },
                      SymbolParity::even_real, "d32-const"};
    const GridFunction lhs = apply_multiplier(f, weighted);
    const GridFunction rhs = lambda_power(f, 1.5) * (kPi / 2);
    CHECK((lhs - rhs).max_abs() <= 1e-12);
}

TEST_CASE("hilbert transform identities") {
    const Grid g(kPi, 64);
    for (double k : {1.0, 2.0, 5.0}) {
        const GridFunction c = cosine_mode(g, k);
        const GridFunction h = hilbert_transform(c);
        const GridFunction s = cosine_mode(g, k, 1.0, -kPi / 2);  // sin(kx)
        CHECK((h - s).max_abs() <= 1e-12);
    }
    // constants are annihilated
    const GridFunction one = GridFunction::from_samples(g, std::vector<double>(g.size(), 1.0));
    CHECK(hilbert_transform(one).max_abs() <= 1e-15);

    // H(H(f)) = -f for mean-zero f
    const GridFunction f = random_band_limited(g, 5, 2.0, 20, 1.0);
    const GridFunction hh = hilbert_transform(hilbert_transform(f));
    CHECK((hh + f).max_abs() <= 1e-12 * std::max(1.0, f.max_abs()));
}

TEST_CASE("lambda equals hilbert of derivative on every resolved mode") {
    const Grid g(kPi, 64);
    for (int j = 1; j < g.num_modes() - 1; ++j) {
        const GridFunction c = cosine_mode(g, g.wavenumber(j));
        const GridFunction a = lambda_power(c, 1.0);
        const GridFunction b = hilbert_transform(derivative(c));
        CHECK((a - b).max_abs() <= 1e-12 * std::max(1.0, a.max_abs()));
    }
}

TEST_CASE("frequency truncation") {
    const Grid g(kPi, 64);
    CHECK(project_jn(cosine_mode(g, 5.0), 3.0).max_abs() <= 1e-15);
    // noise-free single mode straight from the spectrum side
    std::vector<std::complex<double>> coef(g.num_modes(), 0.0);
    coef[3] = 0.5;
    const GridFunction f = GridFunction::from_spectrum(g, coef);
    const GridFunction kept = project_jn(f, 5.0);
    for (int j = 0; j < g.num_modes(); ++j) CHECK(kept.spectrum()[j] == f.spectrum()[j]);

    // idempotent, exactly
    const GridFunction r = random_band_limited(g, 9, 2.0, 30, 1.0);
    const GridFunction once = project_jn(r, 7.5);
    const GridFunction twice = project_jn(once, 7.5);
    for (int j = 0; j < g.num_modes(); ++j) CHECK(once.spectrum()[j] == twice.spectrum()[j]);
}

TEST_CASE("truncation is self-adjoint and the high-pass dissipation is nonnegative") {
    const Grid g(kPi, 64);
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const GridFunction u = random_band_limited(g, eng(), 2.0, 30, 1.0);
        const GridFunction v = random_band_limited(g, eng(), 2.0, 30, 1.0);
        const double lhs = inner_product(project_jn(u, 9.0), v);
        const double rhs = inner_product(u, project_jn(v, 9.0));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

        const GridFunction f = random_band_limited(g, eng(), 2.0, 30, 1.0);
        const GridFunction high = lambda_power(f, 1.0) - project_jn(lambda_power(f, 1.0), 9.0);
        CHECK(inner_product(high, f) >= -1e-12);
    }
}

TEST_CASE("finite differences match direct sample shifts at grid-aligned displacements") {
    const Grid g(kPi, 64);
    const GridFunction f = random_band_limited(g, 31, 2.0, 20, 1.0);

    // constants vanish for any displacement
    const GridFunction one = GridFunction::from_samples(g, std::vector<double>(g.size(), 1.0));
    CHECK(finite_difference(one, 0.377, 1).max_abs() <= 1e-14);

    // spectrum factor of the second difference
    const double h = 0.731;
    const GridFunction d2 = finite_difference(cosine_mode(g, 4.0), h, 2);
    const std::complex<double> factor =
        std::pow(1.0 - std::exp(std::complex<double>(0.0, -h * 4.0)), 2);
    CHECK(std::abs(d2.spectrum()[4] - factor * 0.5) <= 1e-12);

    // grid-aligned shifts against the sample-space oracle
    for (int lag : {1, 3, 7}) {
        const double hh = lag * g.spacing();
        const GridFunction d = finite_difference(f, hh, 1);
        for (int n = 0; n < g.size(); ++n) {
            const int m = ((n - lag) % g.size() + g.size()) % g.size();
            CHECK(d.samples()[n] ==
                  doctest::Approx(f.samples()[n] - f.samples()[m]).epsilon(1e-12));
        }
        // symmetric second difference: 2f(x) - f(x+h) - f(x-h)
        const GridFunction sp = shift(f, hh);
        const GridFunction sm = shift(f, -hh);
        const GridFunction sym = f * 2.0 - sp - sm;
        for (int n = 0; n < g.size(); ++n) {
            const int mplus = (n + lag) % g.size();
            const int mminus = ((n - lag) % g.size() + g.size()) % g.size();
            const double direct =
                2.0 * f.samples()[n] - f.samples()[mplus] - f.samples()[mminus];
            CHECK(sym.samples()[n] == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("slope operator") {
    const Grid g(kPi, 128);
    const GridFunction one = GridFunction::from_samples(g, std::vector<double>(g.size(), 1.0));
    CHECK(slope(one, 0.4).max_abs() <= 1e-13);

    // pointwise formula for sin
    const GridFunction s = cosine_mode(g, 1.0, 1.0, -kPi / 2);
    const double alpha = 0.37;
    const GridFunction sl = slope(s, alpha);
    for (int n = 0; n < g.size(); ++n) {
        const double x = g.point(n);
        const double direct = (std::sin(x) - std::sin(x - alpha)) / alpha;
        CHECK(sl.samples()[n] == doctest::Approx(direct).epsilon(1e-12));
    }

    // alpha -> 0 limit: |slope - derivative| <= alpha for sin at alpha = 1e-3
    const GridFunction d = derivative(s);
    const GridFunction small = slope(s, 1e-3);
    CHECK((small - d).max_abs() <= 1e-3);

    CHECK_THROWS_AS(slope(s, 0.0), std::invalid_argument);
}

TEST_CASE("transforms are safe to run concurrently") {
    const Grid g(kPi, 256);
    std::vector<GridFunction> inputs;
    for (int i = 0; i < 8; ++i) inputs.push_back(random_band_limited(g, 900 + i, 2.0, 40, 1.0));
    std::vector<GridFunction> serial;
    for (const GridFunction& f : inputs) serial.push_back(lambda_power(hilbert_transform(f), 0.5));

    std::vector<GridFunction> parallel(8, GridFunction::zero(g));
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t]() {
            for (int i = t; i < 8; i += 4)
                parallel[i] = lambda_power(hilbert_transform(inputs[i]), 0.5);
        });
    for (std::thread& th : pool) th.join();
    for (int i = 0; i < 8; ++i)
        for (int n = 0; n < g.size(); ++n)
            CHECK(parallel[i].samples()[n] == serial[i].samples()[n]);
}

TEST_CASE("two-thirds dealiasing zeroes the upper third") {
    const Grid g(kPi, 128);
    const GridFunction f = random_band_limited(g, 3, 1.0, 60, 1.0);
    const GridFunction d = dealias_two_thirds(f);
    for (int j = 0; j < g.num_modes(); ++j) {
        if (j > g.size() / 3)
            CHECK(std::abs(d.spectrum()[j]) == 0.0);
        else
            CHECK(d.spectrum()[j] == f.spectrum()[j]);
    }
}
