#include <doctest.h>

#include <random>

#include "hodgestar/poly_form.hpp"
#include "oracle_helpers.hpp"

using namespace hodgestar;

namespace {

PolyForm one_form(const Metric& g, const oracle::Triple& a) {
    PolyForm f(g);
    for (int axis = 0; axis < 3; ++axis)
        f.add_term(std::uint32_t{1} << axis, a[static_cast<std::size_t>(axis)]);
    return f;
}

Polynomial var(int nvars, int axis) { return Polynomial::variable(nvars, axis); }

}  // namespace

TEST_CASE("polynomial arithmetic, derivative, and evaluation") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = oracle::random_polynomial(3, 3, rng);
        Polynomial q = oracle::random_polynomial(3, 3, rng);
        // Product rule ties derivative to multiplication.
        for (int axis = 0; axis < 3; ++axis)
            CHECK((p * q).derivative(axis) ==
                  p.derivative(axis) * q + p * q.derivative(axis));
        // Evaluation is a ring homomorphism.
        std::vector<Rational> pt = oracle::random_point(3, rng);
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        // Mixed partials commute.
        CHECK(p.derivative(0).derivative(1) == p.derivative(1).derivative(0));
    }
    // Frozen: d/dx1 (x0 x1^2) = 2 x0 x1.
    Polynomial p = var(2, 0) * var(2, 1) * var(2, 1);
    CHECK(p.derivative(1) == Rational(2) * (var(2, 0) * var(2, 1)));
    CHECK(p.derivative(0) == var(2, 1) * var(2, 1));
    CHECK(p.evaluate({Rational(2), Rational(3)}) == 18);
}

TEST_CASE("exterior derivative: frozen value, Leibniz, dd = 0") {
    Metric e3 = Metric::euclidean(3);
    // d(x1 dx2) = -(dx1 dx2 reordered): x1 varies along axis 1.
    PolyForm f(e3);
    f.add_term(0b100, var(3, 1));  // x1 * dx2
    PolyForm df = d(f);
    PolyForm want(e3);
    want.add_term(0b110, Rational(1));  // dx1^dx2
    CHECK(df == want);

    std::mt19937 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Metric g = Metric::euclidean(n);
        int k = static_cast<int>(rng() % (n + 1));
        PolyForm a = oracle::random_form(g, k, 3, rng);
        CHECK(d(d(a)).is_zero());

        // Leibniz: d(fa) = df ^ a + f da for a scalar function f.
        Polynomial f0 = oracle::random_polynomial(n, 2, rng);
        PolyForm fscalar(g);
        fscalar.add_term(0, f0);
        CHECK(d(f0 * a) == wedge(d(fscalar), a) + f0 * d(a));

        int l = static_cast<int>(rng() % (n + 1));
        PolyForm b = oracle::random_form(g, l, 2, rng);
        int sign = (k % 2 == 0) ? 1 : -1;
        CHECK(d(wedge(a, b)) == wedge(d(a), b) + Rational(sign) * wedge(a, d(b)));
    }
}

TEST_CASE("form star agrees with the multivector star after evaluation") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::string sig;
        for (int a = 0; a < n; ++a) sig += rng() % 2 ? '+' : '-';
        Metric g = Metric::from_signature(sig);
        int k = static_cast<int>(rng() % (n + 1));
        PolyForm a = oracle::random_form(g, k, 2, rng);
        std::vector<Rational> pt = oracle::random_point(n, rng);
        CHECK(oracle::evaluate_form(hodge_star(a), pt) ==
              hodge_star(oracle::evaluate_form(a, pt), g));
    }
}

TEST_CASE("codifferential squares to zero and is minus divergence on 1-forms") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Metric g = Metric::euclidean(n);
        int k = static_cast<int>(rng() % (n + 1));
        PolyForm a = oracle::random_form(g, k, 3, rng);
        CHECK(codifferential(codifferential(a)).is_zero());
    }

    Metric e3 = Metric::euclidean(3);
    for (int trial = 0; trial < 60; ++trial) {
        oracle::Triple A = {oracle::random_polynomial(3, 3, rng),
                            oracle::random_polynomial(3, 3, rng),
                            oracle::random_polynomial(3, 3, rng)};
        PolyForm alpha = one_form(e3, A);
        PolyForm want(e3);
        want.add_term(0, -oracle::divergence(A, {0, 1, 2}));
        CHECK(codifferential(alpha) == want);
    }

    // Frozen: delta(x0 dx0) = -1 on Euclidean 3-space.
    PolyForm alpha(e3);
    alpha.add_term(0b001, var(3, 0));
    PolyForm want(e3);
    want.add_term(0, Rational(-1));
    CHECK(codifferential(alpha) == want);
}

TEST_CASE("Euclidean Hodge Laplacian is minus the componentwise Laplacian") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Metric g = Metric::euclidean(n);
        std::vector<int> all_axes;
        for (int a = 0; a < n; ++a) all_axes.push_back(a);
        int k = static_cast<int>(rng() % (n + 1));
        PolyForm a = oracle::random_form(g, k, 3, rng);
        PolyForm want(g);
        for (const auto& [bits, poly] : a.terms())
            want.add_term(bits, -oracle::laplacian(poly, all_axes));
        CHECK(hodge_laplacian(a) == want);
    }

    // Frozen: Delta_H(x1^2) = -2 as a 0-form on Euclidean 3-space.
    Metric e3 = Metric::euclidean(3);
    PolyForm f(e3);
    f.add_term(0, var(3, 1) * var(3, 1));
    PolyForm want(e3);
    want.add_term(0, Rational(-2));
    CHECK(hodge_laplacian(f) == want);
}

TEST_CASE("Hodge Laplacian on 1-forms is minus (grad div - curl curl)") {
    Metric e3 = Metric::euclidean(3);
    std::mt19937 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        oracle::Triple A = {oracle::random_polynomial(3, 3, rng),
                            oracle::random_polynomial(3, 3, rng),
                            oracle::random_polynomial(3, 3, rng)};
        oracle::Triple gd = oracle::gradient(oracle::divergence(A, {0, 1, 2}), {0, 1, 2});
        oracle::Triple cc = oracle::curl(oracle::curl(A, {0, 1, 2}), {0, 1, 2});
        oracle::Triple classical = {gd[0] - cc[0], gd[1] - cc[1], gd[2] - cc[2]};
        CHECK(hodge_laplacian(one_form(e3, A)) == -one_form(e3, classical));
    }
}

TEST_CASE("Beltrami operator follows the inverse signature") {
    Metric e2 = Metric::euclidean(2);
    CHECK(beltrami_laplace(var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1), e2) ==
          Polynomial::constant(2, Rational(4)));

    Metric mink = Metric::minkowski();
    CHECK(beltrami_laplace(var(4, 0) * var(4, 0), mink) ==
          Polynomial::constant(4, Rational(2)));
    CHECK(beltrami_laplace(var(4, 1) * var(4, 1), mink) ==
          Polynomial::constant(4, Rational(-2)));
}

TEST_CASE("Minkowski Hodge Laplacian reduces to the wave operator on scalars") {
    Metric mink = Metric::minkowski();
    auto scalar = [&](const Polynomial& p) {
        PolyForm f(mink);
        f.add_term(0, p);
        return f;
    };
    auto laplacian_value = [&](const Polynomial& p) {
        return hodge_laplacian(scalar(p)).coefficient(0);
    };
    // Signature-weighted second derivatives: the d'Alembertian.
    CHECK(laplacian_value(var(4, 0) * var(4, 0)) == Polynomial::constant(4, Rational(2)));
    CHECK(laplacian_value(var(4, 1) * var(4, 1)) ==
          Polynomial::constant(4, Rational(-2)));
    // Lightlike profile (x0 + x1)^2 is annihilated.
    Polynomial light = (var(4, 0) + var(4, 1)) * (var(4, 0) + var(4, 1));
    CHECK(laplacian_value(light).is_zero());
    CHECK(laplacian_value(var(4, 0) * var(4, 1)).is_zero());

    std::mt19937 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = oracle::random_polynomial(4, 3, rng);
        CHECK(laplacian_value(p) == beltrami_laplace(p, mink));
    }
}

TEST_CASE("Hodge harmonicity: both conditions, not just the Laplacian kernel") {
    Metric e2 = Metric::euclidean(2);

    // x1 dx0 + x0 dx1: closed and co-closed.
    PolyForm p(e2);
    p.add_term(0b01, var(2, 1));
    p.add_term(0b10, var(2, 0));
    HarmonicResidual h = is_harmonic_hodge(p);
    CHECK(h.harmonic());
    CHECK(h.d_p.is_zero());
    CHECK(h.d_star_p.is_zero());

    // x0 dx0: closed but not co-closed.
    PolyForm q(e2);
    q.add_term(0b01, var(2, 0));
    HarmonicResidual hq = is_harmonic_hodge(q);
    CHECK(hq.d_p.is_zero());
    CHECK(!hq.d_star_p.is_zero());
    CHECK(!hq.harmonic());

    // Harmonic forms sit in the Laplacian kernel.
    CHECK(hodge_laplacian(p).is_zero());
}

TEST_CASE("harmonic pieces of every random closed and co-closed combination") {
    // dP = 0 and d*P = 0 together force Delta_H P = 0.
    std::mt19937 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Metric g = Metric::euclidean(n);
        PolyForm a = oracle::random_form(g, 1 + static_cast<int>(rng() % (n - 1)), 2, rng);
        HarmonicResidual h = is_harmonic_hodge(a);
        if (h.harmonic()) CHECK(hodge_laplacian(a).is_zero());
    }
}
