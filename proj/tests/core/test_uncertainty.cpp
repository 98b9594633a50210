#include "doctest.h"

#include "focku/error.hpp"
#include "focku/random.hpp"
#include "focku/uncertainty.hpp"

#include <cmath>
#include <numbers>

using namespace focku;

namespace {

FockContext base_ctx(double alpha = 1.0)
{
    FockContext ctx;
    ctx.alpha = alpha;
    return ctx;
}

FockVector gaussian(Complex r, Complex s = 0.0, double alpha = 1.0)
{
    return gaussian_coeffs_adaptive({1.0, r, s}, base_ctx(alpha));
}

FockVector normalized(const FockVector& f) { return Complex{1.0 / f.norm(), 0.0} * f; }

bool throws_code(auto&& fn, ErrorCode code)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

// Refining grid search over log σ: 10⁴ points per pass, zooming to the
// neighbourhood of the best point each time.
double grid_argmin_sigma(const FockVector& f)
{
    double lo = std::log(1e-3);
    double hi = std::log(1e3);
    double best = 0.0;
    for (int pass = 0; pass < 4; ++pass) {
        const int points = 10000;
        double best_val = INFINITY;
        const double step = (hi - lo) / (points - 1);
        for (int i = 0; i < points; ++i) {
            const double t = lo + step * i;
            const double v = cor7_value(f, std::exp(t));
            if (v < best_val) {
                best_val = v;
                best = t;
            }
        }
        lo = best - 2 * step;
        hi = best + 2 * step;
    }
    return std::exp(best);
}

} // namespace

TEST_CASE("optimal shifts")
{
    const auto ctx = base_ctx();
    const auto s0 = optimal_shifts(FockVector::basis(ctx, 0));
    CHECK(s0.a == 0.0);
    CHECK(s0.b == 0.0);
    const auto s1 = optimal_shifts(FockVector::basis(ctx, 1));
    CHECK(s1.a == 0.0);
    CHECK(s1.b == 0.0);

    // f = e^z: f' = f and <zf, f> = <f, f'> = ‖f‖², so a = 2 and b = 0.
    const auto ez = normalized(gaussian(0.0, 1.0));
    const auto s = optimal_shifts(ez);
    CHECK(s.a == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(s.b) <= 1e-13);

    CHECK(throws_code([&] { optimal_shifts(FockVector(ctx)); }, ErrorCode::DegenerateSpan));
}

TEST_CASE("shifted product margin at fixed shifts")
{
    const auto ctx = base_ctx();
    CHECK(theorem4_margin(FockVector::basis(ctx, 0), 0.0, 0.0) == doctest::Approx(0.0));
    CHECK(theorem4_margin(FockVector::basis(ctx, 1), 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    const auto g = gaussian(0.25);
    CHECK(std::abs(theorem4_margin(g, 0.0, 0.0)) <= 1e-8);
}

TEST_CASE("shifted product margin is nonnegative and minimized at the optimal shifts")
{
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const auto ctx = base_ctx(alpha);
        Rng rng(101);
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = random_vector(ctx, rng, ctx.trunc, rng.uniform(0.5, 0.95));
            const double scale = f.norm_squared();
            const auto best = optimal_shifts(f);
            const double at_best = theorem4_margin(f, best.a, best.b);
            for (int i = 0; i < 15; ++i) {
                const double a = rng.uniform(-5, 5);
                const double b = rng.uniform(-5, 5);
                const double m = theorem4_margin(f, a, b);
                CHECK(m >= -1e-9 * alpha * scale);
                CHECK(at_best <= m + 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("uncertainty report on basis vectors")
{
    const auto ctx = base_ctx();
    SUBCASE("ground state is extremal in every formulation")
    {
        const auto r = uncertainty_report(FockVector::basis(ctx, 0));
        CHECK(r.P == 1.0);
        CHECK(r.M == 1.0);
        CHECK(r.sin_plus == 1.0);
        CHECK(r.sin_minus == 1.0);
        CHECK(r.dist_plus == 1.0);
        CHECK(r.dist_minus == 1.0);
        for (const double m : {r.margin_thm4, r.margin_cor5, r.margin_cor6, r.margin_cor8, r.margin_cor9, r.margin_cor10})
            CHECK(std::abs(m) <= 1e-15);
    }
    SUBCASE("first excited state")
    {
        // A e_1 = e_0 + √2 e_2 and (D - D*) e_1 = e_0 - √2 e_2, both orthogonal to e_1.
        const auto r = uncertainty_report(FockVector::basis(ctx, 1));
        CHECK(r.P == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
        CHECK(r.M == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
        CHECK(std::abs(r.ip_plus) == 0.0);
        CHECK(std::abs(r.ip_minus) == 0.0);
        CHECK(r.margin_cor6 == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(r.margin_cor8 == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(r.margin_cor10 == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(r.margin_cor5 == doctest::Approx(8.0).epsilon(1e-14));
        CHECK(r.margin_cor9 == doctest::Approx(2.0).epsilon(1e-14));
    }
    CHECK(throws_code([&] { uncertainty_report(FockVector(ctx)); }, ErrorCode::DegenerateSpan));
}

TEST_CASE("uncertainty report on the c = 3 even Gaussian")
{
    // f = exp(z²/4): f' = zf/2, so P = (3/2)‖zf‖, M = (1/2)‖zf‖ with ‖zf‖² = (3/4)^{-3/2}
    // and ‖f‖² = (3/4)^{-1/2}. P·M = ‖f‖² gives equality; the energy form of the
    // sine-weighted bound needs P = M and stays strictly above: (1/4 + 1)‖zf‖²/‖f‖² - 1 = 2/3.
    const auto f = normalized(gaussian(0.25));
    const auto r = uncertainty_report(f);
    CHECK(std::abs(r.margin_cor5) <= 1e-8);
    CHECK(std::abs(r.margin_cor6) <= 1e-8);
    CHECK(std::abs(r.margin_cor8) <= 1e-8);
    CHECK(std::abs(r.margin_cor10) <= 1e-8);
    CHECK(std::abs(r.margin_thm4) <= 1e-8);
    CHECK(r.margin_cor9 == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(r.P / r.M == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("even Gaussian closed forms")
{
    for (const double rr : {-0.4, -0.25, 0.0, 0.1, 0.4}) {
        auto ctx = base_ctx();
        ctx.tail_tol = 1e-14;
        const auto f = gaussian_coeffs_adaptive({1.0, rr, 0.0}, ctx);
        const double q = 1.0 - 4.0 * rr * rr;
        CHECK(f.norm_squared() == doctest::Approx(1.0 / std::sqrt(q)).epsilon(1e-12));
        const auto r = uncertainty_report(f);
        CHECK(r.zf_norm * r.zf_norm == doctest::Approx(std::pow(q, -1.5)).epsilon(1e-12));
        const double pm = std::abs(1.0 + 2.0 * rr) * std::abs(1.0 - 2.0 * rr) * std::pow(q, -1.5);
        CHECK(r.P * r.M == doctest::Approx(pm).epsilon(1e-11));
        CHECK(std::abs(r.margin_cor6) <= 1e-9);
    }
}

TEST_CASE("report invariants on random vectors")
{
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const auto ctx = base_ctx(alpha);
        Rng rng(202);
        for (int trial = 0; trial < 60; ++trial) {
            const auto f = random_vector(ctx, rng, ctx.trunc, rng.uniform(0.5, 0.95));
            const auto r = uncertainty_report(f);
            const double ff = r.norm_f * r.norm_f;
            const double energy = r.derivative_norm * r.derivative_norm + r.zf_norm * r.zf_norm;
            CHECK(r.P * r.P + r.M * r.M == doctest::Approx(2.0 * energy).epsilon(1e-10));
            CHECK(r.dist_plus == doctest::Approx(r.P * r.sin_plus).epsilon(1e-10));
            CHECK(r.dist_minus == doctest::Approx(r.M * r.sin_minus).epsilon(1e-10));
            CHECK(r.margin_cor8 == doctest::Approx(r.margin_cor10).epsilon(1e-10));
            const double tol = alpha * 1e-10;
            CHECK(r.margin_thm4 >= -tol * ff);
            CHECK(r.margin_cor5 >= -tol);
            CHECK(r.margin_cor6 >= -tol * ff);
            CHECK(r.margin_cor8 >= -tol * ff);
            CHECK(r.margin_cor9 >= -tol);
            CHECK(r.margin_cor10 >= -tol * ff);
            // Sines are at most one, so the angle form is the sharper bound.
            CHECK(r.margin_cor8 <= r.margin_cor6 + 1e-12 * ff);

            // Moment-subtracted and distance routes give the same product of distances.
            const double moment_route = std::sqrt((r.margin_cor5 + alpha * alpha)) * ff;
            CHECK(moment_route == doctest::Approx(r.dist_plus * r.dist_minus).epsilon(1e-9));
        }
    }
}

TEST_CASE("margins scale with the squared norm")
{
    const auto ctx = base_ctx();
    Rng rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_vector(ctx, rng, ctx.trunc, 0.8);
        const Complex lambda{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const double l2 = std::norm(lambda);
        const auto a = uncertainty_report(f);
        const auto b = uncertainty_report(lambda * f);
        CHECK(b.margin_cor6 == doctest::Approx(l2 * a.margin_cor6).epsilon(1e-10));
        CHECK(b.margin_cor8 == doctest::Approx(l2 * a.margin_cor8).epsilon(1e-10));
        CHECK(b.margin_cor10 == doctest::Approx(l2 * a.margin_cor10).epsilon(1e-10));
        CHECK(b.margin_thm4 == doctest::Approx(l2 * a.margin_thm4).epsilon(1e-10));
        CHECK(b.margin_cor5 == doctest::Approx(a.margin_cor5).epsilon(1e-10));
        CHECK(b.margin_cor9 == doctest::Approx(a.margin_cor9).epsilon(1e-10));
        CHECK(cor7_value(lambda * f, 1.3) == doctest::Approx(l2 * cor7_value(f, 1.3)).epsilon(1e-10));
    }
}

TEST_CASE("weighted sum value and optimal sigma")
{
    const auto ctx = base_ctx();
    CHECK(cor7_value(FockVector::basis(ctx, 0), 1.0) == 0.0);
    CHECK(optimal_sigma(FockVector::basis(ctx, 0)) == 1.0);
    CHECK(throws_code([&] { cor7_value(FockVector::basis(ctx, 0), 0.0); }, ErrorCode::InvalidArgument));
    CHECK(throws_code([&] { cor7_value(FockVector::basis(ctx, 0), -1.0); }, ErrorCode::InvalidArgument));
    CHECK(throws_code([&] { optimal_sigma(FockVector(ctx)); }, ErrorCode::DegenerateSpan));

    const double pi = std::numbers::pi;
    for (const double sigma : {0.5, 1.0, pi, 4.0}) {
        const auto f = gaussian((1.0 - sigma) / (2.0 * (1.0 + sigma)));
        CHECK(std::abs(cor7_value(f, sigma)) <= 1e-8);
        CHECK(optimal_sigma(f) == doctest::Approx(sigma).epsilon(1e-10));
    }

    Rng rng(404);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_vector(ctx, rng, 24, rng.uniform(0.5, 0.9));
        const double grid = grid_argmin_sigma(f);
        CHECK(optimal_sigma(f) == doctest::Approx(grid).epsilon(1e-6));
        CHECK(cor7_value(f, grid) >= -1e-9);
    }
}

TEST_CASE("extremal function parameters")
{
    const auto p1 = extremal_function({1.0, 0.0, 0.0, 1.0});
    CHECK(p1.r == Complex{});
    CHECK(p1.s == Complex{});
    const auto p3 = extremal_function({3.0, 0.0, 0.0, 1.0});
    CHECK(p3.r == Complex{0.25, 0.0});
    CHECK(p3.s == Complex{});
    const auto p312 = extremal_function({3.0, 1.0, 2.0, 1.0});
    CHECK(p312.r == Complex{0.25, 0.0});
    CHECK(p312.s == Complex{0.25, 1.5});
    const auto weighted = extremal_function({3.0, 0.0, 0.0, 1.0}, 2.0);
    CHECK(weighted.r == Complex{0.5, 0.0});

    CHECK(throws_code([&] { extremal_function({0.0, 0.0, 0.0, 1.0}); }, ErrorCode::OutsideExtremalFamily));
    CHECK(throws_code([&] { extremal_function({-1.0, 0.0, 0.0, 1.0}); }, ErrorCode::OutsideExtremalFamily));
    for (const double c : {1e-6, 0.25, 1.0, 9.0, 1e6})
        CHECK(std::abs(extremal_function({c, 0.0, 0.0, 1.0}).r) < 0.5);
}

TEST_CASE("equality residual and recovery of c")
{
    const auto ctx = base_ctx();
    CHECK(eq6_residual(FockVector::basis(ctx, 0), 1.0, 0.0, 0.0) == 0.0);

    const auto f = gaussian_coeffs_adaptive(extremal_function({3.0, 0.0, 0.0, 1.0}), ctx);
    CHECK(eq6_residual(f, 3.0, 0.0, 0.0) <= 1e-9);
    const auto rec = recover_c(f);
    CHECK(rec.determined);
    CHECK(rec.c == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(rec.residual <= 1e-8);

    std::vector<Complex> bumped(f.coeffs().begin(), f.coeffs().end());
    bumped[4] += 0.05;
    const FockVector g(f.context(), std::move(bumped));
    CHECK(eq6_residual(g, 3.0, 0.0, 0.0) > 1e-3);
    CHECK(recover_c(g).residual > 1e-3);
}

TEST_CASE("extremal family closure")
{
    for (const double alpha : {1.0, 2.0}) {
        for (const double c : {0.25, 0.5, 1.0, 3.0, 9.0}) {
            for (const double a : {-2.0, 0.0, 2.0}) {
                for (const double b : {-2.0, 0.0, 2.0}) {
                    CAPTURE(c);
                    CAPTURE(a);
                    CAPTURE(b);
                    const auto p = extremal_function({c, a, b, Complex{0.3, -1.1}}, alpha);
                    const auto f = gaussian_coeffs_adaptive(p, base_ctx(alpha));
                    const double ff = f.norm_squared();
                    const auto s = optimal_shifts(f);
                    CHECK(s.a == doctest::Approx(a).epsilon(1e-9).scale(1.0));
                    CHECK(s.b == doctest::Approx(b).epsilon(1e-9).scale(1.0));
                    CHECK(std::abs(theorem4_margin(f, s.a, s.b)) <= 1e-8 * ff);
                    CHECK(eq6_residual(f, c, a, b) <= 1e-9);
                    const auto rec = recover_c(f);
                    CHECK(rec.c == doctest::Approx(c).epsilon(1e-5));
                    const auto rep = uncertainty_report(f);
                    CHECK(std::abs(rep.margin_cor10) <= 1e-8 * ff);
                    CHECK(std::abs(rep.margin_cor5) <= 1e-8);
                }
            }
        }
    }
}
