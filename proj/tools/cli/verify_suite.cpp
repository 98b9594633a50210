#include "verify_suite.hpp"

#include "format.hpp"

#include "focku/focku.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace focku::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    double measured = 0.0;
    Relation relation = Relation::AtMost;
    double tolerance = 0.0;
    bool skipped = false;
};

Outcome at_most(double measured, double tolerance) { return {measured, Relation::AtMost, tolerance, false}; }
Outcome at_least(double measured, double threshold) { return {measured, Relation::AtLeast, threshold, false}; }
Outcome skipped(Relation relation, double tolerance) { return {0.0, relation, tolerance, true}; }

struct Env {
    FockContext ctx;
    int cases = 0;
    Rng rng{0};
};

using CheckFn = std::function<Outcome(Env&)>;

struct CheckDef {
    std::string name;
    double alpha = 1.0;
    CheckFn run;
};

FockVector random_case(Env& env)
{
    const double decay = env.rng.uniform(0.5, 0.95);
    return random_vector(env.ctx, env.rng, env.ctx.trunc, decay);
}

FockVector unit(const FockVector& f) { return Complex{1.0 / f.norm(), 0.0} * f; }

double max_entry(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Vector interior_random(Env& env, Eigen::Index dim)
{
    Vector x = Vector::Zero(dim);
    double scale = 1.0;
    const double decay = env.rng.uniform(0.5, 0.95);
    for (Eigen::Index n = 0; n + 2 < dim; ++n) {
        x(n) = Complex{env.rng.uniform(-1, 1), env.rng.uniform(-1, 1)} * scale;
        scale *= decay;
    }
    return x;
}

const std::vector<double>& even_radii()
{
    static const std::vector<double> radii{-0.4, -0.25, 0.0, 0.1, 0.4};
    return radii;
}

struct ExtremalStats {
    double theorem4 = 0.0;
    double eq6 = 0.0;
    double recover = 0.0;
};

ExtremalStats extremal_sweep(const FockContext& ctx)
{
    ExtremalStats st;
    for (const double c : {0.25, 0.5, 1.0, 3.0, 9.0}) {
        for (const double a : {-2.0, 0.0, 2.0}) {
            for (const double b : {-2.0, 0.0, 2.0}) {
                const auto f = gaussian_coeffs_adaptive(extremal_function({c, a, b, 1.0}, ctx.alpha), ctx);
                const double ff = f.norm_squared();
                const auto s = optimal_shifts(f);
                st.theorem4 = std::max(st.theorem4, std::abs(theorem4_margin(f, s.a, s.b)) / ff);
                st.eq6 = std::max(st.eq6, eq6_residual(f, c, a, b));
                const auto rec = recover_c(f);
                const double err = rec.determined ? std::abs(rec.c - c) / c : INFINITY;
                st.recover = std::max(st.recover, err);
            }
        }
    }
    return st;
}

std::string alpha_tag(double alpha)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "[alpha=%g]", alpha);
    return buf;
}

void add_alpha_checks(std::vector<CheckDef>& defs, double alpha)
{
    const std::string tag = alpha_tag(alpha);
    auto add = [&](const std::string& name, CheckFn fn) { defs.push_back({name + tag, alpha, std::move(fn)}); };

    add("fock.adjoint", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-13);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const auto g = random_case(env);
            const double gap = std::abs(inner(annihilate(f), g) - inner(f, create(g)));
            worst = std::max(worst, gap / (f.norm() * g.norm()));
        }
        return at_most(worst, 1e-13);
    });

    add("fock.commutator.annihilate_create", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-13);
        const double alpha = env.ctx.alpha;
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const auto comm = annihilate(create(f)) - create(annihilate(f));
            worst = std::max(worst, (comm - Complex{alpha, 0.0} * f).norm() / (alpha * f.norm()));
        }
        return at_most(worst, 1e-13);
    });

    add("fock.commutator.selfadjoint", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-13);
        const double alpha = env.ctx.alpha;
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const auto ab = apply_selfadjoint(apply_selfadjoint(f, SelfAdjoint::B), SelfAdjoint::A);
            const auto ba = apply_selfadjoint(apply_selfadjoint(f, SelfAdjoint::A), SelfAdjoint::B);
            const auto gap = (ab - ba) - Complex{0.0, -2.0 * alpha} * f;
            worst = std::max(worst, gap.norm() / (2.0 * alpha * f.norm()));
        }
        return at_most(worst, 1e-13);
    });

    // Reports min ‖f'+zf-af‖‖f'-zf-ibf‖/‖f‖² against the weighted lower bound α.
    add("uncertainty.theorem4.lower_bound", [](Env& env) {
        const double alpha = env.ctx.alpha;
        const double threshold = alpha - 1e-9;
        if (env.cases == 0)
            return skipped(Relation::AtLeast, threshold);
        double lowest = INFINITY;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const double ff = f.norm_squared();
            for (int ia = 0; ia <= 10; ++ia) {
                for (int ib = 0; ib <= 10; ++ib) {
                    const double m = theorem4_margin(f, -5.0 + ia, -5.0 + ib);
                    lowest = std::min(lowest, m / ff + alpha);
                }
            }
        }
        return at_least(lowest, threshold);
    });

    add("uncertainty.theorem4.optimal_shifts", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-9);
        double worst = -INFINITY;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const double ff = f.norm_squared();
            const auto s = optimal_shifts(f);
            const double best = theorem4_margin(f, s.a, s.b);
            for (int k = 0; k < 8; ++k) {
                const double m = theorem4_margin(f, env.rng.uniform(-5, 5), env.rng.uniform(-5, 5));
                worst = std::max(worst, (best - m) / ff);
            }
        }
        return at_most(worst, 1e-9);
    });

    add("uncertainty.extremal.theorem4", [](Env& env) { return at_most(extremal_sweep(env.ctx).theorem4, 1e-8); });
    add("uncertainty.extremal.eq6_residual", [](Env& env) { return at_most(extremal_sweep(env.ctx).eq6, 1e-9); });
    add("uncertainty.extremal.recover_c", [](Env& env) { return at_most(extremal_sweep(env.ctx).recover, 1e-5); });

    add("uncertainty.cor7.nonnegative", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtLeast, -1e-9);
        double lowest = INFINITY;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            for (const double sigma : {0.1, 0.5, 1.0, 2.0, kPi, 10.0})
                lowest = std::min(lowest, cor7_value(f, sigma) / f.norm_squared());
        }
        return at_least(lowest, -1e-9);
    });
}

void add_global_checks(std::vector<CheckDef>& defs)
{
    auto add = [&](const std::string& name, CheckFn fn) { defs.push_back({name, 1.0, std::move(fn)}); };

    add("fock.basis_rules", [](Env& env) {
        const auto& ctx = env.ctx;
        double worst = 0.0;
        worst = std::max(worst, annihilate(FockVector::basis(ctx, 0)).norm());
        worst = std::max(worst, (annihilate(FockVector::basis(ctx, 5)) - std::sqrt(5.0) * FockVector::basis(ctx, 4)).norm());
        worst = std::max(worst, (create(FockVector::basis(ctx, 0)) - FockVector::basis(ctx, 1)).norm());
        worst = std::max(worst, (create(FockVector::basis(ctx, 3)) - 2.0 * FockVector::basis(ctx, 4)).norm());
        const auto a1 = apply_selfadjoint(FockVector::basis(ctx, 1), SelfAdjoint::A);
        worst = std::max(worst, (a1 - FockVector::basis(ctx, 0) - std::sqrt(2.0) * FockVector::basis(ctx, 2)).norm());
        const auto b0 = apply_selfadjoint(FockVector::basis(ctx, 0), SelfAdjoint::B);
        worst = std::max(worst, (b0 - Complex{0.0, -1.0} * FockVector::basis(ctx, 1)).norm());
        return at_most(worst, 1e-15);
    });

    add("fock.closed_form.gaussian_norm", [](Env& env) {
        FockContext ctx = env.ctx;
        ctx.tail_tol = 1e-14;
        double worst = 0.0;
        for (const double r : even_radii()) {
            const auto f = gaussian_coeffs_adaptive({1.0, r, 0.0}, ctx);
            const double closed = 1.0 / std::sqrt(1.0 - 4.0 * r * r);
            worst = std::max(worst, std::abs(f.norm_squared() - closed) / closed);
        }
        return at_most(worst, 1e-12);
    });

    add("fock.closed_form.zf_norm", [](Env& env) {
        FockContext ctx = env.ctx;
        ctx.tail_tol = 1e-14;
        double worst = 0.0;
        for (const double r : even_radii()) {
            const auto f = gaussian_coeffs_adaptive({1.0, r, 0.0}, ctx);
            const double closed = std::pow(1.0 - 4.0 * r * r, -1.5);
            worst = std::max(worst, std::abs(create(f).norm_squared() - closed) / closed);
        }
        return at_most(worst, 1e-12);
    });

    add("fock.closed_form.exp_norm", [](Env& env) {
        FockContext ctx = env.ctx;
        ctx.tail_tol = 1e-14;
        const auto f = gaussian_coeffs_adaptive({1.0, 0.0, 1.0}, ctx);
        return at_most(std::abs(f.norm_squared() - std::numbers::e) / std::numbers::e, 1e-12);
    });

    // Recurrence against the direct series c_{2k} = r^k sqrt((2k)!)/k!.
    add("fock.gaussian.series_oracle", [](Env& env) {
        const double r = 0.25;
        const auto f = gaussian_coeffs_adaptive({1.0, r, 0.0}, env.ctx);
        double worst = 0.0;
        for (std::size_t k = 0; 2 * k < f.size(); ++k) {
            const double dk = static_cast<double>(k);
            const double direct = std::exp(dk * std::log(r) + 0.5 * std::lgamma(2.0 * dk + 1.0) - std::lgamma(dk + 1.0));
            worst = std::max(worst, std::abs(f[2 * k] - direct) / direct);
            if (2 * k + 1 < f.size())
                worst = std::max(worst, std::abs(f[2 * k + 1]));
        }
        return at_most(worst, 1e-12);
    });

    add("fock.kernel.reproducing", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-9);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const double radius = 2.0 * std::sqrt(env.rng.uniform());
            const double angle = 2.0 * kPi * env.rng.uniform();
            const Complex w = std::polar(radius, angle);
            const auto k = kernel_vector(env.ctx, w);
            const double gap = std::abs(evaluate(f, w) - inner(f, k));
            worst = std::max(worst, gap / (f.norm() * k.norm()));
        }
        return at_most(worst, 1e-9);
    });

    add("fock.dist.gram_oracle", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-10);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto g = random_case(env);
            const auto f = random_case(env);
            long double gg = 0, ff = 0, re = 0, im = 0;
            for (std::size_t n = 0; n < f.size(); ++n) {
                const std::complex<long double> a(g[n].real(), g[n].imag());
                const std::complex<long double> b(f[n].real(), f[n].imag());
                gg += std::norm(a);
                ff += std::norm(b);
                const auto p = a * std::conj(b);
                re += p.real();
                im += p.imag();
            }
            const double gram = static_cast<double>(std::sqrt(gg - (re * re + im * im) / ff));
            worst = std::max(worst, std::abs(dist_to_span(g, f) - gram) / gram);
        }
        return at_most(worst, 1e-10);
    });

    // Product of distances by three routes: moment-subtracted norms, sines, distances.
    add("uncertainty.formulations.agree", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-9);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto r = uncertainty_report(unit(random_case(env)));
            const double moments = std::sqrt(r.margin_cor5 + r.alpha * r.alpha);
            const double sines = r.margin_cor8 + r.alpha;
            const double dists = r.margin_cor10 + r.alpha;
            worst = std::max({worst, std::abs(moments - sines), std::abs(moments - dists), std::abs(sines - dists)});
        }
        return at_most(worst, 1e-9);
    });

    add("uncertainty.report.parallelogram", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-10);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto r = uncertainty_report(random_case(env));
            const double lhs = r.P * r.P + r.M * r.M;
            const double rhs = 2.0 * (r.derivative_norm * r.derivative_norm + r.zf_norm * r.zf_norm);
            worst = std::max(worst, std::abs(lhs - rhs) / lhs);
        }
        return at_most(worst, 1e-10);
    });

    add("uncertainty.report.distance_sine", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-10);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto r = uncertainty_report(random_case(env));
            worst = std::max(worst, std::abs(r.dist_plus - r.P * r.sin_plus) / r.dist_plus);
            worst = std::max(worst, std::abs(r.dist_minus - r.M * r.sin_minus) / r.dist_minus);
        }
        return at_most(worst, 1e-10);
    });

    add("uncertainty.cor7.grid_minimizer", [](Env& env) {
        const int count = std::min(env.cases, 10);
        if (count == 0)
            return skipped(Relation::AtMost, 1e-6);
        double worst = 0.0;
        for (int i = 0; i < count; ++i) {
            const auto f = random_case(env);
            double lo = std::log(1e-3);
            double hi = std::log(1e3);
            double best = 0.0;
            for (int pass = 0; pass < 4; ++pass) {
                const int points = 10000;
                const double step = (hi - lo) / (points - 1);
                double best_val = INFINITY;
                for (int k = 0; k < points; ++k) {
                    const double v = cor7_value(f, std::exp(lo + step * k));
                    if (v < best_val) {
                        best_val = v;
                        best = lo + step * k;
                    }
                }
                lo = best - 2 * step;
                hi = best + 2 * step;
            }
            const double grid = std::exp(best);
            worst = std::max(worst, std::abs(optimal_sigma(f) - grid) / grid);
        }
        return at_most(worst, 1e-6);
    });

    add("uncertainty.cor7.equality", [](Env& env) {
        double worst = 0.0;
        for (const double sigma : {0.5, 1.0, kPi, 4.0}) {
            const auto f = gaussian_coeffs_adaptive({1.0, (1.0 - sigma) / (2.0 * (1.0 + sigma)), 0.0}, env.ctx);
            worst = std::max(worst, std::abs(cor7_value(f, sigma)) / f.norm_squared());
        }
        return at_most(worst, 1e-8);
    });

    add("uncertainty.even_gaussian.cor6", [](Env& env) {
        double worst = 0.0;
        for (const double r : even_radii()) {
            const auto f = gaussian_coeffs_adaptive({1.0, r, 0.0}, env.ctx);
            worst = std::max(worst, std::abs(uncertainty_report(f).margin_cor6) / f.norm_squared());
        }
        return at_most(worst, 1e-9);
    });

    add("uncertainty.scaling", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-10);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const Complex lambda{env.rng.uniform(-3, 3), env.rng.uniform(-3, 3)};
            const double l2 = std::norm(lambda);
            const auto a = uncertainty_report(f);
            const auto b = uncertainty_report(lambda * f);
            const double ff = f.norm_squared();
            for (const auto& [x, y] : {std::pair{a.margin_cor6, b.margin_cor6}, std::pair{a.margin_cor8, b.margin_cor8},
                                       std::pair{a.margin_cor10, b.margin_cor10}, std::pair{a.margin_thm4, b.margin_thm4}})
                worst = std::max(worst, std::abs(y / l2 - x) / (std::abs(x) + ff));
            for (const auto& [x, y] : {std::pair{a.margin_cor5, b.margin_cor5}, std::pair{a.margin_cor9, b.margin_cor9}})
                worst = std::max(worst, std::abs(y - x) / (std::abs(x) + 1.0));
        }
        return at_most(worst, 1e-10);
    });

    add("genpair.fock_matches_core", [](Env& env) {
        const auto pair = fock_pair(env.ctx);
        double worst = 0.0;
        for (std::size_t n = 0; n <= static_cast<std::size_t>(env.ctx.trunc); ++n) {
            const auto en = FockVector::basis(env.ctx, n);
            const Vector x = to_vector(en);
            worst = std::max(worst, (pair.lower() * x - to_vector(annihilate(en))).norm());
            worst = std::max(worst, (pair.raise() * x - to_vector(create(en))).norm());
            worst = std::max(worst, (pair.matA() * x - to_vector(apply_selfadjoint(en, SelfAdjoint::A))).norm());
            worst = std::max(worst, (pair.matB() * x - to_vector(apply_selfadjoint(en, SelfAdjoint::B))).norm());
        }
        return at_most(worst, 0.0);
    });

    add("genpair.fock_commutator_defect", [](Env& env) {
        return at_most(fock_pair(env.ctx).commutator_defect(), 1e-13);
    });

    add("genpair.theorem1.nonnegative", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtLeast, -1e-10);
        const auto pair = fock_pair(env.ctx);
        double lowest = INFINITY;
        for (int i = 0; i < env.cases; ++i) {
            const Vector x = interior_random(env, pair.dim());
            for (double a = -5.0; a <= 5.0; a += 2.5) {
                for (double b = -5.0; b <= 5.0; b += 2.5)
                    lowest = std::min(lowest, theorem1_margin(pair, x, a, b) / x.squaredNorm());
            }
        }
        return at_least(lowest, -1e-10);
    });

    add("genpair.theorem1_matches_theorem4", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-10);
        const auto pair = fock_pair(env.ctx);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const double a = env.rng.uniform(-5, 5);
            const double b = env.rng.uniform(-5, 5);
            const double t1 = theorem1_margin(pair, to_vector(f), a, -b);
            worst = std::max(worst, std::abs(t1 - theorem4_margin(f, a, b)) / f.norm_squared());
        }
        return at_most(worst, 1e-10);
    });

    add("genpair.complex.decomposition", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-12);
        const auto pair = fock_pair(env.ctx);
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const Vector x = interior_random(env, pair.dim());
            const Complex a{env.rng.uniform(-5, 5), env.rng.uniform(-5, 5)};
            const double scale = (pair.matA() * x - a * x).squaredNorm();
            worst = std::max(worst, complex_decomposition_check(pair, x, a) / scale);
        }
        return at_most(worst, 1e-12);
    });

    add("genpair.complex.not_below_real", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtLeast, -1e-10);
        const auto pair = fock_pair(env.ctx);
        double lowest = INFINITY;
        for (int i = 0; i < env.cases; ++i) {
            const Vector x = interior_random(env, pair.dim());
            const Complex a{env.rng.uniform(-5, 5), env.rng.uniform(-5, 5)};
            const Complex b{env.rng.uniform(-5, 5), env.rng.uniform(-5, 5)};
            lowest = std::min(lowest, theorem1_margin(pair, x, a, b) - theorem1_margin(pair, x, a.real(), b.real()));
        }
        return at_least(lowest, -1e-10);
    });

    add("genpair.equality.ground_state", [](Env& env) {
        const auto pair = fock_pair(env.ctx);
        Vector e0 = Vector::Zero(pair.dim());
        e0(0) = 1.0;
        const auto fit = equality_case_check(pair, e0, 0.0, 0.0);
        return at_most(std::max(std::abs(fit.c - 1.0), fit.residual), 1e-15);
    });

    add("genpair.equality.extremal_c", [](Env& env) {
        const auto f = gaussian_coeffs_adaptive(extremal_function({3.0, 0.0, 0.0, 1.0}), env.ctx);
        const auto fit = equality_case_check(fock_pair(f.context()), to_vector(f), 0.0, 0.0);
        return at_most(std::abs(fit.c - 3.0) / 3.0, 1e-5);
    });

    add("genpair.equality.extremal_residual", [](Env& env) {
        const auto f = gaussian_coeffs_adaptive(extremal_function({3.0, 0.0, 0.0, 1.0}), env.ctx);
        const auto fit = equality_case_check(fock_pair(f.context()), to_vector(f), 0.0, 0.0);
        return at_most(fit.residual, 1e-7);
    });

    add("genpair.equality.non_extremal", [](Env& env) {
        const auto pair = fock_pair(env.ctx);
        Vector x = Vector::Zero(pair.dim());
        x(0) = 1.0;
        x(3) = 1.0;
        return at_least(equality_case_check(pair, x, 0.0, 0.0).residual, 0.1);
    });

    add("bargmann.position_matrix", [](Env& env) {
        const auto dim = static_cast<Eigen::Index>(env.ctx.dim());
        return at_most(max_entry(position_matrix(dim) - fock_pair(env.ctx).matA() * 0.5), 0.0);
    });

    add("bargmann.momentum_matrix", [](Env& env) {
        const auto dim = static_cast<Eigen::Index>(env.ctx.dim());
        return at_most(max_entry(momentum_matrix(dim) - fock_pair(env.ctx).matB() * (-1.0 / (2.0 * kPi))), 0.0);
    });

    add("bargmann.commutator.extended", [](Env& env) {
        return at_most(interior_commutator_error(static_cast<Eigen::Index>(env.ctx.dim())), 1e-15);
    });

    add("bargmann.commutator.double", [](Env& env) {
        const auto dim = static_cast<Eigen::Index>(env.ctx.dim());
        const double bound = 4.0 * static_cast<double>(dim) * std::numeric_limits<double>::epsilon() / (2.0 * kPi);
        return at_most(interior_commutator_error(dim, CommutatorPrecision::Double), bound);
    });

    add("bargmann.classical.nonnegative", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtLeast, -1e-9);
        const BargmannBridge bridge(static_cast<Eigen::Index>(env.ctx.dim()));
        double lowest = INFINITY;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            lowest = std::min(lowest, bridge.classical_margin(f).margin / f.norm_squared());
        }
        return at_least(lowest, -1e-9);
    });

    add("bargmann.classical.extremal", [](Env& env) {
        const auto f = gaussian_coeffs_adaptive(standard_gaussian_pullback(), env.ctx);
        return at_most(std::abs(classical_margin(f).margin) / f.norm_squared(), 1e-8);
    });

    add("bargmann.classical_matches_cor7", [](Env& env) {
        if (env.cases == 0)
            return skipped(Relation::AtMost, 1e-10);
        const BargmannBridge bridge(static_cast<Eigen::Index>(env.ctx.dim()));
        double worst = 0.0;
        for (int i = 0; i < env.cases; ++i) {
            const auto f = random_case(env);
            const double via_cor7 = cor7_value(f, kPi) / (2.0 * kPi);
            worst = std::max(worst, std::abs(bridge.classical_margin(f).margin - via_cor7) / f.norm_squared());
        }
        return at_most(worst, 1e-10);
    });
}

bool satisfied(const Outcome& o)
{
    if (!std::isfinite(o.measured))
        return false;
    return o.relation == Relation::AtMost ? o.measured <= o.tolerance : o.measured >= o.tolerance;
}

nlohmann::json number_or_null(double x)
{
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

} // namespace

const char* status_name(CheckStatus status)
{
    switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    }
    return "unknown";
}

bool SuiteResult::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

SuiteResult run_verify_suite(const VerifyOptions& options)
{
    std::vector<CheckDef> defs;
    for (const double alpha : options.alphas)
        add_alpha_checks(defs, alpha);
    add_global_checks(defs);

    SuiteResult result;
    for (const auto& def : defs) {
        Env env;
        env.ctx.alpha = def.alpha;
        env.ctx.trunc = options.truncation;
        env.ctx.validate();
        env.cases = options.cases;
        env.rng = Rng::for_stream(options.seed, def.name);

        CheckResult cr;
        cr.name = def.name;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = def.run(env);
            cr.measured = o.measured;
            cr.relation = o.relation;
            cr.tolerance = o.tolerance;
            cr.status = o.skipped ? CheckStatus::Skip : (satisfied(o) ? CheckStatus::Pass : CheckStatus::Fail);
        } catch (const Error&) {
            cr.measured = std::numeric_limits<double>::quiet_NaN();
            cr.status = CheckStatus::Fail;
        }
        cr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        result.checks.push_back(std::move(cr));
    }
    std::sort(result.checks.begin(), result.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return result;
}

nlohmann::json suite_to_json(const SuiteResult& result, const VerifyOptions& options, bool timing)
{
    using nlohmann::json;
    json checks = json::array();
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : result.checks) {
        json entry;
        entry["name"] = c.name;
        entry["status"] = status_name(c.status);
        entry["measured"] = c.status == CheckStatus::Skip ? json(nullptr) : number_or_null(c.measured);
        entry["relation"] = c.relation == Relation::AtMost ? "<=" : ">=";
        entry["tolerance"] = c.tolerance;
        if (timing)
            entry["wall_ms"] = c.wall_ms;
        checks.push_back(std::move(entry));
        (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : skip)++;
    }
    json out;
    out["schema"] = 1;
    out["command"] = "verify";
    out["seed"] = options.seed;
    out["cases"] = options.cases;
    out["truncation"] = options.truncation;
    out["alphas"] = options.alphas;
    out["checks"] = std::move(checks);
    out["summary"] = {{"total", result.checks.size()}, {"pass", pass}, {"fail", fail}, {"skip", skip}};
    out["status"] = result.passed() ? "pass" : "fail";
    return out;
}

std::string suite_to_csv(const SuiteResult& result, bool timing)
{
    std::ostringstream out;
    out << "name,status,measured,relation,tolerance" << (timing ? ",wall_ms" : "") << '\n';
    for (const auto& c : result.checks) {
        out << c.name << ',' << status_name(c.status) << ','
            << (c.status == CheckStatus::Skip ? std::string() : csv_number(c.measured)) << ','
            << (c.relation == Relation::AtMost ? "<=" : ">=") << ',' << csv_number(c.tolerance);
        if (timing)
            out << ',' << csv_number(c.wall_ms);
        out << '\n';
    }
    return out.str();
}

} // namespace focku::cli
