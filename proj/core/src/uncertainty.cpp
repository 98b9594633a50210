#include "focku/uncertainty.hpp"

#include "focku/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace focku {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Images {
    FockVector lowered; // Df
    FockVector raised;  // D*f
    FockVector plus;    // Df + D*f
    FockVector minus;   // Df - D*f
};

Images images_of(const FockVector& f)
{
    FockVector lowered = annihilate(f);
    FockVector raised = create(f);
    FockVector plus = lowered + raised;
    FockVector minus = lowered - raised;
    return {std::move(lowered), std::move(raised), std::move(plus), std::move(minus)};
}

void require_nonzero(const FockVector& f, const char* what)
{
    if (f.norm_squared() == 0.0) {
        std::ostringstream msg;
        msg << what << " is undefined for the zero function";
        throw Error(ErrorCode::DegenerateSpan, msg.str());
    }
}

double real_moment(Complex moment, double scale, double op_tol, const char* name)
{
    if (std::abs(moment.imag()) > op_tol * std::max(scale, 1e-300)) {
        std::ostringstream msg;
        msg << "optimal shift " << name << " has imaginary part " << moment.imag()
            << " (scale " << scale << ")";
        throw Error(ErrorCode::NumericalInconsistency, msg.str());
    }
    return moment.real();
}

Shifts shifts_from(const FockVector& f, const Images& im)
{
    const double ff = f.norm_squared();
    const double fn = std::sqrt(ff);
    const double tol = f.context().op_tol;
    const Complex a = inner(im.plus, f) / ff;
    const Complex b = -kI * inner(im.minus, f) / ff;
    return {real_moment(a, im.plus.norm() / fn, tol, "a"),
            real_moment(b, im.minus.norm() / fn, tol, "b")};
}

double theorem4_from(const FockVector& f, const Images& im, double a, double b)
{
    const FockVector left = im.plus - Complex{a, 0.0} * f;
    const FockVector right = im.minus - Complex{0.0, b} * f;
    return left.norm() * right.norm() - f.context().alpha * f.norm_squared();
}

} // namespace

Shifts optimal_shifts(const FockVector& f)
{
    require_nonzero(f, "optimal shifts");
    return shifts_from(f, images_of(f));
}

double theorem4_margin(const FockVector& f, double a, double b)
{
    return theorem4_from(f, images_of(f), a, b);
}

UncertaintyReport uncertainty_report(const FockVector& f)
{
    require_nonzero(f, "uncertainty report");
    const Images im = images_of(f);
    const double alpha = f.context().alpha;
    const double ff = f.norm_squared();

    UncertaintyReport r;
    r.alpha = alpha;
    r.norm_f = std::sqrt(ff);
    r.P = im.plus.norm();
    r.M = im.minus.norm();
    r.ip_plus = inner(im.plus, f);
    r.ip_minus = inner(im.minus, f);
    r.derivative_norm = im.lowered.norm();
    r.zf_norm = im.raised.norm();

    const Shifts s = shifts_from(f, im);
    r.a_opt = s.a;
    r.b_opt = s.b;

    r.dist_plus = dist_to_span(im.plus, f);
    r.dist_minus = dist_to_span(im.minus, f);
    r.sin_plus = r.P > 0.0 ? r.dist_plus / r.P : 0.0;
    r.sin_minus = r.M > 0.0 ? r.dist_minus / r.M : 0.0;

    r.margin_thm4 = theorem4_from(f, im, s.a, s.b);

    // Moment-subtracted squared norms, on f/‖f‖.
    const double plus_var = (r.P * r.P - std::norm(r.ip_plus) / ff) / ff;
    const double minus_var = (r.M * r.M - std::norm(r.ip_minus) / ff) / ff;
    r.margin_cor5 = plus_var * minus_var - alpha * alpha;

    r.margin_cor6 = r.P * r.M - alpha * ff;
    r.margin_cor8 = r.P * r.M * r.sin_plus * r.sin_minus - alpha * ff;
    const double energy = (r.derivative_norm * r.derivative_norm + r.zf_norm * r.zf_norm) / ff;
    r.margin_cor9 = energy * r.sin_plus * r.sin_minus - alpha;
    r.margin_cor10 = r.dist_plus * r.dist_minus - alpha * ff;
    return r;
}

double cor7_value(const FockVector& f, double sigma)
{
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw Error(ErrorCode::InvalidArgument, "sigma must be positive and finite");
    const Images im = images_of(f);
    const double p2 = im.plus.norm_squared();
    const double m2 = im.minus.norm_squared();
    return 0.5 * sigma * p2 + m2 / (2.0 * sigma) - f.context().alpha * f.norm_squared();
}

double optimal_sigma(const FockVector& f)
{
    const Images im = images_of(f);
    const double p = im.plus.norm();
    if (p == 0.0)
        throw Error(ErrorCode::DegenerateSpan, "optimal sigma needs ‖f'+zf‖ > 0");
    return im.minus.norm() / p;
}

GaussianParams extremal_function(const ExtremalSpec& spec, double alpha)
{
    if (!(spec.c > 0.0) || !std::isfinite(spec.c)) {
        std::ostringstream msg;
        msg << "c = " << spec.c << " is outside the extremal family (need c > 0)";
        throw Error(ErrorCode::OutsideExtremalFamily, msg.str());
    }
    if (!(alpha > 0.0))
        throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
    GaussianParams p;
    p.C = spec.C;
    p.r = alpha * (spec.c - 1.0) / (2.0 * (spec.c + 1.0));
    p.s = Complex{spec.a, spec.b * spec.c} / (spec.c + 1.0);
    return p;
}

double eq6_residual(const FockVector& f, double c, double a, double b)
{
    require_nonzero(f, "eq6 residual");
    const Images im = images_of(f);
    const FockVector lhs = Complex{1.0 + c, 0.0} * im.lowered + Complex{1.0 - c, 0.0} * im.raised
                         - Complex{a, b * c} * f;
    return lhs.norm() / (im.lowered.norm() + im.raised.norm() + f.norm());
}

CRecovery recover_c(const FockVector& f)
{
    require_nonzero(f, "recover_c");
    const FockVector unit = Complex{1.0 / f.norm(), 0.0} * f;
    const Images im = images_of(unit);
    const Shifts s = shifts_from(unit, im);

    const FockVector u = im.plus - Complex{s.a, 0.0} * unit;
    const FockVector v = im.minus - inner(im.minus, unit) * unit;

    const double vv = v.norm_squared();
    const double tol = unit.context().op_tol;
    CRecovery out;
    if (std::sqrt(vv) <= tol * std::max(1.0, im.minus.norm())) {
        out.determined = false;
        out.residual = u.norm();
        return out;
    }
    out.c = -inner(u, v).real() / vv;
    const FockVector fit = u + Complex{out.c, 0.0} * v;
    const double denom = u.norm() + std::abs(out.c) * std::sqrt(vv);
    out.residual = denom > 0.0 ? fit.norm() / denom : 0.0;
    return out;
}

} // namespace focku
