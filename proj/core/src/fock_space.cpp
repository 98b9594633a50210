#include "focku/fock_space.hpp"

#include "focku/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace focku {

namespace {

void require_same_context(const FockVector& f, const FockVector& g)
{
    if (!(f.context() == g.context()))
        throw Error(ErrorCode::ContextMismatch, "vectors belong to different Fock contexts");
}

double sum_squares(std::span<const Complex> c)
{
    double s = 0.0;
    for (const auto& z : c)
        s += std::norm(z);
    return s;
}

} // namespace

void FockContext::validate() const
{
    std::ostringstream msg;
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        msg << "alpha must be positive (got " << alpha << ")";
    else if (trunc < 8)
        msg << "truncation degree must be at least 8 (got " << trunc << ")";
    else if (headroom < 2)
        msg << "headroom must be at least 2 (got " << headroom << ")";
    else if (!(tail_tol > 0.0 && tail_tol < 1.0))
        msg << "tail tolerance must lie in (0, 1) (got " << tail_tol << ")";
    else if (!(op_tol > 0.0 && op_tol < 1.0))
        msg << "operator tolerance must lie in (0, 1) (got " << op_tol << ")";
    else
        return;
    throw Error(ErrorCode::InvalidArgument, msg.str());
}

FockContext FockContext::with_trunc(int n) const
{
    FockContext out = *this;
    out.trunc = n;
    out.validate();
    return out;
}

FockVector::FockVector(const FockContext& ctx)
    : ctx_(ctx)
{
    ctx_.validate();
    coeffs_.assign(ctx_.dim(), Complex{});
}

FockVector::FockVector(const FockContext& ctx, std::vector<Complex> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs))
{
    ctx_.validate();
    if (coeffs_.size() > ctx_.dim()) {
        std::ostringstream msg;
        msg << coeffs_.size() << " coefficients do not fit in dimension " << ctx_.dim();
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    for (const auto& z : coeffs_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorCode::InvalidArgument, "coefficient is not finite");
    }
    coeffs_.resize(ctx_.dim(), Complex{});
}

FockVector FockVector::basis(const FockContext& ctx, std::size_t n)
{
    FockVector v(ctx);
    if (n >= v.size())
        throw Error(ErrorCode::InvalidArgument, "basis index beyond the retained dimension");
    v.coeffs_[n] = 1.0;
    return v;
}

double FockVector::norm_squared() const { return sum_squares(coeffs_); }

double FockVector::norm() const { return std::sqrt(norm_squared()); }

bool FockVector::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& z) { return z == Complex{}; });
}

double FockVector::tail_mass() const
{
    const double total = norm_squared();
    if (total == 0.0)
        return 0.0;
    const auto tail = std::span<const Complex>(coeffs_).last(static_cast<std::size_t>(ctx_.headroom));
    return std::sqrt(sum_squares(tail) / total);
}

void FockVector::check_tail() const
{
    const double mass = tail_mass();
    if (mass > ctx_.tail_tol) {
        std::ostringstream msg;
        msg << "relative tail mass " << mass << " exceeds " << ctx_.tail_tol
            << " at truncation " << ctx_.trunc << "; raise the truncation degree";
        throw Error(ErrorCode::TruncationUnsound, msg.str());
    }
}

FockVector& FockVector::operator+=(const FockVector& other)
{
    require_same_context(*this, other);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] += other.coeffs_[n];
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& other)
{
    require_same_context(*this, other);
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] -= other.coeffs_[n];
    return *this;
}

FockVector& FockVector::operator*=(Complex scale)
{
    for (auto& z : coeffs_)
        z *= scale;
    return *this;
}

FockVector operator+(FockVector lhs, const FockVector& rhs) { return lhs += rhs; }
FockVector operator-(FockVector lhs, const FockVector& rhs) { return lhs -= rhs; }
FockVector operator*(Complex scale, FockVector v) { return v *= scale; }
FockVector operator*(FockVector v, Complex scale) { return v *= scale; }

Complex inner(const FockVector& f, const FockVector& g)
{
    require_same_context(f, g);
    Complex acc{};
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    for (std::size_t n = 0; n < a.size(); ++n)
        acc += a[n] * std::conj(b[n]);
    return acc;
}

double norm(const FockVector& f) { return f.norm(); }

FockVector annihilate(const FockVector& f)
{
    f.check_tail();
    const double alpha = f.context().alpha;
    const auto c = f.coeffs();
    std::vector<Complex> out(c.size());
    for (std::size_t n = 0; n + 1 < c.size(); ++n)
        out[n] = std::sqrt(alpha * static_cast<double>(n + 1)) * c[n + 1];
    return FockVector(f.context(), std::move(out));
}

FockVector create(const FockVector& f)
{
    f.check_tail();
    const double alpha = f.context().alpha;
    const auto c = f.coeffs();
    std::vector<Complex> out(c.size());
    for (std::size_t n = 1; n < c.size(); ++n)
        out[n] = std::sqrt(alpha * static_cast<double>(n)) * c[n - 1];
    return FockVector(f.context(), std::move(out));
}

FockVector apply_selfadjoint(const FockVector& f, SelfAdjoint which)
{
    const FockVector lowered = annihilate(f);
    const FockVector raised = create(f);
    if (which == SelfAdjoint::A)
        return lowered + raised;
    return Complex{0.0, 1.0} * (lowered - raised);
}

bool in_fock_space(const GaussianParams& p, double alpha)
{
    return std::abs(p.r) < alpha / 2.0 - 1e-9;
}

FockVector gaussian_coeffs(const GaussianParams& p, const FockContext& ctx)
{
    ctx.validate();
    if (!in_fock_space(p, ctx.alpha)) {
        std::ostringstream msg;
        msg << "exp(r z^2 + s z) with |r| = " << std::abs(p.r)
            << " is not in the Fock space (need |r| < alpha/2 = " << ctx.alpha / 2.0 << ")";
        throw Error(ErrorCode::NotInSpace, msg.str());
    }
    const std::size_t dim = ctx.dim();
    const double alpha = ctx.alpha;
    std::vector<Complex> c(dim);
    c[0] = p.C;
    c[1] = p.s * p.C / std::sqrt(alpha);
    for (std::size_t n = 1; n + 1 < dim; ++n) {
        const double up = static_cast<double>(n + 1);
        c[n + 1] = p.s * c[n] / std::sqrt(alpha * up)
                 + 2.0 * p.r * c[n - 1] * std::sqrt(static_cast<double>(n)) / (alpha * std::sqrt(up));
    }
    FockVector v(ctx, std::move(c));
    const double mass = v.tail_mass();
    if (!(mass <= ctx.tail_tol)) {
        std::ostringstream msg;
        msg << "Gaussian expansion has relative tail mass " << mass << " at truncation "
            << ctx.trunc << " (tolerance " << ctx.tail_tol << "); raise the truncation degree";
        throw Error(ErrorCode::TruncationInsufficient, msg.str());
    }
    return v;
}

FockVector gaussian_coeffs_adaptive(const GaussianParams& p, const FockContext& ctx, int max_trunc)
{
    FockContext trial = ctx;
    for (;;) {
        try {
            return gaussian_coeffs(p, trial);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TruncationInsufficient || trial.trunc * 2 > max_trunc)
                throw;
        }
        trial = trial.with_trunc(trial.trunc * 2);
    }
}

double dist_to_span(const FockVector& g, const FockVector& f)
{
    require_same_context(g, f);
    const double ff = f.norm_squared();
    if (ff == 0.0)
        throw Error(ErrorCode::DegenerateSpan, "cannot project onto the span of the zero vector");
    // Two projection passes keep the residual accurate when g is nearly parallel to f.
    FockVector residual = g;
    for (int pass = 0; pass < 2; ++pass) {
        const Complex coef = inner(residual, f) / ff;
        residual -= coef * f;
    }
    return residual.norm();
}

double sine_angle(const FockVector& g, const FockVector& f)
{
    const double gn = g.norm();
    if (gn == 0.0)
        throw Error(ErrorCode::UndefinedAngle, "angle with the zero vector is undefined");
    return std::min(1.0, dist_to_span(g, f) / gn);
}

Complex evaluate(const FockVector& f, Complex w)
{
    const double alpha = f.context().alpha;
    const auto c = f.coeffs();
    Complex term{1.0, 0.0};
    Complex acc{};
    for (std::size_t n = 0; n < c.size(); ++n) {
        acc += c[n] * term;
        term *= w * std::sqrt(alpha / static_cast<double>(n + 1));
    }
    return acc;
}

FockVector kernel_vector(const FockContext& ctx, Complex w)
{
    ctx.validate();
    std::vector<Complex> c(ctx.dim());
    Complex term{1.0, 0.0};
    const Complex wbar = std::conj(w);
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = term;
        term *= wbar * std::sqrt(ctx.alpha / static_cast<double>(n + 1));
    }
    return FockVector(ctx, std::move(c));
}

} // namespace focku
