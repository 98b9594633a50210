#include "focku/operator_pair.hpp"

#include "focku/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace focku {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_interior(const OperatorPair& pair, const Vector& x, double support_tol)
{
    if (x.size() != pair.dim()) {
        std::ostringstream msg;
        msg << "vector of length " << x.size() << " does not match operator dimension " << pair.dim();
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    if (x.size() < 3)
        throw Error(ErrorCode::BoundaryContamination, "dimension leaves no interior support");
    const double total = x.squaredNorm();
    const double tail = x.tail(2).squaredNorm();
    if (tail > support_tol * support_tol * total) {
        std::ostringstream msg;
        msg << "vector has relative mass " << std::sqrt(tail / total)
            << " in the two trailing coordinates; the truncated commutator is not faithful there";
        throw Error(ErrorCode::BoundaryContamination, msg.str());
    }
}

} // namespace

OperatorPair::OperatorPair(Matrix lower)
    : lower_(std::move(lower))
{
    if (lower_.rows() != lower_.cols() || lower_.rows() == 0)
        throw Error(ErrorCode::InvalidArgument, "lowering operator must be a non-empty square matrix");
    if (lower_.rows() > kMaxDim)
        throw Error(ErrorCode::InvalidArgument, "operator dimension exceeds 2048");
    if (!lower_.allFinite())
        throw Error(ErrorCode::InvalidArgument, "lowering operator has non-finite entries");

    raise_ = lower_.adjoint();
    mat_a_ = lower_ + raise_;
    mat_b_ = kI * (lower_ - raise_);

    const Eigen::Index n = std::max<Eigen::Index>(dim() - 2, 1);
    const Matrix comm = lower_ * raise_ - raise_ * lower_;
    const Matrix deviation = comm.topLeftCorner(n, n) - Matrix::Identity(n, n);
    defect_ = deviation.cwiseAbs().maxCoeff();
}

OperatorPair weighted_shift(std::span<const double> weights)
{
    const auto dim = static_cast<Eigen::Index>(weights.size()) + 1;
    if (dim > OperatorPair::kMaxDim)
        throw Error(ErrorCode::InvalidArgument, "operator dimension exceeds 2048");
    Matrix lower = Matrix::Zero(dim, dim);
    for (Eigen::Index n = 0; n + 1 < dim; ++n) {
        const double w = weights[static_cast<std::size_t>(n)];
        if (!std::isfinite(w) || w < 0.0)
            throw Error(ErrorCode::InvalidArgument, "shift weights must be finite and nonnegative");
        lower(n, n + 1) = w;
    }
    return OperatorPair(std::move(lower));
}

OperatorPair fock_pair(const FockContext& ctx)
{
    ctx.validate();
    std::vector<double> weights(ctx.dim() - 1);
    for (std::size_t n = 0; n < weights.size(); ++n)
        weights[n] = std::sqrt(ctx.alpha * static_cast<double>(n + 1));
    return weighted_shift(weights);
}

Vector to_vector(const FockVector& f)
{
    const auto c = f.coeffs();
    Vector x(static_cast<Eigen::Index>(c.size()));
    for (std::size_t n = 0; n < c.size(); ++n)
        x(static_cast<Eigen::Index>(n)) = c[n];
    return x;
}

double theorem1_margin(const OperatorPair& pair, const Vector& x, Complex a, Complex b,
                       double support_tol)
{
    require_interior(pair, x, support_tol);
    const Vector ax = pair.matA() * x;
    const Vector bx = pair.matB() * x;
    const Vector comm = pair.matA() * bx - pair.matB() * ax;
    const double lhs = (ax - a * x).norm() * (bx - b * x).norm();
    return lhs - 0.5 * std::abs(x.dot(comm)); // dot conjugates its left argument
}

double complex_decomposition_check(const OperatorPair& pair, const Vector& x, Complex a,
                                   double support_tol)
{
    require_interior(pair, x, support_tol);
    const Vector ax = pair.matA() * x;
    const double full = (ax - a * x).squaredNorm();
    const double real_part = (ax - a.real() * x).squaredNorm();
    return std::abs(full - real_part - a.imag() * a.imag() * x.squaredNorm());
}

EqualityFit equality_case_check(const OperatorPair& pair, const Vector& x, double a, double b,
                                double support_tol)
{
    require_interior(pair, x, support_tol);
    const Vector u = pair.matA() * x - a * x;
    const Vector w = pair.matB() * x - b * x;
    const double ww = w.squaredNorm();
    EqualityFit fit;
    if (ww == 0.0 || std::sqrt(ww) <= 1e-14 * x.norm()) {
        fit.determined = false;
        fit.residual = u.norm();
        return fit;
    }
    // Complex optimum ic = <u, w>/‖w‖²; c is restricted to its real projection.
    const Complex uw = w.dot(u);
    fit.c = uw.imag() / ww;
    const double un = u.norm();
    const double miss = (u - kI * fit.c * w).norm();
    fit.residual = un > 0.0 ? miss / un : miss;
    return fit;
}

} // namespace focku
