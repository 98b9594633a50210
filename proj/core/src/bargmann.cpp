#include "focku/bargmann.hpp"

#include "focku/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace focku {

namespace {

OperatorPair unit_fock_pair(Eigen::Index dim)
{
    if (dim < 4)
        throw Error(ErrorCode::InvalidArgument, "Bargmann matrices need dimension at least 4");
    std::vector<double> weights(static_cast<std::size_t>(dim - 1));
    for (std::size_t n = 0; n < weights.size(); ++n)
        weights[n] = std::sqrt(static_cast<double>(n + 1));
    return weighted_shift(weights);
}

template <typename Real>
double commutator_error(Eigen::Index dim)
{
    using Scalar = std::complex<Real>;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Real pi = std::numbers::pi_v<Real>;

    Mat lower = Mat::Zero(dim, dim);
    for (Eigen::Index n = 0; n + 1 < dim; ++n)
        lower(n, n + 1) = std::sqrt(static_cast<Real>(n + 1));
    const Mat raise = lower.adjoint();
    const Mat position = (lower + raise) * Real(0.5);
    const Mat momentum = (Scalar{0, 1} * (lower - raise)) * (Real(-1) / (Real(2) * pi));
    const Mat comm = position * momentum - momentum * position;

    const Scalar expected{0, Real(1) / (Real(2) * pi)};
    Real worst = 0;
    for (Eigen::Index j = 0; j + 2 < dim; ++j) {
        for (Eigen::Index k = 0; k + 2 < dim; ++k) {
            const Scalar want = j == k ? expected : Scalar{};
            worst = std::max(worst, std::abs(comm(j, k) - want));
        }
    }
    return static_cast<double>(worst);
}

} // namespace

double interior_commutator_error(Eigen::Index dim, CommutatorPrecision precision)
{
    if (dim < 4)
        throw Error(ErrorCode::InvalidArgument, "Bargmann matrices need dimension at least 4");
    if (precision == CommutatorPrecision::Extended)
        return commutator_error<long double>(dim);

    const Matrix x = position_matrix(dim);
    const Matrix d = momentum_matrix(dim);
    const Matrix comm = x * d - d * x;
    const Complex expected{0.0, 1.0 / (2.0 * std::numbers::pi)};
    double worst = 0.0;
    for (Eigen::Index j = 0; j + 2 < dim; ++j) {
        for (Eigen::Index k = 0; k + 2 < dim; ++k) {
            const Complex want = j == k ? expected : Complex{};
            worst = std::max(worst, std::abs(comm(j, k) - want));
        }
    }
    return worst;
}

Matrix position_matrix(Eigen::Index dim)
{
    return unit_fock_pair(dim).matA() * 0.5;
}

Matrix momentum_matrix(Eigen::Index dim)
{
    return unit_fock_pair(dim).matB() * (-1.0 / (2.0 * std::numbers::pi));
}

BargmannBridge::BargmannBridge(Eigen::Index dim)
{
    const OperatorPair pair = unit_fock_pair(dim);
    position_ = pair.matA() * 0.5;
    momentum_ = pair.matB() * (-1.0 / (2.0 * std::numbers::pi));
}

ClassicalReport BargmannBridge::classical_margin(const FockVector& f) const
{
    if (f.context().alpha != 1.0)
        throw Error(ErrorCode::InvalidArgument, "the Bargmann bridge is defined for alpha = 1 only");
    if (static_cast<Eigen::Index>(f.size()) != dim())
        throw Error(ErrorCode::InvalidArgument, "vector dimension does not match the Bargmann matrices");
    f.check_tail();
    const Vector x = to_vector(f);
    ClassicalReport r;
    r.x_energy = (position_ * x).squaredNorm();
    r.d_energy = (momentum_ * x).squaredNorm();
    r.bound = x.squaredNorm() / (2.0 * std::numbers::pi);
    r.margin = r.x_energy + r.d_energy - r.bound;
    return r;
}

ClassicalReport classical_margin(const FockVector& f)
{
    return BargmannBridge(static_cast<Eigen::Index>(f.size())).classical_margin(f);
}

GaussianParams standard_gaussian_pullback(Complex C)
{
    constexpr double pi = std::numbers::pi;
    GaussianParams p;
    p.C = C;
    p.r = (1.0 - pi) / (2.0 * (1.0 + pi));
    return p;
}

} // namespace focku
