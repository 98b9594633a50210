#ifndef FOCKU_OPERATOR_PAIR_HPP
#define FOCKU_OPERATOR_PAIR_HPP

#include "focku/fock_space.hpp"

#include <Eigen/Dense>

#include <span>

namespace focku {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A lowering operator L on a finite coordinate space, together with its raising
/// partner R = L^H and the self-adjoint combinations A = L + R, B = i(L - R).
class OperatorPair {
public:
    static constexpr Eigen::Index kMaxDim = 2048;

    /// Throws Error(InvalidArgument) for a non-square, empty, oversized or
    /// non-finite matrix.
    explicit OperatorPair(Matrix lower);

    Eigen::Index dim() const noexcept { return lower_.rows(); }
    const Matrix& lower() const noexcept { return lower_; }
    const Matrix& raise() const noexcept { return raise_; }
    const Matrix& matA() const noexcept { return mat_a_; }
    const Matrix& matB() const noexcept { return mat_b_; }

    /// max |(LR - RL - I)_{jk}| over the interior block j, k <= max(dim-3, 0).
    double commutator_defect() const noexcept { return defect_; }

private:
    Matrix lower_;
    Matrix raise_;
    Matrix mat_a_;
    Matrix mat_b_;
    double defect_ = 0.0;
};

/// L with weights[n] at (n, n+1); dim = weights.size() + 1.
OperatorPair weighted_shift(std::span<const double> weights);

/// The Fock pair on ctx.dim() coordinates: weights sqrt(α(n+1)).
OperatorPair fock_pair(const FockContext& ctx);

/// Coordinates of a FockVector as an Eigen vector.
Vector to_vector(const FockVector& f);

/// Default relative mass allowed in the two trailing coordinates of x.
inline constexpr double kSupportTol = 1e-12;

/// ‖(A - a)x‖ ‖(B - b)x‖ - ½|<[A,B]x, x>| for complex shifts.
/// Throws Error(BoundaryContamination) unless x has (numerically) two trailing zeros.
double theorem1_margin(const OperatorPair& pair, const Vector& x, Complex a, Complex b,
                       double support_tol = kSupportTol);

/// |‖(A - a)x‖² - ‖(A - Re a)x‖² - (Im a)²‖x‖²|.
double complex_decomposition_check(const OperatorPair& pair, const Vector& x, Complex a,
                                   double support_tol = kSupportTol);

struct EqualityFit {
    double c = 0.0;
    double residual = 0.0; // ‖u - icw‖ / ‖u‖, or ‖u‖ when undetermined
    bool determined = true;
};

/// Real c minimizing ‖(A - a)x - ic(B - b)x‖. Undetermined when (B - b)x = 0.
EqualityFit equality_case_check(const OperatorPair& pair, const Vector& x, double a, double b,
                                double support_tol = kSupportTol);

} // namespace focku

#endif
