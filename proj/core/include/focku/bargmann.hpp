#ifndef FOCKU_BARGMANN_HPP
#define FOCKU_BARGMANN_HPP

#include "focku/fock_space.hpp"
#include "focku/operator_pair.hpp"

namespace focku {

// The Bargmann transform is taken to be the identity on coordinates: the Hermite-side
// basis of L²(R) is defined as the preimage of e_n. Under that identification position
// is A/2 and the momentum (1/2πi) d/dx is -B/(2π), with A, B the unweighted (α = 1)
// Fock pair. No quadrature on the real line is performed.

/// ‖Xf‖² + ‖Df‖² - ‖f‖²/(2π) split into its parts.
struct ClassicalReport {
    double x_energy = 0.0;
    double d_energy = 0.0;
    double bound = 0.0;
    double margin = 0.0;
};

/// Throws Error(InvalidArgument) for dim < 4.
Matrix position_matrix(Eigen::Index dim);
Matrix momentum_matrix(Eigen::Index dim);

/// Precision used to form the commutator [X, D].
enum class CommutatorPrecision { Double, Extended };

/// max |[X, D]_{jk} - (i/2π) δ_{jk}| over the interior block j, k <= dim - 3.
///
/// Double forms X D - D X from position_matrix/momentum_matrix; the error there is
/// dominated by the rounding of sqrt(n + 1) in the stored weights and grows like
/// dim·ε. Extended repeats the same construction and products in long double.
double interior_commutator_error(Eigen::Index dim,
                                 CommutatorPrecision precision = CommutatorPrecision::Extended);

/// Position and momentum matrices of one dimension, built once.
class BargmannBridge {
public:
    explicit BargmannBridge(Eigen::Index dim);

    Eigen::Index dim() const noexcept { return position_.rows(); }
    const Matrix& position() const noexcept { return position_; }
    const Matrix& momentum() const noexcept { return momentum_; }

    /// Requires α = 1, a matching dimension and a passing tail guard.
    ClassicalReport classical_margin(const FockVector& f) const;

private:
    Matrix position_;
    Matrix momentum_;
};

ClassicalReport classical_margin(const FockVector& f);

/// The σ = π member of the Gaussian equality family for cor7_value, r = (1-π)/(2(1+π)).
GaussianParams standard_gaussian_pullback(Complex C = 1.0);

} // namespace focku

#endif
