#ifndef FOCKU_UNCERTAINTY_HPP
#define FOCKU_UNCERTAINTY_HPP

#include "focku/fock_space.hpp"

namespace focku {

// Throughout, "f' + zf" and "f' - zf" denote (D + D*)f and (D - D*)f, so for a weight
// α != 1 the multiplication operator is αz and every lower bound ‖f‖² becomes α‖f‖²
// ([D, D*] = αI).

/// Every quantity in the Fock-space uncertainty inequalities for one function.
///
/// P, M, the inner products, distances and the derivative/zf norms refer to f as
/// given. margin_cor5 and margin_cor9 are stated for unit vectors and are evaluated
/// on f/‖f‖. Margins are signed and never clamped.
struct UncertaintyReport {
    double alpha = 1.0;
    double norm_f = 0.0;
    double P = 0.0;           // ‖f' + zf‖
    double M = 0.0;           // ‖f' - zf‖
    Complex ip_plus;          // <f' + zf, f>
    Complex ip_minus;         // <f' - zf, f>
    double a_opt = 0.0;
    double b_opt = 0.0;
    double sin_plus = 0.0;
    double sin_minus = 0.0;
    double dist_plus = 0.0;   // dist(f' + zf, [f])
    double dist_minus = 0.0;  // dist(f' - zf, [f])
    double margin_thm4 = 0.0; // at (a_opt, b_opt)
    double margin_cor5 = 0.0;
    double margin_cor6 = 0.0;
    double margin_cor8 = 0.0;
    double margin_cor9 = 0.0;
    double margin_cor10 = 0.0;
    double derivative_norm = 0.0; // ‖Df‖
    double zf_norm = 0.0;         // ‖D*f‖
};

/// Parameters (c, a, b, C) of the equality family; c must be positive.
struct ExtremalSpec {
    double c = 1.0;
    double a = 0.0;
    double b = 0.0;
    Complex C{1.0, 0.0};
};

struct Shifts {
    double a = 0.0;
    double b = 0.0;
};

/// Result of fitting the real constant c in f'+zf - af = -c(f'-zf - ibf).
struct CRecovery {
    double c = 0.0;
    double residual = 0.0;
    bool determined = true;
};

/// Minimizers a = <Af,f>/‖f‖², b = -i<f'-zf,f>/‖f‖² of the two shifted norms.
/// Throws Error(NumericalInconsistency) if either has an imaginary part beyond
/// op_tol relative to its Cauchy-Schwarz scale.
Shifts optimal_shifts(const FockVector& f);

/// ‖f'+zf - af‖ ‖f'-zf - ibf‖ - α‖f‖².
double theorem4_margin(const FockVector& f, double a, double b);

UncertaintyReport uncertainty_report(const FockVector& f);

/// (σ/2)‖f'+zf‖² + (1/2σ)‖f'-zf‖² - α‖f‖².
double cor7_value(const FockVector& f, double sigma);

/// The minimizer M/P of cor7_value over σ > 0.
double optimal_sigma(const FockVector& f);

/// Gaussian parameters r = α(c-1)/(2(c+1)), s = (a+ibc)/(c+1) of the extremal function.
/// Throws Error(OutsideExtremalFamily) for c <= 0.
GaussianParams extremal_function(const ExtremalSpec& spec, double alpha = 1.0);

/// ‖(1+c)Df + (1-c)D*f - (a+ibc)f‖ / (‖Df‖ + ‖D*f‖ + ‖f‖).
double eq6_residual(const FockVector& f, double c, double a, double b);

/// Least-squares real c in the moment-subtracted equality condition on f/‖f‖.
/// `residual` is ‖u + cv‖ / (‖u‖ + |c|‖v‖); `determined` is false when the
/// moment-subtracted f'-zf vanishes to op_tol.
CRecovery recover_c(const FockVector& f);

} // namespace focku

#endif
