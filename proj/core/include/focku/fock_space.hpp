#ifndef FOCKU_FOCK_SPACE_HPP
#define FOCKU_FOCK_SPACE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace focku {

using Complex = std::complex<double>;

/// Discretization of the weighted Fock space F²_α over one complex variable.
///
/// A vector lives in `dim() = trunc + headroom + 1` coordinates with respect to the
/// orthonormal basis e_n = sqrt(αⁿ/n!) zⁿ. The top `headroom` coordinates are the
/// tail: operators refuse inputs whose relative tail mass exceeds `tail_tol`.
struct FockContext {
    double alpha = 1.0;
    int trunc = 64;
    int headroom = 4;
    double tail_tol = 1e-12;
    double op_tol = 1e-10;

    /// Throws Error(InvalidArgument) unless alpha > 0, trunc >= 8, headroom >= 2
    /// and both tolerances lie in (0, 1).
    void validate() const;

    std::size_t dim() const noexcept { return static_cast<std::size_t>(trunc + headroom + 1); }

    /// Same context with a different truncation degree.
    FockContext with_trunc(int n) const;

    bool operator==(const FockContext&) const = default;
};

/// Immutable coefficient vector in the orthonormal basis of a FockContext.
class FockVector {
public:
    explicit FockVector(const FockContext& ctx);

    /// `coeffs` may be shorter than ctx.dim() (zero padded) but not longer.
    /// Non-finite entries are rejected.
    FockVector(const FockContext& ctx, std::vector<Complex> coeffs);

    static FockVector basis(const FockContext& ctx, std::size_t n);

    const FockContext& context() const noexcept { return ctx_; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Complex operator[](std::size_t n) const { return coeffs_[n]; }

    double norm() const;
    double norm_squared() const;
    bool is_zero() const;

    /// sqrt(Σ_{top headroom} |c_n|²) / ‖c‖; zero for the zero vector.
    double tail_mass() const;

    /// Throws Error(TruncationUnsound) if tail_mass() > tail_tol.
    void check_tail() const;

    FockVector& operator+=(const FockVector& other);
    FockVector& operator-=(const FockVector& other);
    FockVector& operator*=(Complex scale);

private:
    FockContext ctx_;
    std::vector<Complex> coeffs_;
};

FockVector operator+(FockVector lhs, const FockVector& rhs);
FockVector operator-(FockVector lhs, const FockVector& rhs);
FockVector operator*(Complex scale, FockVector v);
FockVector operator*(FockVector v, Complex scale);

/// Σ c_n(f) conj(c_n(g)). Throws Error(ContextMismatch) for differing contexts.
Complex inner(const FockVector& f, const FockVector& g);
double norm(const FockVector& f);

/// Differentiation D: output coefficient n is sqrt(α(n+1)) c_{n+1}.
FockVector annihilate(const FockVector& f);

/// Adjoint of D, multiplication by αz: output coefficient n is sqrt(αn) c_{n-1}.
/// The coefficient pushed past the last retained index is dropped; the tail guard
/// bounds what that loses.
FockVector create(const FockVector& f);

enum class SelfAdjoint { A, B };

/// A = D + D*, B = i(D - D*).
FockVector apply_selfadjoint(const FockVector& f, SelfAdjoint which);

/// f(z) = C exp(r z² + s z).
struct GaussianParams {
    Complex C{1.0, 0.0};
    Complex r{0.0, 0.0};
    Complex s{0.0, 0.0};
};

/// Strict membership in F²_α: |r| < α/2 - 1e-9.
bool in_fock_space(const GaussianParams& p, double alpha);

/// Orthonormal coordinates of C exp(r z² + s z).
///
/// Monomial coefficients obey (n+1) a_{n+1} = s a_n + 2r a_{n-1}; the coordinates
/// c_n = a_n sqrt(n!/αⁿ) are advanced directly, so no factorial is formed:
///   c_{n+1} = s c_n / sqrt(α(n+1)) + 2r c_{n-1} sqrt(n) / (α sqrt(n+1)).
/// Throws Error(NotInSpace) on a membership violation and
/// Error(TruncationInsufficient) when the tail mass exceeds tail_tol.
FockVector gaussian_coeffs(const GaussianParams& p, const FockContext& ctx);

/// Retries gaussian_coeffs with the truncation doubled until it succeeds or
/// would exceed `max_trunc`.
FockVector gaussian_coeffs_adaptive(const GaussianParams& p, const FockContext& ctx,
                                    int max_trunc = 1024);

/// Distance from g to the span of f, as the norm of the projection residual.
/// Throws Error(DegenerateSpan) for f = 0.
double dist_to_span(const FockVector& g, const FockVector& f);

/// dist_to_span(g, f) / ‖g‖. Throws Error(UndefinedAngle) for g = 0.
double sine_angle(const FockVector& g, const FockVector& f);

/// Point evaluation Σ c_n sqrt(αⁿ/n!) wⁿ.
Complex evaluate(const FockVector& f, Complex w);

/// Coordinates conj(w)ⁿ sqrt(αⁿ/n!) of the reproducing kernel at w, so that
/// inner(f, kernel_vector(ctx, w)) == evaluate(f, w) up to truncation.
FockVector kernel_vector(const FockContext& ctx, Complex w);

} // namespace focku

#endif
