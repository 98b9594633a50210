#ifndef FOCKU_RANDOM_HPP
#define FOCKU_RANDOM_HPP

#include "focku/fock_space.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace focku {

/// Seeded generator with a platform-independent output stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++ standard.
/// Doubles are formed from the top 53 bits, (x >> 11) * 2^-53, rather than through
/// std::uniform_real_distribution, whose algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Child generator for a named stream; independent of how many draws the
    /// parent has made.
    static Rng for_stream(std::uint64_t seed, std::string_view name);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// FNV-1a over the bytes of `text`.
std::uint64_t stable_hash(std::string_view text) noexcept;

/// c_n = decayⁿ (u_n + i v_n), u, v uniform in [-1, 1], for n <= degree, with the
/// coefficients at degree-1 and degree forced to zero. Throws Error(InvalidArgument)
/// unless 2 <= degree <= ctx.trunc and decay lies in (0, 1).
FockVector random_vector(const FockContext& ctx, Rng& rng, int degree, double decay);

} // namespace focku

#endif
