#include "focku/random.hpp"

#include "focku/error.hpp"

#include <vector>

namespace focku {

std::uint64_t stable_hash(std::string_view text) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng Rng::for_stream(std::uint64_t seed, std::string_view name)
{
    return Rng(seed ^ stable_hash(name));
}

FockVector random_vector(const FockContext& ctx, Rng& rng, int degree, double decay)
{
    ctx.validate();
    if (degree < 2 || degree > ctx.trunc)
        throw Error(ErrorCode::InvalidArgument, "random degree must lie in [2, truncation]");
    if (!(decay > 0.0 && decay < 1.0))
        throw Error(ErrorCode::InvalidArgument, "random decay must lie in (0, 1)");
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    double scale = 1.0;
    for (auto& z : c) {
        const double u = rng.uniform(-1.0, 1.0);
        const double v = rng.uniform(-1.0, 1.0);
        z = scale * Complex{u, v};
        scale *= decay;
    }
    c[c.size() - 1] = 0.0;
    c[c.size() - 2] = 0.0;
    return FockVector(ctx, std::move(c));
}

} // namespace focku
