#include "doctest.h"

#include "focku/error.hpp"
#include "focku/random.hpp"

using namespace focku;

TEST_CASE("generator stream is fixed by the seed")
{
    // First output of mt19937_64 with the default seed is pinned by the C++ standard.
    Rng standard(5489u);
    CHECK(standard.next_u64() == 14514284786278117030ULL);

    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i)
        CHECK(a.uniform() == b.uniform());

    Rng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform(-1.0, 1.0);
        CHECK(x >= -1.0);
        CHECK(x < 1.0);
    }

    auto s1 = Rng::for_stream(7, "alpha");
    auto s2 = Rng::for_stream(7, "beta");
    CHECK(s1.next_u64() != s2.next_u64());
    CHECK(stable_hash("") == 0xcbf29ce484222325ULL);
    CHECK(stable_hash("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("random vectors have interior support and geometric decay")
{
    FockContext ctx;
    Rng rng(3);
    const auto f = random_vector(ctx, rng, 20, 0.5);
    CHECK(f[19] == Complex{});
    CHECK(f[20] == Complex{});
    CHECK(f[21] == Complex{});
    CHECK(std::abs(f[0].real()) <= 1.0);
    CHECK(std::abs(f[10]) <= std::sqrt(2.0) * std::pow(0.5, 10));
    CHECK(f.tail_mass() == 0.0);

    CHECK_THROWS_AS(random_vector(ctx, rng, 65, 0.5), Error);
    CHECK_THROWS_AS(random_vector(ctx, rng, 1, 0.5), Error);
    CHECK_THROWS_AS(random_vector(ctx, rng, 10, 1.0), Error);
    CHECK_THROWS_AS(random_vector(ctx, rng, 10, 0.0), Error);
}
