#pragma once

// Seeded deterministic parameter draws for the property suites. mt19937_64
// is fully specified by the standard and the reductions below avoid
// distribution classes, so a given seed yields the same draws on every
// platform. Each (seed, stream, index) triple gets its own generator, which
// keeps draw results independent of evaluation order.

#include <liefol/families.hpp>

#include <cstdint>
#include <random>

namespace liefol {

class DrawRng {
public:
    DrawRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : eng_(mix(mix(mix(0x9e3779b97f4a7c15ull ^ seed, stream), index), 0x5851f42d4c957f2dull))
    {
    }

    // Uniform on [lo, hi]; modulo bias is irrelevant at these range sizes.
    long long int_in(long long lo, long long hi)
    {
        return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Numerator in [-10,10], denominator in [1,10].
    Rational rational() { return Rational(int_in(-10, 10), int_in(1, 10)); }

private:
    static std::uint64_t mix(std::uint64_t z, std::uint64_t salt)
    {
        z += 0x9e3779b97f4a7c15ull + salt;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

inline Semisimple13Params draw_semisimple13(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    DrawRng r(seed, stream, index);
    Semisimple13Params p;
    p.b11 = r.rational();
    p.b21 = r.rational();
    p.c11 = r.rational();
    p.c12 = r.rational();
    p.c21 = r.rational();
    p.c22 = r.rational();
    p.s14 = r.rational();
    p.s24 = r.rational();
    p.t14 = r.rational();
    p.t15 = r.rational();
    p.t24 = r.rational();
    p.t25 = r.rational();
    p.rho = r.rational();
    return p;
}

inline Mixed11Params draw_mixed11(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    DrawRng r(seed, stream, index);
    Mixed11Params p;
    p.b11 = r.rational();
    p.b21 = r.rational();
    p.c11 = r.rational();
    p.c12 = r.rational();
    p.c21 = r.rational();
    p.c22 = r.rational();
    p.x1 = r.rational();
    p.x2 = r.rational();
    p.y1 = r.rational();
    p.rho = r.rational();
    p.theta4 = r.rational();
    return p;
}

} // namespace liefol
