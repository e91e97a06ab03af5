#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace eds {

// Exact arbitrary-precision rational. All symbolic-path arithmetic in this
// library goes through this type; there is no floating point on the exact
// side.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Renders as "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);

// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

double to_double(const Rational& q);

// Minimal deterministic PRNG (splitmix64). The standard-library
// distributions are not reproducible across implementations; report
// byte-stability requires us to own the whole sampling path.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Small nonzero integer in [-mag, mag] \ {0}.
    long small_nonzero(long mag = 3) {
        long v = range(1, 2 * mag);
        return v <= mag ? v : mag - v;
    }

    Rational small_rational(long mag = 3) { return Rational(range(-mag, mag)); }
};

}  // namespace eds
