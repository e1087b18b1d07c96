#pragma once

#include <cstdint>
#include <random>

#include "rankone/seq.hpp"

namespace rankone {

/// Deterministic generator of random test vectors.  All draws go through
/// one engine, so a fixed seed reproduces the whole probe stream.
class ProbeGen {
public:
    explicit ProbeGen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    Complex complexInBox(double radius = 1.0) {
        return {uniform(-radius, radius), uniform(-radius, radius)};
    }

    Complex unimodular() {
        const double phi = uniform(0.0, 6.283185307179586);
        return {std::cos(phi), std::sin(phi)};
    }

    /// Finitely supported vector with 1..maxLen coordinates.
    GeomTailSeq finitelySupported(std::size_t maxLen = 8) {
        const std::size_t len = index(1, maxLen);
        std::vector<Complex> p(len);
        for (Complex& z : p) z = complexInBox();
        return GeomTailSeq::fromPrefix(std::move(p));
    }

    /// Vector with a short prefix and 1..maxTails geometric tails of ratio
    /// modulus at most maxRatio.
    GeomTailSeq withTails(std::size_t maxPrefix = 4, std::size_t maxTails = 2,
                          double maxRatio = 0.8) {
        std::vector<Complex> p(index(0, maxPrefix));
        for (Complex& z : p) z = complexInBox();
        std::vector<GeomTail> t(index(1, maxTails));
        for (GeomTail& g : t) {
            g.scale = complexInBox();
            g.ratio = unimodular() * uniform(0.05, maxRatio);
        }
        return GeomTailSeq(std::move(p), std::move(t));
    }

    /// Either finitely supported or tailed, even odds.
    GeomTailSeq vector(double maxRatio = 0.8) {
        return index(0, 1) == 0 ? finitelySupported() : withTails(4, 2, maxRatio);
    }

    /// Random vector normalized to unit norm (resampled if degenerate).
    GeomTailSeq unitVector(double maxRatio = 0.8) {
        for (;;) {
            GeomTailSeq v = vector(maxRatio);
            const double n = norm(v);
            if (n > 1e-6) return scaled(1.0 / n, v);
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace rankone
