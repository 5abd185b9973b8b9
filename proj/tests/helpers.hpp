#pragma once

#include <cstdint>
#include <vector>

#include "liebialg/linalg.hpp"
#include "liebialg/orthogonal.hpp"
#include "liebialg/tensors.hpp"

namespace testutil {

// Small deterministic generator for reproducible randomized checks.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed * 2654435769ULL + 1) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ULL;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    liebialg::Rational rational() {
        static const int dens[4] = {1, 2, 3, 5};
        return liebialg::Rational(range(-9, 9), dens[range(0, 3)]);
    }

    liebialg::RatVec vec(int n) {
        liebialg::RatVec v(n);
        for (auto& x : v) x = rational();
        return v;
    }

    liebialg::Bivector bivector(int dim) {
        liebialg::Bivector b(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) b.set(i, j, rational());
        return b;
    }

private:
    std::uint64_t state_;
};

/// All sign patterns of a given length.
inline std::vector<liebialg::Metric> all_metrics(int n1) {
    std::vector<liebialg::Metric> out;
    for (int mask = 0; mask < (1 << n1); ++mask) {
        liebialg::Metric m;
        for (int i = 0; i < n1; ++i) m.signs.push_back((mask >> i) & 1 ? 1 : -1);
        out.push_back(m);
    }
    return out;
}

}  // namespace testutil
