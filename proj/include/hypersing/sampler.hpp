#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hypersing {

inline constexpr std::uint64_t kDefaultHeight = 101;
inline constexpr int kMaxEscalations = 3;

/// Deterministic source of "general" integer coefficients in [-H, H] \ {0}.
/// Samplers are passed by value: equal (seed, height) give equal streams.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = 0, std::uint64_t height = kDefaultHeight);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t height() const { return height_; }

    std::int64_t next_coefficient();

    /// Independent child stream, determined by (seed, stream).
    Sampler fork(std::uint64_t stream) const;
    Sampler with_height(std::uint64_t height) const { return Sampler(seed_, height); }

private:
    std::uint64_t seed_;
    std::uint64_t height_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a over the bytes of text.
std::uint64_t fnv1a64(std::string_view text);

/// Per-entry seed: splitmix64(global_seed ^ fnv1a64(name)).
std::uint64_t entry_seed(std::uint64_t global_seed, std::string_view name);

/// Outcome of evaluating a generic quantity on two independent samples.
template <typename T>
struct Stable {
    std::optional<T> value;  // set iff two samples agreed
    std::uint64_t seeds[2] = {0, 0};
    std::uint64_t height = 0;
    int escalations = 0;
    std::vector<T> observed;  // values seen on the final rung, in sample order
};

/// Evaluates compute on forks 0 and 1 of the sampler. On disagreement the
/// height doubles and both rerun, at most kMaxEscalations times; after that
/// the result carries no value ("inconclusive").
template <typename T>
Stable<T> two_seed_stable(const Sampler& sampler, const std::function<T(Sampler)>& compute) {
    Stable<T> out;
    std::uint64_t height = sampler.height();
    for (int rung = 0; rung <= kMaxEscalations; ++rung) {
        Sampler a = sampler.fork(2 * rung).with_height(height);
        Sampler b = sampler.fork(2 * rung + 1).with_height(height);
        out.seeds[0] = a.seed();
        out.seeds[1] = b.seed();
        out.height = height;
        out.escalations = rung;
        T va = compute(a);
        T vb = compute(b);
        out.observed = {va, vb};
        if (va == vb) {
            out.value = va;
            return out;
        }
        height *= 2;
    }
    return out;
}

}  // namespace hypersing
