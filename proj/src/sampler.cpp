#include "hypersing/sampler.hpp"

#include "hypersing/rational.hpp"

namespace hypersing {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t entry_seed(std::uint64_t global_seed, std::string_view name) {
    return splitmix64(global_seed ^ fnv1a64(name));
}

Sampler::Sampler(std::uint64_t seed, std::uint64_t height)
    : seed_(seed), height_(height), engine_(splitmix64(seed)) {
    if (height == 0) throw DomainError("sampling height must be positive");
}

std::int64_t Sampler::next_coefficient() {
    // Uniform on 2H values; modulo bias is below 2^-50 for any practical H.
    std::uint64_t r = engine_() % (2 * height_);
    auto v = static_cast<std::int64_t>(r % height_) + 1;
    return r < height_ ? v : -v;
}

Sampler Sampler::fork(std::uint64_t stream) const {
    return Sampler(splitmix64(seed_ ^ splitmix64(stream + 0x51ed2701ULL)), height_);
}

}  // namespace hypersing
