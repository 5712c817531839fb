#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsatlab {

// 64-bit finalizer (splitmix64). The constants are part of the reproducibility
// contract: derived streams must match across platforms and releases.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

constexpr std::uint64_t derive_key(std::uint64_t parent, std::string_view label,
                                   std::uint64_t index) {
    return mix64(mix64(parent ^ fnv1a64(label)) ^ index);
}

// Counter-based seed tree. A child stream is addressed by a (label, index)
// path from the master seed, so concurrent trials can draw independent,
// schedule-free streams: equal (master, path) give equal streams everywhere.
class Seed {
public:
    explicit Seed(std::uint64_t master) : master_(master), key_(mix64(master)) {}

    Seed child(std::string label, std::uint64_t index) const {
        Seed s = *this;
        s.key_ = derive_key(key_, label, index);
        s.path_.emplace_back(std::move(label), index);
        return s;
    }

    std::uint64_t master() const { return master_; }
    std::uint64_t key() const { return key_; }
    const std::vector<std::pair<std::string, std::uint64_t>>& path() const { return path_; }

private:
    std::uint64_t master_;
    std::uint64_t key_;
    std::vector<std::pair<std::string, std::uint64_t>> path_;
};

// splitmix64 stream over the derived key.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    explicit SplitMix64(const Seed& seed) : state_(seed.key()) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace wsatlab
