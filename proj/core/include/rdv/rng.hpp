// Seeded randomness: a splitmix64 stream plus counter-mode substream
// derivation. Every random quantity in the library is a pure function of a
// 64-bit seed and an index, so replaying any computation gives bit-identical
// results regardless of execution order or thread interleaving.
#ifndef RDV_RNG_HPP
#define RDV_RNG_HPP

#include <cstdint>
#include <stdexcept>

namespace rdv {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// splitmix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Substream seed: the (index+1)-th splitmix64 output of `seed`.
/// derive(s, a) != derive(s, b) for a != b, and chains compose:
/// derive(derive(s, a), b) indexes a two-level tree of streams.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed + (index + 1) * kGolden);
}

/// Sequential splitmix64 generator.
class Stream {
public:
    explicit constexpr Stream(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform draw in [0, n). Multiply-shift reduction; the bias of at most
    /// n/2^64 is irrelevant for the bound sizes used here.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Stream::below: n must be positive");
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// The public coupled random sequence U(t) in [0, 2^width - 1]. Both users of
/// a rendezvous pair are constructed from the same SharedRandomness; the
/// coupling of their hash-based channel choices depends on it.
class SharedRandomness {
public:
    SharedRandomness(std::uint64_t seed, int width) : seed_(seed) {
        if (width < 1 || width > 64)
            throw std::invalid_argument("SharedRandomness: width must be in [1, 64]");
        mask_ = width == 64 ? ~0ULL : ((1ULL << width) - 1);
    }

    std::uint64_t operator()(std::uint64_t t) const noexcept { return derive(seed_, t) & mask_; }
    std::uint64_t max_value() const noexcept { return mask_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t mask_;
};

/// Per-user private randomness. Slot streams are indexed by the local slot
/// number, setup streams by a small tag, so a generator's output at slot t
/// never depends on which slots were evaluated before it.
class PrivateStream {
public:
    explicit constexpr PrivateStream(std::uint64_t seed) noexcept : seed_(seed) {}

    Stream at_slot(std::uint64_t t) const noexcept { return Stream(derive(seed_, t)); }
    Stream setup(std::uint32_t tag) const noexcept {
        return Stream(derive(derive(seed_, kSetupIndex), tag));
    }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    static constexpr std::uint64_t kSetupIndex = ~0ULL;  // never a slot index
    std::uint64_t seed_;
};

/// Streams for distinct (user, trial) pairs are statistically independent.
inline PrivateStream private_stream(std::uint64_t global_seed, std::uint32_t user_id,
                                    std::uint64_t trial_index) noexcept {
    return PrivateStream(derive(derive(global_seed, user_id), trial_index));
}

}  // namespace rdv

#endif
