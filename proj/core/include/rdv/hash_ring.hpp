#ifndef RDV_HASH_RING_HPP
#define RDV_HASH_RING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rdv/channel.hpp"
#include "rdv/permutation.hpp"
#include "rdv/rng.hpp"

namespace rdv {

struct RingPoint {
    std::uint64_t hash;
    std::uint32_t owner;  // channel index in the originating set
};

/// Consistent-hashing ring over [0, K*2^L]. Each channel owns K virtual
/// frequencies; their permuted bit patterns partition the interval. The
/// wrap-around point at K*2^L belongs to the owner of the smallest hash.
class HashRing {
public:
    HashRing(int width, std::uint32_t multiplier, std::vector<RingPoint> points,
             std::vector<ChannelId> channels);

    int width() const noexcept { return width_; }                       // L + log2 K
    std::uint32_t multiplier() const noexcept { return multiplier_; }   // K
    std::span<const RingPoint> points() const noexcept { return points_; }
    std::uint64_t max_value() const noexcept { return mask_; }          // K*2^L - 1
    std::uint32_t sentinel_owner() const noexcept { return points_.front().owner; }

    /// Index of the channel owning the smallest hash >= u (wrapping at
    /// K*2^L). Binary search, O(log Kn) comparisons.
    std::uint32_t lookup_owner(std::uint64_t u) const;
    ChannelId lookup(std::uint64_t u) const { return channels_[lookup_owner(u)]; }

    ChannelId channel(std::uint32_t owner) const noexcept { return channels_[owner]; }
    std::size_t channel_count() const noexcept { return channels_.size(); }

private:
    int width_;
    std::uint32_t multiplier_;
    std::uint64_t mask_;
    std::vector<RingPoint> points_;     // sorted ascending by hash, all distinct
    std::vector<ChannelId> channels_;
};

/// Hash every virtual frequency (id << log2K | k) through the shared bit
/// permutation and sort. perm.width() must equal set.width() + log2(K); K a
/// power of two.
HashRing build_ring(const ChannelSet& set, std::uint32_t multiplier, const BitPermutation& perm);

/// Channel selected at slot t by ring lookup of the shared draw U(t).
inline ChannelId lclsh_next(const HashRing& ring, const SharedRandomness& shared,
                            std::uint64_t t) {
    return ring.lookup(shared(t));
}

}  // namespace rdv

#endif
