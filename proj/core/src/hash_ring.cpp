#include "rdv/hash_ring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rdv {

HashRing::HashRing(int width, std::uint32_t multiplier, std::vector<RingPoint> points,
                   std::vector<ChannelId> channels)
    : width_(width),
      multiplier_(multiplier),
      mask_(width == 64 ? ~0ULL : ((1ULL << width) - 1)),
      points_(std::move(points)),
      channels_(std::move(channels)) {}

std::uint32_t HashRing::lookup_owner(std::uint64_t u) const {
    if (u > mask_) throw std::invalid_argument("HashRing::lookup: u exceeds K*2^L - 1");
    auto it = std::lower_bound(points_.begin(), points_.end(), u,
                               [](const RingPoint& p, std::uint64_t v) { return p.hash < v; });
    if (it == points_.end()) return sentinel_owner();  // wrap-around point at K*2^L
    return it->owner;
}

HashRing build_ring(const ChannelSet& set, std::uint32_t multiplier,
                    const BitPermutation& perm) {
    if (multiplier == 0 || !std::has_single_bit(multiplier))
        throw std::invalid_argument("build_ring: K must be a power of two >= 1");
    const int log_k = std::countr_zero(multiplier);
    const int width = set.width() + log_k;
    if (width > 64) throw std::invalid_argument("build_ring: L + log2K exceeds 64 bits");
    if (perm.width() != width)
        throw std::invalid_argument("build_ring: permutation width must be L + log2K");

    std::vector<RingPoint> points;
    points.reserve(set.size() * multiplier);
    for (std::uint32_t i = 0; i < set.size(); ++i) {
        const std::uint64_t base = set[i].value << log_k;
        for (std::uint32_t k = 0; k < multiplier; ++k)
            points.push_back({apply_permutation(base | k, perm), i});
    }
    std::sort(points.begin(), points.end(),
              [](const RingPoint& a, const RingPoint& b) { return a.hash < b.hash; });
    return HashRing(width, multiplier, std::move(points), set.channels());
}

}  // namespace rdv
