// Benchmark algorithms that require a global channel enumeration: the random
// algorithm and the two permutation-hashing schemes. Their cost grows with
// the total channel count N, which is the point of comparison against the
// ID-based family.
#ifndef RDV_BASELINES_HPP
#define RDV_BASELINES_HPP

#include <cstdint>
#include <vector>

#include "rdv/channel.hpp"
#include "rdv/lclsh.hpp"
#include "rdv/rng.hpp"

namespace rdv {

/// Two public permutations of the global channel index space [0, N).
class GlobalEnumeration {
public:
    GlobalEnumeration(std::vector<std::uint32_t> pi1, std::vector<std::uint32_t> pi2);
    static GlobalEnumeration from_seeds(std::uint64_t n, std::uint64_t seed1,
                                        std::uint64_t seed2);

    std::uint64_t size() const noexcept { return pi1_.size(); }
    std::uint32_t pi1(std::uint64_t c) const noexcept { return pi1_[c]; }
    std::uint32_t pi2(std::uint64_t c) const noexcept { return pi2_[c]; }

private:
    std::vector<std::uint32_t> pi1_, pi2_;
};

/// Independent uniform draw from the available set.
ChannelId random_next(const ChannelSet& set, Stream& slot);

/// Select the channel minimizing (pi1(c) - pi2(t mod N)) mod N. Ties cannot
/// occur: pi1 is injective on the distinct channel values.
ChannelId lsh2_next(const GlobalEnumeration& enumeration, const ChannelSet& set,
                    std::uint64_t t);

/// Mixed strategy over a multiset built from lsh2_next(0..T0-1).
ChannelId lsh4_next(const GlobalEnumeration& enumeration, const ChannelSet& set,
                    const Multiset& ms, double p0, Stream& slot);

}  // namespace rdv

#endif
