#ifndef RDV_LCLSH_HPP
#define RDV_LCLSH_HPP

#include <cstdint>
#include <vector>

#include "rdv/channel.hpp"
#include "rdv/hash_ring.hpp"

namespace rdv {

/// The T0-slot preamble sequence treated as a bag of channels (duplicates
/// allowed, multiplicity-weighted draws). Two users built from the same
/// public permutation and shared randomness hold coupled multisets; that
/// coupling is what accelerates rendezvous.
class Multiset {
public:
    explicit Multiset(std::vector<ChannelId> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    ChannelId operator[](std::size_t i) const noexcept { return entries_[i]; }
    const std::vector<ChannelId>& entries() const noexcept { return entries_; }

    /// Uniform over the T0 slots, so a channel's weight is its multiplicity.
    ChannelId draw(Stream& s) const { return entries_[s.below(entries_.size())]; }

private:
    std::vector<ChannelId> entries_;
};

/// Run the ring selection for slots 0..T0-1. Both users must pass the same
/// perm and shared randomness; those are public system constants.
Multiset build_multiset(const ChannelSet& set, std::uint32_t multiplier,
                        const BitPermutation& perm, const SharedRandomness& shared,
                        std::uint32_t t0);

/// Mixed strategy: with probability p0 a multiplicity-weighted multiset draw,
/// otherwise a uniform draw from the full set.
ChannelId lclsh4_next(const ChannelSet& set, const Multiset& ms, double p0, Stream& slot);

/// Closed-form ETTR approximation for the mixed strategy:
/// 1 / ((1-p0^2) n12/(n1 n2) + p0^2 J/T0). Optimistic at high J, where
/// cross-slot multiset collisions it neglects become significant.
double ettr_lclsh4_approx(double n1, double n2, double n12, double t0, double p0);

}  // namespace rdv

#endif
