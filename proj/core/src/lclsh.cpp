#include "rdv/lclsh.hpp"

#include <stdexcept>

namespace rdv {

Multiset::Multiset(std::vector<ChannelId> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("Multiset: T0 must be >= 1");
}

Multiset build_multiset(const ChannelSet& set, std::uint32_t multiplier,
                        const BitPermutation& perm, const SharedRandomness& shared,
                        std::uint32_t t0) {
    if (t0 == 0) throw std::invalid_argument("build_multiset: T0 must be >= 1");
    HashRing ring = build_ring(set, multiplier, perm);
    if (shared.max_value() != ring.max_value())
        throw std::invalid_argument("build_multiset: shared randomness width mismatch");
    std::vector<ChannelId> entries;
    entries.reserve(t0);
    for (std::uint32_t t = 0; t < t0; ++t) entries.push_back(lclsh_next(ring, shared, t));
    return Multiset(std::move(entries));
}

ChannelId lclsh4_next(const ChannelSet& set, const Multiset& ms, double p0, Stream& slot) {
    if (p0 < 0.0 || p0 > 1.0) throw std::invalid_argument("lclsh4_next: p0 must be in [0, 1]");
    if (slot.uniform01() < p0) return ms.draw(slot);
    return set[slot.below(set.size())];
}

double ettr_lclsh4_approx(double n1, double n2, double n12, double t0, double p0) {
    if (n1 <= 0 || n2 <= 0 || t0 <= 0)
        throw std::invalid_argument("ettr_lclsh4_approx: sizes must be positive");
    if (n12 <= 0)
        throw std::invalid_argument("ettr_lclsh4_approx: no common channel, no rendezvous");
    if (n12 > n1 || n12 > n2)
        throw std::invalid_argument("ettr_lclsh4_approx: n12 must be <= min(n1, n2)");
    const double jaccard = n12 / (n1 + n2 - n12);
    return 1.0 / ((1.0 - p0 * p0) * n12 / (n1 * n2) + p0 * p0 * jaccard / t0);
}

}  // namespace rdv
