#ifndef RDV_SCENARIO_HPP
#define RDV_SCENARIO_HPP

#include <cstdint>
#include <utility>

#include "rdv/channel.hpp"

namespace rdv {

struct DriftModel {
    enum class Kind { Sync, Async };
    Kind kind = Kind::Sync;
    std::uint32_t offset_bound = 1000;  // async drift drawn uniformly from [0, offset_bound)

    static DriftModel sync() { return {Kind::Sync, 0}; }
    static DriftModel async(std::uint32_t bound) { return {Kind::Async, bound}; }
};

/// Parameters of one randomly drawn pair of available channel sets.
struct ScenarioSpec {
    int width = 8;  // L
    std::uint32_t n1 = 60;
    std::uint32_t n2 = 60;
    std::uint32_t n12 = 60;
    std::uint64_t seed = 0;
    DriftModel drift = DriftModel::sync();
    std::uint64_t horizon = 10000;

    double jaccard() const noexcept {
        return static_cast<double>(n12) / (static_cast<double>(n1) + n2 - n12);
    }
    void validate() const;  // throws std::invalid_argument on infeasible sizes
};

/// Draw the two available channel sets: n12 common IDs plus per-user private
/// IDs, all distinct, uniform over [0, 2^L). Each user's set order is an
/// independent uniform shuffle (local enumeration carries no shared
/// structure). Deterministic in spec.seed.
std::pair<ChannelSet, ChannelSet> gen_scenario(const ScenarioSpec& spec);

}  // namespace rdv

#endif
