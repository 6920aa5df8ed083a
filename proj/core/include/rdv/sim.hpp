#ifndef RDV_SIM_HPP
#define RDV_SIM_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "rdv/channel.hpp"
#include "rdv/generators.hpp"

namespace rdv {

/// Outcome of one rendezvous trial. On timeout, ttr holds the horizon
/// (censored) and timeout is set.
struct TrialRecord {
    std::uint64_t ttr = 0;  // slots counted from the later user's start, >= 1
    bool timeout = false;
    std::uint32_t drift = 0;
    std::optional<ChannelId> rendezvous_channel;
    std::uint64_t trial_index = 0;
    std::uint64_t seed = 0;
};

/// User A emits at global slots g = 0,1,2,...; user B starts at global slot
/// `drift` and emits its local slot g - drift. Rendezvous is the least
/// g >= drift with A(g) == B(g - drift); TTR = g - drift + 1.
TrialRecord run_trial(const HopGenerator& a, const HopGenerator& b, std::uint32_t drift,
                      std::uint64_t horizon);

struct EttrEstimate {
    double mean = 0.0;
    double ci95 = 0.0;  // normal-approximation half width
    std::uint64_t timeouts = 0;
    std::uint64_t used = 0;  // non-timeout trials
};

/// Mean TTR over non-timeout trials; throws if every trial timed out.
EttrEstimate estimate_ettr(std::span<const TrialRecord> records);

/// Mean of per-batch maxima over batches of `batch_size` consecutive trials
/// in generation order. Timed-out trials contribute their censored horizon.
double estimate_mttr(std::span<const TrialRecord> records, std::size_t batch_size);

/// Closed-form reference values for a scenario.
struct ReferenceCurves {
    double lower_bound;    // (n1 n2 + 1) / (n12 + 1)
    double random_ettr;    // n1 n2 / n12
    double lsh_sync_ettr;  // 1 / J
    double lsh4_ettr;      // mixed-strategy approximation
};

ReferenceCurves reference_curves(double n1, double n2, double n12, double t0, double p0);

}  // namespace rdv

#endif
