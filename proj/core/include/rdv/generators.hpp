// Channel-hopping generators. Every generator is a deterministic map from
// the local slot index to a channel: randomness comes from slot-indexed
// streams, so evaluation order never matters and trials parallelize without
// coordination.
#ifndef RDV_GENERATORS_HPP
#define RDV_GENERATORS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rdv/baselines.hpp"
#include "rdv/channel.hpp"
#include "rdv/hash_ring.hpp"
#include "rdv/lclsh.hpp"
#include "rdv/modclock.hpp"
#include "rdv/ternary.hpp"

namespace rdv {

class HopGenerator {
public:
    virtual ~HopGenerator() = default;
    virtual ChannelId at(std::uint64_t t) const = 0;
};

enum class Algorithm {
    Random,
    Lsh2,
    Lsh4,
    LcLsh,
    LcLsh4,
    AsymLcLsh4,
    QrLcLsh4,
    QrBaseline,
};

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

bool algorithm_uses_multiplier(Algorithm a);  // K
bool algorithm_uses_multiset(Algorithm a);    // T0
bool algorithm_uses_p0(Algorithm a);
bool algorithm_has_bounded_mttr(Algorithm a);
bool algorithm_needs_global_enumeration(Algorithm a);

/// Fixed sequence, for hand-specified schedules in tests and debugging.
class ScriptedHop final : public HopGenerator {
public:
    explicit ScriptedHop(std::vector<ChannelId> seq) : seq_(std::move(seq)) {}
    ChannelId at(std::uint64_t t) const override { return seq_[t % seq_.size()]; }

private:
    std::vector<ChannelId> seq_;
};

class RandomHop final : public HopGenerator {
public:
    RandomHop(ChannelSet set, PrivateStream priv);
    ChannelId at(std::uint64_t t) const override;

private:
    ChannelSet set_;
    PrivateStream priv_;
};

class Lsh2Hop final : public HopGenerator {
public:
    Lsh2Hop(GlobalEnumeration enumeration, ChannelSet set);
    ChannelId at(std::uint64_t t) const override;

private:
    GlobalEnumeration enum_;
    ChannelSet set_;
};

class Lsh4Hop final : public HopGenerator {
public:
    Lsh4Hop(GlobalEnumeration enumeration, ChannelSet set, std::uint32_t t0, double p0,
            PrivateStream priv);
    ChannelId at(std::uint64_t t) const override;
    const Multiset& multiset() const noexcept { return ms_; }

private:
    GlobalEnumeration enum_;
    ChannelSet set_;
    Multiset ms_;
    double p0_;
    PrivateStream priv_;
};

class LcLshHop final : public HopGenerator {
public:
    LcLshHop(HashRing ring, SharedRandomness shared);
    ChannelId at(std::uint64_t t) const override;

private:
    HashRing ring_;
    SharedRandomness shared_;
};

class LcLsh4Hop final : public HopGenerator {
public:
    LcLsh4Hop(ChannelSet set, Multiset ms, double p0, PrivateStream priv);
    ChannelId at(std::uint64_t t) const override;
    const Multiset& multiset() const noexcept { return ms_; }

private:
    ChannelSet set_;
    Multiset ms_;
    double p0_;
    PrivateStream priv_;
};

/// Role-asymmetric bounded-MTTR generator: a modular clock whose prime
/// period comes from the role's pool (role 1 odd-indexed, role 2
/// even-indexed), slope drawn once at construction, bias 0. Clock misses
/// fall back to multiset draws.
class AsymHop final : public HopGenerator {
public:
    AsymHop(int role, ChannelSet set, Multiset ms, double p0, const IndexedPrimes& primes,
            PrivateStream priv);
    ChannelId at(std::uint64_t t) const override;
    std::uint64_t period() const noexcept { return clock_.period; }

private:
    ChannelSet set_;
    Multiset ms_;
    ModClockParams clock_;
    PrivateStream priv_;
};

/// Symmetric bounded-MTTR generator: frames of M slots, the codeword of the
/// ID channel assigning each frame position to the fast clock (0), the slow
/// clock (1) or the ID channel itself (2). In baseline mode (no multiset)
/// the ID is a uniform member of the set and clock misses redraw from the
/// set, matching the quasi-random benchmark.
class QrHop final : public HopGenerator {
public:
    /// Mixed-strategy variant: id = ms[0], misses draw from the multiset.
    QrHop(ChannelSet set, Multiset ms, double p0, PrivateStream priv);
    /// Baseline variant: id and all replacement draws uniform from the set.
    QrHop(ChannelSet set, double p0, PrivateStream priv);

    ChannelId at(std::uint64_t t) const override;

    ChannelId id_channel() const noexcept { return id_; }
    const TernaryCodeword& codeword() const noexcept { return codeword_; }
    std::uint64_t slow_period() const noexcept { return params_.period1; }
    /// Replacement policy draw (exposed for distribution tests).
    ChannelId replacement_draw(Stream& s) const;

private:
    QrHop(ChannelSet set, std::optional<Multiset> ms, double p0, PrivateStream priv);

    ChannelSet set_;
    std::optional<Multiset> ms_;
    ChannelId id_;
    TernaryCodeword codeword_;
    QrParams params_;
    PrivateStream priv_;
};

/// Everything needed to reproduce one trial: the two channel sets and the
/// coupled generator pair.
struct TrialPair {
    std::unique_ptr<HopGenerator> a;  // earlier user; role 1
    std::unique_ptr<HopGenerator> b;  // later user; role 2
};

struct AlgorithmParams {
    std::uint32_t multiplier = 4;  // K, power of two
    std::uint32_t t0 = 20;
    double p0 = 0.75;
};

/// Build the coupled pair for one trial. Public constants (bit permutation,
/// shared draws, global enumeration) derive from shared_seed; private
/// randomness comes from the two PrivateStreams.
TrialPair make_generator_pair(Algorithm algorithm, const ChannelSet& f1, const ChannelSet& f2,
                              const AlgorithmParams& params, std::uint64_t shared_seed,
                              PrivateStream priv_a, PrivateStream priv_b);

/// Worst-case rendezvous horizon of a bounded algorithm for set sizes
/// (n1, n2): the product of the two largest selectable periods (times the
/// frame length for the codeword-scheduled variants).
std::uint64_t theorem_bound_horizon(Algorithm algorithm, std::size_t n1, std::size_t n2,
                                    double p0, int width);

}  // namespace rdv

#endif
