// Ternary role schedules for the bounded-MTTR symmetric algorithm. An L-bit
// channel ID maps to an M-trit codeword over {0,1,2}: 0 runs the fast-prime
// clock, 1 the slow-prime clock, 2 stays on the ID channel. The normative
// contract is pairwise_property_check: for every ID pair and every cyclic
// drift there must be an aligned (0,1) position and an aligned (1,0)
// position, so some pairing of the two users' primes is distinct and the
// Chinese Remainder Theorem guarantees rendezvous.
#ifndef RDV_TERNARY_HPP
#define RDV_TERNARY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rdv/channel.hpp"
#include "rdv/rng.hpp"

namespace rdv {

using Trit = std::uint8_t;

/// Codeword length for width-L IDs.
constexpr std::uint32_t codeword_length(int width) {
    return static_cast<std::uint32_t>((width + 3) / 4) * 5 + 6;
}

class TernaryCodeword {
public:
    explicit TernaryCodeword(std::vector<Trit> trits);

    std::size_t size() const noexcept { return trits_.size(); }
    Trit operator[](std::size_t i) const noexcept { return trits_[i]; }
    const std::vector<Trit>& trits() const noexcept { return trits_; }
    friend bool operator==(const TernaryCodeword&, const TernaryCodeword&) = default;

private:
    std::vector<Trit> trits_;
};

/// Standard 4B5B data-symbol code (0 -> 11110, ..., F -> 11101). Injective;
/// every group carries at least one 0 and two 1s.
std::uint8_t encode_4b5b(std::uint8_t nibble);

/// Map an L-bit ID to its M-trit role schedule. Deterministic, injective,
/// exactly one '2' per word. For L <= 8 the words come from searched
/// codebooks that pass exhaustive validation; for larger L from a
/// constant-weight enumerative code spread by a bijective bit scramble.
TernaryCodeword symmetrize(ChannelId id, int width);

/// True iff the pair is covered at drift d: either identical words at d = 0
/// (the aligned '2' slot rendezvouses equal IDs) or both aligned orientations
/// (w_u(s), w_v((s+d) mod M)) = (0,1) and (1,0) exist.
bool pairwise_property_check(const TernaryCodeword& u, const TernaryCodeword& v,
                             std::uint32_t d);

struct MappingFailure {
    std::uint64_t u, v;
    std::uint32_t d;
    const char* missing;  // "01" or "10"
};

struct MappingReport {
    std::uint64_t checked = 0;
    std::uint64_t failure_count = 0;
    std::vector<MappingFailure> failures;  // capped; failure_count is exact
    bool ok() const noexcept { return failure_count == 0; }
};

/// Check every ID pair at every drift. Refused for width > 8 (combinatorial
/// blowup); use sampled validation there.
MappingReport validate_mapping_exhaustive(int width);

/// Check `count` uniformly drawn (u, v, d) triples.
MappingReport validate_mapping_sampled(int width, std::uint64_t count, std::uint64_t seed);

/// Per-frame-position clock parameters of one user: two primes
/// ceil(n/(1-p0)) <= period0 < period1 and independently drawn slopes and
/// biases for every position s in [0, M).
struct QrParams {
    std::uint64_t period0, period1;
    std::vector<std::uint64_t> slope0, slope1;  // in [1, period-1]
    std::vector<std::uint64_t> bias0, bias1;    // in [0, period-1]

    /// Smallest two primes >= ceil(n/(1-p0)), parameters drawn from `setup`.
    static QrParams draw(std::size_t n, double p0, std::uint32_t codeword_len, Stream& setup);
};

/// Threshold ceil(n / (1 - p0)) used for period selection.
std::uint64_t clock_period_threshold(std::size_t n, double p0);

}  // namespace rdv

#endif
