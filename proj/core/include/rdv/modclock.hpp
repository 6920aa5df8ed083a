#ifndef RDV_MODCLOCK_HPP
#define RDV_MODCLOCK_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rdv/channel.hpp"
#include "rdv/lclsh.hpp"
#include "rdv/rng.hpp"

namespace rdv {

/// Parameters of a modular clock k = (slope*t + bias) mod period.
struct ModClockParams {
    std::uint64_t period;  // >= n of the driven set; prime in every use here
    std::uint64_t slope;   // in [1, period-1], coprime to a prime period
    std::uint64_t bias;    // in [0, period-1]

    void validate(std::size_t n) const;
};

/// Clock value k <= n-1 selects the k-th channel; out-of-range values fall
/// back to a multiset draw from the slot stream.
ChannelId mod_clock_next(const ModClockParams& params, const ChannelSet& set,
                         const Multiset& ms, std::uint64_t t, Stream& slot);

/// Primes from 3 up, 1-based enumeration q1=3, q2=5, q3=7, ... partitioned by
/// index parity into two disjoint pools. Two users drawing from different
/// pools always hold distinct (hence coprime) periods.
struct IndexedPrimes {
    std::vector<std::uint64_t> odd;   // q1, q3, q5, ...
    std::vector<std::uint64_t> even;  // q2, q4, q6, ...
    std::uint64_t limit = 0;
};

IndexedPrimes sieve_indexed_primes(std::uint64_t limit);

/// All primes <= limit, starting at 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// The requested prime exceeds the sieved range; the caller must enlarge the
/// sieve.
class SieveLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimal element of the ascending pool that is >= x.
std::uint64_t smallest_prime_at_least(std::uint64_t x, std::span<const std::uint64_t> pool);

}  // namespace rdv

#endif
