#include "rdv/modclock.hpp"

#include <algorithm>

namespace rdv {

void ModClockParams::validate(std::size_t n) const {
    if (period < n) throw std::invalid_argument("ModClockParams: period must be >= n");
    if (slope < 1 || slope >= period)
        throw std::invalid_argument("ModClockParams: slope must be in [1, period-1]");
    if (bias >= period)
        throw std::invalid_argument("ModClockParams: bias must be in [0, period-1]");
}

ChannelId mod_clock_next(const ModClockParams& params, const ChannelSet& set,
                         const Multiset& ms, std::uint64_t t, Stream& slot) {
    const auto k = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(params.slope) * t + params.bias) % params.period);
    if (k <= set.size() - 1) return set[k];
    return ms.draw(slot);
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

IndexedPrimes sieve_indexed_primes(std::uint64_t limit) {
    if (limit < 3) throw std::invalid_argument("sieve_indexed_primes: limit must be >= 3");
    IndexedPrimes out;
    out.limit = limit;
    std::uint64_t index = 0;  // 1-based: q1 = 3 lands in the odd pool
    for (std::uint64_t p : sieve_primes(limit)) {
        if (p < 3) continue;
        ++index;
        (index % 2 == 1 ? out.odd : out.even).push_back(p);
    }
    return out;
}

std::uint64_t smallest_prime_at_least(std::uint64_t x, std::span<const std::uint64_t> pool) {
    auto it = std::lower_bound(pool.begin(), pool.end(), x);
    if (it == pool.end())
        throw SieveLimitError("smallest_prime_at_least: pool exhausted, enlarge the sieve");
    return *it;
}

}  // namespace rdv
