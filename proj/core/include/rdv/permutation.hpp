#ifndef RDV_PERMUTATION_HPP
#define RDV_PERMUTATION_HPP

#include <cstdint>
#include <vector>

namespace rdv {

/// Bijection on bit positions {0, ..., width-1}. Position 0 is the
/// most-significant bit of the width-bit string.
class BitPermutation {
public:
    explicit BitPermutation(std::vector<std::uint8_t> sigma);

    int width() const noexcept { return static_cast<int>(sigma_.size()); }
    std::uint8_t operator()(int pos) const noexcept { return sigma_[pos]; }
    const std::vector<std::uint8_t>& sigma() const noexcept { return sigma_; }

private:
    std::vector<std::uint8_t> sigma_;
};

/// Uniformly random permutation of `width` positions, a pure function of the
/// seed (Fisher-Yates over a seeded stream).
BitPermutation make_bit_permutation(std::uint64_t seed, int width);

/// Permute the width-bit string `bits`: output bit at position j equals input
/// bit at position sigma(j). A bijection on [0, 2^width).
std::uint64_t apply_permutation(std::uint64_t bits, const BitPermutation& perm);

}  // namespace rdv

#endif
