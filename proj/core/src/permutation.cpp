#include "rdv/permutation.hpp"

#include <stdexcept>
#include <vector>

#include "rdv/rng.hpp"

namespace rdv {

BitPermutation::BitPermutation(std::vector<std::uint8_t> sigma) : sigma_(std::move(sigma)) {
    if (sigma_.empty() || sigma_.size() > 64)
        throw std::invalid_argument("BitPermutation: width must be in [1, 64]");
    std::vector<bool> seen(sigma_.size(), false);
    for (std::uint8_t img : sigma_) {
        if (img >= sigma_.size() || seen[img])
            throw std::invalid_argument("BitPermutation: sigma is not a bijection");
        seen[img] = true;
    }
}

BitPermutation make_bit_permutation(std::uint64_t seed, int width) {
    if (width < 1 || width > 64)
        throw std::invalid_argument("make_bit_permutation: width must be in [1, 64]");
    std::vector<std::uint8_t> sigma(width);
    for (int i = 0; i < width; ++i) sigma[i] = static_cast<std::uint8_t>(i);
    Stream s(seed);
    for (int i = width - 1; i > 0; --i) {
        auto j = static_cast<int>(s.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(sigma[i], sigma[j]);
    }
    return BitPermutation(std::move(sigma));
}

std::uint64_t apply_permutation(std::uint64_t bits, const BitPermutation& perm) {
    const int w = perm.width();
    if (w < 64 && (bits >> w) != 0)
        throw std::invalid_argument("apply_permutation: bits exceed 2^width");
    std::uint64_t out = 0;
    for (int j = 0; j < w; ++j) {
        std::uint64_t in_bit = (bits >> (w - 1 - perm(j))) & 1ULL;
        out |= in_bit << (w - 1 - j);
    }
    return out;
}

}  // namespace rdv
