#include "rdv/scenario.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "rdv/rng.hpp"

namespace rdv {

namespace {

void shuffle_channels(std::vector<ChannelId>& v, Stream s) {
    for (std::size_t i = v.size() - 1; i > 0; --i) {
        std::size_t j = s.below(i + 1);
        std::swap(v[i], v[j]);
    }
}

}  // namespace

ChannelSet::ChannelSet(int width, std::vector<ChannelId> channels)
    : width_(width), channels_(std::move(channels)) {
    if (width_ < 1 || width_ > 64)
        throw std::invalid_argument("ChannelSet: width must be in [1, 64]");
    if (channels_.empty()) throw std::invalid_argument("ChannelSet: at least one channel");
    std::unordered_set<ChannelId> seen;
    for (ChannelId c : channels_) {
        if (width_ < 64 && (c.value >> width_) != 0)
            throw std::invalid_argument("ChannelSet: channel value exceeds 2^width");
        if (!seen.insert(c).second)
            throw std::invalid_argument("ChannelSet: duplicate channel id");
    }
}

bool ChannelSet::contains(ChannelId c) const noexcept {
    return std::find(channels_.begin(), channels_.end(), c) != channels_.end();
}

void ScenarioSpec::validate() const {
    if (width < 4 || width > 64)
        throw std::invalid_argument("ScenarioSpec: width must be in [4, 64]");
    if (n12 < 1 || n12 > std::min(n1, n2))
        throw std::invalid_argument("ScenarioSpec: need 1 <= n12 <= min(n1, n2)");
    // union must fit the ID space
    const std::uint64_t uni = static_cast<std::uint64_t>(n1) + n2 - n12;
    if (width < 64 && uni > (1ULL << width))
        throw std::invalid_argument("ScenarioSpec: n1 + n2 - n12 exceeds 2^width");
    if (horizon == 0) throw std::invalid_argument("ScenarioSpec: horizon must be positive");
}

std::pair<ChannelSet, ChannelSet> gen_scenario(const ScenarioSpec& spec) {
    spec.validate();
    const std::uint64_t mask = spec.width == 64 ? ~0ULL : ((1ULL << spec.width) - 1);
    Stream draw(derive(spec.seed, 0));
    std::unordered_set<std::uint64_t> used;
    auto take = [&](std::uint32_t count) {
        std::vector<ChannelId> out;
        out.reserve(count);
        while (out.size() < count) {
            std::uint64_t v = draw.next_u64() & mask;
            if (used.insert(v).second) out.push_back(ChannelId{v});
        }
        return out;
    };

    std::vector<ChannelId> common = take(spec.n12);
    std::vector<ChannelId> only1 = take(spec.n1 - spec.n12);
    std::vector<ChannelId> only2 = take(spec.n2 - spec.n12);

    std::vector<ChannelId> f1 = common;
    f1.insert(f1.end(), only1.begin(), only1.end());
    std::vector<ChannelId> f2 = common;
    f2.insert(f2.end(), only2.begin(), only2.end());

    // each user enumerates its channels in its own arbitrary order
    shuffle_channels(f1, Stream(derive(spec.seed, 1)));
    shuffle_channels(f2, Stream(derive(spec.seed, 2)));

    return {ChannelSet(spec.width, std::move(f1)), ChannelSet(spec.width, std::move(f2))};
}

}  // namespace rdv
