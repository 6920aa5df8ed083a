#ifndef RDV_CHANNEL_HPP
#define RDV_CHANNEL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rdv {

/// An L-bit frequency identifier. The ID is the only channel label the
/// low-complexity algorithms may rely on; there is no global index.
struct ChannelId {
    std::uint64_t value{};
    friend constexpr auto operator<=>(ChannelId, ChannelId) = default;
};

/// Ordered set of distinct channels available to one user. The order is
/// fixed at construction and never changes; modular-clock indexing depends
/// on it.
class ChannelSet {
public:
    ChannelSet(int width, std::vector<ChannelId> channels);

    int width() const noexcept { return width_; }
    std::size_t size() const noexcept { return channels_.size(); }
    ChannelId operator[](std::size_t i) const noexcept { return channels_[i]; }
    const std::vector<ChannelId>& channels() const noexcept { return channels_; }
    bool contains(ChannelId c) const noexcept;

private:
    int width_;
    std::vector<ChannelId> channels_;
};

}  // namespace rdv

template <>
struct std::hash<rdv::ChannelId> {
    std::size_t operator()(rdv::ChannelId c) const noexcept {
        return std::hash<std::uint64_t>{}(c.value);
    }
};

#endif
