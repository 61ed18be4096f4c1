#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace catalysim {

/// Number of bits needed to write v in binary (0 for v = 0).
constexpr std::size_t bitlen(std::uint64_t v) {
    std::size_t n = 0;
    while (v != 0) {
        ++n;
        v >>= 1;
    }
    return n;
}

/// Bits per index for indices in [0, m].
constexpr std::size_t index_bits(std::size_t m) {
    return bitlen(static_cast<std::uint64_t>(m));
}

/**
 * Tracks the bits held in named registers while an algorithm runs and keeps a
 * snapshot of the registers at the moment the total peaked.
 */
class ScratchMeter {
public:
    using Item = std::pair<std::string, std::size_t>;

    void hold(const std::string& reg, std::size_t bits) {
        for (auto& [name, b] : live_) {
            if (name == reg) {
                b = bits;
                update();
                return;
            }
        }
        live_.emplace_back(reg, bits);
        update();
    }

    void release(const std::string& reg) {
        std::erase_if(live_, [&](const Item& it) { return it.first == reg; });
    }

    std::size_t current() const {
        std::size_t total = 0;
        for (const auto& it : live_)
            total += it.second;
        return total;
    }
    std::size_t peak() const { return peak_; }
    const std::vector<Item>& peak_items() const { return peak_items_; }

private:
    void update() {
        std::size_t now = current();
        if (now > peak_) {
            peak_ = now;
            peak_items_ = live_;
        }
    }

    std::vector<Item> live_;
    std::vector<Item> peak_items_;
    std::size_t peak_ = 0;
};

} // namespace catalysim
