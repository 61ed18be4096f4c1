#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catalysim {

/**
 * Fixed-length binary string used for input and auxiliary tape contents.
 *
 * Positions are 1-based in the public interface. Position 1 is the most
 * significant bit when the string is read as an integer, so the textual form
 * "1011" denotes eleven.
 */
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t length) : bits_(length, 0) {}

    /// Parses a string over {'0','1'}; throws ParseError on any other char.
    static BitString parse(std::string_view text);

    /// MSB-first encoding of value in exactly `length` bits. Iterating value over
    /// 0..2^length-1 visits all strings in lexicographic order.
    static BitString from_index(std::uint64_t value, std::size_t length);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    /// Bit at 1-based position; throws IndexOutOfRange.
    int at(std::size_t pos) const;
    void set(std::size_t pos, int bit);
    void flip(std::size_t pos);

    /// Unchecked 0-based access for hot loops.
    int operator[](std::size_t idx) const noexcept { return bits_[idx]; }

    BitString prefix(std::size_t length) const;

    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0)
            return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

/// Number of positions at which two equal-length strings differ.
/// Throws LengthMismatch when the lengths differ.
std::size_t hamdist(const BitString& x, const BitString& y);

/// 1-based positions where x and y differ, ascending.
std::vector<std::size_t> diff_positions(const BitString& x, const BitString& y);

} // namespace catalysim
