#include "catalysim/bitstring.hpp"

#include "catalysim/errors.hpp"

namespace catalysim {

BitString BitString::parse(std::string_view text) {
    BitString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1')
            throw ParseError("bitstring contains '" + std::string(1, c) + "' at position " +
                             std::to_string(i + 1));
        out.bits_[i] = static_cast<std::uint8_t>(c - '0');
    }
    return out;
}

BitString BitString::from_index(std::uint64_t value, std::size_t length) {
    BitString out(length);
    for (std::size_t i = 0; i < length; ++i) {
        std::size_t shift = length - 1 - i;
        out.bits_[i] = shift < 64 ? static_cast<std::uint8_t>((value >> shift) & 1u) : 0;
    }
    return out;
}

int BitString::at(std::size_t pos) const {
    if (pos < 1 || pos > bits_.size())
        throw IndexOutOfRange("bit position " + std::to_string(pos) + " outside [1, " +
                              std::to_string(bits_.size()) + "]");
    return bits_[pos - 1];
}

void BitString::set(std::size_t pos, int bit) {
    if (pos < 1 || pos > bits_.size())
        throw IndexOutOfRange("bit position " + std::to_string(pos) + " outside [1, " +
                              std::to_string(bits_.size()) + "]");
    bits_[pos - 1] = static_cast<std::uint8_t>(bit & 1);
}

void BitString::flip(std::size_t pos) {
    set(pos, at(pos) ^ 1);
}

BitString BitString::prefix(std::size_t length) const {
    if (length > bits_.size())
        throw IndexOutOfRange("prefix length " + std::to_string(length) + " exceeds " +
                              std::to_string(bits_.size()));
    BitString out;
    out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(length));
    return out;
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        s[i] = static_cast<char>('0' + bits_[i]);
    return s;
}

std::size_t hamdist(const BitString& x, const BitString& y) {
    if (x.size() != y.size())
        throw LengthMismatch("hamdist of strings with lengths " + std::to_string(x.size()) +
                             " and " + std::to_string(y.size()));
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        d += static_cast<std::size_t>(x[i] != y[i]);
    return d;
}

std::vector<std::size_t> diff_positions(const BitString& x, const BitString& y) {
    if (x.size() != y.size())
        throw LengthMismatch("diff of strings with lengths " + std::to_string(x.size()) +
                             " and " + std::to_string(y.size()));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i])
            out.push_back(i + 1);
    return out;
}

} // namespace catalysim
