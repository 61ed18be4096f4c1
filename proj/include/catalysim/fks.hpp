#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "catalysim/bitstring.hpp"
#include "catalysim/scratch.hpp"

namespace catalysim {

/// Largest modulus accepted by the residue routines; keeps 2r+1 inside 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/**
 * int(w) mod p with w read MSB-first, computed in one left-to-right pass with
 * the recurrence r <- (2r + bit) mod p. Requires 2 <= p <= kMaxModulus.
 */
std::uint64_t mod_bits(const BitString& w, std::uint64_t p);

/// Residue of w with the bits at `flips` (1-based, strictly ascending) inverted,
/// without materializing the flipped string.
std::uint64_t mod_bits_flipped(const BitString& w, std::span<const std::size_t> flips,
                               std::uint64_t p);

/**
 * A tuple of r indices in [0, m]. Index 0 is a "no flip" sentinel and repeated
 * indices flip their bit once, so a tuple of arity r names every flip set of
 * size at most r.
 */
class IndexTuple {
public:
    IndexTuple() = default;
    explicit IndexTuple(std::vector<std::size_t> entries) : entries_(std::move(entries)) {}

    std::size_t arity() const { return entries_.size(); }
    const std::vector<std::size_t>& entries() const { return entries_; }

    /// Distinct nonzero entries, ascending.
    std::vector<std::size_t> flip_set() const;

    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

private:
    std::vector<std::size_t> entries_;
};

/// w with every bit in flip_set(t) inverted. Throws IndexOutOfRange when an
/// entry exceeds |w|.
BitString flip(const BitString& w, const IndexTuple& t);

/// Sum_{i=0}^{radius} C(m, i), saturating at UINT64_MAX.
std::uint64_t ball_size(std::size_t m, std::size_t radius);

/**
 * Walks the Hamming ball of a given radius around a center without
 * materializing it. The order is fixed: the center first, then flip sets of
 * size 1, 2, ... with each size in lexicographic order.
 *
 * The cursor's state is one IndexTuple of arity `radius`: leading sentinels
 * followed by the current flip set in ascending order.
 */
class BallCursor {
public:
    /// Requires radius <= |center|.
    BallCursor(const BitString& center, std::size_t radius);

    bool done() const { return done_; }
    IndexTuple tuple() const { return IndexTuple(entries_); }
    std::span<const std::size_t> flips() const;
    BitString current() const;
    std::uint64_t residue(std::uint64_t p) const { return mod_bits_flipped(center_, flips(), p); }

    /// Moves to the next ball element; returns false once the ball is exhausted.
    bool advance();

private:
    BitString center_;
    std::size_t radius_;
    std::size_t size_ = 0; // current flip-set size
    std::vector<std::size_t> entries_;
    bool done_ = false;
};

/// Materialized ball in cursor order.
std::vector<BitString> enumerate_ball(const BitString& center, std::size_t radius);

/// Deterministic Miller-Rabin, exact for every 64-bit value.
bool is_prime(std::uint64_t n);

/// Ascending primes strictly greater than a starting point.
class PrimeStream {
public:
    explicit PrimeStream(std::uint64_t start_after = 0) : last_(start_after) {}
    std::uint64_t next();

private:
    std::uint64_t last_;
};

inline PrimeStream primes_ascending(std::uint64_t start_after = 0) {
    return PrimeStream(start_after);
}

/// Upper bound on the n-th prime (n >= 1): exact below 6, n(ln n + ln ln n) above.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

/// Default search cap: an upper bound on the (m*K^2 + 1)-th prime where K is
/// the ball size. Every bad prime divides a nonzero difference of two ball
/// elements, and the product of those differences is below 2^(m*K^2), so a
/// good prime must appear by then.
std::uint64_t fks_prime_cap(std::size_t m, std::size_t radius);

/// A prime on which x -> int(x) mod p is injective over ball(center, radius).
struct GoodPrime {
    std::uint64_t p = 0;
    BitString center;
    std::size_t radius = 0;
    bool certified = false;
    std::uint64_t prime_index = 0; // 1-based position of p among all primes

    friend bool operator==(const GoodPrime&, const GoodPrime&) = default;
};

/// Two distinct ball elements with equal residue.
struct Collision {
    BitString first;
    BitString second;
    std::uint64_t residue = 0;
};

/**
 * First colliding pair under p among unordered pairs of distinct elements of
 * ball(w, radius), scanning pairs in cursor order; nullopt if p is injective.
 */
std::optional<Collision> find_collision(const BitString& w, std::size_t radius, std::uint64_t p,
                                        ScratchMeter* meter = nullptr);

/**
 * Smallest prime p <= prime_cap that hashes ball(w, radius) injectively.
 * prime_cap defaults to fks_prime_cap(|w|, radius). Throws
 * NoGoodPrimeBelowCap, naming the collision under the last prime tried.
 *
 * When a meter is given, the search reports the registers it holds: the
 * candidate prime, the two index tuples, the two residues and a flag.
 */
GoodPrime find_good_prime(const BitString& w, std::size_t radius,
                          std::optional<std::uint64_t> prime_cap = std::nullopt,
                          ScratchMeter* meter = nullptr);

} // namespace catalysim
