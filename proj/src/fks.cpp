#include "catalysim/fks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "catalysim/errors.hpp"

namespace catalysim {

namespace {

void check_modulus(std::uint64_t p) {
    if (p < 2 || p > kMaxModulus)
        throw std::invalid_argument("modulus " + std::to_string(p) + " outside [2, 2^62]");
}

} // namespace

std::uint64_t mod_bits(const BitString& w, std::uint64_t p) {
    check_modulus(p);
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        r = (2 * r + static_cast<std::uint64_t>(w[i])) % p;
    return r;
}

std::uint64_t mod_bits_flipped(const BitString& w, std::span<const std::size_t> flips,
                               std::uint64_t p) {
    check_modulus(p);
    std::uint64_t r = 0;
    auto next = flips.begin();
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t bit = static_cast<std::uint64_t>(w[i]);
        if (next != flips.end() && *next == i + 1) {
            bit ^= 1u;
            ++next;
        }
        r = (2 * r + bit) % p;
    }
    return r;
}

std::vector<std::size_t> IndexTuple::flip_set() const {
    std::vector<std::size_t> out;
    for (std::size_t e : entries_)
        if (e != 0)
            out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BitString flip(const BitString& w, const IndexTuple& t) {
    BitString out = w;
    for (std::size_t i : t.flip_set()) {
        if (i > w.size())
            throw IndexOutOfRange("flip index " + std::to_string(i) + " exceeds length " +
                                  std::to_string(w.size()));
        out.flip(i);
    }
    return out;
}

std::uint64_t ball_size(std::size_t m, std::size_t radius) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1; // C(m, i)
    for (std::size_t i = 0; i <= std::min(radius, m); ++i) {
        if (i > 0)
            binom = binom * (m - i + 1) / i;
        total += binom;
        if (binom > kMax || total > kMax)
            return kMax;
    }
    return static_cast<std::uint64_t>(total);
}

// ---------------------------------------------------------------------------

BallCursor::BallCursor(const BitString& center, std::size_t radius)
    : center_(center), radius_(radius), entries_(radius, 0) {
    if (radius > center.size())
        throw std::invalid_argument("ball radius " + std::to_string(radius) +
                                    " exceeds string length " + std::to_string(center.size()));
}

std::span<const std::size_t> BallCursor::flips() const {
    return std::span<const std::size_t>(entries_).subspan(radius_ - size_);
}

BitString BallCursor::current() const {
    BitString out = center_;
    for (std::size_t i : flips())
        out.flip(i);
    return out;
}

bool BallCursor::advance() {
    if (done_)
        return false;
    const std::size_t m = center_.size();
    const std::size_t base = radius_ - size_;

    // Next combination of the current size, lexicographically.
    for (std::size_t j = size_; j-- > 0;) {
        std::size_t limit = m - (size_ - 1 - j);
        if (entries_[base + j] < limit) {
            ++entries_[base + j];
            for (std::size_t k = j + 1; k < size_; ++k)
                entries_[base + k] = entries_[base + k - 1] + 1;
            return true;
        }
    }

    // Exhausted this size; start the next one at {1, ..., size+1}.
    if (size_ + 1 > radius_) {
        done_ = true;
        return false;
    }
    ++size_;
    std::fill(entries_.begin(), entries_.end(), 0);
    for (std::size_t k = 0; k < size_; ++k)
        entries_[radius_ - size_ + k] = k + 1;
    return true;
}

std::vector<BitString> enumerate_ball(const BitString& center, std::size_t radius) {
    std::vector<BitString> out;
    for (BallCursor c(center, radius); !c.done(); c.advance())
        out.push_back(c.current());
    return out;
}

// ---------------------------------------------------------------------------
// Primes

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(std::uint64_t n) {
    // The first twelve primes as witnesses are exact for n < 3.3e24.
    constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (std::uint64_t q : kWitnesses) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t PrimeStream::next() {
    if (last_ < 2)
        return last_ = 2;
    std::uint64_t c = last_ + 1;
    if (c % 2 == 0)
        ++c;
    while (!is_prime(c)) {
        if (c > std::numeric_limits<std::uint64_t>::max() - 2)
            throw std::overflow_error("prime stream exhausted 64-bit range");
        c += 2;
    }
    return last_ = c;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
    constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11};
    if (n == 0)
        throw std::invalid_argument("prime index starts at 1");
    if (n < 6)
        return kSmall[n - 1];
    long double x = static_cast<long double>(n);
    long double bound = std::ceil(x * (std::log(x) + std::log(std::log(x))));
    if (bound >= static_cast<long double>(kMaxModulus))
        return kMaxModulus;
    return static_cast<std::uint64_t>(bound);
}

std::uint64_t fks_prime_cap(std::size_t m, std::size_t radius) {
    unsigned __int128 k = ball_size(m, radius);
    unsigned __int128 count = static_cast<unsigned __int128>(m) * k * k + 1;
    if (k >= (std::uint64_t{1} << 40) || count >= kMaxModulus)
        return kMaxModulus;
    return nth_prime_upper_bound(static_cast<std::uint64_t>(count));
}

// ---------------------------------------------------------------------------
// Good-prime search

std::optional<Collision> find_collision(const BitString& w, std::size_t radius, std::uint64_t p,
                                        ScratchMeter* meter) {
    const std::size_t tuple_bits = radius * index_bits(w.size());
    if (meter) {
        meter->hold("tuple_a", tuple_bits);
        meter->hold("tuple_b", tuple_bits);
        meter->hold("residue_a", bitlen(p));
        meter->hold("residue_b", bitlen(p));
    }
    std::optional<Collision> found;
    for (BallCursor a(w, radius); !a.done() && !found; a.advance()) {
        const std::uint64_t ra = a.residue(p);
        BallCursor b = a;
        while (b.advance()) {
            if (b.residue(p) == ra) {
                found = Collision{a.current(), b.current(), ra};
                break;
            }
        }
    }
    if (meter) {
        meter->release("tuple_b");
        meter->release("residue_b");
    }
    return found;
}

GoodPrime find_good_prime(const BitString& w, std::size_t radius,
                          std::optional<std::uint64_t> prime_cap, ScratchMeter* meter) {
    if (radius > w.size())
        throw std::invalid_argument("ball radius " + std::to_string(radius) +
                                    " exceeds string length " + std::to_string(w.size()));
    const std::uint64_t cap = prime_cap ? *prime_cap : fks_prime_cap(w.size(), radius);

    std::optional<Collision> last;
    std::uint64_t last_prime = 0;
    std::uint64_t index = 0;
    PrimeStream primes;
    for (std::uint64_t p = primes.next(); p <= cap; p = primes.next()) {
        if (p > kMaxModulus)
            throw std::overflow_error("prime candidate exceeds 2^62");
        ++index;
        if (meter) {
            meter->hold("prime", bitlen(p));
            meter->hold("flags", 1); // bad_prime_found
        }
        auto collision = find_collision(w, radius, p, meter);
        if (!collision) {
            if (meter) {
                meter->release("tuple_a");
                meter->release("residue_a");
                meter->release("flags");
            }
            return GoodPrime{p, w, radius, true, index};
        }
        last = std::move(collision);
        last_prime = p;
    }

    std::string msg = "no prime <= " + std::to_string(cap) + " is injective on ball(" + w.str() +
                      ", " + std::to_string(radius) + ")";
    if (last)
        msg += "; under p = " + std::to_string(last_prime) + ", " + last->first.str() + " and " +
               last->second.str() + " share residue " + std::to_string(last->residue);
    throw NoGoodPrimeBelowCap(msg);
}

} // namespace catalysim
