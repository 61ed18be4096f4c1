#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "catalysim/errors.hpp"
#include "catalysim/fks.hpp"
#include "oracles.hpp"

using namespace catalysim;

namespace {

BitString bits(const char* s) { return BitString::parse(s); }

std::uint64_t random_prime_below(std::mt19937_64& rng, std::uint64_t limit) {
    std::uniform_int_distribution<std::uint64_t> dist(2, limit - 1);
    while (true) {
        auto c = dist(rng);
        if (oracle::is_prime_trial(c))
            return c;
    }
}

std::uint64_t prime_index_of(std::uint64_t p) {
    std::uint64_t idx = 0;
    for (std::uint64_t q = 2; q <= p; ++q)
        idx += oracle::is_prime_trial(q);
    return idx;
}

} // namespace

TEST_SUITE("fks") {

TEST_CASE("mod_bits examples") {
    CHECK(mod_bits(bits("0000"), 7) == 0);
    CHECK(mod_bits(bits("1011"), 7) == 4);
    CHECK(mod_bits(bits(""), 7) == 0);
    CHECK_THROWS_AS(mod_bits(bits("1"), 1), std::invalid_argument);
}

TEST_CASE("mod_bits matches direct arithmetic up to 64 bits") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t m = 1 + rng() % 64;
        std::uint64_t v = rng();
        if (m < 64)
            v &= (std::uint64_t{1} << m) - 1;
        const std::uint64_t p = random_prime_below(rng, 1u << 20);
        REQUIRE(mod_bits(BitString::from_index(v, m), p) == v % p);
    }
}

TEST_CASE("mod_bits matches the arbitrary-precision oracle on long strings") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        auto w = oracle::random_bits(rng, 64 + rng() % 449);
        const std::uint64_t p = random_prime_below(rng, 1u << 20);
        REQUIRE(mod_bits(w, p) == oracle::big_mod(w, p));
    }
}

TEST_CASE("flip examples") {
    CHECK(flip(bits("0000"), IndexTuple({0, 0})) == bits("0000"));
    CHECK(flip(bits("0000"), IndexTuple({1, 3})) == bits("1010"));
    CHECK(flip(bits("0000"), IndexTuple({2, 2})) == bits("0100"));
    CHECK(IndexTuple({3, 0, 1, 3}).flip_set() == std::vector<std::size_t>{1, 3});
    CHECK_THROWS_AS(flip(bits("0000"), IndexTuple({5})), IndexOutOfRange);
}

TEST_CASE("flip is an involution and moves exactly |flip_set| bits") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const std::size_t m = 1 + rng() % 12;
        auto w = oracle::random_bits(rng, m);
        std::vector<std::size_t> entries(rng() % 5);
        for (auto& e : entries)
            e = rng() % (m + 1);
        IndexTuple t(entries);
        auto f = flip(w, t);
        CHECK(flip(f, t) == w);
        CHECK(hamdist(w, f) == t.flip_set().size());
        CHECK(mod_bits_flipped(w, t.flip_set(), 97) == mod_bits(f, 97));
    }
}

TEST_CASE("ball sizes") {
    CHECK(enumerate_ball(bits("0000"), 1).size() == 5);
    CHECK(enumerate_ball(bits("0000"), 2).size() == 11);
    CHECK(enumerate_ball(bits("0110"), 0) == std::vector<BitString>{bits("0110")});
    CHECK(ball_size(4, 2) == 11);
    CHECK(ball_size(8, 4) == 163);
    CHECK(ball_size(3, 9) == 8);
    CHECK_THROWS_AS(BallCursor(bits("01"), 3), std::invalid_argument);
}

TEST_CASE("ball order is center, then flip sets by size and lexicographically") {
    auto ball = enumerate_ball(bits("01"), 1);
    CHECK(ball == std::vector<BitString>{bits("01"), bits("11"), bits("00")});

    BitString center = bits("000000");
    std::vector<std::vector<std::size_t>> sets;
    for (BallCursor c(center, 3); !c.done(); c.advance()) {
        auto f = c.flips();
        sets.emplace_back(f.begin(), f.end());
        CHECK(c.tuple().arity() == 3);
        CHECK(c.tuple().flip_set() == sets.back());
    }
    for (std::size_t i = 1; i < sets.size(); ++i) {
        const auto& a = sets[i - 1];
        const auto& b = sets[i];
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
}

TEST_CASE("ball equals the brute-force filter set for m = 6, radius 3") {
    auto w = bits("101100");
    auto ball = enumerate_ball(w, 3);
    auto filtered = oracle::ball_by_filter(w, 3);
    std::set<BitString> a(ball.begin(), ball.end());
    std::set<BitString> b(filtered.begin(), filtered.end());
    CHECK(a.size() == ball.size());
    CHECK(a == b);
}

TEST_CASE("ball enumeration is complete and duplicate-free for m <= 10, radius <= 4") {
    std::mt19937_64 rng(5);
    for (std::size_t m = 0; m <= 10; ++m) {
        for (std::size_t r = 0; r <= std::min<std::size_t>(4, m); ++r) {
            for (int trial = 0; trial < 3; ++trial) {
                auto w = oracle::random_bits(rng, m);
                auto ball = enumerate_ball(w, r);
                std::set<BitString> uniq(ball.begin(), ball.end());
                auto filtered = oracle::ball_by_filter(w, r);
                REQUIRE(uniq.size() == ball.size());
                REQUIRE(ball.size() == ball_size(m, r));
                REQUIRE(uniq == std::set<BitString>(filtered.begin(), filtered.end()));
                REQUIRE(ball.front() == w);
            }
        }
    }
}

TEST_CASE("primes_ascending") {
    auto s = primes_ascending(0);
    std::vector<std::uint64_t> got;
    for (int i = 0; i < 5; ++i)
        got.push_back(s.next());
    CHECK(got == std::vector<std::uint64_t>{2, 3, 5, 7, 11});

    auto t = primes_ascending(10);
    CHECK(t.next() == 11);
    CHECK(t.next() == 13);
    CHECK(primes_ascending(2).next() == 3);
    CHECK(primes_ascending(13).next() == 17);
}

TEST_CASE("the millionth prime matches a sieve") {
    auto sieved = oracle::sieve(15'500'000);
    REQUIRE(sieved.size() >= 1'000'000);
    auto s = primes_ascending();
    std::uint64_t p = 0;
    for (int i = 0; i < 1'000'000; ++i) {
        p = s.next();
        if (i % 9973 == 0)
            REQUIRE(p == sieved[static_cast<std::size_t>(i)]);
    }
    CHECK(p == sieved[999'999]);
    CHECK(p == 15'485'863);
}

TEST_CASE("is_prime agrees with trial division and handles 64-bit values") {
    for (std::uint64_t n = 0; n < 20000; ++n)
        REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ull));
    CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(4611686018427387847ull));
}

TEST_CASE("nth prime upper bound holds") {
    auto sieved = oracle::sieve(200'000);
    for (std::uint64_t n = 1; n <= sieved.size(); n += (n < 100 ? 1 : 97))
        REQUIRE(nth_prime_upper_bound(n) >= sieved[n - 1]);
}

TEST_CASE("find_good_prime examples") {
    auto singleton = find_good_prime(bits("00000"), 0);
    CHECK(singleton.p == 2);
    CHECK(singleton.certified);
    CHECK(singleton.prime_index == 1);

    auto g = find_good_prime(bits("00"), 2);
    CHECK(g.p == 5);
    CHECK(g.prime_index == 3);
    CHECK(g.center == bits("00"));
    CHECK(g.radius == 2);

    // ball(1010, 4) is all of {0,1}^4.
    CHECK(find_good_prime(bits("1010"), 4).p == 17);
}

TEST_CASE("find_good_prime matches the naive oracle on every 8-bit center, radius 2") {
    for (std::uint64_t v = 0; v < 256; ++v) {
        auto w = BitString::from_index(v, 8);
        auto g = find_good_prime(w, 2);
        REQUIRE(g.p == oracle::oracle_good_prime(w, 2));
        REQUIRE(g.prime_index == prime_index_of(g.p));
    }
}

TEST_CASE("certificates re-verify and the FKS index bound holds") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        const std::size_t m = 1 + rng() % 10;
        const std::size_t r = rng() % (std::min<std::size_t>(4, m) + 1);
        auto w = oracle::random_bits(rng, m);
        auto g = find_good_prime(w, r);
        CHECK(g == find_good_prime(w, r)) ;

        std::vector<std::uint64_t> residues;
        for (const auto& u : oracle::ball_by_filter(w, r))
            residues.push_back(oracle::big_mod(u, g.p));
        std::sort(residues.begin(), residues.end());
        CHECK(std::adjacent_find(residues.begin(), residues.end()) == residues.end());

        const std::uint64_t k = ball_size(m, r);
        CHECK(g.prime_index <= m * k * k + 1);
        CHECK(g.p <= fks_prime_cap(m, r));
    }
}

TEST_CASE("pair deduplication agrees with the full tuple-pair loop") {
    for (const char* w : {"00", "101", "0110", "1111"}) {
        auto center = bits(w);
        for (std::size_t r = 0; r <= std::min<std::size_t>(2, center.size()); ++r) {
            for (std::uint64_t p = 2; p < 40; ++p) {
                if (!is_prime(p))
                    continue;
                CAPTURE(w);
                CAPTURE(r);
                CAPTURE(p);
                CHECK(!find_collision(center, r, p).has_value() ==
                      oracle::injective_by_tuple_pairs(center, r, p));
            }
        }
    }
}

TEST_CASE("cap below the good prime reports the last collision") {
    try {
        find_good_prime(bits("00"), 2, 4);
        FAIL("expected NoGoodPrimeBelowCap");
    } catch (const NoGoodPrimeBelowCap& e) {
        std::string msg = e.what();
        CHECK(msg.find("p = 3") != std::string::npos);
        CHECK(msg.find("00 and 11") != std::string::npos);
    }
}

TEST_CASE("search meter sees the registers of the pair loop") {
    ScratchMeter meter;
    auto g = find_good_prime(bits("00000000"), 2, std::nullopt, &meter);
    // prime + flag + two tuples of 2 indices in [0, 8] + two residues
    CHECK(meter.peak() == bitlen(g.p) + 1 + 2 * 2 * 4 + 2 * bitlen(g.p));
}

}
