#include <doctest.h>

#include "catalysim/errors.hpp"
#include "catalysim/properties.hpp"
#include "oracles.hpp"

using namespace catalysim;

namespace {

BitString bits(const char* s) { return BitString::parse(s); }

// Second enumeration through the reference interpreter.
std::size_t max_loss_by_reference(const MachineDesc& m, const std::vector<std::size_t>& ns) {
    std::size_t worst = 0;
    for (std::size_t n : ns) {
        const std::size_t aux = m.aux_len().at(n);
        const auto cap = config_count_bound(m, n);
        for (std::uint64_t xi = 0; xi < (1u << n); ++xi)
            for (std::uint64_t wi = 0; wi < (1u << aux); ++wi) {
                auto w = BitString::from_index(wi, aux);
                auto r = oracle::reference_run(m, BitString::from_index(xi, n), w, cap);
                if (r.halted)
                    worst = std::max(worst, static_cast<std::size_t>(
                                                oracle::popcount_distance(w, r.final_aux)));
            }
    }
    return worst;
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("FLIP_FIRST is 1-lossy, not catalytic") {
    auto m = oracle::load_fixture("flip_first.json");
    auto r = verify_machine(m, {1});
    CHECK(r.runs == 8);
    CHECK(r.status(Property::LossyCondition).holds());
    CHECK(r.status(Property::Consistency).holds());
    CHECK(r.status(Property::SpaceBound).holds());
    CHECK(r.status(Property::Halting).holds());
    CHECK(r.minimal_k() == 1);

    const auto& cat = r.status(Property::CatalyticCondition);
    REQUIRE_FALSE(cat.holds());
    CHECK(cat.counterexample->input == bits("0"));
    CHECK(cat.counterexample->aux == bits("00"));
    CHECK(*cat.counterexample->final_aux == bits("10"));
}

TEST_CASE("BAD_INCONSISTENT yields a consistency witness") {
    auto m = oracle::load_fixture("bad_inconsistent.json");
    auto r = verify_machine(m, {1});
    const auto& c = r.status(Property::Consistency);
    REQUIRE_FALSE(c.holds());
    CHECK(c.counterexample->input == bits("0"));
    CHECK(c.counterexample->aux == bits("00"));
    CHECK(*c.counterexample->other_aux == bits("10"));
    CHECK(r.status(Property::CatalyticCondition).holds());
    CHECK(r.minimal_k() == 0);
}

TEST_CASE("a machine that ignores aux satisfies everything") {
    auto m = oracle::load_fixture("reject_all.json");
    auto r = verify_machine(m, {0, 1, 2});
    CHECK(r.all_hold());
    CHECK(r.minimal_k() == 0);
}

TEST_CASE("non-halting and space-violating runs become counterexamples") {
    auto looper = verify_machine(oracle::load_fixture("looper.json"), {1});
    const auto& h = looper.status(Property::Halting);
    REQUIRE_FALSE(h.holds());
    CHECK(h.counterexample->input == bits("0"));
    CHECK(h.counterexample->aux == bits("00"));
    CHECK(looper.runs == 8);

    auto space = verify_machine(oracle::load_fixture("bad_space.json"), {1});
    const auto& s = space.status(Property::SpaceBound);
    REQUIRE_FALSE(s.holds());
    CHECK(s.counterexample->input == bits("0"));
    CHECK(space.status(Property::Halting).holds());
}

TEST_CASE("LOSE_2 loses exactly two bits") {
    auto m = oracle::load_fixture("lose_2.json");
    auto r = verify_machine(m, {1, 2});
    CHECK(r.minimal_k() == 2);
    CHECK(r.status(Property::LossyCondition).holds());
    auto tight = verify_machine(m, {1}, VerifyOptions{.declared_k = 1});
    CHECK_FALSE(tight.status(Property::LossyCondition).holds());
}

TEST_CASE("lossy condition holds iff measured loss <= declared k") {
    for (const char* f : {"flip_first.json", "lose_2.json", "xor_parity.json", "reject_all.json",
                          "bad_inconsistent.json"}) {
        CAPTURE(f);
        auto m = oracle::load_fixture(f);
        for (std::size_t k = 0; k <= 3; ++k) {
            auto r = verify_machine(m, {1, 2}, VerifyOptions{.declared_k = k});
            CHECK(r.status(Property::LossyCondition).holds() == (r.measured_max_loss <= k));
            CHECK(r.status(Property::CatalyticCondition).holds() == (r.measured_max_loss == 0));
            // Catalytic implies k-lossy for every k.
            if (r.status(Property::CatalyticCondition).holds())
                CHECK(r.status(Property::LossyCondition).holds());
        }
    }
}

TEST_CASE("minimal_k agrees with an independent enumeration") {
    for (const char* f : {"flip_first.json", "lose_2.json", "xor_parity.json", "reject_all.json",
                          "bad_inconsistent.json", "looper.json"}) {
        CAPTURE(f);
        auto m = oracle::load_fixture(f);
        std::vector<std::size_t> ns{0, 1, 2, 3};
        CHECK(verify_machine(m, ns).minimal_k() == max_loss_by_reference(m, ns));
    }
}

TEST_CASE("XOR_PARITY decides parity and is catalytic") {
    auto m = oracle::load_fixture("xor_parity.json");
    std::vector<std::size_t> ns{0, 1, 2, 3, 4, 5, 6};
    auto r = verify_machine(m, ns);
    CHECK(r.all_hold());
    CHECK(r.minimal_k() == 0);
    for (std::size_t n : ns) {
        const std::size_t aux = m.aux_len().at(n);
        for (std::uint64_t xi = 0; xi < (1u << n); ++xi) {
            const bool odd = __builtin_popcountll(xi) % 2 == 1;
            for (std::uint64_t wi = 0; wi < (1u << aux); ++wi) {
                auto out = run_machine(m, BitString::from_index(xi, n), BitString::from_index(wi, aux));
                REQUIRE((out.verdict == Verdict::Accept) == odd);
            }
        }
    }
}

TEST_CASE("budget is enforced before running") {
    auto m = oracle::load_fixture("flip_first.json");
    CHECK_THROWS_AS(verify_machine(m, {1, 2}, VerifyOptions{.budget = 20}), BudgetExceeded);
    CHECK_NOTHROW(verify_machine(m, {1, 2}, VerifyOptions{.budget = 24}));
    CHECK_THROWS_AS(verify_machine(m, {70}), BudgetExceeded);
}

}
