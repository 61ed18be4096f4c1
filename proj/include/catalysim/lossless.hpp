#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalysim/bitstring.hpp"
#include "catalysim/fks.hpp"
#include "catalysim/machine.hpp"
#include "catalysim/scratch.hpp"
#include "catalysim/simulator.hpp"

namespace catalysim {

/// Result of running a lossy machine inside the restoring wrapper.
struct WrapperRun {
    Verdict verdict = Verdict::Reject;
    GoodPrime good_prime;
    std::uint64_t init_aux_val = 0; // hash of the original aux prefix
    bool restored = false;
    RunOutcome inner_outcome;
    BitString initial_aux; // the full hosting tape as given
    BitString final_aux;   // the full hosting tape after restoration
    std::size_t k = 0;
    std::size_t m = 0; // prefix the inner machine sees
    std::size_t scratch_bits_peak = 0;
    std::vector<ScratchMeter::Item> scratch_items; // registers at the peak
};

struct WrapOptions {
    std::optional<std::size_t> k;             // overrides machine.declared_k()
    bool strict = false;                      // check hamdist(w, z) <= k before restoring
    std::optional<std::uint64_t> step_cap;    // inner run cap
    std::optional<std::uint64_t> prime_cap;   // good-prime search cap
};

/// (4k+2) * ceil(log2(m+1)) + 3 * bitlen(p) + 8.
std::size_t scratch_budget(std::size_t m, std::size_t k, std::uint64_t p);

/**
 * The unique element of ball(z, k) whose residue under good.p equals target,
 * found by scanning the ball in cursor order and stopping at the first match.
 * When good is certified on ball(w, 2k) and hamdist(w, z) <= k the match is w.
 * Throws ResidueNotFound if no element matches.
 */
BitString restore(const BitString& z, const GoodPrime& good, std::uint64_t target, std::size_t k,
                  ScratchMeter* meter = nullptr);

/**
 * Runs `machine` on (x, w) where w is the first m = aux_len(|x|) bits of
 * w_prime, then rewrites those bits from the stored hash so the tape ends
 * exactly as it started:
 *   1. find the smallest prime injective on ball(w, 2k)
 *   2. store init_aux_val = w mod p
 *   3. run the machine, keeping its verdict and the aux prefix z it leaves
 *   4. replace z by the element of ball(z, k) with residue init_aux_val
 * Bits of w_prime past position m are never touched.
 *
 * Throws LossExceeded when the machine lost more than k bits (restoration
 * finds no match, or strict mode sees the loss directly), LengthMismatch when
 * w_prime is shorter than m, and propagates inner-run errors.
 */
WrapperRun lossless_simulate(const MachineDesc& machine, const BitString& x,
                             const BitString& w_prime, const WrapOptions& options = {});

/// Wrapper-local registers at the peak, as (component, bits); sums to
/// run.scratch_bits_peak.
std::vector<std::pair<std::string, std::size_t>> scratch_accounting(const WrapperRun& run);

} // namespace catalysim
