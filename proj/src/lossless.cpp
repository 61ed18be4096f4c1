#include "catalysim/lossless.hpp"

#include <algorithm>

#include "catalysim/errors.hpp"

namespace catalysim {

std::size_t scratch_budget(std::size_t m, std::size_t k, std::uint64_t p) {
    return (4 * k + 2) * index_bits(m) + 3 * bitlen(p) + 8;
}

BitString restore(const BitString& z, const GoodPrime& good, std::uint64_t target, std::size_t k,
                  ScratchMeter* meter) {
    const std::size_t radius = std::min(k, z.size());
    if (meter) {
        meter->hold("tuple_a", radius * index_bits(z.size()));
        meter->hold("residue_a", bitlen(good.p));
    }
    std::optional<BitString> match;
    for (BallCursor c(z, radius); !c.done(); c.advance()) {
        if (c.residue(good.p) == target) {
            match = c.current();
            break;
        }
    }
    if (meter) {
        meter->release("tuple_a");
        meter->release("residue_a");
    }
    if (!match)
        throw ResidueNotFound("no element of ball(" + z.str() + ", " + std::to_string(radius) +
                              ") has residue " + std::to_string(target) + " mod " +
                              std::to_string(good.p));
    return *match;
}

WrapperRun lossless_simulate(const MachineDesc& machine, const BitString& x,
                             const BitString& w_prime, const WrapOptions& options) {
    const std::size_t k = options.k.value_or(machine.declared_k());
    const std::size_t m = machine.aux_len().at(x.size());
    if (w_prime.size() < m)
        throw LengthMismatch("aux tape has " + std::to_string(w_prime.size()) +
                             " bits, machine '" + machine.name() + "' needs " + std::to_string(m));

    WrapperRun run;
    run.k = k;
    run.m = m;
    run.initial_aux = w_prime;

    ScratchMeter meter;
    const BitString w = w_prime.prefix(m);

    // Hash the aux prefix with a prime injective on every string the inner
    // machine and the restoration scan can reach.
    run.good_prime = find_good_prime(w, std::min(2 * k, m), options.prime_cap, &meter);
    const std::uint64_t p = run.good_prime.p;
    meter.hold("prime", bitlen(p));
    run.init_aux_val = mod_bits(w, p);
    meter.hold("init_aux_val", bitlen(p));

    run.inner_outcome = run_machine(machine, x, w, options.step_cap);
    meter.hold("result", 1);
    run.verdict = run.inner_outcome.verdict;

    const BitString& z = run.inner_outcome.final_aux;
    if (options.strict && hamdist(w, z) > k)
        throw LossExceeded("machine '" + machine.name() + "' lost " +
                           std::to_string(hamdist(w, z)) + " aux bits, declared k = " +
                           std::to_string(k));

    BitString restored;
    try {
        restored = restore(z, run.good_prime, run.init_aux_val, k, &meter);
    } catch (const ResidueNotFound& e) {
        throw LossExceeded(std::string("restoration failed, machine lost more than k = ") +
                           std::to_string(k) + " aux bits: " + e.what());
    }
    // A match outside ball(w, 2k) can only come from a machine that broke its
    // loss promise; the hash alone cannot tell.
    if (restored != w)
        throw LossExceeded("restoration matched " + restored.str() + " instead of the original " +
                           w.str() + "; machine lost more than k = " + std::to_string(k) +
                           " aux bits");

    run.final_aux = w_prime;
    for (std::size_t i = 1; i <= m; ++i)
        run.final_aux.set(i, restored.at(i));
    run.restored = run.final_aux == w_prime;

    run.scratch_bits_peak = meter.peak();
    run.scratch_items = meter.peak_items();
    return run;
}

std::vector<std::pair<std::string, std::size_t>> scratch_accounting(const WrapperRun& run) {
    return run.scratch_items;
}

} // namespace catalysim
