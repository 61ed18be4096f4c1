#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "catalysim/bitstring.hpp"
#include "catalysim/machine.hpp"

namespace catalysim {

enum class Verdict : std::uint8_t { Accept, Reject };

const char* to_string(Verdict v);

/// Instantaneous description of a run. Head positions are 1-based; the input
/// head additionally ranges over the end markers at 0 and n+1.
struct Configuration {
    StateId state = 0;
    std::size_t input_head = 0;
    std::size_t work_head = 1;
    std::size_t aux_head = 1;
    std::vector<std::uint8_t> work_tape; // grows lazily up to the work bound
    BitString aux_tape;
};

struct RunOutcome {
    Verdict verdict = Verdict::Reject;
    BitString final_aux;
    std::uint64_t steps = 0;
    std::size_t peak_work_cells = 0;

    friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/// Default ceiling for config_count_bound; larger bounds need an explicit cap.
inline constexpr std::uint64_t kDefaultBoundCeiling = std::uint64_t{1} << 40;

/**
 * Number of distinct configurations of `machine` on inputs of length n:
 *   |Q| * (n+2) * s * |Gamma|^s * m * 2^m
 * with s = work_bound(n) and m = aux_len(n). A deterministic run that takes
 * this many steps has repeated a configuration and never halts.
 *
 * Throws OverflowGuard when the product exceeds `ceiling`.
 */
std::uint64_t config_count_bound(const MachineDesc& machine, std::size_t n,
                                 std::uint64_t ceiling = kDefaultBoundCeiling);

/**
 * Runs the machine on input x with auxiliary content w.
 *
 * Missing transitions move to reject without writing. The input head stays
 * put when asked to move past an end marker, and the work head stays put when
 * asked to move left of cell 1.
 *
 * Throws LengthMismatch if |w| != aux_len(|x|), SpaceViolation when the work
 * head reaches cell work_bound(n)+1, AuxOverrun when the aux head leaves
 * [1, m], and NonHalting once `step_cap` steps pass without halting. When
 * step_cap is empty, config_count_bound is used.
 */
RunOutcome run_machine(const MachineDesc& machine, const BitString& x, const BitString& w,
                       std::optional<std::uint64_t> step_cap = std::nullopt);

} // namespace catalysim
