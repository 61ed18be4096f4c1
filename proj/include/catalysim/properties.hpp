#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalysim/bitstring.hpp"
#include "catalysim/machine.hpp"
#include "catalysim/simulator.hpp"

namespace catalysim {

enum class Property : std::uint8_t { SpaceBound, CatalyticCondition, LossyCondition, Consistency, Halting };

inline constexpr Property kAllProperties[] = {Property::SpaceBound, Property::CatalyticCondition,
                                              Property::LossyCondition, Property::Consistency,
                                              Property::Halting};

const char* to_string(Property p);

/// The first run (in lexicographic (x, w) order) that breaks a property.
struct Counterexample {
    BitString input;
    BitString aux;
    std::optional<BitString> final_aux;
    std::optional<BitString> other_aux; // second aux content for consistency witnesses
    std::string detail;
};

struct PropertyStatus {
    Property property = Property::SpaceBound;
    std::optional<Counterexample> counterexample; // empty means Holds

    bool holds() const { return !counterexample.has_value(); }
};

struct PropertyReport {
    std::string machine;
    std::vector<std::size_t> n_values;
    std::size_t declared_k = 0;
    std::vector<PropertyStatus> properties; // in kAllProperties order
    std::size_t measured_max_loss = 0;
    std::size_t runs = 0;

    std::size_t minimal_k() const { return measured_max_loss; }
    const PropertyStatus& status(Property p) const;
    bool all_hold() const;
};

/// Largest grid verify_machine enumerates unless told otherwise.
inline constexpr std::uint64_t kDefaultVerifyBudget = std::uint64_t{1} << 24;

struct VerifyOptions {
    std::uint64_t budget = kDefaultVerifyBudget;  // max total (x, w) pairs
    std::optional<std::size_t> declared_k;        // overrides the machine's claim
    std::optional<std::uint64_t> step_cap;        // overrides config_count_bound
};

/**
 * Runs the machine on every x in {0,1}^n and every w in {0,1}^m for each n,
 * in lexicographic order, and checks halting, the work-space bound, the
 * catalytic and k-lossy conditions, and consistency of the verdict across w.
 *
 * A run that fails to halt or breaks its space bound counts against the
 * matching property and the enumeration carries on. Throws BudgetExceeded
 * before running anything if the grid is larger than options.budget.
 */
PropertyReport verify_machine(const MachineDesc& machine, const std::vector<std::size_t>& n_values,
                              const VerifyOptions& options = {});

} // namespace catalysim
