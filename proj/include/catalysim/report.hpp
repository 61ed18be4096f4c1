#pragma once

#include <json.hpp>

#include "catalysim/fks.hpp"
#include "catalysim/lossless.hpp"
#include "catalysim/properties.hpp"
#include "catalysim/simulator.hpp"

// Structured output for the CLI. Keys appear in insertion order so the same
// record always serializes to the same bytes.

namespace catalysim {

using ordered_json = nlohmann::ordered_json;

ordered_json run_to_json(const MachineDesc& machine, const BitString& x, const BitString& w,
                         const RunOutcome& outcome);
ordered_json good_prime_to_json(const GoodPrime& good);
ordered_json ball_to_json(const BitString& center, std::size_t radius);
ordered_json wrapper_run_to_json(const MachineDesc& machine, const BitString& x,
                                 const WrapperRun& run);
ordered_json report_to_json(const PropertyReport& report);

} // namespace catalysim
