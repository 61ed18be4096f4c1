#include "catalysim/report.hpp"

namespace catalysim {

ordered_json run_to_json(const MachineDesc& machine, const BitString& x, const BitString& w,
                         const RunOutcome& outcome) {
    ordered_json j;
    j["machine"] = machine.name();
    j["input"] = x.str();
    j["initial_aux"] = w.str();
    j["verdict"] = to_string(outcome.verdict);
    j["final_aux"] = outcome.final_aux.str();
    j["steps"] = outcome.steps;
    j["peak_work_cells"] = outcome.peak_work_cells;
    j["loss"] = hamdist(w, outcome.final_aux);
    return j;
}

ordered_json good_prime_to_json(const GoodPrime& good) {
    ordered_json j;
    j["p"] = good.p;
    j["center"] = good.center.str();
    j["radius"] = good.radius;
    j["certified"] = good.certified;
    j["prime_index"] = good.prime_index;
    j["ball_size"] = ball_size(good.center.size(), good.radius);
    return j;
}

ordered_json ball_to_json(const BitString& center, std::size_t radius) {
    ordered_json j;
    j["center"] = center.str();
    j["radius"] = radius;
    ordered_json elements = ordered_json::array();
    for (const auto& s : enumerate_ball(center, radius))
        elements.push_back(s.str());
    j["count"] = elements.size();
    j["elements"] = std::move(elements);
    return j;
}

ordered_json wrapper_run_to_json(const MachineDesc& machine, const BitString& x,
                                 const WrapperRun& run) {
    ordered_json j;
    j["machine"] = machine.name();
    j["input"] = x.str();
    j["k"] = run.k;
    j["m"] = run.m;
    j["verdict"] = to_string(run.verdict);
    j["good_prime"] = good_prime_to_json(run.good_prime);
    j["init_aux_val"] = run.init_aux_val;

    ordered_json inner;
    inner["verdict"] = to_string(run.inner_outcome.verdict);
    inner["final_aux"] = run.inner_outcome.final_aux.str();
    inner["steps"] = run.inner_outcome.steps;
    inner["peak_work_cells"] = run.inner_outcome.peak_work_cells;
    inner["loss"] = hamdist(run.initial_aux.prefix(run.m), run.inner_outcome.final_aux);
    j["inner"] = std::move(inner);

    j["initial_aux"] = run.initial_aux.str();
    j["final_aux"] = run.final_aux.str();
    j["aux_diff"] = diff_positions(run.initial_aux, run.final_aux);
    j["restored"] = run.restored;

    ordered_json scratch;
    ordered_json items = ordered_json::array();
    for (const auto& [component, bits] : scratch_accounting(run)) {
        ordered_json item;
        item["component"] = component;
        item["bits"] = bits;
        items.push_back(std::move(item));
    }
    scratch["items"] = std::move(items);
    scratch["peak_bits"] = run.scratch_bits_peak;
    scratch["budget_bits"] = scratch_budget(run.m, run.k, run.good_prime.p);
    j["scratch"] = std::move(scratch);
    return j;
}

namespace {

ordered_json cex_to_json(const Counterexample& c) {
    ordered_json j;
    j["input"] = c.input.str();
    j["aux"] = c.aux.str();
    if (c.final_aux)
        j["final_aux"] = c.final_aux->str();
    if (c.other_aux)
        j["other_aux"] = c.other_aux->str();
    j["detail"] = c.detail;
    return j;
}

} // namespace

ordered_json report_to_json(const PropertyReport& report) {
    ordered_json j;
    j["machine"] = report.machine;
    j["n_values"] = report.n_values;
    j["declared_k"] = report.declared_k;
    j["runs"] = report.runs;
    ordered_json props;
    for (const auto& s : report.properties) {
        ordered_json p;
        p["status"] = s.holds() ? "Holds" : "Fails";
        if (s.counterexample)
            p["counterexample"] = cex_to_json(*s.counterexample);
        props[to_string(s.property)] = std::move(p);
    }
    j["properties"] = std::move(props);
    j["measured_max_loss"] = report.measured_max_loss;
    j["minimal_k"] = report.minimal_k();
    return j;
}

} // namespace catalysim
