#include "catalysim/properties.hpp"

#include <algorithm>

#include "catalysim/errors.hpp"

namespace catalysim {

const char* to_string(Property p) {
    switch (p) {
    case Property::SpaceBound: return "SpaceBound";
    case Property::CatalyticCondition: return "CatalyticCondition";
    case Property::LossyCondition: return "LossyCondition";
    case Property::Consistency: return "Consistency";
    case Property::Halting: return "Halting";
    }
    return "?";
}

const PropertyStatus& PropertyReport::status(Property p) const {
    for (const auto& s : properties)
        if (s.property == p)
            return s;
    throw std::out_of_range(std::string("report has no entry for ") + to_string(p));
}

bool PropertyReport::all_hold() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyStatus& s) { return s.holds(); });
}

namespace {

class Recorder {
public:
    Recorder() {
        for (Property p : kAllProperties)
            statuses_.push_back(PropertyStatus{p, std::nullopt});
    }

    // Keeps only the first counterexample per property.
    void fail(Property p, Counterexample cex) {
        auto& s = statuses_[static_cast<std::size_t>(p)];
        if (!s.counterexample)
            s.counterexample = std::move(cex);
    }

    std::vector<PropertyStatus> take() { return std::move(statuses_); }

private:
    std::vector<PropertyStatus> statuses_;
};

} // namespace

PropertyReport verify_machine(const MachineDesc& machine, const std::vector<std::size_t>& n_values,
                              const VerifyOptions& options) {
    const std::size_t k = options.declared_k.value_or(machine.declared_k());

    std::uint64_t total = 0;
    for (std::size_t n : n_values) {
        const std::size_t m = machine.aux_len().at(n);
        machine.work_bound().at(n);
        if (n + m >= 63 || total + (std::uint64_t{1} << (n + m)) > options.budget)
            throw BudgetExceeded("enumerating n = " + std::to_string(n) + " (m = " +
                                 std::to_string(m) + ") exceeds the budget of " +
                                 std::to_string(options.budget) + " runs");
        total += std::uint64_t{1} << (n + m);
    }

    PropertyReport report;
    report.machine = machine.name();
    report.n_values = n_values;
    report.declared_k = k;
    Recorder rec;

    for (std::size_t n : n_values) {
        const std::size_t m = machine.aux_len().at(n);
        const std::uint64_t cap = options.step_cap ? *options.step_cap : config_count_bound(machine, n);
        for (std::uint64_t xi = 0; xi < (std::uint64_t{1} << n); ++xi) {
            const BitString x = BitString::from_index(xi, n);
            std::optional<std::pair<BitString, Verdict>> first_verdict;
            for (std::uint64_t wi = 0; wi < (std::uint64_t{1} << m); ++wi) {
                const BitString w = BitString::from_index(wi, m);
                ++report.runs;
                RunOutcome out;
                try {
                    out = run_machine(machine, x, w, cap);
                } catch (const NonHalting& e) {
                    rec.fail(Property::Halting, {x, w, std::nullopt, std::nullopt, e.what()});
                    continue;
                } catch (const SpaceViolation& e) {
                    rec.fail(Property::SpaceBound, {x, w, std::nullopt, std::nullopt, e.what()});
                    continue;
                } catch (const AuxOverrun& e) {
                    rec.fail(Property::SpaceBound, {x, w, std::nullopt, std::nullopt, e.what()});
                    continue;
                }

                const std::size_t loss = hamdist(w, out.final_aux);
                report.measured_max_loss = std::max(report.measured_max_loss, loss);
                if (loss > 0)
                    rec.fail(Property::CatalyticCondition,
                             {x, w, out.final_aux, std::nullopt,
                              "aux changed in " + std::to_string(loss) + " position(s)"});
                if (loss > k)
                    rec.fail(Property::LossyCondition,
                             {x, w, out.final_aux, std::nullopt,
                              "loss " + std::to_string(loss) + " exceeds k = " + std::to_string(k)});

                if (!first_verdict) {
                    first_verdict.emplace(w, out.verdict);
                } else if (first_verdict->second != out.verdict) {
                    rec.fail(Property::Consistency,
                             {x, first_verdict->first, std::nullopt, w,
                              std::string(to_string(first_verdict->second)) + " with first aux, " +
                                  to_string(out.verdict) + " with second"});
                }
            }
        }
    }

    report.properties = rec.take();
    return report;
}

} // namespace catalysim
