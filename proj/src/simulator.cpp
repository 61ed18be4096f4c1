#include "catalysim/simulator.hpp"

#include <algorithm>
#include <string>

#include "catalysim/errors.hpp"

namespace catalysim {

const char* to_string(Verdict v) {
    return v == Verdict::Accept ? "Accept" : "Reject";
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t ceiling) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > ceiling)
        throw OverflowGuard("configuration bound exceeds ceiling " + std::to_string(ceiling) +
                            "; supply an explicit step cap");
    return static_cast<std::uint64_t>(p);
}

InputSymbol input_at(const BitString& x, std::size_t head) {
    if (head == 0 || head == x.size() + 1)
        return InputSymbol::EndMarker;
    return x[head - 1] ? InputSymbol::One : InputSymbol::Zero;
}

} // namespace

std::uint64_t config_count_bound(const MachineDesc& machine, std::size_t n,
                                 std::uint64_t ceiling) {
    const std::size_t s = machine.work_bound().at(n);
    const std::size_t m = machine.aux_len().at(n);
    if (s < 1 || m < 1)
        throw std::invalid_argument("work_bound and aux_len must be at least 1");

    std::uint64_t bound = machine.state_count();
    bound = checked_mul(bound, n + 2, ceiling);
    bound = checked_mul(bound, s, ceiling);
    for (std::size_t i = 0; i < s; ++i)
        bound = checked_mul(bound, machine.work_alphabet().size(), ceiling);
    bound = checked_mul(bound, m, ceiling);
    for (std::size_t i = 0; i < m; ++i)
        bound = checked_mul(bound, 2, ceiling);
    return bound;
}

RunOutcome run_machine(const MachineDesc& machine, const BitString& x, const BitString& w,
                       std::optional<std::uint64_t> step_cap) {
    const std::size_t n = x.size();
    const std::size_t m = machine.aux_len().at(n);
    const std::size_t work_bound = machine.work_bound().at(n);
    if (w.size() != m)
        throw LengthMismatch("aux content has length " + std::to_string(w.size()) +
                             ", machine '" + machine.name() + "' expects " + std::to_string(m) +
                             " for n = " + std::to_string(n));
    const std::uint64_t cap = step_cap ? *step_cap : config_count_bound(machine, n);
    if (cap < 1)
        throw std::invalid_argument("step cap must be at least 1");

    Configuration c;
    c.state = machine.start();
    c.work_tape.assign(1, machine.blank_index());
    c.aux_tape = w;

    RunOutcome out;
    out.peak_work_cells = 1;

    while (!machine.is_halting(c.state)) {
        if (out.steps == cap)
            throw NonHalting("machine '" + machine.name() + "' did not halt within " +
                             std::to_string(cap) + " steps");
        ++out.steps;

        const int aux_bit = c.aux_tape[c.aux_head - 1];
        const std::uint8_t work_sym = c.work_tape[c.work_head - 1];
        const Action* act = machine.lookup(c.state, input_at(x, c.input_head), work_sym, aux_bit);
        if (act == nullptr) {
            c.state = machine.reject();
            break;
        }

        c.work_tape[c.work_head - 1] = act->work_write;
        c.aux_tape.set(c.aux_head, act->aux_write);
        c.state = act->next;

        if (act->move_in == Move::Left && c.input_head > 0)
            --c.input_head;
        else if (act->move_in == Move::Right && c.input_head < n + 1)
            ++c.input_head;

        if (act->move_work == Move::Left && c.work_head > 1) {
            --c.work_head;
        } else if (act->move_work == Move::Right) {
            if (c.work_head + 1 > work_bound)
                throw SpaceViolation("machine '" + machine.name() + "' moved its work head to cell " +
                                     std::to_string(c.work_head + 1) + " past bound " +
                                     std::to_string(work_bound));
            ++c.work_head;
            if (c.work_tape.size() < c.work_head)
                c.work_tape.push_back(machine.blank_index());
            out.peak_work_cells = std::max(out.peak_work_cells, c.work_head);
        }

        if (act->move_aux == Move::Left) {
            if (c.aux_head == 1)
                throw AuxOverrun("machine '" + machine.name() + "' moved its aux head left of cell 1");
            --c.aux_head;
        } else if (act->move_aux == Move::Right) {
            if (c.aux_head == m)
                throw AuxOverrun("machine '" + machine.name() + "' moved its aux head past cell " +
                                 std::to_string(m));
            ++c.aux_head;
        }
    }

    out.verdict = c.state == machine.accept() ? Verdict::Accept : Verdict::Reject;
    out.final_aux = std::move(c.aux_tape);
    return out;
}

} // namespace catalysim
