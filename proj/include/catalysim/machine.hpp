#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace catalysim {

enum class Move : std::uint8_t { Left, Right, Stay };

/// Symbols visible on the read-only input tape. Both ends carry the same marker.
enum class InputSymbol : std::uint8_t { Zero = 0, One = 1, EndMarker = 2 };

inline constexpr char kBlank = '_';
inline constexpr char kEndMarker = '$';

/**
 * A resource bound as a function of input length n: either one constant for
 * every n, or an explicit table for the lengths a machine supports.
 */
class LengthBound {
public:
    LengthBound() = default;
    static LengthBound constant(std::size_t value) { return LengthBound(value); }
    static LengthBound per_n(std::map<std::size_t, std::size_t> table) {
        return LengthBound(std::move(table));
    }

    bool supports(std::size_t n) const;
    /// Throws UnsupportedLength when n is outside the table.
    std::size_t at(std::size_t n) const;

    bool is_constant() const { return std::holds_alternative<std::size_t>(value_); }
    const std::variant<std::size_t, std::map<std::size_t, std::size_t>>& value() const {
        return value_;
    }

private:
    explicit LengthBound(std::size_t v) : value_(v) {}
    explicit LengthBound(std::map<std::size_t, std::size_t> t) : value_(std::move(t)) {}

    std::variant<std::size_t, std::map<std::size_t, std::size_t>> value_ = std::size_t{1};
};

/// One row of the transition table, by name, as written in a machine file.
struct Transition {
    std::string from;
    InputSymbol read_in = InputSymbol::EndMarker;
    char read_work = kBlank;
    int read_aux = 0;
    std::string to;
    char write_work = kBlank;
    int write_aux = 0;
    Move move_in = Move::Stay;
    Move move_work = Move::Stay;
    Move move_aux = Move::Stay;
};

/// Uncompiled machine fields. MachineDesc validates these on construction.
struct MachineParts {
    std::string name;
    std::vector<std::string> states;
    std::string start;
    std::string accept;
    std::string reject;
    std::vector<char> work_alphabet;
    LengthBound work_bound;
    LengthBound aux_len;
    std::size_t declared_k = 0;
    std::vector<Transition> transitions;
};

using StateId = std::uint32_t;

/// Compiled transition target.
struct Action {
    StateId next = 0;
    std::uint8_t work_write = 0; // index into the work alphabet
    std::uint8_t aux_write = 0;
    Move move_in = Move::Stay;
    Move move_work = Move::Stay;
    Move move_aux = Move::Stay;
};

/**
 * A deterministic machine with a read-only input tape, a bounded work tape and
 * a binary auxiliary tape. Immutable once built apart from the two resource
 * declarations that tests vary (aux length and the claimed loss bound).
 */
class MachineDesc {
public:
    /// Throws ValidationError on undeclared names, halting states with outgoing
    /// transitions, duplicate rows, non-binary aux symbols or zero bounds.
    explicit MachineDesc(MachineParts parts);

    const std::string& name() const { return parts_.name; }
    std::size_t state_count() const { return parts_.states.size(); }
    const std::vector<std::string>& states() const { return parts_.states; }
    const std::string& state_name(StateId id) const { return parts_.states.at(id); }
    StateId start() const { return start_; }
    StateId accept() const { return accept_; }
    StateId reject() const { return reject_; }
    bool is_halting(StateId s) const { return s == accept_ || s == reject_; }

    const std::vector<char>& work_alphabet() const { return parts_.work_alphabet; }
    std::uint8_t blank_index() const { return blank_; }

    const LengthBound& work_bound() const { return parts_.work_bound; }
    const LengthBound& aux_len() const { return parts_.aux_len; }
    std::size_t declared_k() const { return parts_.declared_k; }
    const std::vector<Transition>& transitions() const { return parts_.transitions; }

    /// nullptr when the table has no row for this combination.
    const Action* lookup(StateId state, InputSymbol in, std::uint8_t work, int aux) const {
        auto slot = table_[index(state, in, work, aux)];
        return slot < 0 ? nullptr : &actions_[static_cast<std::size_t>(slot)];
    }

    MachineDesc with_aux_len(LengthBound aux_len) const;
    MachineDesc with_declared_k(std::size_t k) const;

private:
    std::size_t index(StateId state, InputSymbol in, std::uint8_t work, int aux) const {
        std::size_t gamma = parts_.work_alphabet.size();
        return ((static_cast<std::size_t>(state) * 3 + static_cast<std::size_t>(in)) * gamma +
                work) * 2 + static_cast<std::size_t>(aux);
    }

    MachineParts parts_;
    StateId start_ = 0;
    StateId accept_ = 0;
    StateId reject_ = 0;
    std::uint8_t blank_ = 0;
    std::vector<std::int32_t> table_;
    std::vector<Action> actions_;
};

/// Parses a machine description document (JSON). Throws ParseError for
/// malformed documents and ValidationError for semantic problems.
MachineDesc parse_machine(std::string_view text);

/// Reads and parses a machine file.
MachineDesc load_machine(const std::filesystem::path& path);

} // namespace catalysim
