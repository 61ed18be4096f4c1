#include "catalysim/machine.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "catalysim/errors.hpp"

namespace catalysim {

bool LengthBound::supports(std::size_t n) const {
    if (is_constant())
        return true;
    const auto& table = std::get<std::map<std::size_t, std::size_t>>(value_);
    return table.contains(n);
}

std::size_t LengthBound::at(std::size_t n) const {
    if (is_constant())
        return std::get<std::size_t>(value_);
    const auto& table = std::get<std::map<std::size_t, std::size_t>>(value_);
    auto it = table.find(n);
    if (it == table.end())
        throw UnsupportedLength("no bound declared for input length " + std::to_string(n));
    return it->second;
}

namespace {

void check_bound(const LengthBound& bound, const char* what) {
    if (bound.is_constant()) {
        if (bound.at(0) < 1)
            throw ValidationError(std::string(what) + " must be at least 1");
        return;
    }
    const auto& table = std::get<std::map<std::size_t, std::size_t>>(bound.value());
    if (table.empty())
        throw ValidationError(std::string(what) + " table is empty");
    for (auto [n, v] : table)
        if (v < 1)
            throw ValidationError(std::string(what) + " must be at least 1 (n = " +
                                  std::to_string(n) + ")");
}

} // namespace

MachineDesc::MachineDesc(MachineParts parts) : parts_(std::move(parts)) {
    if (parts_.states.empty())
        throw ValidationError("machine declares no states");

    std::unordered_map<std::string, StateId> ids;
    for (std::size_t i = 0; i < parts_.states.size(); ++i)
        if (!ids.emplace(parts_.states[i], static_cast<StateId>(i)).second)
            throw ValidationError("state '" + parts_.states[i] + "' declared twice");

    auto id_of = [&](const std::string& s, const char* role) {
        auto it = ids.find(s);
        if (it == ids.end())
            throw ValidationError(std::string(role) + " state '" + s + "' is not declared");
        return it->second;
    };
    start_ = id_of(parts_.start, "start");
    accept_ = id_of(parts_.accept, "accept");
    reject_ = id_of(parts_.reject, "reject");
    if (accept_ == reject_)
        throw ValidationError("accept and reject must be distinct states");

    const auto& gamma = parts_.work_alphabet;
    if (gamma.size() > 255)
        throw ValidationError("work alphabet has more than 255 symbols");
    std::set<char> seen;
    for (char c : gamma)
        if (!seen.insert(c).second)
            throw ValidationError(std::string("work symbol '") + c + "' declared twice");
    auto blank_it = std::find(gamma.begin(), gamma.end(), kBlank);
    if (blank_it == gamma.end())
        throw ValidationError("work alphabet must contain the blank '_'");
    blank_ = static_cast<std::uint8_t>(blank_it - gamma.begin());
    auto symbol_of = [&](char c) {
        auto it = std::find(gamma.begin(), gamma.end(), c);
        if (it == gamma.end())
            throw ValidationError(std::string("work symbol '") + c + "' is not declared");
        return static_cast<std::uint8_t>(it - gamma.begin());
    };

    check_bound(parts_.work_bound, "work_bound");
    check_bound(parts_.aux_len, "aux_len");

    table_.assign(parts_.states.size() * 3 * gamma.size() * 2, -1);
    actions_.reserve(parts_.transitions.size());
    for (const auto& t : parts_.transitions) {
        StateId from = id_of(t.from, "transition source");
        StateId to = id_of(t.to, "transition target");
        if (from == accept_ || from == reject_)
            throw ValidationError("halting state '" + t.from + "' has an outgoing transition");
        if (t.read_aux != 0 && t.read_aux != 1)
            throw ValidationError("aux symbol read must be 0 or 1");
        if (t.write_aux != 0 && t.write_aux != 1)
            throw ValidationError("aux symbol written must be 0 or 1 (from state '" + t.from +
                                  "')");
        std::uint8_t rw = symbol_of(t.read_work);
        std::uint8_t ww = symbol_of(t.write_work);
        auto& slot = table_[index(from, t.read_in, rw, t.read_aux)];
        if (slot >= 0)
            throw ValidationError("duplicate transition from state '" + t.from + "'");
        slot = static_cast<std::int32_t>(actions_.size());
        actions_.push_back(Action{to, ww, static_cast<std::uint8_t>(t.write_aux), t.move_in,
                                  t.move_work, t.move_aux});
    }
}

MachineDesc MachineDesc::with_aux_len(LengthBound aux_len) const {
    check_bound(aux_len, "aux_len");
    MachineDesc copy = *this;
    copy.parts_.aux_len = std::move(aux_len);
    return copy;
}

MachineDesc MachineDesc::with_declared_k(std::size_t k) const {
    MachineDesc copy = *this;
    copy.parts_.declared_k = k;
    return copy;
}

// ---------------------------------------------------------------------------
// Document parsing

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_string())
        throw ParseError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t require_count(const json& v, const std::string& what) {
    if (!v.is_number_integer())
        throw ParseError(what + " must be an integer");
    auto value = v.get<std::int64_t>();
    if (value < 0)
        throw ValidationError(what + " must be non-negative");
    return static_cast<std::size_t>(value);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return it.key() == k; });
        if (!known)
            throw ParseError(std::string("unknown key '") + it.key() + "' in " + where);
    }
}

LengthBound parse_bound(const json& v, const char* key) {
    if (v.is_number_integer())
        return LengthBound::constant(require_count(v, key));
    if (!v.is_object())
        throw ParseError(std::string("'") + key + "' must be an integer or {\"per_n\": {...}}");
    reject_unknown_keys(v, {"per_n"}, key);
    const json& table = require(v, "per_n");
    if (!table.is_object())
        throw ParseError(std::string("'") + key + ".per_n' must be an object");
    std::map<std::size_t, std::size_t> out;
    for (auto it = table.begin(); it != table.end(); ++it) {
        std::size_t n = 0;
        const std::string& k = it.key();
        if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError(std::string("'") + key + ".per_n' key '" + k + "' is not a length");
        n = std::stoul(k);
        out[n] = require_count(it.value(), std::string(key) + ".per_n[" + k + "]");
    }
    return LengthBound::per_n(std::move(out));
}

char single_char(const json& rec, const char* key) {
    std::string s = require_string(rec, key);
    if (s.size() != 1)
        throw ValidationError(std::string("'") + key + "' must be a single symbol, got '" + s + "'");
    return s[0];
}

int aux_symbol(const json& rec, const char* key) {
    char c = single_char(rec, key);
    if (c != '0' && c != '1')
        throw ValidationError(std::string("'") + key + "' must be \"0\" or \"1\", got '" + c + "'");
    return c - '0';
}

InputSymbol input_symbol(const json& rec) {
    switch (single_char(rec, "read_in")) {
    case '0': return InputSymbol::Zero;
    case '1': return InputSymbol::One;
    case kEndMarker: return InputSymbol::EndMarker;
    default: throw ValidationError("'read_in' must be \"0\", \"1\" or \"$\"");
    }
}

Move move_of(const json& rec, const char* key) {
    switch (single_char(rec, key)) {
    case 'L': return Move::Left;
    case 'R': return Move::Right;
    case 'S': return Move::Stay;
    default: throw ValidationError(std::string("'") + key + "' must be \"L\", \"R\" or \"S\"");
    }
}

} // namespace

MachineDesc parse_machine(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed machine document: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("machine document must be an object");
    reject_unknown_keys(doc,
                        {"name", "states", "start", "accept", "reject", "work_alphabet",
                         "work_bound", "aux_len", "declared_k", "transitions"},
                        "machine document");

    MachineParts parts;
    parts.name = require_string(doc, "name");

    const json& states = require(doc, "states");
    if (!states.is_array())
        throw ParseError("'states' must be an array");
    for (const auto& s : states) {
        if (!s.is_string())
            throw ParseError("'states' entries must be strings");
        parts.states.push_back(s.get<std::string>());
    }
    parts.start = require_string(doc, "start");
    parts.accept = require_string(doc, "accept");
    parts.reject = require_string(doc, "reject");

    const json& gamma = require(doc, "work_alphabet");
    if (!gamma.is_array())
        throw ParseError("'work_alphabet' must be an array");
    for (const auto& g : gamma) {
        if (!g.is_string() || g.get<std::string>().size() != 1)
            throw ParseError("'work_alphabet' entries must be 1-char strings");
        parts.work_alphabet.push_back(g.get<std::string>()[0]);
    }

    parts.work_bound = parse_bound(require(doc, "work_bound"), "work_bound");
    parts.aux_len = parse_bound(require(doc, "aux_len"), "aux_len");
    parts.declared_k = require_count(require(doc, "declared_k"), "declared_k");

    const json& rows = require(doc, "transitions");
    if (!rows.is_array())
        throw ParseError("'transitions' must be an array");
    for (const auto& rec : rows) {
        if (!rec.is_object())
            throw ParseError("transition entries must be objects");
        reject_unknown_keys(rec,
                            {"from", "read_in", "read_work", "read_aux", "to", "write_work",
                             "write_aux", "move_in", "move_work", "move_aux"},
                            "transition");
        Transition t;
        t.from = require_string(rec, "from");
        t.read_in = input_symbol(rec);
        t.read_work = single_char(rec, "read_work");
        t.read_aux = aux_symbol(rec, "read_aux");
        t.to = require_string(rec, "to");
        t.write_work = single_char(rec, "write_work");
        t.write_aux = aux_symbol(rec, "write_aux");
        t.move_in = move_of(rec, "move_in");
        t.move_work = move_of(rec, "move_work");
        t.move_aux = move_of(rec, "move_aux");
        parts.transitions.push_back(std::move(t));
    }

    return MachineDesc(std::move(parts));
}

MachineDesc load_machine(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open machine file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine(buf.str());
}

} // namespace catalysim
