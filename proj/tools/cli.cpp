#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalysim/errors.hpp"
#include "catalysim/fks.hpp"
#include "catalysim/lossless.hpp"
#include "catalysim/machine.hpp"
#include "catalysim/properties.hpp"
#include "catalysim/report.hpp"
#include "catalysim/simulator.hpp"

namespace catalysim::cli {

namespace {

struct Config {
    std::string machine_path;
    std::string input;
    std::string aux;
    std::size_t radius = 0;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> step_cap;
    std::optional<std::uint64_t> prime_cap;
    std::vector<std::size_t> n_values;
    std::string format = "json";
    bool strict = false;
};

// Literal bits, or random:<m>:<seed> for reproducible random content.
BitString parse_aux(const std::string& text) {
    const std::string prefix = "random:";
    if (text.rfind(prefix, 0) != 0)
        return BitString::parse(text);
    auto rest = text.substr(prefix.size());
    auto colon = rest.find(':');
    if (colon == std::string::npos)
        throw ParseError("--aux random form is random:<m>:<seed>");
    std::size_t m = 0;
    std::uint64_t seed = 0;
    try {
        std::size_t used = 0;
        m = std::stoul(rest.substr(0, colon), &used);
        if (used != colon)
            throw std::invalid_argument("m");
        std::string seed_text = rest.substr(colon + 1);
        seed = std::stoull(seed_text, &used);
        if (used != seed_text.size())
            throw std::invalid_argument("seed");
    } catch (const std::logic_error&) {
        throw ParseError("--aux random form is random:<m>:<seed>, got '" + text + "'");
    }
    std::mt19937_64 rng(seed);
    BitString out(m);
    for (std::size_t i = 1; i <= m; ++i)
        out.set(i, static_cast<int>(rng() & 1u));
    return out;
}

std::uint64_t verify_budget() {
    const char* env = std::getenv("CATALYSIM_BUDGET");
    if (env == nullptr || *env == '\0')
        return kDefaultVerifyBudget;
    try {
        return std::stoull(env);
    } catch (const std::logic_error&) {
        throw ParseError(std::string("CATALYSIM_BUDGET is not a number: ") + env);
    }
}

void flatten(const ordered_json& j, const std::string& path, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        return;
    }
    out << path << ":";
    if (j.is_array()) {
        for (const auto& e : j)
            out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
    } else {
        out << " " << (j.is_string() ? j.get<std::string>() : j.dump());
    }
    out << "\n";
}

void emit(const ordered_json& j, const Config& cfg, std::ostream& out) {
    if (cfg.format == "human")
        flatten(j, "", out);
    else
        out << j.dump(2) << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catalytic machine simulator and lossless wrapper", "catalysim"};
    app.require_subcommand(1);
    Config cfg;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "human"}));
    };

    auto* run_cmd = app.add_subcommand("run", "Run a machine once");
    run_cmd->add_option("--machine", cfg.machine_path, "Machine file")->required();
    run_cmd->add_option("--input", cfg.input, "Input bits")->required();
    run_cmd->add_option("--aux", cfg.aux, "Aux bits or random:<m>:<seed>")->required();
    run_cmd->add_option("--step-cap", cfg.step_cap, "Step cap (default: configuration bound)");
    add_format(run_cmd);

    auto* wrap_cmd = app.add_subcommand("wrap", "Run a lossy machine inside the restoring wrapper");
    wrap_cmd->add_option("--machine", cfg.machine_path, "Machine file")->required();
    wrap_cmd->add_option("--input", cfg.input, "Input bits")->required();
    wrap_cmd->add_option("--aux", cfg.aux, "Aux bits or random:<m>:<seed>")->required();
    wrap_cmd->add_option("--k", cfg.k, "Loss bound (default: the machine's declared_k)");
    wrap_cmd->add_option("--step-cap", cfg.step_cap, "Inner step cap");
    wrap_cmd->add_option("--prime-cap", cfg.prime_cap, "Largest prime to try");
    wrap_cmd->add_flag("--strict", cfg.strict, "Check the loss directly before restoring");
    add_format(wrap_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check the catalytic properties exhaustively");
    verify_cmd->add_option("--machine", cfg.machine_path, "Machine file")->required();
    verify_cmd->add_option("--n", cfg.n_values, "Input lengths to enumerate")->required();
    verify_cmd->add_option("--k", cfg.k, "Loss bound (default: the machine's declared_k)");
    verify_cmd->add_option("--step-cap", cfg.step_cap, "Step cap per run");
    add_format(verify_cmd);

    auto* prime_cmd = app.add_subcommand("find-prime", "Smallest prime injective on a Hamming ball");
    prime_cmd->add_option("--aux", cfg.aux, "Ball center bits or random:<m>:<seed>")->required();
    prime_cmd->add_option("--radius", cfg.radius, "Ball radius")->required();
    prime_cmd->add_option("--prime-cap", cfg.prime_cap, "Largest prime to try");
    add_format(prime_cmd);

    auto* ball_cmd = app.add_subcommand("ball", "List a Hamming ball in enumeration order");
    ball_cmd->add_option("--aux", cfg.aux, "Ball center bits or random:<m>:<seed>")->required();
    ball_cmd->add_option("--radius", cfg.radius, "Ball radius")->required();
    add_format(ball_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (run_cmd->parsed()) {
            auto machine = load_machine(cfg.machine_path);
            auto x = BitString::parse(cfg.input);
            auto w = parse_aux(cfg.aux);
            auto outcome = run_machine(machine, x, w, cfg.step_cap);
            emit(run_to_json(machine, x, w, outcome), cfg, out);
            return kOk;
        }
        if (wrap_cmd->parsed()) {
            auto machine = load_machine(cfg.machine_path);
            auto x = BitString::parse(cfg.input);
            auto w = parse_aux(cfg.aux);
            WrapOptions opts;
            opts.k = cfg.k;
            opts.strict = cfg.strict;
            opts.step_cap = cfg.step_cap;
            opts.prime_cap = cfg.prime_cap;
            auto result = lossless_simulate(machine, x, w, opts);
            emit(wrapper_run_to_json(machine, x, result), cfg, out);
            return result.restored ? kOk : kPropertyFailure;
        }
        if (verify_cmd->parsed()) {
            auto machine = load_machine(cfg.machine_path);
            VerifyOptions opts;
            opts.budget = verify_budget();
            opts.declared_k = cfg.k;
            opts.step_cap = cfg.step_cap;
            auto report = verify_machine(machine, cfg.n_values, opts);
            emit(report_to_json(report), cfg, out);
            if (report.all_hold())
                return kOk;
            err << "verify: " << report.machine << " fails";
            for (const auto& s : report.properties)
                if (!s.holds())
                    err << " " << to_string(s.property);
            err << "\n";
            return kPropertyFailure;
        }
        if (prime_cmd->parsed()) {
            auto w = parse_aux(cfg.aux);
            emit(good_prime_to_json(find_good_prime(w, cfg.radius, cfg.prime_cap)), cfg, out);
            return kOk;
        }
        if (ball_cmd->parsed()) {
            auto w = parse_aux(cfg.aux);
            emit(ball_to_json(w, cfg.radius), cfg, out);
            return kOk;
        }
    } catch (const LossExceeded& e) {
        err << "error: LossExceeded: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const ResidueNotFound& e) {
        err << "error: ResidueNotFound: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const NonHalting& e) {
        err << "error: NonHalting: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const SpaceViolation& e) {
        err << "error: SpaceViolation: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const AuxOverrun& e) {
        err << "error: AuxOverrun: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const NoGoodPrimeBelowCap& e) {
        err << "error: NoGoodPrimeBelowCap: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace catalysim::cli
