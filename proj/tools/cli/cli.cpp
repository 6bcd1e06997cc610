#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cli/commands.hpp"
#include "hypercov/parallel.hpp"

namespace hypercov::cli {

namespace {

using json = nlohmann::json;

constexpr std::string_view kProvenancePrefix = "# provenance: ";

json spec_json(const SpecArgs& s) {
    json j = json::object();
    if (s.d) j["d"] = s.d;
    if (s.n) j["n"] = s.n;
    if (s.p) j["p"] = s.p;
    return j;
}

void add_spec_options(CLI::App* sub, SpecArgs& s) {
    sub->add_option("--d", s.d, "dimension");
    sub->add_option("--n", s.n, "levels per dimension");
    sub->add_option("--p", s.p, "bands per dimension (n = p^d)");
}

// Resolved, output-affecting settings of one invocation.
struct Invocation {
    std::string name;
    std::optional<std::uint64_t> seed;
    std::function<json()> config;
    std::function<CommandOutput()> execute;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) fail(ErrorKind::Io, "cannot read '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

// Accepts a plain JSON object of flag values, a provenance record (whose
// "config" member is used), or an artifact starting with a provenance line.
json load_config(const std::string& text, const std::string& subcommand) {
    std::string_view body = text;
    if (body.substr(0, kProvenancePrefix.size()) == kProvenancePrefix) {
        body.remove_prefix(kProvenancePrefix.size());
        body = body.substr(0, body.find('\n'));
    }
    json j;
    try {
        j = json::parse(body);
    } catch (const json::exception& ex) {
        fail(ErrorKind::InvalidArgument, std::string("config is not valid JSON: ") + ex.what());
    }
    if (!j.is_object()) fail(ErrorKind::InvalidArgument, "config must be a JSON object");
    if (j.contains("config")) {
        if (j.contains("subcommand") && j["subcommand"] != subcommand)
            fail(ErrorKind::InvalidArgument, "config was recorded for subcommand '" +
                                                 j["subcommand"].get<std::string>() + "', not '" + subcommand + "'");
        j = j["config"];
        if (!j.is_object()) fail(ErrorKind::InvalidArgument, "config member must be a JSON object");
    }
    return j;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number() || v.is_boolean()) return v.dump();
    fail(ErrorKind::InvalidArgument, "config values must be strings, numbers or arrays of them");
}

// Flags win: only options absent from the command line take config values.
void apply_config(CLI::App* sub, const json& cfg) {
    for (const auto& [key, value] : cfg.items()) {
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr || key == "help" || key == "out" || key == "summary-out")
            fail(ErrorKind::InvalidArgument, "unknown config key '" + key + "' for " + sub->get_name());
        if (opt->count() > 0) continue;
        if (value.is_array()) {
            for (const auto& item : value) opt->add_result(scalar_text(item));
        } else {
            opt->add_result(scalar_text(value));
        }
        opt->run_callback();
    }
}

std::uint64_t env_seed() {
    const char* text = std::getenv("HYPERCOV_SEED");
    if (text == nullptr || *text == '\0') return 0;
    std::uint64_t v = 0;
    const std::string_view s(text);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorKind::InvalidArgument, "HYPERCOV_SEED must be an unsigned integer");
    return v;
}

std::string provenance_line(const Invocation& inv, const json& config) {
    json record = {{"tool", kToolName},
                   {"version", kVersion},
                   {"subcommand", inv.name},
                   {"config", config},
                   {"config_hash", fnv1a_hex(config.dump())}};
    if (inv.seed) record["seed"] = *inv.seed;
    return std::string(kProvenancePrefix) + record.dump() + "\n";
}

std::string summary_path_for(const std::string& out) {
    constexpr std::string_view ext = ".csv";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
        return out.substr(0, out.size() - ext.size()) + "_summary.csv";
    return out + "_summary.csv";
}

void error_record(std::ostream& err, std::string_view kind, std::string_view message, int code) {
    json record = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
    err << record.dump() << '\n';
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Guard:
        case ErrorKind::CapExceeded: return kExitGuard;
        case ErrorKind::Io: return kExitIo;
        default: return kExitUsage;
    }
}

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xF];
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coverage analysis for Latin hypercube and orthogonal sampling", std::string(kToolName)};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    std::string config_path;
    unsigned threads = 0;
    std::string out_path = "-";
    std::string summary_out;
    app.add_option("--config", config_path, "JSON config or provenance record; explicit flags win");
    app.add_option("--threads", threads, "worker threads, 0 for all cores");

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "output path, - for stdout"); };

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate random trials");
    add_spec_options(gen_cmd, gen.spec);
    gen_cmd->add_option("--kind", gen.kind, "lhs or os");
    gen_cmd->add_option("--k", gen.k, "number of trials");
    gen_cmd->add_option("--seed", gen.seed, "master seed");
    gen_cmd->add_option("--format", gen.format, "csv or json");
    add_out(gen_cmd);

    ExactArgs exact;
    auto* exact_cmd = app.add_subcommand("exact", "exact multiset intersection and coverage values");
    exact_cmd->add_option("--kind", exact.kind, "lhs, os, edge or edge-subblock")->required();
    add_spec_options(exact_cmd, exact.spec);
    exact_cmd->add_option("--m", exact.m, "multiset sizes for the expected intersection")->delimiter(',');
    exact_cmd->add_option("--k", exact.k, "multiset sizes for the expected coverage")->delimiter(',');
    exact_cmd->add_option("--format", exact.format, "rational or decimal:<digits>");
    add_out(exact_cmd);

    LawArgs law;
    auto* law_cmd = app.add_subcommand("law", "closed-form coverage laws and error bounds");
    law_cmd->add_option("--kind", law.kind, "lhs, os, edge or edge-subblock");
    add_spec_options(law_cmd, law.spec);
    law_cmd->add_option("--t", law.t, "projection dimension (conjecture model)");
    law_cmd->add_option("--k", law.k, "number of trials")->delimiter(',');
    law_cmd->add_option("--model", law.model, "iid, asymptotic, conjecture or bracket");
    add_out(law_cmd);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo coverage estimates");
    sim_cmd->add_option("--kind", sim.kind, "lhs or os");
    add_spec_options(sim_cmd, sim.spec);
    sim_cmd->add_option("--k", sim.k, "trials per replicate");
    sim_cmd->add_option("--reps", sim.reps, "replicates");
    sim_cmd->add_option("--target", sim.targets, "full, proj:t[:dims] or edge:i,j,pi,pj; repeatable");
    sim_cmd->add_option("--seed", sim.seed, "master seed");
    add_out(sim_cmd);

    OracleArgs orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration against exact formulas");
    oracle_cmd->add_option("--kind", orc.kind, "lhs, os, edge or edge-subblock");
    add_spec_options(oracle_cmd, orc.spec);
    oracle_cmd->add_option("--m", orc.m, "multiset sizes (intersect)")->delimiter(',');
    oracle_cmd->add_option("--k", orc.k, "multiset sizes (cover)")->delimiter(',');
    oracle_cmd->add_option("--mode", orc.mode, "intersect, cover or occurrence");
    oracle_cmd->add_option("--edge", orc.edge, "sub-block edge i,j,pi,pj for edge-subblock");
    add_out(oracle_cmd);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "number of trials needed against n");
    sweep_cmd->add_option("--d", sweep.d, "dimension");
    sweep_cmd->add_option("--t", sweep.t, "projection dimension");
    sweep_cmd->add_option("--kind", sweep.kind, "lhs or os");
    sweep_cmd->add_option("--levels", sweep.levels, "coverage levels; 1 means full coverage")->delimiter(',');
    sweep_cmd->add_option("--n-grid", sweep.n_grid, "level counts n")->delimiter(',');
    sweep_cmd->add_option("--mode", sweep.mode, "closed_form or simulated");
    sweep_cmd->add_option("--reps", sweep.reps, "replicates per grid point (simulated)");
    sweep_cmd->add_option("--seed", sweep.seed, "master seed");
    sweep_cmd->add_option("--summary-out", summary_out, "slope summary path");
    add_out(sweep_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the oracle-versus-exact suite");
    add_out(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        error_record(err, "usage", e.what(), kExitUsage);
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    try {
        if (!config_path.empty()) {
            try {
                apply_config(sub, load_config(read_file(config_path), name));
            } catch (const CLI::ParseError& e) {
                fail(ErrorKind::InvalidArgument, std::string("config: ") + e.what());
            }
        }
        const unsigned workers = resolve_workers(threads);

        auto seeded = [&](CLI::App* cmd, std::uint64_t& seed) {
            if (cmd->get_option("--seed")->count() == 0) seed = env_seed();
            return seed;
        };

        Invocation inv{name, std::nullopt, nullptr, nullptr};
        if (sub == gen_cmd) {
            inv.seed = seeded(gen_cmd, gen.seed);
            inv.config = [&] {
                json j = spec_json(gen.spec);
                j.update({{"kind", gen.kind}, {"k", gen.k}, {"seed", gen.seed}, {"format", gen.format}});
                return j;
            };
            inv.execute = [&] { return run_gen(gen); };
        } else if (sub == exact_cmd) {
            inv.config = [&] {
                json j = spec_json(exact.spec);
                j.update({{"kind", exact.kind}, {"format", exact.format}});
                if (!exact.m.empty()) j["m"] = exact.m;
                if (!exact.k.empty()) j["k"] = exact.k;
                return j;
            };
            inv.execute = [&] { return run_exact(exact); };
        } else if (sub == law_cmd) {
            inv.config = [&] {
                json j = spec_json(law.spec);
                j.update({{"kind", law.kind}, {"k", law.k}, {"model", law.model}});
                if (law.t) j["t"] = law.t;
                return j;
            };
            inv.execute = [&] { return run_law(law); };
        } else if (sub == sim_cmd) {
            inv.seed = seeded(sim_cmd, sim.seed);
            sim.workers = workers;
            inv.config = [&] {
                json j = spec_json(sim.spec);
                j.update({{"kind", sim.kind}, {"k", sim.k}, {"reps", sim.reps}, {"target", sim.targets},
                          {"seed", sim.seed}});
                return j;
            };
            inv.execute = [&] { return run_simulate(sim); };
        } else if (sub == oracle_cmd) {
            inv.config = [&] {
                json j = spec_json(orc.spec);
                j.update({{"kind", orc.kind}, {"mode", orc.mode}, {"edge", orc.edge}});
                if (!orc.m.empty()) j["m"] = orc.m;
                if (!orc.k.empty()) j["k"] = orc.k;
                return j;
            };
            inv.execute = [&] { return run_oracle(orc); };
        } else if (sub == sweep_cmd) {
            inv.seed = seeded(sweep_cmd, sweep.seed);
            sweep.workers = workers;
            inv.config = [&] {
                return json{{"d", sweep.d},       {"t", sweep.t},         {"kind", sweep.kind},
                            {"levels", sweep.levels}, {"n-grid", sweep.n_grid}, {"mode", sweep.mode},
                            {"reps", sweep.reps}, {"seed", sweep.seed}};
            };
            inv.execute = [&] { return run_sweep_command(sweep); };
        } else {
            inv.config = [] { return json::object(); };
            inv.execute = [] { return run_verify(); };
        }

        const CommandOutput result = inv.execute();
        const std::string header = provenance_line(inv, inv.config());
        const bool to_stdout = out_path == "-";

        if (to_stdout) {
            out << header << result.primary;
            if (!result.summary.empty()) out << '\n' << header << result.summary;
            out.flush();
        } else {
            write_file(out_path, header + result.primary);
            if (!result.summary.empty())
                write_file(summary_out.empty() ? summary_path_for(out_path) : summary_out, header + result.summary);
            if (!result.status.empty()) out << result.status << '\n';
        }
        if (result.mismatch) {
            error_record(err, "mismatch", result.status, kExitMismatch);
            return kExitMismatch;
        }
        return kExitOk;
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        error_record(err, to_string(e.kind()), e.what(), code);
        return code;
    } catch (const std::bad_alloc&) {
        error_record(err, "guard", "out of memory", kExitGuard);
        return kExitGuard;
    }
}

}  // namespace hypercov::cli
