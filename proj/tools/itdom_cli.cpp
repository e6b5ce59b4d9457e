// itdom: exact Italian domination, bondage and reinforcement numbers for
// small digraphs, plus a theorem-verification harness over enumeration,
// family and random corpora.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "itdom/digraph.hpp"
#include "itdom/families.hpp"
#include "itdom/gamma.hpp"
#include "itdom/harness.hpp"
#include "itdom/io.hpp"
#include "itdom/perturbation.hpp"

namespace {

using itdom::Digraph;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_violations = 1;
constexpr int exit_parse = 2;
constexpr int exit_guard = 3;
constexpr int exit_undefined = 4;

struct InputOptions {
    std::string file;
    std::string family;
    std::optional<std::uint64_t> seed_override;

    std::string describe() const { return !file.empty() ? file : family; }

    Digraph load() const {
        if (!file.empty()) return itdom::read_digraph_file(file);
        itdom::FamilySpec spec = itdom::FamilySpec::parse(family);
        if (seed_override && spec.kind == itdom::FamilySpec::Kind::random) spec.seed = *seed_override;
        return spec.build();
    }
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    auto* file = cmd->add_option("--file", in.file, "digraph file in 'n m' edge-list format");
    auto* family = cmd->add_option("--family", in.family, "family spec, e.g. path:5, kbip:3,5, random:6,0.4,42");
    file->excludes(family);
    family->excludes(file);
}

void require_input(const InputOptions& in) {
    if (in.file.empty() == in.family.empty())
        throw itdom::parse_error("exactly one of --file or --family is required");
}

std::string join_arcs(const std::vector<itdom::Arc>& arcs, const char* sep) {
    std::string out;
    for (const itdom::Arc& a : arcs) {
        if (!out.empty()) out += sep;
        out += itdom::to_string(a);
    }
    return out;
}

std::string join_ints(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (int x : xs) {
        if (!out.empty()) out += sep;
        out += std::to_string(x);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void emit_result(const std::string& format, const std::string& verb, const std::string& input,
                 const std::string& value_name, int value, const ordered_json& witness_json,
                 const std::string& witness_plain, const ordered_json& bounds, long runtime_ms) {
    if (format == "json") {
        ordered_json j;
        j["verb"] = verb;
        j["input"] = input;
        j["value"] = value;
        j["witness"] = witness_json;
        j["bounds"] = bounds;
        j["runtime_ms"] = runtime_ms;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::string bounds_csv;
        for (const auto& [k, v] : bounds.items()) {
            if (!bounds_csv.empty()) bounds_csv += ";";
            bounds_csv += k + "=" + v.dump();
        }
        std::cout << "verb,input,value,witness,bounds,runtime_ms\n";
        std::cout << verb << "," << csv_field(input) << "," << value << "," << csv_field(witness_plain) << ","
                  << csv_field(bounds_csv) << "," << runtime_ms << "\n";
    } else {
        std::cout << value_name << " = " << value << "\n";
        if (!witness_plain.empty()) std::cout << "witness = " << witness_plain << "\n";
    }
}

void emit_arc_result(const std::string& format, const std::string& verb, const std::string& input,
                     const std::string& value_name, const itdom::PerturbationResult& r, const ordered_json& bounds,
                     long runtime_ms) {
    if (format == "plain") {
        std::cout << value_name << " = " << r.value << "\n";
        for (const itdom::Arc& a : r.witness) std::cout << itdom::to_string(a) << "\n";
        return;
    }
    auto arcs = ordered_json::array();
    for (const itdom::Arc& a : r.witness) arcs.push_back(itdom::to_string(a));
    emit_result(format, verb, input, value_name, r.value, arcs, join_arcs(r.witness, " "), bounds, runtime_ms);
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

int run_gamma(const InputOptions& in, const std::string& format) {
    require_input(in);
    Digraph d = in.load();
    auto t0 = std::chrono::steady_clock::now();
    itdom::GammaResult r = itdom::gamma_italian(d);
    ordered_json bounds;
    bounds["lower"] = r.lower_bound_used;
    bounds["upper"] = r.upper_bound_used;
    emit_result(format, "gamma", in.describe(), "gamma_I", r.value, r.witness.digits(), r.witness.digits(), bounds,
                elapsed_ms(t0));
    return exit_ok;
}

int run_gamma_classic(const InputOptions& in, const std::string& format) {
    require_input(in);
    Digraph d = in.load();
    auto t0 = std::chrono::steady_clock::now();
    itdom::DominationResult r = itdom::gamma_domination(d);
    emit_result(format, "gamma-classic", in.describe(), "gamma", r.value, r.witness, join_ints(r.witness, " "),
                ordered_json::object(), elapsed_ms(t0));
    return exit_ok;
}

int run_bondage(const InputOptions& in, const std::string& format) {
    require_input(in);
    Digraph d = in.load();
    auto t0 = std::chrono::steady_clock::now();
    itdom::PerturbationResult r = itdom::italian_bondage(d);
    ordered_json bounds;
    auto path2 = itdom::bondage_upper_bound_path2(d);
    auto gdelta = itdom::bondage_upper_bound_gamma_delta(d);
    bounds["path2"] = path2 ? ordered_json(path2->value) : ordered_json(nullptr);
    bounds["gamma_delta"] = gdelta ? ordered_json(gdelta->value) : ordered_json(nullptr);
    emit_arc_result(format, "bondage", in.describe(), "b_I", r, bounds, elapsed_ms(t0));
    return exit_ok;
}

int run_reinforce(const InputOptions& in, const std::string& format) {
    require_input(in);
    Digraph d = in.load();
    auto t0 = std::chrono::steady_clock::now();
    itdom::PerturbationResult r = itdom::italian_reinforcement(d);
    ordered_json bounds;
    auto cert = itdom::reinforcement_upper_bound(d);
    bounds["degree"] = cert ? ordered_json(cert->value) : ordered_json(nullptr);
    emit_arc_result(format, "reinforce", in.describe(), "r_I", r, bounds, elapsed_ms(t0));
    return exit_ok;
}

int run_generate(const InputOptions& in, const std::string& out_path) {
    if (in.family.empty()) throw itdom::parse_error("generate needs --family");
    Digraph d = in.load();
    if (out_path.empty()) {
        itdom::write_digraph(std::cout, d);
    } else {
        std::ofstream out(out_path);
        if (!out) throw itdom::parse_error("cannot open '" + out_path + "' for writing");
        itdom::write_digraph(out, d);
    }
    return exit_ok;
}

struct VerifyOptions {
    std::string corpus_path;
    std::vector<int> exhaustive;
    std::vector<std::string> random_specs;  // "n,p,seed,count"
    std::vector<std::string> families;
    bool default_families = false;
    std::vector<std::string> checks;
    int workers = 1;
    std::string out_path;
};

itdom::RandomBatch parse_random_batch(const std::string& text) {
    itdom::RandomBatch b;
    int seed = 0;
    if (std::sscanf(text.c_str(), "%d,%lf,%d,%d", &b.n, &b.p, &seed, &b.count) != 4)
        throw itdom::parse_error("bad --random '" + text + "', expected n,p,seed,count");
    if (seed < 0) throw itdom::parse_error("random seed must be nonnegative");
    b.seed = static_cast<std::uint64_t>(seed);
    return b;
}

int run_verify(const VerifyOptions& opt, const std::string& format) {
    itdom::CorpusConfig config;
    if (!opt.corpus_path.empty()) {
        std::ifstream in(opt.corpus_path);
        if (!in) throw itdom::parse_error("cannot open '" + opt.corpus_path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw itdom::parse_error("bad corpus config: " + std::string(e.what()));
        }
        config = itdom::CorpusConfig::from_json(j);
    } else {
        config.exhaustive_orders = opt.exhaustive;
        for (const std::string& r : opt.random_specs) config.random.push_back(parse_random_batch(r));
        config.family_catalog = opt.families;
        if (opt.default_families || (config.exhaustive_orders.empty() && config.random.empty() &&
                                     config.family_catalog.empty())) {
            auto defaults = itdom::default_family_catalog();
            config.family_catalog.insert(config.family_catalog.end(), defaults.begin(), defaults.end());
            if (config.exhaustive_orders.empty() && !opt.default_families) config.exhaustive_orders = {3};
        }
        config.checks = opt.checks;
    }
    if (opt.workers > 1) config.workers = opt.workers;
    if (config.workers < 1) config.workers = 1;

    itdom::Report report = itdom::run_corpus(config);

    std::string rendered;
    if (format == "plain") {
        rendered = report.table();
    } else if (format == "csv") {
        rendered = "check,holds,violated,not_applicable\n";
        for (const auto& s : report.stats)
            rendered += s.id + "," + std::to_string(s.holds) + "," + std::to_string(s.violated) + "," +
                        std::to_string(s.not_applicable) + "\n";
    } else {
        rendered = report.to_json().dump(2) + "\n";
    }
    if (opt.out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw itdom::parse_error("cannot open '" + opt.out_path + "' for writing");
        out << rendered;
        std::cerr << report.table();
    }
    return report.gate_passed() ? exit_ok : exit_violations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Italian domination / bondage / reinforcement solver and theorem harness"};
    app.require_subcommand(1);

    InputOptions in;
    std::string format = "plain";

    auto add_common = [&](CLI::App* cmd) {
        add_input_flags(cmd, in);
        cmd->add_option("--format", format, "output format: json, csv or plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
        cmd->add_option("--seed", in.seed_override, "override the seed of a random:* family");
    };

    auto* gamma_cmd = app.add_subcommand("gamma", "Italian domination number gamma_I with a witness labeling");
    add_common(gamma_cmd);
    auto* gamma_classic_cmd = app.add_subcommand("gamma-classic", "classical domination number gamma");
    add_common(gamma_classic_cmd);
    auto* bondage_cmd = app.add_subcommand("bondage", "Italian bondage number b_I with a witness arc set");
    add_common(bondage_cmd);
    auto* reinforce_cmd = app.add_subcommand("reinforce", "Italian reinforcement number r_I with a witness arc set");
    add_common(reinforce_cmd);

    VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify", "run the theorem-check catalog over a corpus");
    verify_cmd->add_option("--corpus", vopt.corpus_path, "JSON corpus config file");
    verify_cmd->add_option("--exhaustive", vopt.exhaustive, "orders to enumerate exhaustively (n <= 5)");
    verify_cmd->add_option("--random", vopt.random_specs, "random batch n,p,seed,count (repeatable)");
    verify_cmd->add_option("--families", vopt.families, "family specs to include (repeatable)");
    verify_cmd->add_flag("--default-families", vopt.default_families, "include the built-in family catalog");
    verify_cmd->add_option("--checks", vopt.checks, "check ids to run (default: all)");
    verify_cmd->add_option("--workers", vopt.workers, "worker threads (default 1)");
    verify_cmd->add_option("--out", vopt.out_path, "write the report here instead of stdout");
    verify_cmd->add_option("--format", format, "output format: json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    std::string generate_out;
    auto* generate_cmd = app.add_subcommand("generate", "write a family digraph in edge-list format");
    add_input_flags(generate_cmd, in);
    generate_cmd->add_option("--seed", in.seed_override, "override the seed of a random:* family");
    generate_cmd->add_option("-o,--out", generate_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (gamma_cmd->parsed()) return run_gamma(in, format);
        if (gamma_classic_cmd->parsed()) return run_gamma_classic(in, format);
        if (bondage_cmd->parsed()) return run_bondage(in, format);
        if (reinforce_cmd->parsed()) return run_reinforce(in, format);
        if (verify_cmd->parsed()) return run_verify(vopt, format);
        if (generate_cmd->parsed()) return run_generate(in, generate_out);
    } catch (const itdom::undefined_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_undefined;
    } catch (const itdom::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_guard;
    } catch (const itdom::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    return exit_ok;
}
