#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "krstab/invariants.hpp"
#include "krstab/json_io.hpp"
#include "krstab/suites.hpp"

namespace {

using krstab::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw krstab::invalid_input("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw krstab::invalid_input("cannot open output file: " + path);
    out << payload;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw krstab::invalid_input(what + ": " + e.what());
    }
}

krstab::GridSize parse_grid_spec(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= s.size())
        throw krstab::invalid_input("grid must have the form MxN: " + s);
    try {
        size_t used = 0;
        int m = std::stoi(s.substr(0, x), &used);
        if (used != x) throw krstab::invalid_input("grid must have the form MxN: " + s);
        std::string rest = s.substr(x + 1);
        int n = std::stoi(rest, &used);
        if (used != rest.size()) throw krstab::invalid_input("grid must have the form MxN: " + s);
        if (m < 1 || n < 1) throw krstab::invalid_input("grid dimensions must be positive: " + s);
        return {m, n};
    } catch (const std::logic_error&) {
        throw krstab::invalid_input("grid must have the form MxN: " + s);
    }
}

krstab::GridSize grid_from_config(const Json& j) {
    if (j.is_string()) return parse_grid_spec(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        krstab::GridSize g{j[0].get<int>(), j[1].get<int>()};
        if (g.rows < 1 || g.cols < 1)
            throw krstab::invalid_input("config: grid dimensions must be positive");
        return g;
    }
    throw krstab::invalid_input("config: grid must be \"MxN\" or [m,n]");
}

Json evaluate_invariant(const std::string& name, std::optional<int> t, std::optional<int> k,
                        const std::vector<int>& drows, const std::vector<int>& dcols,
                        const Json& doc) {
    using namespace krstab;
    std::optional<Bitableau> b;
    std::optional<Monomial> m;
    std::optional<TwoRowArray> a;
    if (doc.is_object() && doc.contains("factors")) {
        b = bitableau_from_json(doc);
    } else if (doc.is_object() && doc.contains("cells")) {
        m = monomial_from_json(doc);
    } else if (doc.is_object() && doc.contains("u") && doc.contains("v")) {
        a = array_from_json(doc);
    } else {
        throw invalid_input("invariant input must be a bitableau, monomial, or two-row array");
    }
    IntSequence seq;
    if (a)
        seq = a->v();
    else if (m)
        seq = monomial_to_array(*m).v();

    auto need_t = [&] {
        if (!t) throw invalid_input("invariant '" + name + "' requires --t");
        if (*t < 1) throw invalid_input("--t must be >= 1");
        return *t;
    };
    auto need_k = [&] {
        if (!k) throw invalid_input("invariant '" + name + "' requires --k");
        if (*k < 1) throw invalid_input("--k must be >= 1");
        return *k;
    };

    Json out;
    out["invariant"] = name;
    if (name == "gamma") {
        out["t"] = need_t();
        out["value"] = b ? gamma_t(*t, *b) : m ? gamma_t(*t, *m) : gamma_t(*t, seq);
    } else if (name == "alpha") {
        out["k"] = need_k();
        out["value"] =
            b ? shape_alpha(b->shape(), *k) : greene_alpha(*k, seq, GreeneMode::ViaRSK);
    } else if (name == "w") {
        if (b) throw invalid_input("w is defined on monomials and two-row arrays");
        out["t"] = need_t();
        out["value"] = m ? w_t(*t, *m) : w_t(*t, seq);
    } else if (name == "lis") {
        if (b) throw invalid_input("lis is defined on monomials and two-row arrays");
        out["value"] = lis(seq);
    } else if (name == "gamma-delta") {
        Minor delta(drows, dcols);
        if (delta.empty()) throw invalid_input("gamma-delta requires a nonempty --delta-rows/--delta-cols");
        out["delta"] = to_json(delta);
        out["value"] = b   ? gamma_delta(delta, *b)
                       : m ? gamma_delta(delta, *m)
                           : gamma_delta(delta, monomial_of(*a));
    } else if (name == "shape") {
        Shape sh = b ? b->shape() : a ? krs_shape(*a) : krs_shape(monomial_to_array(*m));
        out["value"] = to_json(sh);
    } else {
        throw invalid_input("unknown invariant: " + name);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact correspondence between standard bitableaux and monomials, "
                 "with determinantal check suites"};
    app.require_subcommand(1);

    // krs forward / krs inverse
    auto* krs_cmd = app.add_subcommand("krs", "Apply the correspondence to a JSON file");
    krs_cmd->require_subcommand(1);
    std::string krs_in, krs_out;
    auto* fwd = krs_cmd->add_subcommand("forward", "Standard bitableau to two-row array");
    fwd->add_option("--in", krs_in, "Input JSON file")->required();
    fwd->add_option("--out", krs_out, "Output path (default stdout)");
    auto* inv = krs_cmd->add_subcommand("inverse", "Two-row array to standard bitableau");
    inv->add_option("--in", krs_in, "Input JSON file")->required();
    inv->add_option("--out", krs_out, "Output path (default stdout)");

    // invariant
    auto* inv_cmd = app.add_subcommand("invariant", "Evaluate a numeric invariant of a JSON input");
    std::string inv_name, inv_in, inv_out;
    std::optional<int> opt_t, opt_k;
    std::vector<int> delta_rows, delta_cols;
    inv_cmd->add_option("--name", inv_name, "gamma | alpha | w | lis | gamma-delta | shape")
        ->required();
    inv_cmd->add_option("--in", inv_in, "Input JSON file (bitableau, monomial, or array)")
        ->required();
    inv_cmd->add_option("--out", inv_out, "Output path (default stdout)");
    inv_cmd->add_option("--t", opt_t, "Size parameter for gamma and w");
    inv_cmd->add_option("--k", opt_k, "Row count for alpha");
    inv_cmd->add_option("--delta-rows", delta_rows, "Row indices of the cogenerating minor");
    inv_cmd->add_option("--delta-cols", delta_cols, "Column indices of the cogenerating minor");

    // run
    auto* run_cmd = app.add_subcommand("run", "Run check suites and emit a report");
    std::string grid_spec, run_out, format_spec, config_path;
    int degree_bound = 0;
    long long budget = 0;
    std::vector<std::string> suite_list;
    bool no_timestamp = false;
    auto* grid_opt = run_cmd->add_option("--grid", grid_spec, "Grid size MxN (default 3x3)");
    auto* bound_opt =
        run_cmd->add_option("--degree-bound", degree_bound, "Total degree bound (default 5)");
    std::string suite_help = "Suite name (repeatable); default all of:";
    for (const std::string& n : krstab::suite_names()) suite_help += " " + n;
    auto* suite_opt = run_cmd->add_option("--suite", suite_list, suite_help);
    auto* budget_opt =
        run_cmd->add_option("--budget", budget, "Search node budget (default 4000000)");
    auto* out_opt = run_cmd->add_option("--out", run_out, "Report path (default stdout)");
    auto* format_opt = run_cmd->add_option("--format", format_spec, "json | csv (default json)");
    auto* no_ts_opt = run_cmd->add_flag("--no-timestamp", no_timestamp,
                                        "Omit timing fields for reproducible output");
    auto* config_opt =
        run_cmd->add_option("--config", config_path, "JSON config file; flags take precedence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (fwd->parsed()) {
            Json doc = parse_json(read_file(krs_in), "input");
            krstab::TwoRowArray a = krstab::krs_forward(krstab::bitableau_from_json(doc));
            write_output(krs_out, krstab::to_json(a).dump(2) + "\n");
            return 0;
        }
        if (inv->parsed()) {
            Json doc = parse_json(read_file(krs_in), "input");
            krstab::Bitableau b = krstab::krs_inverse(krstab::array_from_json(doc));
            write_output(krs_out, krstab::to_json(b).dump(2) + "\n");
            return 0;
        }
        if (inv_cmd->parsed()) {
            Json doc = parse_json(read_file(inv_in), "input");
            Json out = evaluate_invariant(inv_name, opt_t, opt_k, delta_rows, delta_cols, doc);
            write_output(inv_out, out.dump(2) + "\n");
            return 0;
        }
        if (run_cmd->parsed()) {
            krstab::RunConfig cfg;
            cfg.suites = krstab::suite_names();
            if (config_opt->count()) {
                Json c = parse_json(read_file(config_path), "config");
                if (!c.is_object()) throw krstab::invalid_input("config: expected an object");
                if (c.contains("grid") && !grid_opt->count()) cfg.grid = grid_from_config(c["grid"]);
                if (c.contains("degreeBound") && !bound_opt->count())
                    cfg.degree_bound = c["degreeBound"].get<int>();
                if (c.contains("suites") && !suite_opt->count())
                    cfg.suites = c["suites"].get<std::vector<std::string>>();
                if (c.contains("budget") && !budget_opt->count())
                    cfg.budget = c["budget"].get<long long>();
                if (c.contains("out") && !out_opt->count())
                    cfg.output_path = c["out"].get<std::string>();
                if (c.contains("format") && !format_opt->count())
                    format_spec = c["format"].get<std::string>();
                if (c.contains("timestamp") && !no_ts_opt->count())
                    cfg.with_timestamp = c["timestamp"].get<bool>();
            }
            if (grid_opt->count()) cfg.grid = parse_grid_spec(grid_spec);
            if (bound_opt->count()) cfg.degree_bound = degree_bound;
            if (suite_opt->count()) cfg.suites = suite_list;
            if (budget_opt->count()) cfg.budget = budget;
            if (out_opt->count()) cfg.output_path = run_out;
            if (no_ts_opt->count()) cfg.with_timestamp = false;
            if (!format_spec.empty()) {
                if (format_spec == "json")
                    cfg.format = krstab::RunConfig::Format::Json;
                else if (format_spec == "csv")
                    cfg.format = krstab::RunConfig::Format::Csv;
                else
                    throw krstab::invalid_input("unknown format: " + format_spec);
            }

            std::vector<krstab::Report> reports = krstab::run_all(cfg);
            std::string payload;
            if (cfg.format == krstab::RunConfig::Format::Csv)
                payload = krstab::reports_to_csv(reports);
            else
                payload = krstab::reports_to_json(reports, cfg.with_timestamp).dump(2) + "\n";
            write_output(cfg.output_path, payload);
            return krstab::exit_code_for(reports);
        }
        return 2;
    } catch (const krstab::budget_exceeded_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const krstab::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    }
}
