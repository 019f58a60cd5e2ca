#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "logcoef/extremal.hpp"
#include "logcoef/report.hpp"
#include "logcoef/search.hpp"
#include "logcoef/verify.hpp"

namespace {

using logcoef::ClassId;
using logcoef::ClassSpec;
using logcoef::Complex;
using nlohmann::json;

struct RunConfig {
    std::string cls;
    std::string target = "gamma3";
    int order = 16;
    int resolution = 201;
    double tol = 1e-10;
    double gap_tol = 1e-4;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    int threads = 1;
    std::string format = "json";
    std::string output;
};

json config_json(const RunConfig& cfg) {
    json j{{"order", cfg.order},     {"resolution", cfg.resolution}, {"tol", cfg.tol},
           {"trials", cfg.trials},   {"seed", cfg.seed},             {"threads", cfg.threads},
           {"format", cfg.format}};
    if (!cfg.cls.empty()) j["class"] = cfg.cls;
    if (!cfg.target.empty()) j["target"] = cfg.target;
    return j;
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json envelope(const std::string& command, const RunConfig& cfg, json results, json flags) {
    return json{{"command", command},
                {"config", config_json(cfg)},
                {"results", std::move(results)},
                {"flags", std::move(flags)},
                {"volatile", json{{"timestamp", timestamp_utc()}}}};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
    out << text;
}

/// Coefficient file: one complex per line as "re im", in index order
/// a1, a2, ...; '#' starts a comment.
logcoef::TruncatedSeries parse_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    std::vector<Complex> a{Complex{0.0, 0.0}};  // a0 = 0
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double re, im;
        if (!(ls >> re)) {
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                         ": expected 're im'");
            continue;  // blank or comment-only line
        }
        if (!(ls >> im))
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": missing imaginary part");
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": trailing tokens");
        a.emplace_back(re, im);
    }
    if (a.size() < 2)
        throw std::runtime_error("coefficient file is empty: " + path);
    return logcoef::TruncatedSeries(std::move(a));
}

/// Atom list "w@theta;w@theta;..." with unit-circle points given by angle.
logcoef::AtomicHerglotz parse_atoms(const std::string& text) {
    std::vector<logcoef::AtomicHerglotz::Atom> atoms;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto at = item.find('@');
        if (at == std::string::npos)
            throw std::runtime_error("malformed atom '" + item + "': expected weight@theta");
        const double w = std::stod(item.substr(0, at));
        const double theta = std::stod(item.substr(at + 1));
        atoms.push_back({w, std::polar(1.0, theta)});
    }
    if (atoms.empty()) throw std::runtime_error("no atoms given");
    return logcoef::AtomicHerglotz(std::move(atoms));
}

json gamma_row(int n, Complex series_value, std::optional<Complex> closed) {
    json row{{"n", n},
             {"re", series_value.real()},
             {"im", series_value.imag()},
             {"abs", std::abs(series_value)}};
    if (closed) {
        row["closed_re"] = closed->real();
        row["closed_im"] = closed->imag();
    }
    return row;
}

std::string gamma_csv(const json& rows) {
    std::string out = "n,re,im,abs,closed_re,closed_im\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g", r["n"].get<int>(),
                      r["re"].get<double>(), r["im"].get<double>(), r["abs"].get<double>());
        out += buf;
        if (r.contains("closed_re")) {
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g", r["closed_re"].get<double>(),
                          r["closed_im"].get<double>());
            out += buf;
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

std::string render_text(const json& j, int indent = 0) {
    std::string out;
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out += pad + it.key() + ":\n" + render_text(it.value(), indent + 1);
            } else {
                out += pad + it.key() + " = " + it.value().dump() + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& el : j) {
            if (el.is_object() || el.is_array())
                out += pad + "-\n" + render_text(el, indent + 1);
            else
                out += pad + "- " + el.dump() + "\n";
        }
    } else {
        out += pad + j.dump() + "\n";
    }
    return out;
}

void emit_report(const RunConfig& cfg, const json& report, const json& gamma_rows = {}) {
    if (cfg.format == "json") {
        emit(cfg, logcoef::dump_json(report));
    } else if (cfg.format == "csv") {
        if (gamma_rows.is_array())
            emit(cfg, gamma_csv(gamma_rows));
        else
            throw std::runtime_error("csv output is offered for the gamma tables only");
    } else {
        emit(cfg, render_text(report));
    }
}

int cmd_gamma(const RunConfig& cfg, const std::string& coeff_file, const std::string& atoms,
              const std::string& witness) {
    json rows = json::array();
    json flags = json::array();

    if (!coeff_file.empty()) {
        const logcoef::TruncatedSeries f = parse_coeff_file(coeff_file).resized(cfg.order);
        const logcoef::LogCoeffVector g = logcoef::log_coefficients(f);
        // closed-form route for n <= 3 from the raw Taylor coefficients
        const Complex a2 = f.order() >= 2 ? f[2] : Complex{}, a3 = f.order() >= 3 ? f[3] : Complex{},
                      a4 = f.order() >= 4 ? f[4] : Complex{};
        const Complex closed[3] = {0.5 * a2, 0.5 * (a3 - 0.5 * a2 * a2),
                                   0.5 * (a4 - a2 * a3 + a2 * a2 * a2 / 3.0)};
        for (int n = 1; n <= g.order(); ++n)
            rows.push_back(gamma_row(n, g.gamma(n),
                                     n <= 3 ? std::optional<Complex>(closed[n - 1]) : std::nullopt));
    } else {
        if (cfg.cls.empty())
            throw CLI::ValidationError("gamma", "either --coeffs or --class is required");
        const ClassSpec& cls = ClassSpec::get(logcoef::class_from_name(cfg.cls));
        logcoef::AtomicHerglotz h = [&]() {
            if (!witness.empty()) {
                if (witness == "gamma1") return logcoef::gamma1_extremal(cls, cfg.order).herglotz;
                if (witness == "gamma2") return logcoef::gamma2_extremal(cls, cfg.order).herglotz;
                if (witness == "gamma3") return logcoef::gamma3_extremal(cls, cfg.order).herglotz;
                throw CLI::ValidationError("gamma", "unknown witness: " + witness);
            }
            if (atoms.empty())
                throw CLI::ValidationError("gamma", "--atoms or --witness is required with --class");
            return parse_atoms(atoms);
        }();
        const logcoef::CtcFunction f = logcoef::build_ctc(cls, h, cfg.order);
        const logcoef::LogCoeffVector g = logcoef::log_coefficients(f.series());
        const logcoef::GammaTriple t = logcoef::gammas123(f);
        const Complex closed[3] = {t.g1, t.g2, t.g3};
        for (int n = 1; n <= g.order(); ++n)
            rows.push_back(gamma_row(n, g.gamma(n),
                                     n <= 3 ? std::optional<Complex>(closed[n - 1]) : std::nullopt));
    }

    emit_report(cfg, envelope("gamma", cfg, json{{"gammas", rows}}, flags), rows);
    return 0;
}

int cmd_search(const RunConfig& cfg) {
    if (cfg.cls.empty()) throw CLI::ValidationError("search", "--class is required");
    const ClassSpec& cls = ClassSpec::get(logcoef::class_from_name(cfg.cls));
    const logcoef::Target target = logcoef::target_from_name(cfg.target);
    const logcoef::SearchReport report =
        logcoef::verify_claimed_max(cls, target, cfg.resolution, cfg.tol, cfg.threads);
    json flags = json::array();
    for (const auto& f : report.flags) flags.push_back(f);
    emit_report(cfg, envelope("search", cfg, logcoef::to_json(report), flags));
    return report.abs_gap <= cfg.gap_tol ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.cls.empty()) throw CLI::ValidationError("verify", "--class is required");
    const ClassSpec& cls = ClassSpec::get(logcoef::class_from_name(cfg.cls));
    const logcoef::VerifyReport report = logcoef::bound_suite(cls, cfg.trials, cfg.seed, cfg.threads);
    json flags = json::array();
    for (const auto& n : report.notes) flags.push_back(n);
    emit_report(cfg, envelope("verify", cfg, logcoef::to_json(report), flags));
    return report.violations.empty() ? 0 : 1;
}

int cmd_extremal(const RunConfig& cfg) {
    std::optional<ClassId> only;
    if (!cfg.cls.empty()) only = logcoef::class_from_name(cfg.cls);
    const auto table = logcoef::witness_table(only, cfg.order);
    json rows = json::array();
    json flags = json::array();
    bool all_matched = true;
    for (const auto& w : table) {
        rows.push_back(logcoef::to_json(w));
        for (const auto& f : w.flags) flags.push_back(f);
        const double tol = w.target == 3 ? 1e-10 : 1e-12;
        if (std::abs(w.achieved_value - w.claimed_value) > tol || !(w.membership > 0.0))
            all_matched = false;
    }
    emit_report(cfg, envelope("extremal", cfg, json{{"witnesses", rows}}, flags));
    return all_matched ? 0 : 1;
}

int cmd_roots(const RunConfig& cfg, const std::string& poly_name, double lo, double hi) {
    const logcoef::RealPolynomial& poly = logcoef::named_poly(poly_name);
    const std::vector<double> roots = logcoef::real_roots_in_interval(poly, lo, hi, cfg.tol);
    json rows = json::array();
    for (double r : roots) rows.push_back(r);
    emit_report(cfg, envelope("roots", cfg,
                              json{{"polynomial", poly_name},
                                   {"interval", json::array({lo, hi})},
                                   {"roots", rows}},
                              json::array()));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for sharp logarithmic-coefficient bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string coeff_file, atoms, witness, poly_name = "zeta1";
    double root_lo = 0.0, root_hi = 2.0;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--class", cfg.cls, "function class: f1, f2 or f3");
        sub->add_option("--order", cfg.order, "series truncation order")->default_val(16);
        sub->add_option("--tol", cfg.tol, "refinement / root tolerance")->default_val(1e-10);
        sub->add_option("--threads", cfg.threads, "worker threads")->default_val(1);
        sub->add_option("--format", cfg.format, "json, csv or text")
            ->default_val("json")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output", cfg.output, "write the report to a file");
    };

    CLI::App* gamma = app.add_subcommand("gamma", "logarithmic coefficients of a function");
    add_common(gamma);
    gamma->add_option("--coeffs", coeff_file, "coefficient file: 're im' per line, a1 first");
    gamma->add_option("--atoms", atoms, "atom list 'w@theta;w@theta;...'");
    gamma->add_option("--witness", witness, "use a class witness: gamma1, gamma2 or gamma3");

    CLI::App* search = app.add_subcommand("search", "maximize a bound objective over its box");
    add_common(search);
    search->add_option("--target", cfg.target, "gamma2 or gamma3")
        ->default_val("gamma3")
        ->check(CLI::IsMember({"gamma2", "gamma3"}));
    search->add_option("--resolution", cfg.resolution, "lattice points per axis")->default_val(201);
    search->add_option("--gap-tol", cfg.gap_tol, "exit-code tolerance on the closed-form gap")
        ->default_val(1e-4);

    CLI::App* verify = app.add_subcommand("verify", "randomized falsification run");
    add_common(verify);
    verify->add_option("--trials", cfg.trials, "samples per run")->default_val(10000);
    verify->add_option("--seed", cfg.seed, "run seed")->default_val(42);

    CLI::App* extremal = app.add_subcommand("extremal", "build and check the sharp witnesses");
    add_common(extremal);

    CLI::App* roots = app.add_subcommand("roots", "real roots of a named polynomial");
    add_common(roots);
    roots->add_option("--poly", poly_name, "zeta1, zeta2 or octic_f2")
        ->default_val("zeta1")
        ->check(CLI::IsMember({"zeta1", "zeta2", "octic_f2"}));
    roots->add_option("--interval", [&root_lo, &root_hi](const std::vector<std::string>& vals) {
        root_lo = std::stod(vals.at(0));
        root_hi = std::stod(vals.at(1));
        return true;
    }, "search interval")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gamma->parsed()) return cmd_gamma(cfg, coeff_file, atoms, witness);
        if (search->parsed()) return cmd_search(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (extremal->parsed()) return cmd_extremal(cfg);
        if (roots->parsed()) return cmd_roots(cfg, poly_name, root_lo, root_hi);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
