// Batch experiment runner: channel verification, scheme metric tables,
// trade-off curve data and the full bound-certification suite.

#include "qhesim/attacks.hpp"
#include "qhesim/encoding.hpp"
#include "qhesim/ot_protocol.hpp"
#include "qhesim/qhe_scheme.hpp"
#include "qhesim/sot_channels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace qhesim;

namespace {

constexpr double pi = 3.14159265358979323846;

// All emitted probabilities are rounded to 12 significant digits.
double r12(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

std::uint64_t seed_from_env() {
    if (const char *env = std::getenv("QHESIM_SEED")) return std::strtoull(env, nullptr, 0);
    return default_seed;
}

void write_output(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + out_path);
    file << text;
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 8; ++k) grid.push_back(k * pi / 9.0);
    return grid;
}

// --- verify-channels --------------------------------------------------------

int cmd_verify_channels(const std::string &format, const std::string &out_path,
                        bool inject_fault) {
    ordered_json channels = ordered_json::array();
    std::string csv = "x0,x1,choi_dev\n";
    double max_dev = 0.0;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            // The fault swaps the Clifford family's second data bit, which the
            // averaging identity is guaranteed to catch.
            const KrausChannel averaged =
                inject_fault ? sot_clifford_average(x0, 1 - x1) : sot_clifford_average(x0, x1);
            const double dev = choi_distance(sot_channel_compact(x0, x1), averaged);
            max_dev = std::max(max_dev, dev);
            channels.push_back({{"x0", x0}, {"x1", x1}, {"choi_dev", r12(dev)}});
            csv += std::to_string(x0) + "," + std::to_string(x1) + "," + format_real(dev) + "\n";
        }
    const bool pass = max_dev <= 1e-9;

    if (format == "csv") {
        write_output(csv, out_path);
    } else {
        ordered_json doc;
        doc["schema"] = "1";
        doc["command"] = "verify-channels";
        doc["channels"] = channels;
        doc["max_choi_dev"] = r12(max_dev);
        doc["pass"] = pass;
        write_output(doc.dump(2) + "\n", out_path);
    }
    std::cerr << "max_choi_dev " << format_real(max_dev) << (pass ? " (pass)" : " (FAIL)") << "\n";
    return pass ? 0 : 1;
}

// --- scheme-metrics ---------------------------------------------------------

int cmd_scheme_metrics(const std::vector<std::string> &schemes, std::uint64_t seed,
                       std::size_t trials, const std::string &format,
                       const std::string &out_path) {
    ordered_json rows = ordered_json::array();
    std::string csv = "scheme,eps,eps_d,eps_c_lb,eps_c_ub,bound_lhs,holds\n";
    bool all_hold = true;
    for (const auto &name : schemes) {
        const auto metrics = scheme_metrics(scheme_by_name(name), seed, trials);
        all_hold = all_hold && metrics.bound_holds && metrics.bounds_consistent;
        rows.push_back({{"scheme", name},
                        {"eps", r12(metrics.eps)},
                        {"eps_d", r12(metrics.eps_d)},
                        {"eps_c_lb", r12(metrics.eps_c_lb)},
                        {"eps_c_ub", r12(metrics.eps_c_ub)},
                        {"bound_lhs", r12(metrics.bound_lhs)},
                        {"holds", metrics.bound_holds},
                        {"bounds_consistent", metrics.bounds_consistent},
                        {"witnesses",
                         {{"eps", metrics.eps_witness},
                          {"eps_d", metrics.eps_d_witness},
                          {"eps_c_lb", metrics.eps_c_lb_witness},
                          {"eps_c_ub", metrics.eps_c_ub_witness}}}});
        csv += name + "," + format_real(metrics.eps) + "," + format_real(metrics.eps_d) + "," +
               format_real(metrics.eps_c_lb) + "," + format_real(metrics.eps_c_ub) + "," +
               format_real(metrics.bound_lhs) + "," + (metrics.bound_holds ? "true" : "false") +
               "\n";
    }

    if (format == "csv") {
        write_output(csv, out_path);
    } else {
        ordered_json doc;
        doc["schema"] = "1";
        doc["command"] = "scheme-metrics";
        doc["seed"] = seed;
        doc["trials"] = trials;
        doc["rows"] = rows;
        write_output(doc.dump(2) + "\n", out_path);
    }
    return all_hold ? 0 : 1;
}

// --- tradeoff-curve ---------------------------------------------------------

int cmd_tradeoff_curve(std::size_t points, const std::string &format,
                       const std::string &out_path) {
    // Boundary eps_d + eps_c = 1/2 at perfect correctness, plus the two
    // achievable corner points.
    ordered_json boundary = ordered_json::array();
    std::string csv = "kind,label,eps_d,eps_c\n";
    for (std::size_t k = 0; k < points; ++k) {
        const double eps_d = 0.5 * static_cast<double>(k) / static_cast<double>(points - 1);
        const double eps_c = 0.5 - eps_d;
        boundary.push_back({{"eps_d", r12(eps_d)}, {"eps_c", r12(eps_c)}});
        csv += "boundary,," + format_real(eps_d) + "," + format_real(eps_c) + "\n";
    }
    ordered_json achieved = ordered_json::array();
    achieved.push_back({{"label", "trivial (square)"}, {"eps_d", 1.0}, {"eps_c", 0.0}});
    achieved.push_back(
        {{"label", "asymptotic, external (diamond)"}, {"eps_d", 0.0}, {"eps_c", 0.5}});
    csv += "achieved,trivial (square),1,0\n";
    csv += "achieved,asymptotic external (diamond),0,0.5\n";

    if (format == "csv") {
        write_output(csv, out_path);
    } else {
        ordered_json doc;
        doc["schema"] = "1";
        doc["command"] = "tradeoff-curve";
        doc["epsilon"] = 0.0;
        doc["boundary"] = boundary;
        doc["achieved"] = achieved;
        write_output(doc.dump(2) + "\n", out_path);
    }
    return 0;
}

// --- certify ----------------------------------------------------------------

ProtocolOneInstance instance_by_name(const std::string &name, double theta) {
    if (name == "bell") return bell_instance();
    if (name == "rotation") return rotation_instance(theta);
    if (name == "pointer") return pointer_instance();
    if (name == "no-encoding") return no_encoding_instance();
    throw CLI::ValidationError("--instance", "unknown instance: " + name);
}

ordered_json ot_bound_row(const OtBoundReport &rep) {
    return {{"instance", rep.instance},
            {"delta", r12(rep.delta)},
            {"f", r12(rep.f)},
            {"p_a", r12(rep.p_a)},
            {"p_a_floor", r12(rep.p_a_floor)},
            {"p_b", r12(rep.p_b)},
            {"p_b_floor", r12(rep.p_b_floor)},
            {"lhs", r12(rep.lhs)},
            {"slack", r12(rep.slack)},
            {"pass", rep.pass}};
}

std::string ot_bound_csv_row(const OtBoundReport &rep) {
    return "ot-bound," + rep.instance + "," + format_real(rep.delta) + "," + format_real(rep.f) +
           "," + format_real(rep.p_a) + "," + format_real(rep.p_a_floor) + "," +
           format_real(rep.p_b) + "," + format_real(rep.p_b_floor) + "," + format_real(rep.lhs) +
           ",2," + (rep.pass ? "true" : "false") + "\n";
}

int cmd_certify(const std::vector<std::string> &instances, const std::vector<double> &thetas,
                const std::vector<std::string> &schemes, std::uint64_t seed,
                const std::string &format, const std::string &out_path) {
    bool all_pass = true;
    ordered_json ot_rows = ordered_json::array();
    std::string csv = "kind,name,delta,f,p_a,p_a_bound,p_b,p_b_bound,lhs,threshold,pass\n";

    for (const auto &name : instances) {
        if (name == "rotation") {
            for (double theta : thetas) {
                const auto rep = certify_ot_bound(instance_by_name(name, theta));
                all_pass = all_pass && rep.pass;
                ot_rows.push_back(ot_bound_row(rep));
                csv += ot_bound_csv_row(rep);
            }
        } else {
            const auto rep = certify_ot_bound(instance_by_name(name, 0.0));
            all_pass = all_pass && rep.pass;
            ot_rows.push_back(ot_bound_row(rep));
            csv += ot_bound_csv_row(rep);
        }
    }

    ordered_json scheme_rows = ordered_json::array();
    for (const auto &name : schemes) {
        const auto rep = certify_scheme_bound(scheme_by_name(name), seed);
        const bool pass = rep.consistent && rep.bound_holds;
        all_pass = all_pass && pass;
        scheme_rows.push_back({{"scheme", rep.scheme},
                              {"eps", r12(rep.eps)},
                              {"eps_d", r12(rep.eps_d)},
                              {"eps_c_ub", r12(rep.eps_c_ub)},
                              {"delta_ot", r12(rep.delta_ot)},
                              {"honest_success", r12(rep.honest_success)},
                              {"p_a", r12(rep.p_a)},
                              {"p_a_ceiling", r12(rep.p_a_ceiling)},
                              {"p_b", r12(rep.p_b)},
                              {"p_b_ceiling", r12(rep.p_b_ceiling)},
                              {"lhs", r12(rep.lhs)},
                              {"consistent", rep.consistent},
                              {"holds", rep.bound_holds}});
        csv += "scheme-bound," + rep.scheme + "," + format_real(rep.delta_ot) + ",," +
               format_real(rep.p_a) + "," + format_real(rep.p_a_ceiling) + "," +
               format_real(rep.p_b) + "," + format_real(rep.p_b_ceiling) + "," +
               format_real(rep.lhs) + ",0.5," + (pass ? "true" : "false") + "\n";
    }

    if (format == "csv") {
        write_output(csv, out_path);
    } else {
        ordered_json doc;
        doc["schema"] = "1";
        doc["command"] = "certify";
        doc["seed"] = seed;
        doc["ot_bound"] = ot_rows;
        doc["scheme_bound"] = scheme_rows;
        doc["all_pass"] = all_pass;
        write_output(doc.dump(2) + "\n", out_path);
    }
    std::cerr << (all_pass ? "certify: all bounds hold\n" : "certify: FAILURE\n");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum homomorphic encryption / oblivious transfer simulator and "
                 "privacy-bound certification toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = seed_from_env();
    std::size_t trials = 64;
    std::vector<std::string> scheme_args;
    std::vector<std::string> instance_args;
    std::vector<double> theta_args;
    std::size_t points = 101;
    bool inject_fault = false;

    auto add_io = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "Output path (default: stdout)");
    };

    auto *verify = app.add_subcommand("verify-channels",
                                      "Check the compact channels against their sixteen-fold "
                                      "Clifford randomizations");
    add_io(verify);
    verify->add_flag("--inject-fault", inject_fault,
                     "Corrupt the Clifford family to exercise the failure path");

    auto *metrics = app.add_subcommand("scheme-metrics",
                                       "Evaluate correctness, data privacy and circuit-privacy "
                                       "bounds per scheme");
    add_io(metrics);
    metrics->add_option("--scheme", scheme_args, "Scheme names (default: all)")
        ->check(CLI::IsMember(scheme_names()));
    metrics->add_option("--seed", seed, "Seed for the random candidate states");
    metrics->add_option("--trials", trials, "Number of random candidate states")
        ->check(CLI::PositiveNumber);

    auto *curve = app.add_subcommand("tradeoff-curve",
                                     "Emit the privacy trade-off boundary and achieved points");
    add_io(curve);
    curve->add_option("--points", points, "Boundary sample count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));

    auto *certify = app.add_subcommand("certify",
                                       "Certify the oblivious-transfer and scheme bounds with "
                                       "constructive attacks");
    add_io(certify);
    certify->add_option("--instance", instance_args,
                        "Protocol instances (bell, rotation, pointer, no-encoding)");
    certify->add_option("--theta", theta_args, "Rotation angles in radians, in [0, pi]")
        ->check(CLI::Range(0.0, pi));
    certify->add_option("--scheme", scheme_args, "Schemes for the reduction chain")
        ->check(CLI::IsMember(scheme_names()));
    certify->add_option("--seed", seed, "Seed for the random candidate states");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify_channels(format, out_path, inject_fault);
        if (metrics->parsed()) {
            if (scheme_args.empty()) scheme_args = scheme_names();
            return cmd_scheme_metrics(scheme_args, seed, trials, format, out_path);
        }
        if (curve->parsed()) return cmd_tradeoff_curve(points, format, out_path);
        if (certify->parsed()) {
            if (instance_args.empty())
                instance_args = {"bell", "rotation", "pointer", "no-encoding"};
            if (theta_args.empty()) theta_args = default_theta_grid();
            if (scheme_args.empty()) scheme_args = scheme_names();
            return cmd_certify(instance_args, theta_args, scheme_args, seed, format, out_path);
        }
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
