#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "shockfront/reflection.hpp"

namespace shockfront::cli {

namespace {

constexpr double kDeg = 57.29577951308232;

std::string fmt_deg(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fmt_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// One CSV per invocation: header row, data rows, trailing `#` comments only.
struct CsvDoc {
    std::string header;
    std::vector<std::string> rows;
    std::vector<std::string> comments;  // without the leading '#'

    std::string render() const {
        std::string out = header + "\n";
        for (const auto& r : rows) out += r + "\n";
        for (const auto& c : comments) out += "# " + c + "\n";
        return out;
    }
};

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return 4;
    }
    f << payload;
    if (!f.good()) {
        std::cerr << "error: write failed: " << path << "\n";
        return 4;
    }
    return 0;
}

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int steps = 1;
    bool log = false;

    std::vector<double> values() const {
        std::vector<double> out;
        out.reserve(static_cast<size_t>(steps));
        if (steps == 1) {
            out.push_back(min);
            return out;
        }
        for (int i = 0; i < steps; ++i) {
            const double t = static_cast<double>(i) / (steps - 1);
            out.push_back(log ? min * std::pow(max / min, t) : min + (max - min) * t);
        }
        return out;
    }
};

struct RunConfig {
    std::string command;
    double gamma = 1.4;
    double mi = 1.0;
    double theta_deg = 60.0;
    double beta_q_deg = 0.0;
    bool at_sonic = false;
    int samples = 128;
    GridSpec gamma_grid;
    GridSpec mi_grid;
    bool has_mi_grid = false;
    std::string output = "-";
    std::string plot_data;
    double tol = 1e-10;
};

std::string provenance(const RunConfig& rc) {
    std::ostringstream os;
    os << "provenance: " << rc.command;
    if (rc.command != "scan") {
        os << " gamma=" << fmt_g9(rc.gamma);
    }
    if (rc.command == "scan") {
        os << " gamma-min=" << fmt_g9(rc.gamma_grid.min)
           << " gamma-max=" << fmt_g9(rc.gamma_grid.max)
           << " gamma-steps=" << rc.gamma_grid.steps
           << " gamma-log=" << (rc.gamma_grid.log ? "true" : "false");
    }
    if (rc.command == "scan" || (rc.command == "transition" && rc.has_mi_grid)) {
        os << " mi-min=" << fmt_g9(rc.mi_grid.min) << " mi-max=" << fmt_g9(rc.mi_grid.max)
           << " mi-steps=" << rc.mi_grid.steps
           << " mi-log=" << (rc.mi_grid.log ? "true" : "false");
    } else {
        os << " mi=" << fmt_g9(rc.mi);
    }
    if (rc.command == "reflect" || rc.command == "envelope") {
        os << " theta-deg=" << (rc.at_sonic ? std::string("sonic") : fmt_deg(rc.theta_deg));
    }
    if (rc.command == "reflect" || rc.command == "envelope" || rc.command == "transition") {
        os << " beta-q-deg=" << fmt_deg(rc.beta_q_deg);
    }
    if (rc.command == "polar") {
        os << " samples=" << rc.samples;
    }
    os << " tol=" << fmt_g9(rc.tol);
    os << " " << kVersion;
    return os.str();
}

CsvDoc run_incident(const RunConfig& rc) {
    const GasModel gas(rc.gamma);
    const IncidentShock inc = vertical_incident_shock(gas, rc.mi);
    CsvDoc doc;
    doc.header = "gamma,mi,xi_s,rho_q,c_q";
    doc.rows.push_back(fmt_g9(rc.gamma) + "," + fmt_g9(rc.mi) + "," + fmt_g9(inc.xi_s) +
                       "," + fmt_g9(inc.rho_Q) + "," + fmt_g9(inc.c_Q));
    return doc;
}

CsvDoc run_polar(const RunConfig& rc) {
    const GasModel gas(rc.gamma);
    const PolarCurve pc = polar_curve(gas, 1.0, Vec2{rc.mi, 0.0}, rc.samples);
    CsvDoc doc;
    doc.header = "beta_rad,rho_d,Ld,turning_rad";
    for (const auto& s : pc.samples) {
        doc.rows.push_back(fmt_g9(s.beta) + "," + fmt_g9(s.downstream.rho) + "," +
                           fmt_g9(s.L_d) + "," + fmt_g9(s.turning));
    }
    doc.comments.push_back("beta_vanish_rad: " + fmt_g9(pc.beta_vanish));
    doc.comments.push_back("tau_star_rad: " + fmt_g9(pc.tau_star) +
                           " beta_star_rad: " + fmt_g9(pc.beta_star));
    if (pc.beta_sonic) {
        doc.comments.push_back("beta_sonic_rad: " + fmt_g9(*pc.beta_sonic) +
                               " tau_sonic_rad: " + fmt_g9(*pc.tau_sonic));
    }
    return doc;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

CsvDoc run_reflect(const RunConfig& rc) {
    const GasModel gas(rc.gamma);
    const double theta =
        rc.at_sonic ? theta_sonic(gas, rc.mi, rc.beta_q_deg / kDeg, rc.tol)
                    : rc.theta_deg / kDeg;
    const RRConfiguration cfg = build_local_rr(gas, rc.mi, rc.beta_q_deg / kDeg, theta);
    CsvDoc doc;
    doc.header =
        "gamma,mi,beta_q_deg,theta_deg,xi_s,rho_q,xi_r_x,xi_r_y,rho_r,l_r,xi_c0_x,xi_c0_y,"
        "sonic_ok,vinb_ok,envelope_ok,envelope_termination,end_x,end_y";
    doc.rows.push_back(
        fmt_g9(rc.gamma) + "," + fmt_g9(rc.mi) + "," + fmt_deg(rc.beta_q_deg) + "," +
        fmt_deg(theta * kDeg) + "," + fmt_g9(cfg.incident.xi_s) + "," +
        fmt_g9(cfg.incident.rho_Q) + "," + fmt_g9(cfg.xi_R.x) + "," + fmt_g9(cfg.xi_R.y) +
        "," + fmt_g9(cfg.reflected.downstream.rho) + "," + fmt_g9(cfg.L_R) + "," +
        fmt_g9(cfg.xi_C0.x) + "," + fmt_g9(cfg.xi_C0.y) + "," +
        bool_str(cfg.verdicts.sonic_ok) + "," + bool_str(cfg.verdicts.vInB_ok) + "," +
        bool_str(cfg.verdicts.envelope_ok) + "," + to_string(cfg.envelope.termination) +
        "," + fmt_g9(cfg.envelope.end_point.x) + "," + fmt_g9(cfg.envelope.end_point.y));
    return doc;
}

CsvDoc run_envelope(const RunConfig& rc) {
    const GasModel gas(rc.gamma);
    const double theta =
        rc.at_sonic ? theta_sonic(gas, rc.mi, rc.beta_q_deg / kDeg, rc.tol)
                    : rc.theta_deg / kDeg;
    const RRConfiguration cfg = build_local_rr(gas, rc.mi, rc.beta_q_deg / kDeg, theta);
    CsvDoc doc;
    doc.header = "phi_rad,r,x,y";
    for (const auto& p : cfg.envelope.points) {
        const Vec2 q = cfg.v_I + p.r * unit_vector(p.phi);
        doc.rows.push_back(fmt_g9(p.phi) + "," + fmt_g9(p.r) + "," + fmt_g9(q.x) + "," +
                           fmt_g9(q.y));
    }
    doc.comments.push_back("theta_deg: " + fmt_deg(theta * kDeg));
    doc.comments.push_back(std::string("termination: ") +
                           to_string(cfg.envelope.termination));
    doc.comments.push_back("end_point: " + fmt_g9(cfg.envelope.end_point.x) + " " +
                           fmt_g9(cfg.envelope.end_point.y));
    return doc;
}

CsvDoc run_transition(const RunConfig& rc, std::string* plot_payload) {
    const GasModel gas(rc.gamma);
    const std::vector<double> mis =
        rc.has_mi_grid ? rc.mi_grid.values() : std::vector<double>{rc.mi};
    CsvDoc doc;
    doc.header = "gamma,mi,theta_d_deg,theta_s_deg,theta_n_deg";
    std::string plot = "# mi theta_d_deg theta_s_deg theta_n_deg\n";
    for (const double mi : mis) {
        const TransitionAngles ta = transition_angles(gas, mi, rc.beta_q_deg / kDeg, rc.tol);
        const std::string tn = ta.theta_N ? fmt_deg(*ta.theta_N * kDeg) : std::string();
        doc.rows.push_back(fmt_g9(rc.gamma) + "," + fmt_g9(mi) + "," +
                           fmt_deg(ta.theta_d * kDeg) + "," + fmt_deg(ta.theta_s * kDeg) +
                           "," + tn);
        plot += fmt_g9(mi) + " " + fmt_deg(ta.theta_d * kDeg) + " " +
                fmt_deg(ta.theta_s * kDeg) + " " + (tn.empty() ? "nan" : tn) + "\n";
    }
    doc.comments.push_back(
        "stem_model: straight shock through xi_R perpendicular to wall B, upstream Q, "
        "pseudo-steady");
    if (plot_payload) *plot_payload = plot;
    return doc;
}

CsvDoc run_scan(const RunConfig& rc, std::string* plot_payload) {
    const std::vector<double> gammas = rc.gamma_grid.values();
    const std::vector<double> mis = rc.mi_grid.values();
    const auto records = feasibility_scan(gammas, mis);
    CsvDoc doc;
    doc.header = "gamma,mi,status,theta_s_deg";
    std::string plot = "# mi gamma_minus_1 status  (0=NoIncidentShock 1=EnvelopeFails 2=Feasible)\n";
    for (const auto& rec : records) {
        const std::string ts = rec.theta_s ? fmt_deg(*rec.theta_s * kDeg) : std::string();
        doc.rows.push_back(fmt_g9(rec.gamma) + "," + fmt_g9(rec.M_I) + "," +
                           to_string(rec.status) + "," + ts);
        plot += fmt_g9(rec.M_I) + " " + fmt_g9(rec.gamma - 1.0) + " " +
                std::to_string(static_cast<int>(rec.status)) + "\n";
    }
    if (plot_payload) *plot_payload = plot;
    return doc;
}

// key=value file spliced into the argument list as --key value pairs; explicit
// command-line flags take precedence (CLI11 keeps the last occurrence).
bool splice_config(std::vector<std::string>& args, std::string* err) {
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "--config") continue;
        if (i + 1 >= args.size()) {
            *err = "--config requires a path";
            return false;
        }
        const std::string path = args[i + 1];
        std::ifstream f(path);
        if (!f) {
            *err = "cannot read config file: " + path;
            return false;
        }
        std::vector<std::string> extra;
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                *err = "malformed config line: " + line;
                return false;
            }
            extra.push_back("--" + line.substr(0, eq));
            extra.push_back(line.substr(eq + 1));
        }
        args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
        // insert right after the subcommand so explicit flags still override
        args.insert(args.begin() + 1, extra.begin(), extra.end());
        return true;
    }
    return true;
}

}  // namespace

int run(const std::vector<std::string>& args_in) {
    std::vector<std::string> args = args_in;
    std::string cfg_err;
    if (!args.empty() && !splice_config(args, &cfg_err)) {
        std::cerr << "error: " << cfg_err << "\n";
        return 2;
    }

    RunConfig rc;
    if (const char* env = std::getenv("SHOCKFRONT_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && std::isfinite(v)) rc.tol = v;
    }

    CLI::App app{"shockfront: regular reflection in self-similar potential flow"};
    app.require_subcommand(1);
    // later occurrences win so command-line flags override --config values
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    const auto add_common = [&](CLI::App* cmd, bool needs_gamma = true) {
        if (needs_gamma) {
            cmd->add_option("--gamma", rc.gamma, "isentropic exponent (>= 1)")->required();
        }
        cmd->add_option("--output,-o", rc.output, "output CSV path ('-' for stdout)");
        cmd->add_option("--tol", rc.tol, "root-finding tolerance override");
    };

    CLI::App* c_incident = app.add_subcommand("incident", "vertical incident shock");
    add_common(c_incident);
    c_incident->add_option("--mi", rc.mi, "I-region Mach number M_I")->required();

    CLI::App* c_polar = app.add_subcommand("polar", "shock polar of a supersonic state");
    add_common(c_polar);
    c_polar->add_option("--mi", rc.mi, "upstream pseudo-Mach |z_u|/c_u")->required();
    c_polar->add_option("--samples", rc.samples, "number of beta samples (>= 64)")
        ->check(CLI::Range(64, 1 << 24));

    CLI::App* c_reflect = app.add_subcommand("reflect", "local regular-reflection state");
    add_common(c_reflect);
    c_reflect->add_option("--mi", rc.mi)->required();
    c_reflect->add_option("--theta-deg", rc.theta_deg, "wedge parameter theta in degrees");
    c_reflect->add_flag("--at-sonic", rc.at_sonic, "use theta = theta_s");
    c_reflect->add_option("--beta-q-deg", rc.beta_q_deg, "incident inclination from vertical");

    CLI::App* c_envelope = app.add_subcommand("envelope", "envelope curve of a configuration");
    add_common(c_envelope);
    c_envelope->add_option("--mi", rc.mi)->required();
    c_envelope->add_option("--theta-deg", rc.theta_deg);
    c_envelope->add_flag("--at-sonic", rc.at_sonic);
    c_envelope->add_option("--beta-q-deg", rc.beta_q_deg);

    CLI::App* c_transition = app.add_subcommand("transition", "transition angles");
    add_common(c_transition);
    c_transition->add_option("--mi", rc.mi);
    c_transition->add_option("--beta-q-deg", rc.beta_q_deg);
    c_transition->add_option("--mi-min", rc.mi_grid.min);
    c_transition->add_option("--mi-max", rc.mi_grid.max);
    c_transition->add_option("--mi-steps", rc.mi_grid.steps);
    c_transition->add_flag("--mi-log", rc.mi_grid.log);
    c_transition->add_option("--plot-data", rc.plot_data, "gnuplot-style data file");

    CLI::App* c_scan = app.add_subcommand("scan", "feasibility scan over (gamma, M_I)");
    add_common(c_scan, /*needs_gamma=*/false);
    c_scan->add_option("--gamma-min", rc.gamma_grid.min)->required();
    c_scan->add_option("--gamma-max", rc.gamma_grid.max)->required();
    c_scan->add_option("--gamma-steps", rc.gamma_grid.steps)->required();
    c_scan->add_flag("--gamma-log", rc.gamma_grid.log);
    c_scan->add_option("--mi-min", rc.mi_grid.min)->required();
    c_scan->add_option("--mi-max", rc.mi_grid.max)->required();
    c_scan->add_option("--mi-steps", rc.mi_grid.steps)->required();
    c_scan->add_flag("--mi-log", rc.mi_grid.log);
    c_scan->add_option("--plot-data", rc.plot_data);

    std::vector<const char*> argv;
    argv.push_back("shockfront");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!(rc.tol >= 1e-14 && rc.tol <= 1e-4)) {
        std::cerr << "error: tolerance must be within [1e-14, 1e-4]\n";
        return 2;
    }
    const auto grid_ok = [](const GridSpec& g) {
        return g.steps >= 1 && (g.steps >= 2 || g.min == g.max) &&
               (g.steps == 1 || g.max >= g.min) && (!g.log || g.min > 0.0);
    };

    try {
        CsvDoc doc;
        std::string plot_payload;
        if (c_incident->parsed()) {
            rc.command = "incident";
            doc = run_incident(rc);
        } else if (c_polar->parsed()) {
            rc.command = "polar";
            doc = run_polar(rc);
        } else if (c_reflect->parsed()) {
            rc.command = "reflect";
            doc = run_reflect(rc);
        } else if (c_envelope->parsed()) {
            rc.command = "envelope";
            doc = run_envelope(rc);
        } else if (c_transition->parsed()) {
            rc.command = "transition";
            rc.has_mi_grid = c_transition->count("--mi-min") > 0;
            if (rc.has_mi_grid && !grid_ok(rc.mi_grid)) {
                std::cerr << "error: invalid M_I grid\n";
                return 2;
            }
            doc = run_transition(rc, rc.plot_data.empty() ? nullptr : &plot_payload);
        } else if (c_scan->parsed()) {
            rc.command = "scan";
            if (!grid_ok(rc.gamma_grid) || !grid_ok(rc.mi_grid)) {
                std::cerr << "error: invalid grid specification\n";
                return 2;
            }
            doc = run_scan(rc, rc.plot_data.empty() ? nullptr : &plot_payload);
        }
        doc.comments.push_back(provenance(rc));
        if (!rc.plot_data.empty()) {
            if (plot_payload.empty()) {
                std::cerr << "error: no plot data for this command\n";
                return 2;
            }
            const int code = write_output(rc.plot_data, plot_payload);
            if (code != 0) return code;
        }
        return write_output(rc.output, doc.render());
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace shockfront::cli
