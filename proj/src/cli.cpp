#include "tunnel/cli.hpp"

#include "tunnel/dilutegas.hpp"
#include "tunnel/errors.hpp"
#include "tunnel/instanton.hpp"
#include "tunnel/oracle.hpp"
#include "tunnel/susyqm.hpp"
#include "tunnel/zetadet.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace tunnel::cli {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ParamSpec {
    std::string name;
    bool required;
    std::string description;
};

struct CommandSpec {
    std::string name;
    std::string description;
    std::vector<ParamSpec> params;
    std::vector<std::pair<std::string, std::string>> flags;
    OutputFormat default_format = OutputFormat::json;
};

const std::vector<CommandSpec>& command_table() {
    static const std::vector<CommandSpec> table = {
        {"action",
         "Instanton action: closed form and quadrature of the euclidean action",
         {{"omega", true, "well frequency omega > 0"}},
         {}},
        {"profile",
         "Instanton profile, zero mode and stability potential at one time tau",
         {{"omega", true, "well frequency omega > 0"},
          {"tau", true, "euclidean time"},
          {"tau-c", false, "instanton centre (default 0)"}},
         {}},
        {"spectrum",
         "Exact bound spectrum of O_l with finite-difference check",
         {{"ell", true, "level l >= 1"},
          {"L", false, "box half-width (default 15)"},
          {"N", false, "interior grid points (default 4000)"}},
         {}},
        {"zeta",
         "Regularized zeta function zeta_r(s) by every available method",
         {{"ell", true, "level l >= 1"}, {"s", true, "argument s"}},
         {}},
        {"det-ratio",
         "Determinant ratios Q_l and R(omega) from the zeta function",
         {{"omega", true, "well frequency omega > 0"},
          {"ell", false, "level l (default 2)"},
          {"L", false, "also run the finite-box oracle at this half-width"},
          {"N", false, "grid points for the box oracle (default 4000)"}},
         {}},
        {"oscillator",
         "Harmonic-oscillator amplitude: sinh form, asymptote, mode product, Gelfand-Yaglom",
         {{"nu", true, "frequency nu > 0"},
          {"T", true, "euclidean time T > 0"},
          {"N", false, "modes kept in the product (default 10000)"}},
         {}},
        {"splitting",
         "Dilute-gas level splitting, optionally against grid diagonalization",
         {{"omega", true, "well frequency omega > 0"},
          {"L", false, "oracle box half-width"},
          {"N", false, "oracle starting grid points"}},
         {{"with-oracle", "compare with finite-difference eigenvalues"}}},
        {"sweep",
         "Splitting table over a range of omega",
         {{"omega-min", true, "first omega"},
          {"omega-max", true, "last omega (inclusive)"},
          {"omega-step", true, "increment > 0"}},
         {},
         OutputFormat::csv},
    };
    return table;
}

const CommandSpec& command(const std::string& name) {
    for (const auto& c : command_table()) {
        if (c.name == name) return c;
    }
    throw UsageError("unknown subcommand '" + name + "'");
}

double param(const RunConfig& cfg, const std::string& name) {
    const auto it = cfg.parameters.find(name);
    if (it == cfg.parameters.end()) throw UsageError("missing parameter --" + name);
    return it->second;
}

double param_or(const RunConfig& cfg, const std::string& name, double fallback) {
    const auto it = cfg.parameters.find(name);
    return it == cfg.parameters.end() ? fallback : it->second;
}

int integer_param(double v, const std::string& name, int min_value) {
    if (v != std::floor(v) || v < min_value || v > 1e8) {
        std::ostringstream msg;
        msg << "--" << name << " must be an integer >= " << min_value;
        throw UsageError(msg.str());
    }
    return static_cast<int>(v);
}

double exact_tol(double value) { return 4.0 * kEps * std::abs(value); }

specfun::QuadratureSpec quadrature_spec(const RunConfig& cfg) {
    specfun::QuadratureSpec spec;
    if (cfg.tol) {
        spec.rel_tol = *cfg.tol;
        spec.abs_tol = 0.1 * *cfg.tol;
    }
    return spec;
}

// ------------------------------------------------------------ subcommands

void run_action(const RunConfig& cfg, Report& r) {
    const DoubleWellParams p(param(cfg, "omega"));
    const double s = classical_action(p);
    const auto numeric = classical_action_numeric(p, quadrature_spec(cfg));
    const double d = instanton_density(p);
    r.results = {
        {"S_e0", s, "S_e0 = 2 omega / 3", "closed_form", exact_tol(s)},
        {"S_e0", numeric.value, "S_e = int (x'^2/2 + V(x)) dtau along x_c", "integrated",
         numeric.error},
        {"instanton_density", d, "d = sqrt(6/pi) sqrt(S_e0) exp(-S_e0)", "closed_form",
         exact_tol(d)},
        {"curvature_at_minimum", curvature(p, 1.0), "V''(+-1) = omega^2", "closed_form",
         exact_tol(curvature(p, 1.0))},
        {"beta", p.beta(), "beta = omega^2 / 4", "closed_form", exact_tol(p.beta())},
    };
}

void run_profile(const RunConfig& cfg, Report& r) {
    const DoubleWellParams p(param(cfg, "omega"));
    const InstantonConfig c{p, param_or(cfg, "tau-c", 0.0)};
    const double tau = param(cfg, "tau");
    std::vector<double> samples(50);
    for (int i = 0; i < 50; ++i) samples[i] = c.tau_c - 5.0 + 10.0 * i / 49.0;
    const EomResidual res = eom_residual(c, samples);
    const double xc = profile(c, tau);
    const double x0 = zero_mode(c, tau);
    const double w = stability_potential(p, tau - c.tau_c);
    r.results = {
        {"x_c", xc, "x_c = tanh(omega (tau - tau_c) / 2)", "closed_form", exact_tol(xc)},
        {"zero_mode", x0, "x_0 = S_e0^(-1/2) dx_c/dtau", "closed_form", exact_tol(x0)},
        {"stability_potential", w, "V''(x_c) = omega^2 - (3 omega^2/2) sech^2(omega tau/2)",
         "closed_form", exact_tol(w)},
        {"eom_residual_first_order", res.first_order, "x_c' = sqrt(2 V(x_c))", "closed_form",
         0.0},
        {"eom_residual_second_order", res.second_order, "x_c'' = V'(x_c)", "closed_form", 0.0},
    };
}

void run_spectrum(const RunConfig& cfg, Report& r) {
    const int ell = integer_param(param(cfg, "ell"), "ell", 1);
    const SusyLevel lv(ell);
    GridSpec grid{param_or(cfg, "L", 15.0), integer_param(param_or(cfg, "N", 4000), "N", 16), 1.0};
    for (int m = 0; m < ell; ++m) {
        const double e = bound_energy(lv, m);
        r.results.push_back({"E_" + std::to_string(m), e, "E_m = l^2 - (l - m)^2", "closed_form",
                             exact_tol(e)});
    }
    const double edge = ell * ell;
    r.results.push_back({"continuum_edge", edge, "E_k = k^2 + l^2 at k = 0", "closed_form", 0.0});
    const auto sys = lowest_eigenvalues(
        discretize([&lv](double z) { return lv.potential(z); }, grid), ell + 1);
    const double h = grid.spacing();
    for (int m = 0; m <= ell; ++m) {
        r.results.push_back({"E_" + std::to_string(m) + "_grid", sys.eigenvalues[m],
                             "finite-difference spectrum of O_l (Dirichlet box)", "oracle",
                             h * h * std::max(1.0, edge)});
    }
}

void run_zeta(const RunConfig& cfg, Report& r) {
    const int ell = integer_param(param(cfg, "ell"), "ell", 1);
    const double s = param(cfg, "s");
    const auto spec = quadrature_spec(cfg);
    const auto add = [&](const ZetaEvaluation& z, const std::string& ref) {
        r.results.push_back({"zeta_r", z.value, ref, std::string(to_string(z.method)),
                             z.error_estimate});
    };
    add(zeta_r(ell, s, ZetaMethod::k_integral, spec),
        "zeta_r(s) = sum_m E_m^-s + int rho_r(k) (k^2 + l^2)^-s dk");
    if (ell == 2) {
        add(zeta_r(ell, s, ZetaMethod::closed_form, spec),
            "zeta_r(s) in Gamma and 2F1(1, s+3/2; s+2; 3/4) form");
    }
    if (s > 0.0) {
        add(zeta_r(ell, s, ZetaMethod::heat_kernel_mellin, spec),
            "zeta_r(s) = Mellin transform of the subtracted heat-kernel trace");
    }
    if (s == 0.0) {
        const double zp = zeta_r_prime0(ell, spec);
        r.results.push_back({"zeta_r_prime0", zp,
                             "zeta_r'(0) = -sum ln E_m - int rho_r(k) ln(k^2 + l^2) dk",
                             "k_integral", spec.rel_tol * std::abs(zp)});
        if (ell == 2) {
            const double zh = zeta_r_prime0_hypergeometric();
            r.results.push_back({"zeta_r_prime0", zh,
                                 "zeta_r'(0) = -ln 3 + 8 ln 2 - 1/2 - (3/16) F'(0)",
                                 "closed_form", 1e-12});
        }
    }
}

void run_det_ratio(const RunConfig& cfg, Report& r) {
    const DoubleWellParams p(param(cfg, "omega"));
    const int ell = integer_param(param_or(cfg, "ell", 2), "ell", 1);
    const auto spec = quadrature_spec(cfg);
    const double tol = spec.rel_tol;
    DeterminantRatio ratio = ell == 2 ? reduced_ratio_R(p, spec) : determinant_ratio(ell, spec);
    r.results.push_back({"zeta_r0", ratio.zeta_at_zero, "zeta_r(0) = (l - 1) - l", "k_integral",
                         tol});
    r.results.push_back({"zeta_r_prime0", ratio.zeta_prime_at_zero,
                         "zeta_r'(0) = -sum ln E_m - int rho_r(k) ln(k^2 + l^2) dk", "k_integral",
                         tol * std::abs(ratio.zeta_prime_at_zero)});
    r.results.push_back({"q_value", ratio.q_value, "Q_l = Det' O_l / Det P_l = exp(-zeta_r'(0))",
                         "k_integral", tol * ratio.q_value});
    if (ratio.r_value) {
        r.results.push_back({"r_value", *ratio.r_value,
                             "R = beta^zeta_r(0) Q_2, beta = omega^2/4; R = 1/(12 omega^2)",
                             "k_integral", tol * *ratio.r_value});
    }
    if (cfg.parameters.count("L")) {
        const int points = integer_param(param_or(cfg, "N", 4000), "N", 16);
        const BoxReducedRatio box = box_reduced_ratio(ell, param(cfg, "L"), points);
        r.results.push_back({"q_value", box.value, "Det' O_l / Det P_l in a Dirichlet box",
                             "oracle", std::abs(box.value - ratio.q_value)});
        r.results.push_back({"lambda0_grid", box.lambda0, "lowest Dirichlet eigenvalue of O_l",
                             "oracle", 0.0});
    }
}

void run_oscillator(const RunConfig& cfg, Report& r) {
    const double nu = param(cfg, "nu");
    const double T = param(cfg, "T");
    const long N = integer_param(param_or(cfg, "N", 10000), "N", 1);
    const double exact = harmonic_amplitude(nu, T);
    const double asym = harmonic_amplitude(nu, T, AmplitudeForm::asymptotic);
    const double prod = truncated_mode_product(nu, T, N);
    constexpr double kGyTol = 1e-10;
    const double gy = gelfand_yaglom_ratio([nu](double) { return nu * nu; },
                                           [](double) { return 0.0; }, T, kGyTol);
    const double gy_amp = 1.0 / std::sqrt(2.0 * specfun::kPi * T * gy);
    r.results = {
        {"amplitude", exact, "sqrt(nu/pi) (2 sinh nu T)^(-1/2)", "closed_form", exact_tol(exact)},
        {"amplitude", asym, "sqrt(nu/pi) exp(-nu T/2) (1 + exp(-2 nu T)/2)", "asymptotic",
         std::abs(asym - exact)},
        {"amplitude", prod, "(2 pi T)^(-1/2) prod_j (1 + nu^2 T^2/(j pi)^2)^(-1/2)",
         "mode_product", std::abs(prod - exact)},
        {"amplitude", gy_amp, "(2 pi T)^(-1/2) [Det(-d^2 + nu^2)/Det(-d^2)]^(-1/2)",
         "gelfand_yaglom", kGyTol * gy_amp},
    };
}

void run_splitting(const RunConfig& cfg, Report& r) {
    const DoubleWellParams p(param(cfg, "omega"));
    SplittingReport rep;
    if (cfg.flags.count("with-oracle")) {
        std::optional<GridSpec> grid;
        if (cfg.parameters.count("L") || cfg.parameters.count("N")) {
            GridSpec g = default_splitting_grid(p);
            g.half_width = param_or(cfg, "L", g.half_width);
            g.points = integer_param(param_or(cfg, "N", g.points), "N", 16);
            grid = g;
        }
        rep = compare_with_oracle(p, grid);
    } else {
        rep = level_energies(p);
    }
    const double dE = rep.splitting_inst();
    r.results = {
        {"instanton_density", rep.d, "d = sqrt(6/pi) sqrt(S_e0) exp(-S_e0)", "closed_form",
         exact_tol(rep.d)},
        {"E0_inst", rep.E0_inst, "E_0 = omega/2 - 2 omega sqrt(omega/pi) exp(-2 omega/3)",
         "closed_form", exact_tol(rep.E0_inst)},
        {"E1_inst", rep.E1_inst, "E_1 = omega/2 + 2 omega sqrt(omega/pi) exp(-2 omega/3)",
         "closed_form", exact_tol(rep.E1_inst)},
        {"delta_E_inst", dE, "E_1 - E_0 = 2 omega d", "closed_form", exact_tol(dE)},
    };
    if (rep.ratio) {
        const double dEo = *rep.E1_oracle - *rep.E0_oracle;
        const double tol = *rep.oracle_relative_shift * dEo;
        r.results.push_back({"E0_oracle", *rep.E0_oracle,
                             "lowest eigenvalue of -d^2/2 + V (finite differences)", "oracle", tol});
        r.results.push_back({"E1_oracle", *rep.E1_oracle,
                             "second eigenvalue of -d^2/2 + V (finite differences)", "oracle", tol});
        r.results.push_back({"delta_E_oracle", dEo, "E_1 - E_0 (finite differences)", "oracle", tol});
        r.results.push_back({"ratio", *rep.ratio, "delta_E_oracle / delta_E_inst", "oracle",
                             tol / dE});
        r.results.push_back({"oracle_points", static_cast<double>(*rep.oracle_points),
                             "grid points after refinement", "oracle", 0.0});
    }
}

void run_sweep(const RunConfig& cfg, Report& r) {
    const double lo = param(cfg, "omega-min");
    const double hi = param(cfg, "omega-max");
    const double step = param(cfg, "omega-step");
    if (!(step > 0.0)) throw UsageError("--omega-step must be positive");
    if (!(lo > 0.0)) throw UsageError("--omega-min must be positive");

    std::vector<double> omegas;
    for (long i = 0;; ++i) {
        const double w = lo + static_cast<double>(i) * step;
        if (w > hi + 1e-9 * step) break;
        omegas.push_back(w);
        if (omegas.size() > 100000) throw UsageError("sweep range has more than 100000 points");
    }

    r.table_header = {"omega", "S_e0", "d", "delta_E_inst", "delta_E_oracle", "ratio"};
    r.table_rows.assign(omegas.size(), {});
    std::vector<std::exception_ptr> errors(omegas.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < omegas.size(); i = next++) {
            try {
                const DoubleWellParams p(omegas[i]);
                const SplittingReport rep = compare_with_oracle(p);
                const double dEo = *rep.E1_oracle - *rep.E0_oracle;
                r.table_rows[i] = {omegas[i], p.classical_action(), rep.d, rep.splitting_inst(),
                                   dEo, *rep.ratio};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(omegas.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    for (const auto& row : r.table_rows) {
        const std::string tag = "[omega=" + format_number(row[0]) + "]";
        r.results.push_back({"delta_E_inst" + tag, row[3], "E_1 - E_0 = 2 omega d", "closed_form",
                             exact_tol(row[3])});
        r.results.push_back({"delta_E_oracle" + tag, row[4], "E_1 - E_0 (finite differences)",
                             "oracle", 1e-3 * row[4]});
        r.results.push_back({"ratio" + tag, row[5], "delta_E_oracle / delta_E_inst", "oracle",
                             1e-3 * row[5]});
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::string* help) {
    CLI::App app{"Semiclassical tunneling in the double-well potential", "tunnel"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output;
    std::string out_path;
    double tol = 0.0;
    app.add_option("--output", output, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write the report to PATH instead of standard output");
    app.add_option("--tol", tol, "override the default quadrature tolerance")
        ->check(CLI::PositiveNumber);

    const CLI::Validator finite(
        [](std::string& s) -> std::string {
            try {
                std::size_t used = 0;
                const double v = std::stod(s, &used);
                if (used != s.size() || !std::isfinite(v)) return "not a finite real: " + s;
            } catch (const std::exception&) {
                return "not a number: " + s;
            }
            return {};
        },
        "REAL");

    std::map<std::string, std::map<std::string, double>> values;
    std::map<std::string, std::map<std::string, bool>> flag_values;
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : command_table()) {
        CLI::App* sub = app.add_subcommand(c.name, c.description);
        subs[c.name] = sub;
        for (const auto& prm : c.params) {
            auto* opt = sub->add_option("--" + prm.name, values[c.name][prm.name], prm.description)
                            ->check(finite);
            if (prm.required) opt->required();
        }
        for (const auto& [flag, desc] : c.flags) {
            flag_values[c.name][flag] = false;
            sub->add_flag("--" + flag, flag_values[c.name][flag], desc);
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        if (help) {
            std::string text = app.help();
            for (const auto& [name, sub] : subs) {
                if (sub->parsed()) text = sub->help();
            }
            *help = text;
        }
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        if (help) *help = app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    for (const auto& c : command_table()) {
        CLI::App* sub = subs[c.name];
        if (!sub->parsed()) continue;
        cfg.subcommand = c.name;
        cfg.output_format = c.default_format;
        for (const auto& prm : c.params) {
            if (sub->count("--" + prm.name) > 0) cfg.parameters[prm.name] = values[c.name][prm.name];
        }
        for (const auto& [flag, desc] : c.flags) {
            if (flag_values[c.name][flag]) cfg.flags.insert(flag);
        }
    }
    if (!output.empty()) cfg.output_format = output == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!out_path.empty()) cfg.output_path = out_path;
    if (app.count("--tol") > 0) cfg.tol = tol;
    return cfg;
}

Report run(const RunConfig& cfg) {
    const CommandSpec& spec = command(cfg.subcommand);
    for (const auto& prm : spec.params) {
        if (prm.required && !cfg.parameters.count(prm.name)) {
            throw UsageError("missing parameter --" + prm.name + " for " + cfg.subcommand);
        }
    }
    for (const auto& [name, v] : cfg.parameters) {
        if (!std::isfinite(v)) throw UsageError("--" + name + " must be finite");
    }

    Report r;
    r.subcommand = cfg.subcommand;
    for (const auto& [name, v] : cfg.parameters) r.inputs.emplace_back(name, v);
    if (cfg.tol) r.inputs.emplace_back("tol", *cfg.tol);

    if (cfg.subcommand == "action") run_action(cfg, r);
    else if (cfg.subcommand == "profile") run_profile(cfg, r);
    else if (cfg.subcommand == "spectrum") run_spectrum(cfg, r);
    else if (cfg.subcommand == "zeta") run_zeta(cfg, r);
    else if (cfg.subcommand == "det-ratio") run_det_ratio(cfg, r);
    else if (cfg.subcommand == "oscillator") run_oscillator(cfg, r);
    else if (cfg.subcommand == "splitting") run_splitting(cfg, r);
    else if (cfg.subcommand == "sweep") run_sweep(cfg, r);
    return r;
}

std::string render(const Report& report, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        if (!report.table_header.empty()) {
            for (std::size_t i = 0; i < report.table_header.size(); ++i) {
                out << (i ? "," : "") << report.table_header[i];
            }
            out << '\n';
            for (const auto& row : report.table_rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    out << (i ? "," : "") << format_number(row[i]);
                }
                out << '\n';
            }
            return out.str();
        }
        out << "name,value,paper_ref,method,tolerance\n";
        for (const auto& e : report.results) {
            out << csv_field(e.name) << ',' << format_number(e.value) << ','
                << csv_field(e.paper_ref) << ',' << csv_field(e.method) << ','
                << format_number(e.tolerance) << '\n';
        }
        return out.str();
    }

    nlohmann::ordered_json j;
    j["subcommand"] = report.subcommand;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [name, v] : report.inputs) j["inputs"][name] = number(v);
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& e : report.results) {
        j["results"].push_back({{"name", e.name},
                                {"value", number(e.value)},
                                {"paper_ref", e.paper_ref},
                                {"method", e.method},
                                {"tolerance", number(e.tolerance)}});
    }
    j["status"] = report.status;
    return j.dump(2) + "\n";
}

std::string render_error(const std::string& subcommand, const std::string& kind,
                         const std::string& message) {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand.empty() ? nlohmann::ordered_json(nullptr)
                                         : nlohmann::ordered_json(subcommand);
    j["status"] = "error";
    j["error"] = {{"kind", kind}, {"message", message}};
    return j.dump(2) + "\n";
}

Invocation invoke(const std::vector<std::string>& args) {
    Invocation inv;
    std::string subcommand;
    try {
        std::string help;
        const auto cfg = parse_args(args, &help);
        if (!cfg) {
            inv.output = help;
            return inv;
        }
        subcommand = cfg->subcommand;
        inv.output_path = cfg->output_path;
        inv.output = render(run(*cfg), cfg->output_format);
    } catch (const UsageError& e) {
        inv.exit_code = 2;
        inv.output = render_error(subcommand, "usage", e.what());
    } catch (const DomainError& e) {
        inv.exit_code = 2;
        inv.output = render_error(subcommand, "domain", e.what());
    } catch (const AccuracyError& e) {
        inv.exit_code = 1;
        inv.output = render_error(subcommand, "accuracy", e.what());
    } catch (const NumericError& e) {
        inv.exit_code = 1;
        inv.output = render_error(subcommand, "numeric", e.what());
    } catch (const DiagnosticError& e) {
        inv.exit_code = 1;
        inv.output = render_error(subcommand, "diagnostic", e.what());
    }
    return inv;
}

}  // namespace tunnel::cli
