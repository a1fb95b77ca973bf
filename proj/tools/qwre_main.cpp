// Command-line front end: run walks, sample environments, emit
// distributions/densities/reports as CSV or JSON, and run the verification
// suites. Data artifacts go to --out (or stdout); diagnostics to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwre/annealed.hpp"
#include "qwre/closedform.hpp"
#include "qwre/environment.hpp"
#include "qwre/errors.hpp"
#include "qwre/evolve.hpp"
#include "qwre/io.hpp"
#include "qwre/limit.hpp"
#include "qwre/pathsum.hpp"
#include "qwre/verify.hpp"

namespace {

using namespace qwre;

struct CommonOpts {
    double omega0 = 0.0;
    std::string env_path;
    std::uint64_t seed = 0;
    std::string qubit_text;
    std::string format = "csv";
    std::string out_path;
};

void add_env_options(CLI::App* cmd, CommonOpts& opts) {
    auto* omega = cmd->add_option("--omega0", opts.omega0,
                                  "constant phase: delta-measure environment at every site");
    auto* env = cmd->add_option("--env", opts.env_path, "environment spec file (JSON)");
    omega->excludes(env);
    env->excludes(omega);
    cmd->add_option("--seed", opts.seed, "sampling seed (overrides the file's seed)");
}

void add_output_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "output path (default: stdout)");
}

void add_qubit_option(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--qubit", opts.qubit_text,
                    "initial qubit re_L,im_L,re_R,im_R (default: the symmetric one)");
}

struct ResolvedEnv {
    EnvironmentSpec spec;
    std::uint64_t seed = 0;
    Environment sampled;
};

ResolvedEnv resolve_environment(const CLI::App* cmd, const CommonOpts& opts, int extent) {
    ResolvedEnv r;
    if (!opts.env_path.empty()) {
        EnvironmentFile file = load_environment_file(opts.env_path);
        r.spec = std::move(file.spec);
        r.seed = cmd->count("--seed") > 0 ? opts.seed : file.seed;
    } else {
        r.spec.default_measure = PhaseMeasure::delta(opts.omega0);
        r.seed = opts.seed;
    }
    r.sampled = sample_environment(r.spec, extent, r.seed);
    return r;
}

ChiralityVector resolve_qubit(const CommonOpts& opts) {
    return opts.qubit_text.empty() ? symmetric_initial_qubit() : parse_qubit(opts.qubit_text);
}

class OutputStream {
  public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw config_error("cannot open output file '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& get() { return *os_; }

  private:
    std::ofstream file_;
    std::ostream* os_ = &std::cout;
};

void emit_distribution(const CommonOpts& opts, const Distribution& dist) {
    OutputStream out(opts.out_path);
    if (opts.format == "json") {
        emit_distribution_json(out.get(), dist);
    } else {
        emit_distribution_csv(out.get(), dist);
    }
}

std::vector<int> parse_n_values(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        values.push_back(std::stoi(part));
    }
    if (values.empty()) throw std::invalid_argument("--n-values: expected a comma-separated list");
    return values;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time quantum walks in one-dimensional random environments"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- evolve ----
    auto evolve_opts = std::make_shared<CommonOpts>();
    auto evolve_n = std::make_shared<int>(0);
    auto* cmd_evolve = app.add_subcommand("evolve", "state-vector walk distribution at time n");
    cmd_evolve->add_option("--n", *evolve_n, "number of steps")->required()
        ->check(CLI::NonNegativeNumber);
    add_env_options(cmd_evolve, *evolve_opts);
    add_qubit_option(cmd_evolve, *evolve_opts);
    add_output_options(cmd_evolve, *evolve_opts);
    cmd_evolve->callback([cmd_evolve, evolve_opts, evolve_n] {
        const auto t0 = std::chrono::steady_clock::now();
        const ResolvedEnv env = resolve_environment(cmd_evolve, *evolve_opts, *evolve_n);
        const Distribution dist =
            evolve_to(resolve_qubit(*evolve_opts), env.sampled, *evolve_n);
        emit_distribution(*evolve_opts, dist);
        std::fprintf(stderr, "total mass %.15f, runtime %.3fs\n", dist.total(), elapsed_s(t0));
    });

    // ---- paths ----
    auto paths_opts = std::make_shared<CommonOpts>();
    auto paths_n = std::make_shared<int>(0);
    auto paths_cap = std::make_shared<int>(kDefaultEnumerationCap);
    auto* cmd_paths = app.add_subcommand("paths", "brute-force path-sum distribution (capped n)");
    cmd_paths->add_option("--n", *paths_n, "number of steps")->required()
        ->check(CLI::PositiveNumber);
    cmd_paths->add_option("--cap", *paths_cap, "enumeration cap");
    add_env_options(cmd_paths, *paths_opts);
    add_qubit_option(cmd_paths, *paths_opts);
    add_output_options(cmd_paths, *paths_opts);
    cmd_paths->callback([cmd_paths, paths_opts, paths_n, paths_cap] {
        const auto t0 = std::chrono::steady_clock::now();
        const ResolvedEnv env = resolve_environment(cmd_paths, *paths_opts, *paths_n);
        const Distribution dist =
            oracle_distribution(env.sampled, *paths_n, resolve_qubit(*paths_opts), *paths_cap);
        emit_distribution(*paths_opts, dist);
        std::fprintf(stderr, "total mass %.15f, runtime %.3fs\n", dist.total(), elapsed_s(t0));
    });

    // ---- closed-form ----
    auto cf_opts = std::make_shared<CommonOpts>();
    auto cf_l = std::make_shared<int>(0);
    auto cf_m = std::make_shared<int>(0);
    auto* cmd_cf = app.add_subcommand("closed-form", "PQRS coefficients of Xi_n(l,m)");
    cmd_cf->add_option("--l", *cf_l, "left steps")->required()->check(CLI::NonNegativeNumber);
    cmd_cf->add_option("--m", *cf_m, "right steps")->required()->check(CLI::NonNegativeNumber);
    add_env_options(cmd_cf, *cf_opts);
    add_output_options(cmd_cf, *cf_opts);
    cmd_cf->callback([cmd_cf, cf_opts, cf_l, cf_m] {
        const ResolvedEnv env = resolve_environment(cmd_cf, *cf_opts, *cf_l + *cf_m);
        const PqrsCoefficients coeffs = xi_coefficients_closed(*cf_l, *cf_m, env.sampled);
        OutputStream out(cf_opts->out_path);
        if (cf_opts->format == "json") {
            out.get() << "{\n"
                      << "  \"p\": [" << format_double(coeffs.p.real()) << ", "
                      << format_double(coeffs.p.imag()) << "],\n"
                      << "  \"q\": [" << format_double(coeffs.q.real()) << ", "
                      << format_double(coeffs.q.imag()) << "],\n"
                      << "  \"r\": [" << format_double(coeffs.r.real()) << ", "
                      << format_double(coeffs.r.imag()) << "],\n"
                      << "  \"s\": [" << format_double(coeffs.s.real()) << ", "
                      << format_double(coeffs.s.imag()) << "]\n}\n";
        } else {
            out.get() << "component,re,im\n";
            const std::pair<const char*, cplx> rows[] = {
                {"p", coeffs.p}, {"q", coeffs.q}, {"r", coeffs.r}, {"s", coeffs.s}};
            for (const auto& [name, value] : rows) {
                out.get() << name << ',' << format_double(value.real()) << ','
                          << format_double(value.imag()) << '\n';
            }
        }
    });

    // ---- limit-density ----
    auto ld_opts = std::make_shared<CommonOpts>();
    auto ld_grid = std::make_shared<int>(1001);
    auto* cmd_ld = app.add_subcommand(
        "limit-density", "limit density of X_n/n (quenched via --omega0, annealed via --env)");
    cmd_ld->add_option("--grid-points", *ld_grid, "sampling grid size");
    add_env_options(cmd_ld, *ld_opts);
    add_output_options(cmd_ld, *ld_opts);
    cmd_ld->callback([ld_opts, ld_grid] {
        LimitDensity density;
        if (!ld_opts->env_path.empty()) {
            const EnvironmentFile file = load_environment_file(ld_opts->env_path);
            density = annealed_limit_density(file.spec.measure_at(0));
        } else {
            density = quenched_limit_density(ld_opts->omega0);
        }
        OutputStream out(ld_opts->out_path);
        if (ld_opts->format == "json") {
            emit_density_json(out.get(), density, *ld_grid);
        } else {
            emit_density_csv(out.get(), density, *ld_grid);
        }
    });

    // ---- annealed ----
    auto an_opts = std::make_shared<CommonOpts>();
    auto an_n = std::make_shared<int>(0);
    auto an_method = std::make_shared<std::string>("exact");
    auto an_samples = std::make_shared<int>(100000);
    auto* cmd_an = app.add_subcommand("annealed", "environment-averaged distribution at time n");
    cmd_an->add_option("--n", *an_n, "number of steps")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_an->add_option("--method", *an_method, "averaging method")
        ->check(CLI::IsMember({"exact", "mc"}));
    cmd_an->add_option("--samples", *an_samples, "Monte Carlo sample count");
    add_env_options(cmd_an, *an_opts);
    add_qubit_option(cmd_an, *an_opts);
    add_output_options(cmd_an, *an_opts);
    cmd_an->callback([cmd_an, an_opts, an_n, an_method, an_samples] {
        const auto t0 = std::chrono::steady_clock::now();
        EnvironmentSpec spec;
        std::uint64_t seed = an_opts->seed;
        if (!an_opts->env_path.empty()) {
            EnvironmentFile file = load_environment_file(an_opts->env_path);
            spec = std::move(file.spec);
            if (cmd_an->count("--seed") == 0) seed = file.seed;
        } else {
            spec.default_measure = PhaseMeasure::delta(an_opts->omega0);
        }
        const ChiralityVector qubit = resolve_qubit(*an_opts);
        if (*an_method == "exact") {
            const Distribution dist =
                annealed_distribution_exact(spec.measure_at(0), *an_n, qubit);
            emit_distribution(*an_opts, dist);
            std::fprintf(stderr, "exact average, total mass %.15f, runtime %.3fs\n", dist.total(),
                         elapsed_s(t0));
        } else {
            const McDistribution mc =
                annealed_distribution_mc(spec, *an_n, *an_samples, seed, qubit);
            emit_distribution(*an_opts, mc.mean);
            double max_se = 0.0;
            for (const auto& [x, se] : mc.std_error) max_se = std::max(max_se, se);
            std::fprintf(stderr,
                         "monte carlo, %d samples, max std error %.3e, total mass %.15f, "
                         "runtime %.3fs\n",
                         mc.samples, max_se, mc.mean.total(), elapsed_s(t0));
        }
    });

    // ---- converge ----
    auto cv_opts = std::make_shared<CommonOpts>();
    auto cv_values = std::make_shared<std::string>();
    auto cv_strict = std::make_shared<bool>(false);
    auto* cmd_cv = app.add_subcommand("converge", "finite-n diagnostics against the limit law");
    cmd_cv->add_option("--n-values", *cv_values, "comma-separated ascending times")->required();
    cmd_cv->add_flag("--strict", *cv_strict, "fail unless the KS distance strictly decreases");
    add_env_options(cmd_cv, *cv_opts);
    add_qubit_option(cmd_cv, *cv_opts);
    add_output_options(cmd_cv, *cv_opts);
    cmd_cv->callback([cmd_cv, cv_opts, cv_values, cv_strict, &exit_code] {
        const std::vector<int> n_values = parse_n_values(*cv_values);
        const int extent = n_values.back();
        const ResolvedEnv env = resolve_environment(cmd_cv, *cv_opts, extent);
        const ConvergenceReport report =
            convergence_report(env.sampled, n_values, resolve_qubit(*cv_opts));
        OutputStream out(cv_opts->out_path);
        if (cv_opts->format == "json") {
            emit_convergence_json(out.get(), report);
        } else {
            emit_convergence_csv(out.get(), report);
        }
        if (*cv_strict) {
            for (std::size_t i = 1; i < report.ks_distances.size(); ++i) {
                if (report.ks_distances[i] >= report.ks_distances[i - 1]) {
                    std::fprintf(stderr, "strict: KS distance did not decrease at n=%d\n",
                                 report.n_values[i]);
                    exit_code = 1;
                }
            }
        }
    });

    // ---- verify ----
    auto vf_suite = std::make_shared<std::string>("all");
    auto vf_cap = std::make_shared<int>(12);
    auto* cmd_vf = app.add_subcommand("verify", "cross-module equivalence suites");
    cmd_vf->add_option("--suite", *vf_suite, "one suite, or 'all'")
        ->check(CLI::IsMember({"all", "product-table", "oracle", "w2", "jacobi", "limits"}));
    cmd_vf->add_option("--cap", *vf_cap, "time cap for the oracle suite")
        ->check(CLI::Range(1, kDefaultEnumerationCap));
    cmd_vf->callback([vf_suite, vf_cap, &exit_code] {
        std::vector<std::string> names =
            *vf_suite == "all" ? verify::suite_names() : std::vector<std::string>{*vf_suite};
        bool all_pass = true;
        for (const std::string& name : names) {
            const verify::SuiteResult result = verify::run_suite(name, *vf_cap);
            std::printf("suite %s: %s (max error %.3e, tol %.0e)%s%s\n", result.name.c_str(),
                        result.pass ? "PASS" : "FAIL", result.max_error, result.tolerance,
                        result.detail.empty() ? "" : " -- ", result.detail.c_str());
            all_pass = all_pass && result.pass;
        }
        if (!all_pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const qwre::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
