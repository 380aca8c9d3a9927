#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "condlab/brownian.hpp"
#include "condlab/chain.hpp"
#include "condlab/diagnostics.hpp"
#include "condlab/environment.hpp"
#include "condlab/errors.hpp"
#include "condlab/flow.hpp"
#include "condlab/functional.hpp"
#include "condlab/parallel.hpp"
#include "condlab/report.hpp"
#include "condlab/resistance.hpp"
#include "condlab/stats.hpp"
#include "condlab/walk.hpp"

namespace {

using nlohmann::ordered_json;
using namespace condlab;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

ordered_json estimate_row(const FunctionalEstimate& e) {
    ordered_json row;
    row["id"] = e.functional_id;
    row["mean"] = e.mean;
    row["std_error"] = e.std_error;
    row["paths"] = e.paths;
    return row;
}

std::vector<FunctionalSpec> pick_functionals(const std::string& path) {
    if (path.empty()) return library_v1();
    return load_functionals(path);
}

struct ValidateArgs {
    std::string env_path, out_path;
};

int run_validate(const ValidateArgs& a) {
    const std::string text = read_text_file(a.env_path);
    const ValidationReport rep = validate_environment_text(text);
    ordered_json result;
    result["pass"] = rep.pass;
    result["profile"] = profile_name(rep.profile);
    result["verdicts"] = ordered_json::array();
    for (const ConditionVerdict& v : rep.verdicts) {
        ordered_json row;
        row["id"] = v.id;
        row["level"] = v.level;
        row["status"] = v.status;
        row["detail"] = v.detail;
        result["verdicts"].push_back(row);
    }
    ordered_json config;
    config["env"] = a.env_path;
    emit(a.out_path, render_json(make_report("validate", config, result)));
    return rep.pass ? 0 : 2;
}

struct EnvDumpArgs {
    std::string preset, env_path, out_path;
    std::uint64_t seed = 1;
};

int run_env_dump(const EnvDumpArgs& a) {
    if (a.preset.empty() == a.env_path.empty())
        throw ConfigError("pass exactly one of --preset or --env");
    EnvironmentSpec env;
    if (!a.preset.empty())
        env = make_environment(preset_scales(a.preset), a.seed);
    else
        env = load_environment(a.env_path);
    emit(a.out_path, environment_to_json(env));
    return 0;
}

struct TuneArgs {
    std::string env_path, out_path, write_env;
    int level = 1;
    double tol = 1e-6;
    double solver_tol = 1e-12;
    std::size_t max_iters = SolveOptions{}.max_iters;
    bool no_cache = false;
};

int run_tune(const TuneArgs& a) {
    EnvironmentSpec env = load_environment(a.env_path);
    SolveOptions opts;
    opts.residual_tol = a.solver_tol;
    opts.max_iters = a.max_iters;
    ordered_json levels = ordered_json::array();
    for (int n = 1; n <= a.level; ++n) {
        const TuneResult r = tune_k(env, n, a.tol, opts, !a.no_cache);
        env.scales[static_cast<std::size_t>(n) - 1].k_tuned = r.k_tuned;
        ordered_json row;
        row["level"] = n;
        row["k_tuned"] = r.k_tuned;
        row["sigma_sq_at_k"] = r.sigma_sq_at_k;
        row["solves"] = r.solves;
        row["bracket_lo"] = r.bracket_lo;
        row["bracket_hi"] = r.bracket_hi;
        row["bracket_expanded"] = r.bracket_expanded;
        levels.push_back(row);
    }
    ordered_json result;
    result["levels"] = levels;
    ordered_json config;
    config["env"] = a.env_path;
    config["level"] = a.level;
    config["tol"] = a.tol;
    config["residual_tol"] = a.solver_tol;
    emit(a.out_path, render_json(make_report("tune-k", config, result)));
    if (!a.write_env.empty()) save_environment(env, a.write_env);
    return 0;
}

struct ResistanceArgs {
    std::string env_path, out_path;
    int level = 1;
    std::optional<double> K, eta;
    double solver_tol = 1e-12;
    std::size_t max_iters = SolveOptions{}.max_iters;
};

int run_resistance(const ResistanceArgs& a) {
    const EnvironmentSpec env = load_environment(a.env_path);
    SolveOptions opts;
    opts.residual_tol = a.solver_tol;
    opts.max_iters = a.max_iters;
    // eta overrides enter through the weights; reuse the certificate path
    DualityCertificate cert;
    if (a.eta) {
        const WeightGrid w = materialize_weights(env, a.level, a.K, a.eta);
        ConductanceResult c = effective_conductance(w, opts);
        cert.sigma_sq = c.sigma_sq;
        cert.stats = c.stats;
        cert.max_principle_excess = maximum_principle_excess(c.potential);
        const FlowField J = normalize_flux(gradient_flow(w, c.potential));
        cert.flow_energy_normalized = flow_energy(J, w);
        cert.gap = std::abs(cert.sigma_sq * cert.flow_energy_normalized - 1.0);
    } else {
        cert = duality_certificate(env, a.level, a.K, opts);
    }
    ordered_json result;
    result["sigma_sq"] = cert.sigma_sq;
    result["duality_gap"] = cert.gap;
    result["flow_energy"] = cert.flow_energy_normalized;
    result["max_principle_excess"] = cert.max_principle_excess;
    result["iterations"] = cert.stats.iterations;
    result["relative_residual"] = cert.stats.relative_residual;
    ordered_json config;
    config["env"] = a.env_path;
    config["level"] = a.level;
    if (a.K) config["K"] = *a.K;
    if (a.eta) config["eta"] = *a.eta;
    config["residual_tol"] = a.solver_tol;
    emit(a.out_path, render_json(make_report("resistance", config, result)));
    return 0;
}

struct SimulateArgs {
    std::string env_path, out_path, dump_paths;
    int level = 1;
    double eps = 0.0;
    double horizon = 1.0;
    std::size_t paths = 100;
    std::optional<std::uint64_t> seed;
    std::optional<double> K, eta;
    int threads = 1;
};

int run_simulate(const SimulateArgs& a) {
    const EnvironmentSpec env = load_environment(a.env_path);
    if (!(a.eps > 0.0)) throw ConfigError("--eps must be positive");
    if (!(a.horizon > 0.0)) throw ConfigError("--horizon must be positive");
    const std::uint64_t seed = a.seed ? *a.seed : env.seed;
    const ConductanceField field(env, a.level, a.K, a.eta);
    const double raw_horizon = a.horizon / (a.eps * a.eps);

    std::vector<RunningStats> sq_chunks(work_chunk_count(a.paths));
    std::vector<RunningStats> ev_chunks(work_chunk_count(a.paths));
    std::vector<std::string> dump_lines(a.dump_paths.empty() ? 0 : a.paths);
    run_indexed(a.paths, a.threads, [&](std::size_t chunk, std::size_t p) {
        const WalkPath raw = simulate_path(field, Coord{0, 0}, raw_horizon, seed, p);
        const ScaledPath path = rescale(raw, a.eps, a.horizon);
        sq_chunks[chunk].add(squared_displacement(path, a.horizon));
        ev_chunks[chunk].add(static_cast<double>(path.events.size() - 1));
        if (!a.dump_paths.empty()) {
            std::string& lines = dump_lines[p];
            for (const ScaledPoint& e : path.events) {
                lines += std::to_string(p);
                lines += ',';
                lines += csv_number(e.t);
                lines += ',';
                lines += csv_number(e.x);
                lines += ',';
                lines += csv_number(e.y);
                lines += "\r\n";
            }
        }
    });
    RunningStats sq, ev;
    for (const RunningStats& s : sq_chunks) sq.merge(s);
    for (const RunningStats& s : ev_chunks) ev.merge(s);

    if (!a.dump_paths.empty()) {
        std::string csv = "path,t,x,y\r\n";
        for (const std::string& lines : dump_lines) csv += lines;
        write_text_file(a.dump_paths, csv);
    }

    ordered_json result;
    result["paths"] = sq.count();
    result["mean_square_displacement"] = sq.mean();
    result["std_error"] = sq.stderr_mean();
    result["mean_events"] = ev.mean();
    ordered_json config;
    config["env"] = a.env_path;
    config["level"] = a.level;
    config["eps"] = a.eps;
    config["horizon"] = a.horizon;
    config["paths"] = a.paths;
    config["seed"] = seed;
    if (a.K) config["K"] = *a.K;
    if (a.eta) config["eta"] = *a.eta;
    emit(a.out_path, render_json(make_report("simulate", config, result)));
    return 0;
}

struct CltArgs {
    std::string env_path, out_path, functionals_path;
    std::string mode = "annealed";
    std::string statistic = "crossing";
    int level = 1;
    double eps = 0.0;
    std::size_t envs = 8;
    std::size_t paths = 200;
    std::size_t trapped = 1, far = 1;
    std::uint64_t seed = 2026;
    std::optional<double> eta;
    int nodes = 40;
    int threads = 1;
};

int run_clt(const CltArgs& a) {
    const std::vector<FunctionalSpec> fns = pick_functionals(a.functionals_path);
    ordered_json config;
    config["env"] = a.env_path;
    config["level"] = a.level;
    config["mode"] = a.mode;
    config["seed"] = a.seed;
    if (a.eta) config["eta"] = *a.eta;

    ordered_json result;
    if (a.mode == "bm") {
        config["nodes_per_panel"] = a.nodes;
        result["references"] = ordered_json::array();
        for (const FunctionalSpec& f : fns) {
            const BmEstimate ref = bm_reference(f, a.nodes);
            ordered_json row;
            row["id"] = f.id;
            row["value"] = ref.value;
            row["method"] = ref.method;
            if (ref.method == "monte-carlo") row["std_error"] = ref.std_error;
            result["references"].push_back(row);
        }
        emit(a.out_path, render_json(make_report("clt-stats", config, result)));
        return 0;
    }

    const EnvironmentSpec env = load_environment(a.env_path);
    if (!(a.eps > 0.0)) throw ConfigError("--eps must be positive");
    config["eps"] = a.eps;

    if (a.mode == "annealed") {
        config["envs"] = a.envs;
        config["paths_per_env"] = a.paths;
        config["nodes_per_panel"] = a.nodes;
        const AnnealedReport rep = annealed_estimate(env, a.level, a.eps, fns, a.envs,
                                                     a.paths, a.seed, a.threads, a.eta);
        result["per_env"] = ordered_json::array();
        for (const QuenchedRun& run : rep.per_env) {
            ordered_json row;
            row["env_seed"] = run.env_seed;
            row["estimates"] = ordered_json::array();
            for (const FunctionalEstimate& e : run.estimates)
                row["estimates"].push_back(estimate_row(e));
            result["per_env"].push_back(row);
        }
        result["pooled"] = ordered_json::array();
        for (const FunctionalEstimate& e : rep.pooled)
            result["pooled"].push_back(estimate_row(e));
        result["across_env_variance"] = rep.across_env_variance;
        const DiscrepancyReport disc = functional_discrepancy(rep.pooled, fns, a.nodes);
        result["discrepancy"] = ordered_json::array();
        for (const DiscrepancyRow& row : disc.rows) {
            ordered_json r;
            r["id"] = row.functional_id;
            r["walk_mean"] = row.walk_mean;
            r["walk_std_error"] = row.walk_std_error;
            r["bm_value"] = row.bm_value;
            r["abs_diff"] = row.abs_diff;
            r["sigma"] = row.sigma;
            result["discrepancy"].push_back(r);
        }
        result["max_abs_diff"] = disc.max_abs_diff;
        result["max_sigma"] = disc.max_sigma;
    } else if (a.mode == "spread") {
        config["paths"] = a.paths;
        config["statistic"] = a.statistic;
        config["trapped"] = a.trapped;
        config["far"] = a.far;
        SpreadOptions opts;
        opts.level = a.level;
        opts.eps = a.eps;
        opts.paths = a.paths;
        opts.n_trapped = a.trapped;
        opts.n_far = a.far;
        opts.eta_override = a.eta;
        opts.seed = a.seed;
        opts.threads = a.threads;
        if (a.statistic == "crossing") {
            opts.statistic.kind = PathStatistic::Kind::crossing;
        } else if (a.statistic == "functional") {
            opts.statistic.kind = PathStatistic::Kind::functional;
            opts.statistic.functional = fns.front();
        } else {
            throw ConfigError("--statistic must be crossing or functional");
        }
        const SpreadReport rep = quenched_spread(env, opts);
        result["runs"] = ordered_json::array();
        for (const SpreadRun& run : rep.runs) {
            ordered_json row;
            row["env_seed"] = run.env_seed;
            row["label"] = run.label;
            row["mean"] = run.mean;
            row["std_error"] = run.std_error;
            row["paths"] = run.paths;
            result["runs"].push_back(row);
        }
        result["separation"] = rep.separation;
    } else {
        throw ConfigError("--mode must be annealed, spread or bm");
    }
    emit(a.out_path, render_json(make_report("clt-stats", config, result)));
    return 0;
}

struct BlockingArgs {
    std::string env_path, out_path;
    std::size_t paths = 40000;
    std::size_t bm_paths = 40000;
    double eta = 1e-6;
    double dt = 1e-4;
    std::uint64_t seed = 2026;
    std::optional<double> K;
    int threads = 1;
};

int run_blocking(const BlockingArgs& a) {
    EnvironmentSpec env = load_environment(a.env_path);
    if (a.K) env.scales[0].k_tuned = *a.K;
    const BlockingReport walk = obstacle_blocking_experiment(env, a.paths, a.eta, a.threads);
    const CrossingEstimate bm = bm_crossing_mc(a.bm_paths, a.seed, a.dt);
    ordered_json result;
    result["walk"] = {{"p_hat", walk.p_hat},
                      {"std_error", walk.std_error},
                      {"paths", walk.paths},
                      {"start", {walk.start.x, walk.start.y}},
                      {"eps", walk.eps},
                      {"eta", walk.eta}};
    result["bm"] = {{"value", bm.value},
                    {"std_error", bm.std_error},
                    {"paths", bm.paths},
                    {"dt", a.dt}};
    result["difference_sigma"] =
        separation_between(walk.p_hat, walk.std_error, bm.value, bm.std_error);
    ordered_json config;
    config["env"] = a.env_path;
    config["paths"] = a.paths;
    config["bm_paths"] = a.bm_paths;
    config["eta"] = a.eta;
    config["dt"] = a.dt;
    config["seed"] = a.seed;
    if (a.K) config["K"] = *a.K;
    emit(a.out_path, render_json(make_report("blocking", config, result)));
    return 0;
}

struct HittingArgs {
    std::string env_path, out_path;
    int level = 1;
    double lambda = 0.125;
    std::size_t samples = 200000;
    std::uint64_t seed = 2026;
};

int run_hitting(const HittingArgs& a) {
    const EnvironmentSpec env = load_environment(a.env_path);
    const HittingReport rep = hitting_probability(env, a.level, a.lambda, a.samples, a.seed);
    ordered_json result;
    result["lambda"] = a.lambda;
    result["box_radius"] = rep.box_radius;
    result["exact"] = rep.exact;
    result["mc"] = rep.mc;
    result["std_error"] = rep.std_error;
    result["samples"] = rep.samples;
    result["agreement_sigma"] =
        rep.std_error > 0.0 ? std::abs(rep.mc - rep.exact) / rep.std_error : 0.0;
    ordered_json config;
    config["env"] = a.env_path;
    config["level"] = a.level;
    config["lambda"] = a.lambda;
    config["samples"] = a.samples;
    config["seed"] = a.seed;
    emit(a.out_path, render_json(make_report("hitting", config, result)));
    return 0;
}

struct ReversalArgs {
    std::string out_path;
    std::uint64_t seed = 7;
};

int run_reversal(const ReversalArgs& a) {
    struct Case {
        std::string name;
        FiniteChain chain;
    };
    const std::vector<Case> cases = {
        {"two-state", two_state_chain(1.3, 1.3)},
        {"ring-4", ring_chain(4, 0.8)},
        {"random-8", random_symmetric_chain(8, a.seed)},
    };
    const std::vector<std::vector<double>> batteries = {
        {0.7}, {0.4, 1.1}, {0.3, 0.8, 1.5}};

    ordered_json rows = ordered_json::array();
    double overall = 0.0;
    for (const Case& c : cases) {
        CounterRng rng(a.seed, StreamPurpose::generic, 0x5EED);
        double worst = 0.0;
        for (const auto& times : batteries) {
            std::vector<std::vector<double>> factors;
            for (std::size_t j = 0; j < times.size(); ++j) {
                std::vector<double> f(static_cast<std::size_t>(c.chain.n));
                for (double& v : f) v = 0.1 + rng.next_double();
                factors.push_back(std::move(f));
            }
            worst = std::max(worst, reversal_residual(c.chain, times, factors));
        }
        overall = std::max(overall, worst);
        ordered_json row;
        row["chain"] = c.name;
        row["states"] = c.chain.n;
        row["max_residual"] = worst;
        rows.push_back(row);
    }

    // non-reversible control: the identity is expected to fail
    const FiniteChain skew = two_state_chain(1.0, 2.0);
    const double control =
        reversal_residual(skew, {0.5, 1.0}, {{0.4, 1.2}, {0.9, 0.3}});

    ordered_json result;
    result["chains"] = rows;
    result["max_residual"] = overall;
    result["asymmetric_control_residual"] = control;
    ordered_json config;
    config["seed"] = a.seed;
    emit(a.out_path, render_json(make_report("reversal-check", config, result)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice conductance experiments"};
    app.require_subcommand(1);

    ValidateArgs va;
    auto* validate = app.add_subcommand("validate", "check an environment file against its profile rules");
    validate->add_option("--env", va.env_path, "environment JSON file")->required();
    validate->add_option("--out", va.out_path, "write the report here instead of stdout");

    EnvDumpArgs ea;
    auto* envdump = app.add_subcommand("env-dump", "write a canonical environment document");
    envdump->add_option("--preset", ea.preset, "ladder preset name (desk1, fast1, desk2, fast2)");
    envdump->add_option("--env", ea.env_path, "round-trip an existing environment file");
    envdump->add_option("--seed", ea.seed, "offset seed for --preset");
    envdump->add_option("--out", ea.out_path, "output file (default stdout)");

    TuneArgs ta;
    auto* tune = app.add_subcommand("tune-k", "tune the strong-edge weight level by level");
    tune->add_option("--env", ta.env_path, "environment JSON file")->required();
    tune->add_option("--level", ta.level, "tune levels 1..level");
    tune->add_option("--tol", ta.tol, "conductance tolerance");
    tune->add_option("--solver-tol", ta.solver_tol, "relative residual target");
    tune->add_option("--max-iters", ta.max_iters, "solver iteration cap");
    tune->add_flag("--no-cache", ta.no_cache, "ignore and do not write the tuning cache");
    tune->add_option("--write-env", ta.write_env, "also write the environment with tuned weights");
    tune->add_option("--out", ta.out_path, "output file (default stdout)");

    ResistanceArgs ra;
    auto* resistance = app.add_subcommand("resistance", "solve the side-to-side conductance problem");
    resistance->add_option("--env", ra.env_path, "environment JSON file")->required();
    resistance->add_option("--level", ra.level, "ladder level");
    resistance->add_option("--K", ra.K, "strong-edge weight override");
    resistance->add_option("--eta", ra.eta, "slow-edge weight override");
    resistance->add_option("--solver-tol", ra.solver_tol, "relative residual target");
    resistance->add_option("--max-iters", ra.max_iters, "solver iteration cap");
    resistance->add_option("--out", ra.out_path, "output file (default stdout)");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "run rescaled random walks");
    simulate->add_option("--env", sa.env_path, "environment JSON file")->required();
    simulate->add_option("--level", sa.level, "ladder level");
    simulate->add_option("--eps", sa.eps, "diffusive scale")->required();
    simulate->add_option("--horizon", sa.horizon, "rescaled time horizon");
    simulate->add_option("--paths", sa.paths, "number of walks");
    simulate->add_option("--seed", sa.seed, "path seed (default: the environment seed)");
    simulate->add_option("--K", sa.K, "strong-edge weight override");
    simulate->add_option("--eta", sa.eta, "slow-edge weight override");
    simulate->add_option("--dump-paths", sa.dump_paths, "write rescaled events to this CSV file");
    simulate->add_option("--threads", sa.threads, "worker threads");
    simulate->add_option("--out", sa.out_path, "output file (default stdout)");

    CltArgs ca;
    auto* clt = app.add_subcommand("clt-stats", "functional statistics against the limit process");
    clt->add_option("--env", ca.env_path, "environment JSON file");
    clt->add_option("--mode", ca.mode, "annealed, spread or bm");
    clt->add_option("--level", ca.level, "ladder level");
    clt->add_option("--eps", ca.eps, "diffusive scale");
    clt->add_option("--envs", ca.envs, "environment draws (annealed mode)");
    clt->add_option("--paths", ca.paths, "paths per environment");
    clt->add_option("--trapped", ca.trapped, "trapped seeds (spread mode)");
    clt->add_option("--far", ca.far, "far seeds (spread mode)");
    clt->add_option("--statistic", ca.statistic, "crossing or functional (spread mode)");
    clt->add_option("--functionals", ca.functionals_path, "functional battery JSON file");
    clt->add_option("--nodes", ca.nodes, "quadrature nodes per panel");
    clt->add_option("--eta", ca.eta, "slow-edge weight override");
    clt->add_option("--seed", ca.seed, "experiment seed");
    clt->add_option("--threads", ca.threads, "worker threads");
    clt->add_option("--out", ca.out_path, "output file (default stdout)");

    BlockingArgs ba;
    auto* blocking = app.add_subcommand("blocking", "crossing suppression at the blocking site");
    blocking->add_option("--env", ba.env_path, "environment JSON file")->required();
    blocking->add_option("--paths", ba.paths, "walk paths");
    blocking->add_option("--bm-paths", ba.bm_paths, "limit-process paths");
    blocking->add_option("--eta", ba.eta, "slow-edge weight override");
    blocking->add_option("--dt", ba.dt, "Euler step for the limit process");
    blocking->add_option("--K", ba.K, "strong-edge weight (skips tuning requirement)");
    blocking->add_option("--seed", ba.seed, "limit-process seed");
    blocking->add_option("--threads", ba.threads, "worker threads");
    blocking->add_option("--out", ba.out_path, "output file (default stdout)");

    HittingArgs ha;
    auto* hitting = app.add_subcommand("hitting", "offset box-hitting probability, exact and sampled");
    hitting->add_option("--env", ha.env_path, "environment JSON file")->required();
    hitting->add_option("--level", ha.level, "ladder level");
    hitting->add_option("--lambda", ha.lambda, "box radius as a fraction of b");
    hitting->add_option("--samples", ha.samples, "Monte Carlo samples");
    hitting->add_option("--seed", ha.seed, "sampling seed");
    hitting->add_option("--out", ha.out_path, "output file (default stdout)");

    ReversalArgs rva;
    auto* reversal = app.add_subcommand("reversal-check", "time-reversal identity on small chains");
    reversal->add_option("--seed", rva.seed, "factor seed");
    reversal->add_option("--out", rva.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (validate->parsed()) return run_validate(va);
        if (envdump->parsed()) return run_env_dump(ea);
        if (tune->parsed()) return run_tune(ta);
        if (resistance->parsed()) return run_resistance(ra);
        if (simulate->parsed()) return run_simulate(sa);
        if (clt->parsed()) return run_clt(ca);
        if (blocking->parsed()) return run_blocking(ba);
        if (hitting->parsed()) return run_hitting(ha);
        if (reversal->parsed()) return run_reversal(rva);
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const MissingTunedK& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleGeometry& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
