#include "condlab/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "condlab/errors.hpp"
#include "condlab/flow.hpp"

namespace condlab {

WeightGrid materialize_weights(const EnvironmentSpec& env, int level,
                               std::optional<double> k_override,
                               std::optional<double> eta_override,
                               bool border_halving, bool pin_offsets) {
    if (level < 1 || static_cast<std::size_t>(level) > env.scales.size())
        throw ConfigError("level out of range for this environment");
    EnvironmentSpec local = env;
    if (pin_offsets)
        for (Coord& o : local.offsets) o = Coord{0, 0};
    const ConductanceField field(local, level, k_override, eta_override);
    const long a = env.scales[static_cast<std::size_t>(level) - 1].a;
    WeightGrid w = WeightGrid::uniform(a);
    for (long y = 0; y <= a; ++y)
        for (long x = 0; x < a; ++x)
            w.h(x, y) = field.edge_value(Edge{EdgeDir::horizontal, x, y});
    for (long y = 0; y < a; ++y)
        for (long x = 0; x <= a; ++x)
            w.v(x, y) = field.edge_value(Edge{EdgeDir::vertical, x, y});
    if (border_halving) w.apply_border_halving();
    return w;
}

double dirichlet_energy(const std::vector<double>& f, const EnvironmentSpec& env,
                        int level, std::optional<double> k_override,
                        bool border_halving) {
    const WeightGrid w = materialize_weights(env, level, k_override, std::nullopt,
                                             border_halving, true);
    return grid_energy(w, f);
}

ConductanceResult effective_conductance(const WeightGrid& w, const SolveOptions& opts,
                                        const std::vector<double>* warm) {
    const std::size_t side = static_cast<std::size_t>(w.a) + 1;
    ConductanceResult out;
    if (warm && warm->size() == side * side)
        out.potential = *warm;
    else
        out.potential = linear_ramp(w.a);
    out.stats = solve_dirichlet(w, out.potential, opts);
    out.sigma_sq = grid_energy(w, out.potential);
    return out;
}

ConductanceResult effective_conductance(const EnvironmentSpec& env, int level,
                                        std::optional<double> k_override,
                                        const SolveOptions& opts,
                                        const std::vector<double>* warm) {
    const WeightGrid w = materialize_weights(env, level, k_override);
    return effective_conductance(w, opts, warm);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("CONDLAB_CACHE"); env && *env)
        return env;
    return ".condlab-cache";
}

namespace {

std::string tune_cache_key(const EnvironmentSpec& env, int level, double tol,
                           const SolveOptions& opts) {
    nlohmann::ordered_json key;
    key["level"] = level;
    key["tol"] = tol;
    key["residual_tol"] = opts.residual_tol;
    key["max_iters"] = opts.max_iters;
    key["scales"] = nlohmann::ordered_json::array();
    for (int n = 1; n <= level; ++n) {
        const LevelScale& s = env.scales[static_cast<std::size_t>(n) - 1];
        nlohmann::ordered_json row;
        row["a"] = s.a;
        row["b"] = s.b;
        row["beta"] = s.beta;
        row["eta"] = s.eta;
        if (n < level && s.k_tuned) row["k_tuned"] = *s.k_tuned;
        key["scales"].push_back(row);
    }
    return key.dump();
}

std::filesystem::path tune_cache_path(const std::string& key) {
    std::ostringstream name;
    name << "k_" << std::hex << fnv1a64(key) << ".json";
    return std::filesystem::path(default_cache_dir()) / name.str();
}

std::optional<TuneResult> read_tune_cache(const std::filesystem::path& path,
                                          const std::string& key) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.at("key").get<std::string>() != key) return std::nullopt;
        TuneResult r;
        r.k_tuned = doc.at("k_tuned").get<double>();
        r.sigma_sq_at_k = doc.at("sigma_sq_at_k").get<double>();
        r.solves = doc.at("solves").get<int>();
        r.bracket_lo = doc.at("bracket_lo").get<double>();
        r.bracket_hi = doc.at("bracket_hi").get<double>();
        r.bracket_expanded = doc.at("bracket_expanded").get<bool>();
        r.cache_hit = true;
        return r;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void write_tune_cache(const std::filesystem::path& path, const std::string& key,
                      const TuneResult& r) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    nlohmann::ordered_json doc;
    doc["key"] = key;
    doc["k_tuned"] = r.k_tuned;
    doc["sigma_sq_at_k"] = r.sigma_sq_at_k;
    doc["solves"] = r.solves;
    doc["bracket_lo"] = r.bracket_lo;
    doc["bracket_hi"] = r.bracket_hi;
    doc["bracket_expanded"] = r.bracket_expanded;
    std::ofstream out(path, std::ios::trunc);
    if (out) out << doc.dump(2) << "\n";
}

} // namespace

TuneResult tune_k(const EnvironmentSpec& env, int level, double tol,
                  const SolveOptions& opts, bool use_cache) {
    if (!(tol > 0.0)) throw ConfigError("tuning tolerance must be positive");
    const std::string key = tune_cache_key(env, level, tol, opts);
    const std::filesystem::path path = tune_cache_path(key);
    if (use_cache)
        if (auto cached = read_tune_cache(path, key)) return *cached;

    const LevelScale& s = env.scales[static_cast<std::size_t>(level) - 1];
    std::vector<double> warm = linear_ramp(s.a);
    TuneResult r;
    auto measure = [&](double k) {
        ConductanceResult c = effective_conductance(env, level, k, opts, &warm);
        warm = std::move(c.potential);
        ++r.solves;
        return c.sigma_sq;
    };

    const double s0 = measure(0.0);
    if (s0 >= 1.0)
        throw BracketFailure("conductance without strong edges already reaches 1");

    double lo = 0.0;
    double hi = 50.0 * static_cast<double>(s.b);
    double s_hi = measure(hi);
    for (int i = 0; s_hi <= 1.0; ++i) {
        if (i >= 20)
            throw BracketFailure("no K below the doubling cap reaches conductance 1");
        lo = hi;
        hi *= 2.0;
        s_hi = measure(hi);
        r.bracket_expanded = true;
    }
    r.bracket_lo = lo;
    r.bracket_hi = hi;

    double k = hi;
    double sk = s_hi;
    for (int i = 0; std::abs(sk - 1.0) > tol; ++i) {
        if (i >= 200) throw BracketFailure("bisection failed to meet the tolerance");
        k = 0.5 * (lo + hi);
        sk = measure(k);
        if (sk < 1.0)
            lo = k;
        else
            hi = k;
    }
    r.k_tuned = k;
    r.sigma_sq_at_k = sk;
    if (use_cache) write_tune_cache(path, key, r);
    return r;
}

DualityCertificate duality_certificate(const EnvironmentSpec& env, int level,
                                       std::optional<double> k_override,
                                       const SolveOptions& opts) {
    const WeightGrid w = materialize_weights(env, level, k_override);
    ConductanceResult c = effective_conductance(w, opts);
    DualityCertificate cert;
    cert.sigma_sq = c.sigma_sq;
    cert.stats = c.stats;
    cert.max_principle_excess = maximum_principle_excess(c.potential);
    const FlowField J = normalize_flux(gradient_flow(w, c.potential));
    cert.flow_energy_normalized = flow_energy(J, w);
    cert.gap = std::abs(cert.sigma_sq * cert.flow_energy_normalized - 1.0);
    return cert;
}

double maximum_principle_excess(const std::vector<double>& f) {
    double worst = 0.0;
    for (double v : f) {
        worst = std::max(worst, v - 1.0);
        worst = std::max(worst, -v);
    }
    return worst;
}

} // namespace condlab
