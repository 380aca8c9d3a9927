#include "condlab/environment.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "condlab/errors.hpp"
#include "condlab/rng.hpp"

namespace condlab {

std::vector<Coord> sample_offsets(const std::vector<LevelScale>& scales, std::uint64_t seed) {
    CounterRng rng(seed, StreamPurpose::offsets, 0);
    std::vector<Coord> offsets;
    offsets.reserve(scales.size());
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (i == 0) {
            const long a1 = scales[0].a;
            const long x = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(a1)));
            const long y = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(a1)));
            offsets.push_back({x, y});
        } else {
            const long ap = scales[i - 1].a;
            const long m = scales[i].a / ap;
            const long u = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m)));
            const long v = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(m)));
            offsets.push_back({offsets[i - 1].x + ap * u, offsets[i - 1].y + ap * v});
        }
    }
    return offsets;
}

namespace {

void throw_if_invalid(const std::vector<LevelScale>& scales, Profile profile) {
    ValidationReport rep = validate_scales(scales, profile);
    if (!rep.pass) {
        std::string ids;
        for (const auto& c : rep.verdicts)
            if (c.status == "violated") ids += " (" + c.id + ", level " + std::to_string(c.level) + ")";
        throw ValidationFailure("scale validation failed:" + ids);
    }
}

} // namespace

EnvironmentSpec make_environment(std::vector<LevelScale> scales, std::uint64_t seed,
                                 Profile profile) {
    throw_if_invalid(scales, profile);
    EnvironmentSpec env;
    env.profile = profile;
    env.scales = std::move(scales);
    env.seed = seed;
    env.offsets = sample_offsets(env.scales, seed);
    return env;
}

std::vector<LevelScale> preset_scales(const std::string& name) {
    if (name == "desk1") return {make_level(1, 256, 8, 104)};
    if (name == "fast1") return {make_level(1, 128, 4, 52)};
    if (name == "desk2")
        return {make_level(1, 256, 8, 104), make_level(2, 8192, 256, 3328)};
    if (name == "fast2")
        return {make_level(1, 128, 4, 52), make_level(2, 4096, 128, 1664)};
    throw ConfigError("unknown preset: " + name);
}

namespace {

// Klein four-group on the square [0,a]^2 acting on canonical edges.
Edge reflect_r1(const Edge& e) {
    if (e.dir == EdgeDir::vertical) return {EdgeDir::horizontal, e.y, e.x};
    return {EdgeDir::vertical, e.y, e.x};
}

Edge reflect_r2(const Edge& e, long a) {
    if (e.dir == EdgeDir::vertical) return {EdgeDir::horizontal, a - e.y - 1, a - e.x};
    return {EdgeDir::vertical, a - e.y, a - e.x - 1};
}

bool edge_less(const Edge& p, const Edge& q) {
    return std::tuple(static_cast<int>(p.dir), p.x, p.y) <
           std::tuple(static_cast<int>(q.dir), q.x, q.y);
}

void check_bounds(const Edge& e, long a) {
    const long x1 = e.dir == EdgeDir::horizontal ? e.x + 1 : e.x;
    const long y1 = e.dir == EdgeDir::vertical ? e.y + 1 : e.y;
    if (e.x < 0 || e.y < 0 || x1 > a || y1 > a)
        throw InfeasibleGeometry("obstacle edge leaves the square [0,a]^2");
}

void push_orbit(std::vector<Edge>& out, const Edge& e, long a) {
    out.push_back(e);
    out.push_back(reflect_r1(e));
    out.push_back(reflect_r2(e, a));
    out.push_back(reflect_r1(reflect_r2(e, a)));
}

void sort_unique(std::vector<Edge>& v) {
    std::sort(v.begin(), v.end(), edge_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ObstacleAtlas obstacle_atlas(const LevelScale& scale) {
    const long a = scale.a, b = scale.b, beta = scale.beta;
    const long ap = a / 2;
    const long X = ap - beta;
    const long y0 = ap - 10 * b;
    const long y1 = ap + 10 * b;

    ObstacleAtlas atlas;
    atlas.level = scale.level;
    atlas.a = a;
    atlas.b = b;
    atlas.beta = beta;

    for (long y = y0; y < y1; ++y) push_orbit(atlas.high_edges, {EdgeDir::vertical, X, y}, a);
    for (long x = X - b; x <= X + b; ++x) {
        push_orbit(atlas.low_edges, {EdgeDir::vertical, x, y1}, a);
        push_orbit(atlas.low_edges, {EdgeDir::vertical, x, y0 - 1}, a);
    }
    sort_unique(atlas.high_edges);
    sort_unique(atlas.low_edges);

    for (const Edge& e : atlas.high_edges) check_bounds(e, a);
    for (const Edge& e : atlas.low_edges) check_bounds(e, a);

    // The bar and crossbar sets are disjoint for every geometry this builder
    // accepts; a conflict would mean the class predicate disagrees with the
    // enumeration.
    std::vector<Edge> both;
    std::set_intersection(atlas.high_edges.begin(), atlas.high_edges.end(),
                          atlas.low_edges.begin(), atlas.low_edges.end(),
                          std::back_inserter(both), edge_less);
    if (!both.empty())
        throw std::logic_error("obstacle atlas classes an edge both high and low");
    return atlas;
}

std::optional<EdgeClass> classify_edge(const LevelScale& scale, EdgeDir dir, long x, long y) {
    const long a = scale.a, b = scale.b, beta = scale.beta;
    const long ap = a / 2;
    const long lo_bar = ap - beta;
    const long hi_bar = ap + beta;
    const long band0 = ap - 10 * b;
    const long band1 = ap + 10 * b;
    if (dir == EdgeDir::vertical) {
        if ((x == lo_bar || x == hi_bar) && y >= band0 && y < band1) return EdgeClass::high;
        if ((y == band0 - 1 || y == band1) &&
            (std::labs(x - lo_bar) <= b || std::labs(x - hi_bar) <= b))
            return EdgeClass::low;
    } else {
        if ((y == lo_bar || y == hi_bar) && x >= band0 && x < band1) return EdgeClass::high;
        if ((x == band0 - 1 || x == band1) &&
            (std::labs(y - lo_bar) <= b || std::labs(y - hi_bar) <= b))
            return EdgeClass::low;
    }
    return std::nullopt;
}

EdgeCensus special_edge_census(const EnvironmentSpec& env, int level) {
    const ObstacleAtlas atlas = obstacle_atlas(env.scales.at(static_cast<std::size_t>(level) - 1));
    return {static_cast<long>(atlas.high_edges.size()),
            static_cast<long>(atlas.low_edges.size())};
}

ConductanceField::ConductanceField(const EnvironmentSpec& env, int level,
                                   std::optional<double> k_override,
                                   std::optional<double> eta_override) {
    if (level < 1 || level > static_cast<int>(env.scales.size()))
        throw ConfigError("conductance level out of range");
    levels_.reserve(static_cast<std::size_t>(level));
    for (int n = 1; n <= level; ++n) {
        const LevelScale& s = env.scales[static_cast<std::size_t>(n) - 1];
        const Coord& o = env.offsets.at(static_cast<std::size_t>(n) - 1);
        const bool top = n == level;
        LevelCtx ctx{s.a, s.b, s.beta, o.x, o.y,
                     top && eta_override ? *eta_override : s.eta,
                     top && k_override ? k_override : s.k_tuned, s};
        levels_.push_back(ctx);
    }
}

double ConductanceField::edge_value(const Edge& e) const {
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
        const LevelCtx& L = *it;
        const long rx = floor_mod(e.x - L.ox, L.a);
        const long ry = floor_mod(e.y - L.oy, L.a);
        const auto cls = classify_edge(L.shape, e.dir, rx, ry);
        if (!cls) continue;
        if (*cls == EdgeClass::low) return L.eta;
        if (!L.K)
            throw MissingTunedK("edge classed high at level " +
                                std::to_string(L.shape.level) + " but K is not set");
        return *L.K;
    }
    return 1.0;
}

double conductance(const Edge& e, const EnvironmentSpec& env, int level) {
    return ConductanceField(env, level).edge_value(e);
}

namespace {

using json = nlohmann::ordered_json;

json env_to_doc(const EnvironmentSpec& env) {
    json doc;
    doc["profile"] = profile_name(env.profile);
    doc["seed"] = env.seed;
    doc["scales"] = json::array();
    for (const LevelScale& s : env.scales) {
        json level;
        level["level"] = s.level;
        level["a"] = s.a;
        level["b"] = s.b;
        level["beta"] = s.beta;
        level["eta"] = s.eta;
        if (s.k_tuned)
            level["k_tuned"] = *s.k_tuned;
        else
            level["k_tuned"] = nullptr;
        doc["scales"].push_back(level);
    }
    doc["offsets"] = json::array();
    for (const Coord& o : env.offsets) doc["offsets"].push_back(json::array({o.x, o.y}));
    return doc;
}

EnvironmentSpec env_from_doc(const json& doc) {
    EnvironmentSpec env;
    env.profile = profile_from_name(doc.at("profile").get<std::string>());
    env.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& level : doc.at("scales")) {
        LevelScale s;
        s.level = level.at("level").get<int>();
        s.a = level.at("a").get<long>();
        s.b = level.at("b").get<long>();
        s.beta = level.at("beta").get<long>();
        s.eta = level.contains("eta") && !level["eta"].is_null()
                    ? level["eta"].get<double>()
                    : default_eta(s.b, s.level);
        if (level.contains("k_tuned") && !level["k_tuned"].is_null())
            s.k_tuned = level["k_tuned"].get<double>();
        env.scales.push_back(s);
    }
    throw_if_invalid(env.scales, env.profile);
    if (doc.contains("offsets") && !doc["offsets"].is_null() && !doc["offsets"].empty()) {
        for (const auto& o : doc["offsets"])
            env.offsets.push_back({o.at(0).get<long>(), o.at(1).get<long>()});
        if (env.offsets.size() != env.scales.size())
            throw ValidationFailure("offset list length does not match scale count");
        for (std::size_t i = 0; i < env.offsets.size(); ++i) {
            const long a = env.scales[i].a;
            const Coord& o = env.offsets[i];
            if (o.x < 0 || o.y < 0 || o.x >= a || o.y >= a)
                throw ValidationFailure("offset outside [0, a-1]^2");
            if (i > 0) {
                const long ap = env.scales[i - 1].a;
                if (floor_mod(o.x, ap) != floor_mod(env.offsets[i - 1].x, ap) ||
                    floor_mod(o.y, ap) != floor_mod(env.offsets[i - 1].y, ap))
                    throw ValidationFailure("offset congruence violated");
            }
        }
    } else {
        env.offsets = sample_offsets(env.scales, env.seed);
    }
    return env;
}

}  // namespace

std::string environment_to_json(const EnvironmentSpec& env) {
    return env_to_doc(env).dump(2) + "\n";
}

EnvironmentSpec environment_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("environment JSON parse error: ") + e.what());
    }
    try {
        return env_from_doc(doc);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("environment JSON schema error: ") + e.what());
    }
}

ValidationReport validate_environment_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("environment JSON parse error: ") + e.what());
    }
    Profile profile = Profile::desk;
    std::vector<LevelScale> scales;
    std::vector<Coord> offsets;
    try {
        profile = profile_from_name(doc.at("profile").get<std::string>());
        for (const auto& level : doc.at("scales")) {
            LevelScale s;
            s.level = level.at("level").get<int>();
            s.a = level.at("a").get<long>();
            s.b = level.at("b").get<long>();
            s.beta = level.at("beta").get<long>();
            s.eta = level.contains("eta") && !level["eta"].is_null()
                        ? level["eta"].get<double>()
                        : default_eta(s.b, s.level);
            scales.push_back(s);
        }
        if (doc.contains("offsets") && !doc["offsets"].is_null())
            for (const auto& o : doc["offsets"])
                offsets.push_back({o.at(0).get<long>(), o.at(1).get<long>()});
    } catch (const json::exception& e) {
        throw ConfigError(std::string("environment JSON schema error: ") + e.what());
    }

    ValidationReport rep = validate_scales(scales, profile);
    if (!offsets.empty()) {
        if (offsets.size() != scales.size()) {
            rep.verdicts.push_back({"offsets", 0, "violated",
                                    "offset list length does not match scale count"});
        } else {
            for (std::size_t i = 0; i < offsets.size(); ++i) {
                const long a = scales[i].a;
                const Coord& o = offsets[i];
                std::string status = "satisfied";
                std::string detail = "offset inside the fundamental square";
                if (o.x < 0 || o.y < 0 || o.x >= a || o.y >= a) {
                    status = "violated";
                    detail = "offset outside [0, a-1]^2";
                } else if (i > 0) {
                    const long ap = scales[i - 1].a;
                    if (floor_mod(o.x, ap) != floor_mod(offsets[i - 1].x, ap) ||
                        floor_mod(o.y, ap) != floor_mod(offsets[i - 1].y, ap)) {
                        status = "violated";
                        detail = "offset congruence with the previous level broken";
                    }
                }
                rep.verdicts.push_back({"offsets", scales[i].level, status, detail});
            }
        }
        rep.pass = true;
        for (const auto& v : rep.verdicts)
            if (v.status == "violated") rep.pass = false;
    }
    return rep;
}

EnvironmentSpec load_environment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open environment file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return environment_from_json(buf.str());
}

void save_environment(const EnvironmentSpec& env, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write environment file: " + path);
    out << environment_to_json(env);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace condlab
