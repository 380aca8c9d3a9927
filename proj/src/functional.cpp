#include "condlab/functional.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "condlab/errors.hpp"

namespace condlab {

double bump_profile(double u) {
    const double au = std::abs(u);
    if (au >= 1.0) return 0.0;
    return 1.0 - u * u * (3.0 - 2.0 * au);
}

double bump_eval(const Bump& b, double x, double y) {
    if (b.r == 0.0) return b.h;
    return b.h * bump_profile((x - b.cx) / b.r) * bump_profile((y - b.cy) / b.r);
}

void validate_functional(const FunctionalSpec& spec) {
    if (spec.times.empty()) throw ConfigError("functional needs at least one time");
    if (spec.times.size() != spec.bumps.size())
        throw ConfigError("functional needs one bump per time");
    double prev = 0.0;
    for (double t : spec.times) {
        if (!(t > prev)) throw ConfigError("functional times must increase and be positive");
        prev = t;
    }
    for (const Bump& b : spec.bumps)
        if (b.r < 0.0 || !std::isfinite(b.r) || !std::isfinite(b.h) ||
            !std::isfinite(b.cx) || !std::isfinite(b.cy))
            throw ConfigError("bump parameters must be finite with nonnegative radius");
}

double evaluate_functional(const FunctionalSpec& spec, const ScaledPath& path) {
    const double x0 = path.events.front().x;
    const double y0 = path.events.front().y;
    double prod = 1.0;
    for (std::size_t i = 0; i < spec.times.size(); ++i) {
        const ScaledPoint p = scaled_position_at(path, spec.times[i]);
        prod *= bump_eval(spec.bumps[i], p.x - x0, p.y - y0);
        if (prod == 0.0) break;
    }
    return prod;
}

double evaluate_at_points(const FunctionalSpec& spec,
                          const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() != spec.times.size())
        throw ConfigError("need one sample point per functional time");
    double prod = 1.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        prod *= bump_eval(spec.bumps[i], pts[i].first, pts[i].second);
    return prod;
}

std::vector<FunctionalSpec> library_v1() {
    std::vector<FunctionalSpec> lib;
    lib.push_back({"f1-center", {1.0}, {{0.0, 0.0, 2.0, 1.0}}});
    lib.push_back({"f2-right", {1.0}, {{0.8, 0.0, 1.6, 1.0}}});
    lib.push_back({"f3-up", {0.5}, {{0.0, 0.6, 1.5, 0.9}}});
    lib.push_back({"f4-pair", {0.5, 1.0}, {{0.0, 0.0, 1.8, 1.0}, {0.5, -0.5, 1.5, 0.8}}});
    lib.push_back({"f5-diag", {0.25, 0.75}, {{-0.4, 0.4, 1.4, 1.0}, {0.4, -0.4, 1.4, 1.0}}});
    lib.push_back({"f6-triple",
                   {0.25, 0.5, 1.0},
                   {{0.0, 0.0, 1.6, 1.0}, {0.3, 0.0, 1.5, 0.9}, {-0.3, 0.3, 1.7, 0.8}}});
    lib.push_back({"f7-wide", {0.75}, {{0.0, 0.0, 3.0, 1.0}}});
    lib.push_back({"f8-const-mix", {0.5, 1.0}, {{0.0, 0.0, 0.0, 0.7}, {0.2, 0.2, 1.9, 1.0}}});
    for (const FunctionalSpec& f : lib) validate_functional(f);
    return lib;
}

std::vector<FunctionalSpec> functionals_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("functional file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("functional file must hold an array");
    std::vector<FunctionalSpec> out;
    try {
        for (const auto& item : doc) {
            FunctionalSpec spec;
            spec.id = item.at("id").get<std::string>();
            spec.times = item.at("times").get<std::vector<double>>();
            for (const auto& bj : item.at("bumps")) {
                Bump b;
                b.cx = bj.at("cx").get<double>();
                b.cy = bj.at("cy").get<double>();
                b.r = bj.at("r").get<double>();
                b.h = bj.at("h").get<double>();
                spec.bumps.push_back(b);
            }
            validate_functional(spec);
            out.push_back(std::move(spec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("functional entry malformed: ") + e.what());
    }
    if (out.empty()) throw ConfigError("functional file holds no entries");
    return out;
}

std::string functionals_to_json(const std::vector<FunctionalSpec>& specs) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const FunctionalSpec& spec : specs) {
        nlohmann::ordered_json item;
        item["id"] = spec.id;
        item["times"] = spec.times;
        item["bumps"] = nlohmann::ordered_json::array();
        for (const Bump& b : spec.bumps) {
            nlohmann::ordered_json bj;
            bj["cx"] = b.cx;
            bj["cy"] = b.cy;
            bj["r"] = b.r;
            bj["h"] = b.h;
            item["bumps"].push_back(bj);
        }
        doc.push_back(item);
    }
    return doc.dump(2) + "\n";
}

std::vector<FunctionalSpec> load_functionals(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open functional file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return functionals_from_json(buf.str());
}

} // namespace condlab
