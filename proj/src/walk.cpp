#include "condlab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "condlab/errors.hpp"

namespace condlab {

JumpRates local_rates(const ConductanceField& field, const Coord& pos) {
    JumpRates r;
    r.right = field.edge_value(pos, Coord{pos.x + 1, pos.y});
    r.left = field.edge_value(pos, Coord{pos.x - 1, pos.y});
    r.up = field.edge_value(pos, Coord{pos.x, pos.y + 1});
    r.down = field.edge_value(pos, Coord{pos.x, pos.y - 1});
    r.total = r.right + r.left + r.up + r.down;
    return r;
}

WalkPath simulate_path(const ConductanceField& field, const Coord& start,
                       double horizon, std::uint64_t seed, std::uint64_t path_index,
                       const WalkOptions& opts) {
    if (!(horizon > 0.0)) throw ConfigError("walk horizon must be positive");
    CounterRng hold(seed, StreamPurpose::holding, path_index);
    CounterRng jump(seed, StreamPurpose::jumps, path_index);

    WalkPath path;
    path.events.push_back({0.0, start});
    path.horizon = horizon;
    double t = 0.0;
    Coord pos = start;
    while (true) {
        const JumpRates r = local_rates(field, pos);
        if (!(r.total > 0.0)) throw ZeroRate("walk stranded at a site with no open edge");
        t += hold.next_exponential(r.total);
        if (t >= horizon) break;
        const double u = jump.next_double() * r.total;
        if (u < r.right)
            pos.x += 1;
        else if (u < r.right + r.left)
            pos.x -= 1;
        else if (u < r.right + r.left + r.up)
            pos.y += 1;
        else
            pos.y -= 1;
        path.events.push_back({t, pos});
        if (path.events.size() >= opts.max_events) {
            path.truncated = true;
            path.horizon = t;
            break;
        }
    }
    return path;
}

Coord position_at(const WalkPath& path, double t) {
    if (t < 0.0 || t > path.horizon)
        throw std::out_of_range("query time outside the simulated horizon");
    auto it = std::upper_bound(path.events.begin(), path.events.end(), t,
                               [](double v, const WalkEvent& e) { return v < e.t; });
    return std::prev(it)->pos;
}

ScaledPath rescale(const WalkPath& path, double eps, double required_horizon) {
    if (!(eps > 0.0)) throw ConfigError("scale parameter must be positive");
    ScaledPath out;
    out.eps = eps;
    out.horizon = path.horizon * (eps * eps);
    if (out.horizon < required_horizon)
        throw HorizonTooShort("rescaled path covers less time than required");
    out.events.reserve(path.events.size());
    for (const WalkEvent& e : path.events)
        out.events.push_back({e.t * (eps * eps),
                              static_cast<double>(e.pos.x) * eps,
                              static_cast<double>(e.pos.y) * eps});
    return out;
}

ScaledPath rescale(const ScaledPath& path, double eps, double required_horizon) {
    if (!(eps > 0.0)) throw ConfigError("scale parameter must be positive");
    ScaledPath out;
    out.eps = path.eps * eps;
    out.horizon = path.horizon * (eps * eps);
    if (out.horizon < required_horizon)
        throw HorizonTooShort("rescaled path covers less time than required");
    out.events.reserve(path.events.size());
    for (const ScaledPoint& e : path.events)
        out.events.push_back({e.t * (eps * eps), e.x * eps, e.y * eps});
    return out;
}

ScaledPoint scaled_position_at(const ScaledPath& path, double t) {
    if (t < 0.0 || t > path.horizon)
        throw std::out_of_range("query time outside the rescaled horizon");
    auto it = std::upper_bound(path.events.begin(), path.events.end(), t,
                               [](double v, const ScaledPoint& e) { return v < e.t; });
    const ScaledPoint& p = *std::prev(it);
    return {t, p.x, p.y};
}

double squared_displacement(const ScaledPath& path, double t) {
    const ScaledPoint p = scaled_position_at(path, t);
    const double dx = p.x - path.events.front().x;
    const double dy = p.y - path.events.front().y;
    return dx * dx + dy * dy;
}

bool crossing_event(const ScaledPath& path) {
    if (path.horizon < 1.0)
        throw HorizonTooShort("crossing indicator needs the path up to time 1");
    const double x0 = path.events.front().x;
    const double y0 = path.events.front().y;
    for (const ScaledPoint& e : path.events) {
        if (e.t > 1.0) break;
        const double z1 = e.x - x0;
        const double z2 = e.y - y0;
        if (!(std::abs(z2) < 0.75)) return false;
        if (std::abs(z1) > 2.0) return false;
    }
    const ScaledPoint end = scaled_position_at(path, 1.0);
    return end.x - x0 > 1.0;
}

} // namespace condlab
