#include "condlab/flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "condlab/errors.hpp"
#include "condlab/stats.hpp"

namespace condlab {

FlowField FlowField::zero(long a) {
    if (a < 1) throw std::invalid_argument("flow side must be positive");
    FlowField f;
    f.a = a;
    f.ih.assign(static_cast<std::size_t>(a + 1) * static_cast<std::size_t>(a), 0.0);
    f.iv.assign(static_cast<std::size_t>(a) * static_cast<std::size_t>(a + 1), 0.0);
    return f;
}

void add_path(FlowField& flow, const std::vector<Coord>& waypoints, double current) {
    const long a = flow.a;
    for (const Coord& p : waypoints) {
        if (p.x < 0 || p.x > a || p.y < 0 || p.y > a)
            throw std::invalid_argument("path waypoint outside the square");
    }
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
        const Coord& p = waypoints[i];
        const Coord& q = waypoints[i + 1];
        if (p.x == q.x && p.y == q.y) continue;
        if (p.x == q.x) {
            const long step = q.y > p.y ? 1 : -1;
            for (long y = p.y; y != q.y; y += step) {
                const long lo = step > 0 ? y : y - 1;
                flow.iv_at(p.x, lo) += step > 0 ? current : -current;
            }
        } else if (p.y == q.y) {
            const long step = q.x > p.x ? 1 : -1;
            for (long x = p.x; x != q.x; x += step) {
                const long lo = step > 0 ? x : x - 1;
                flow.ih_at(lo, p.y) += step > 0 ? current : -current;
            }
        } else {
            throw std::invalid_argument("path segments must be axis-aligned");
        }
    }
}

double flux(const FlowField& flow) {
    const long a = flow.a;
    CompensatedSum total;
    for (long x = 0; x <= a; ++x) {
        if (x < a) total.add(flow.ih_at(x, a));
        if (x > 0) total.add(-flow.ih_at(x - 1, a));
        total.add(-flow.iv_at(x, a - 1));
    }
    return total.value();
}

double node_divergence(const FlowField& flow, long x, long y) {
    const long a = flow.a;
    double out = 0.0;
    if (x < a) out += flow.ih_at(x, y);
    if (x > 0) out -= flow.ih_at(x - 1, y);
    if (y < a) out += flow.iv_at(x, y);
    if (y > 0) out -= flow.iv_at(x, y - 1);
    return out;
}

double max_interior_divergence(const FlowField& flow) {
    double worst = 0.0;
    for (long y = 1; y < flow.a; ++y)
        for (long x = 1; x < flow.a; ++x)
            worst = std::max(worst, std::abs(node_divergence(flow, x, y)));
    return worst;
}

namespace {

double edge_energy(double current, double weight) {
    if (current == 0.0) return 0.0;
    if (!(weight > 0.0))
        throw InfiniteEnergy("nonzero current through a zero-conductance edge");
    return current * current / weight;
}

} // namespace

double flow_energy(const FlowField& flow, const WeightGrid& w) {
    if (w.a != flow.a) throw std::invalid_argument("flow and weight grids disagree on side");
    const long a = flow.a;
    CompensatedSum total;
    for (long y = 0; y <= a; ++y)
        for (long x = 0; x < a; ++x)
            total.add(edge_energy(flow.ih_at(x, y), w.h(x, y)));
    for (long y = 0; y < a; ++y)
        for (long x = 0; x <= a; ++x)
            total.add(edge_energy(flow.iv_at(x, y), w.v(x, y)));
    return total.value();
}

double tile_energy(const FlowField& flow, const WeightGrid& w, long tx, long ty,
                   long b, bool halve_shared) {
    const long a = flow.a;
    const long x0 = tx * b;
    const long y0 = ty * b;
    if (x0 < 0 || y0 < 0 || x0 + b > a || y0 + b > a)
        throw std::invalid_argument("tile outside the square");
    CompensatedSum total;
    for (long y = y0; y <= y0 + b; ++y) {
        const bool shared_row = (y == y0 || y == y0 + b) && y != 0 && y != a;
        for (long x = x0; x < x0 + b; ++x) {
            double e = edge_energy(flow.ih_at(x, y), w.h(x, y));
            total.add(halve_shared && shared_row ? 0.5 * e : e);
        }
    }
    for (long x = x0; x <= x0 + b; ++x) {
        const bool shared_col = (x == x0 || x == x0 + b) && x != 0 && x != a;
        for (long y = y0; y < y0 + b; ++y) {
            double e = edge_energy(flow.iv_at(x, y), w.v(x, y));
            total.add(halve_shared && shared_col ? 0.5 * e : e);
        }
    }
    return total.value();
}

FlowField gradient_flow(const WeightGrid& w, const std::vector<double>& f) {
    const long a = w.a;
    const std::size_t side = static_cast<std::size_t>(a) + 1;
    if (f.size() != side * side)
        throw std::invalid_argument("potential size does not match the grid");
    FlowField flow = FlowField::zero(a);
    auto fat = [&](long x, long y) { return f[static_cast<std::size_t>(y) * side + static_cast<std::size_t>(x)]; };
    for (long y = 0; y <= a; ++y)
        for (long x = 0; x < a; ++x)
            flow.ih_at(x, y) = w.h(x, y) * (fat(x + 1, y) - fat(x, y));
    for (long y = 0; y < a; ++y)
        for (long x = 0; x <= a; ++x)
            flow.iv_at(x, y) = w.v(x, y) * (fat(x, y + 1) - fat(x, y));
    return flow;
}

void scale_flow(FlowField& flow, double s) {
    for (double& v : flow.ih) v *= s;
    for (double& v : flow.iv) v *= s;
}

FlowField normalize_flux(FlowField flow) {
    const double fx = flux(flow);
    if (fx == 0.0 || !std::isfinite(fx))
        throw std::invalid_argument("cannot normalize a flow with zero flux");
    scale_flow(flow, 1.0 / fx);
    return flow;
}

FlowField column_flow(long a) {
    return filament_flow(a, DiversionPlan{});
}

FlowField reflect_flow_diagonal(const FlowField& flow) {
    const long a = flow.a;
    FlowField out = FlowField::zero(a);
    for (long y = 0; y < a; ++y)
        for (long x = 0; x <= a; ++x)
            out.ih_at(y, x) = flow.iv_at(x, y);
    for (long y = 0; y <= a; ++y)
        for (long x = 0; x < a; ++x)
            out.iv_at(y, x) = flow.ih_at(x, y);
    return out;
}

FlowField filament_flow(long a, const DiversionPlan& plan) {
    FlowField flow = FlowField::zero(a);
    for (const auto& [col, path] : plan) {
        if (col <= 0 || col >= a)
            throw RoutingConflict("diversion requested for a boundary or out-of-range column");
        if (path.size() < 2 || !(path.front() == Coord{col, a}) || !(path.back() == Coord{col, 0}))
            throw RoutingConflict("diversion path must run from (x,a) to (x,0)");
    }
    for (long x = 0; x <= a; ++x) {
        const double c = (x == 0 || x == a) ? 1.0 / (2.0 * static_cast<double>(a))
                                            : 1.0 / static_cast<double>(a);
        auto it = plan.find(x);
        if (it == plan.end()) {
            add_path(flow, {{x, a}, {x, 0}}, c);
        } else {
            add_path(flow, it->second, c);
        }
    }
    return flow;
}

DiversionPlan tile_dodge_plan(long a, long b, long y0, const std::vector<long>& blocked_cols) {
    std::vector<long> cols = blocked_cols;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    DiversionPlan plan;
    long k = 0;
    for (long x : cols) {
        const long xs = x - (b + 1);
        const long yl = y0 - k;
        const long yh = y0 + b + k;
        if (xs <= 0 || yl < 0 || yh > a)
            throw RoutingConflict("tile dodge leaves the square");
        plan[x] = {{x, a}, {x, yh}, {xs, yh}, {xs, yl}, {x, yl}, {x, 0}};
        ++k;
    }
    return plan;
}

DiversionPlan obstacle_plan(const LevelScale& s) {
    const long a = s.a;
    const long b = s.b;
    const long ah = a / 2;
    DiversionPlan plan;
    for (long bar : {ah - s.beta, ah + s.beta}) {
        for (long x = bar - b; x <= bar + b; ++x) {
            const bool left = x <= bar;
            const long k = left ? bar - x : x - bar;
            const long xs = left ? x - (b + 1) : x + (b + 1);
            const long yl = ah - 10 * b - 1 - k;
            const long yin = ah - 10 * b + 1 + k;
            const long yout = ah + 10 * b - 1 - k;
            const long yh = ah + 10 * b + 1 + k;
            if (xs <= 0 || xs >= a || yl < 0 || yh > a)
                throw RoutingConflict("bar diversion leaves the square");
            if (plan.count(x))
                throw RoutingConflict("two diversions claim the same column");
            plan[x] = {{x, a},    {x, yh},   {xs, yh}, {xs, yout}, {bar, yout},
                       {bar, yin}, {xs, yin}, {xs, yl}, {x, yl},   {x, 0}};
        }
    }
    return plan;
}

FlowField build_diverted_flow(const EnvironmentSpec& env, int level) {
    if (level < 1 || static_cast<std::size_t>(level) > env.scales.size())
        throw ConfigError("level out of range for this environment");
    const LevelScale& s = env.scales[static_cast<std::size_t>(level) - 1];
    FlowField flow = filament_flow(s.a, obstacle_plan(s));
    const ObstacleAtlas atlas = obstacle_atlas(s);
    for (const Edge& e : atlas.low_edges) {
        const double cur = e.dir == EdgeDir::vertical ? flow.iv_at(e.x, e.y)
                                                      : flow.ih_at(e.x, e.y);
        if (cur != 0.0)
            throw RoutingConflict("diverted flow crosses a slow edge at (" +
                                  std::to_string(e.x) + "," + std::to_string(e.y) + ")");
    }
    return flow;
}

} // namespace condlab
