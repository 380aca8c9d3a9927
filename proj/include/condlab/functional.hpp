#pragma once

#include <string>
#include <utility>
#include <vector>

#include "condlab/walk.hpp"

namespace condlab {

// Smooth compactly supported profile: s(u) = 1 - u^2 (3 - 2|u|) on
// |u| <= 1, zero outside. s(0) = 1 and |s'| <= 3/2.
double bump_profile(double u);

// Separable bump h * s((x-cx)/r) * s((y-cy)/r). Radius 0 means the
// constant h with no spatial dependence.
struct Bump {
    double cx = 0.0, cy = 0.0;
    double r = 0.0;
    double h = 1.0;
};

double bump_eval(const Bump& b, double x, double y);

// Product functional prod_i bump_i(Z(t_i)) with positions relative to the
// path's starting point. Times are strictly increasing and positive.
struct FunctionalSpec {
    std::string id;
    std::vector<double> times;
    std::vector<Bump> bumps;

    double horizon() const { return times.empty() ? 0.0 : times.back(); }
};

// Throws ConfigError on unsorted or nonpositive times, mismatched bump
// count, or negative radius.
void validate_functional(const FunctionalSpec& spec);

double evaluate_functional(const FunctionalSpec& spec, const ScaledPath& path);

// Same product on explicit relative positions, one per time.
double evaluate_at_points(const FunctionalSpec& spec,
                          const std::vector<std::pair<double, double>>& pts);

// Fixed batch of eight functionals with radii at least 1.2 and times in
// [1/4, 1].
std::vector<FunctionalSpec> library_v1();

std::vector<FunctionalSpec> functionals_from_json(const std::string& text);
std::string functionals_to_json(const std::vector<FunctionalSpec>& specs);
std::vector<FunctionalSpec> load_functionals(const std::string& path);

} // namespace condlab
