#pragma once

#include <optional>
#include <string>
#include <vector>

namespace condlab {

enum class Profile { strict, desk };

const char* profile_name(Profile p);
Profile profile_from_name(const std::string& s);

// One level of the scale ladder. eta defaults to b^-(1+1/n) when not given.
struct LevelScale {
    int level = 1;
    long a = 0;
    long b = 0;
    long beta = 0;
    double eta = 0.0;
    std::optional<double> k_tuned;
};

double default_eta(long b, int level);

LevelScale make_level(int level, long a, long b, long beta,
                      std::optional<double> eta = std::nullopt,
                      std::optional<double> k_tuned = std::nullopt);

// a_{n-1} with a_0 = 1 implicit.
long prev_a(const std::vector<LevelScale>& scales, int level);
// m_n = a_n / a_{n-1}; ell_n = a_n / b_n. Valid only after validation.
long scale_m(const std::vector<LevelScale>& scales, int level);
long scale_ell(const std::vector<LevelScale>& scales, int level);

struct ConditionVerdict {
    std::string id;  // "wf", "i", "ii", ..., "viii"
    int level = 0;
    std::string status;  // "satisfied" | "violated" | "waived"
    std::string detail;
};

struct ValidationReport {
    bool pass = false;
    Profile profile = Profile::desk;
    std::vector<ConditionVerdict> verdicts;
};

// Never throws: malformed input shows up as violations in the report.
ValidationReport validate_scales(const std::vector<LevelScale>& scales, Profile profile);

}  // namespace condlab
