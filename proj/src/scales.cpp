#include "condlab/scales.hpp"

#include <cmath>
#include <stdexcept>

namespace condlab {

const char* profile_name(Profile p) {
    return p == Profile::strict ? "strict" : "desk";
}

Profile profile_from_name(const std::string& s) {
    if (s == "strict") return Profile::strict;
    if (s == "desk") return Profile::desk;
    throw std::invalid_argument("unknown profile: " + s);
}

double default_eta(long b, int level) {
    return std::pow(static_cast<double>(b), -(1.0 + 1.0 / level));
}

LevelScale make_level(int level, long a, long b, long beta,
                      std::optional<double> eta, std::optional<double> k_tuned) {
    LevelScale s;
    s.level = level;
    s.a = a;
    s.b = b;
    s.beta = beta;
    s.eta = eta ? *eta : default_eta(b, level);
    s.k_tuned = k_tuned;
    return s;
}

long prev_a(const std::vector<LevelScale>& scales, int level) {
    return level <= 1 ? 1 : scales[static_cast<std::size_t>(level) - 2].a;
}

long scale_m(const std::vector<LevelScale>& scales, int level) {
    return scales[static_cast<std::size_t>(level) - 1].a / prev_a(scales, level);
}

long scale_ell(const std::vector<LevelScale>& scales, int level) {
    const LevelScale& s = scales[static_cast<std::size_t>(level) - 1];
    return s.a / s.b;
}

namespace {

void add(std::vector<ConditionVerdict>& out, const std::string& id, int level,
         bool ok, const std::string& detail) {
    out.push_back({id, level, ok ? "satisfied" : "violated", detail});
}

void waive(std::vector<ConditionVerdict>& out, const std::string& id, int level,
           const std::string& detail) {
    out.push_back({id, level, "waived", detail});
}

}  // namespace

ValidationReport validate_scales(const std::vector<LevelScale>& scales, Profile profile) {
    ValidationReport rep;
    rep.profile = profile;
    auto& v = rep.verdicts;
    const bool strict = profile == Profile::strict;

    if (scales.empty()) {
        add(v, "wf", 0, false, "empty ladder");
        rep.pass = false;
        return rep;
    }

    for (std::size_t i = 0; i < scales.size(); ++i) {
        const LevelScale& s = scales[i];
        const int n = s.level;
        const bool shape_ok = n == static_cast<int>(i) + 1 && s.a >= 1 && s.b >= 1 &&
                              s.beta >= 1 && s.b <= s.a && s.beta <= s.a && s.eta > 0.0;
        add(v, "wf", n, shape_ok, "levels consecutive from 1; 1 <= b,beta <= a; eta > 0");
        if (!shape_ok) continue;

        const long ap = prev_a(scales, n);
        add(v, "i", n, s.a % 2 == 0, "a even");
        const bool div_ok = s.b % ap == 0 && s.beta % s.b == 0 && s.a % s.b == 0;
        add(v, "ii", n, div_ok, "a_{n-1} | b, b | beta, b | a");

        if (strict) {
            if (n == 1) add(v, "iii", n, s.b >= 10000000000L, "b_1 >= 10^10");
            const double bn = static_cast<double>(s.b);
            const double an = static_cast<double>(s.a);
            add(v, "iv", n, an / std::sqrt(2.0 * n) <= bn && bn <= an / std::sqrt(1.0 * n),
                "a/sqrt(2n) <= b <= a/sqrt(n)");
            if (n >= 2) {
                const double bprev = static_cast<double>(scales[i - 1].b);
                add(v, "v", n, bn >= std::ldexp(bprev, n - 1), "b_n >= 2^{n-1} b_{n-1}");
            }
            add(v, "vi", n, s.b > 40 * ap, "b_n > 40 a_{n-1}");
            const double bq = bn * std::pow(static_cast<double>(n), 0.25);
            add(v, "vii", n, 100.0 * bn < s.beta && s.beta <= bq,
                "100 b < beta <= b n^{1/4}");
            add(v, "viii", n, bq < 3.0 * s.beta && 3.0 * s.beta < an / 10.0,
                "b n^{1/4} < 3 beta < a/10");
            waive(v, "geo", n, "subsumed by strict inequalities");
        } else {
            if (n == 1) waive(v, "iii", n, "desk profile");
            waive(v, "iv", n, "desk profile");
            if (n >= 2) waive(v, "v", n, "desk profile");
            waive(v, "vi", n, "desk profile");
            waive(v, "vii", n, "desk profile");
            waive(v, "viii", n, "desk profile");
            add(v, "geo", n, 20 * s.b <= s.a && s.beta + s.b <= s.a / 2,
                "20 b <= a and beta + b <= a/2");
        }
    }

    rep.pass = true;
    for (const auto& c : v)
        if (c.status == "violated") rep.pass = false;
    return rep;
}

}  // namespace condlab
