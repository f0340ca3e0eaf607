#pragma once

#include "hypell/catalog.hpp"
#include "hypell/lattice.hpp"
#include "hypell/number.hpp"
#include "hypell/positivity.hpp"
#include "hypell/seshadri.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hypell {

/// m <= on_alpha * alpha + on_beta * beta + offset. Coefficients are
/// non-negative so every cap is monotone in (alpha, beta).
struct Cap {
    Integer on_alpha;
    Integer on_beta;
    Integer offset = 0;

    [[nodiscard]] Integer eval(const Integer& alpha, const Integer& beta) const
    {
        return on_alpha * alpha + on_beta * beta + offset;
    }
};

/// Bezout caps on the total multiplicity m of a curve (alpha, beta) through
/// the points; m is taken as the minimum over all caps.
struct ConstraintSet {
    std::vector<Cap> caps;
    std::string description;

    void validate() const
    {
        if (caps.empty())
            throw Error(ErrorCode::InvalidInput, "constraint set has no caps");
        for (const auto& c : caps)
            if (c.on_alpha < 0 || c.on_beta < 0)
                throw Error(ErrorCode::InvalidInput, "cap coefficients must be non-negative");
    }
};

/// Numerator of the ratio: on_alpha * alpha + on_beta * beta, i.e. L.C with
/// on_alpha = b, on_beta = a.
struct RatioWeights {
    Rational on_alpha;
    Rational on_beta;
};

struct BoxMinimum {
    Rational value;
    Integer alpha;
    Integer beta;
    Integer m;
};

/// Exhaustive minimum of (w_a alpha + w_b beta) / m over alpha, beta in [1..box],
/// with m the tightest cap; cells with m <= 0 are skipped.
inline BoxMinimum box_minimum(const RatioWeights& w, const ConstraintSet& cons, int box)
{
    if (box < 1)
        throw Error(ErrorCode::InvalidInput, "box size must be at least 1");
    cons.validate();

    Integer den_a = denominator(w.on_alpha);
    Integer den_b = denominator(w.on_beta);
    Integer common = den_a / gcd(den_a, den_b) * den_b;
    Integer pa = numerator(w.on_alpha) * (common / den_a);
    Integer pb = numerator(w.on_beta) * (common / den_b);

    std::optional<BoxMinimum> best;
    Integer best_num;
    Integer best_m;
    for (int alpha = 1; alpha <= box; ++alpha) {
        for (int beta = 1; beta <= box; ++beta) {
            Integer m = cons.caps.front().eval(alpha, beta);
            for (std::size_t i = 1; i < cons.caps.size(); ++i)
                m = std::min(m, cons.caps[i].eval(alpha, beta));
            if (m <= 0)
                continue;
            Integer num = pa * alpha + pb * beta;
            if (!best || num * best_m < best_num * m) {
                best = BoxMinimum{0, alpha, beta, m};
                best_num = num;
                best_m = m;
            }
        }
    }
    if (!best)
        throw Error(ErrorCode::EmptyFeasible, "no cell of the box admits a positive multiplicity");
    best->value = Rational(best_num, best_m * common);
    return *best;
}

inline Rational min_ratio_over_box(const RatioWeights& w, const ConstraintSet& cons, int box)
{
    return box_minimum(w, cons, box).value;
}

struct Violation {
    std::string parameters;
    std::optional<Integer> alpha;
    std::optional<Integer> beta;
    std::optional<Integer> m;
    Rational found;
    Rational claimed;
    std::string note;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of a grid verification. Merging is associative and commutative up
/// to violation order, which follows the partition order.
struct OracleReport {
    std::string grid;
    std::int64_t instances_checked = 0;
    std::vector<Violation> violations;
    std::optional<Rational> min_gap;
    std::map<std::string, std::int64_t> equalities; // observed equality cases by label

    [[nodiscard]] bool pass() const { return violations.empty(); }

    void record_gap(const Rational& gap)
    {
        if (!min_gap || gap < *min_gap)
            min_gap = gap;
    }

    void merge(OracleReport other)
    {
        instances_checked += other.instances_checked;
        for (auto& v : other.violations)
            violations.push_back(std::move(v));
        if (other.min_gap)
            record_gap(*other.min_gap);
        for (const auto& [label, count] : other.equalities)
            equalities[label] += count;
    }

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

namespace detail {

/// Splits [0, n) into `jobs` contiguous chunks, runs them concurrently and
/// merges the partial reports in chunk order.
inline OracleReport run_partitioned(int n, int jobs, const std::function<void(int, OracleReport&)>& body)
{
    jobs = std::max(1, std::min(jobs, std::max(n, 1)));
    std::vector<OracleReport> parts(static_cast<std::size_t>(jobs));
    auto chunk = [&](int j) {
        int begin = n * j / jobs;
        int end = n * (j + 1) / jobs;
        for (int i = begin; i < end; ++i)
            body(i, parts[static_cast<std::size_t>(j)]);
    };
    if (jobs == 1) {
        chunk(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back(chunk, j);
        for (auto& t : threads)
            t.join();
    }
    OracleReport out;
    for (auto& p : parts)
        out.merge(std::move(p));
    return out;
}

inline std::string params(std::initializer_list<std::pair<const char*, std::string>> kv)
{
    std::string s;
    for (const auto& [k, v] : kv) {
        if (!s.empty())
            s += ' ';
        s += k;
        s += '=';
        s += v;
    }
    return s;
}

// L.C on X for C = (alpha, beta), computed without the lattice module
inline Integer pairing_on_x(const Integer& a, const Integer& b, const Integer& alpha, const Integer& beta)
{
    return a * beta + b * alpha;
}

inline Integer least_k(const Integer& r)
{
    Integer k = 0;
    while (2 * k * k < r)
        ++k;
    return k;
}

} // namespace detail

/// Checks the multi-point values at special configurations: the Bezout-capped
/// infimum over curve classes in the box must not undercut the returned lower
/// bound, and the fibre witnesses must reproduce the returned value.
inline OracleReport verify_multipoint_formula(const SurfaceData& s, int grid_max, int box, int jobs = 1)
{
    if (grid_max < 1 || box < 1)
        throw Error(ErrorCode::InvalidInput, "grid_max and box must be at least 1");

    const int type = s.type_id;
    const bool odd = is_odd_type(s);
    std::vector<int> t0_values;
    if (odd)
        t0_values = {1, 2, 3, 4};
    else
        t0_values = {type == 2 ? 4 : type == 4 ? 2 : 3};

    OracleReport report = detail::run_partitioned(grid_max, jobs, [&](int ia, OracleReport& rep) {
        const Integer a = ia + 1;
        for (int ib = 1; ib <= grid_max; ++ib) {
            const Integer b = ib;
            for (int t0 : t0_values) {
                for (int s0 = 1; s0 <= 4; ++s0) {
                    std::vector<int> lb_values{s0};
                    if (type == 1)
                        lb_values.push_back(2 * s0);
                    for (int lB : lb_values) {
                        const int lA = t0;
                        PointConfig cfg{lA * lB, s0, t0, lA, lB, true};
                        auto where = detail::params({{"type", std::to_string(type)},
                                                     {"a", a.str()},
                                                     {"b", b.str()},
                                                     {"t0", std::to_string(t0)},
                                                     {"s0", std::to_string(s0)},
                                                     {"lA", std::to_string(lA)},
                                                     {"lB", std::to_string(lB)}});
                        ++rep.instances_checked;
                        SeshadriResult res = multipoint_special(DivisorClass(a, b), s, cfg);
                        if (res.status == SeshadriStatus::HypothesesNotMet) {
                            rep.violations.push_back({where, {}, {}, {}, 0, 0, "hypotheses unexpectedly rejected"});
                            continue;
                        }

                        // Bezout caps summed over the covering fibres
                        ConstraintSet cons;
                        Integer beta_cap = odd ? Integer(s.mu * lA) : Integer(lA);
                        cons.caps.push_back({0, beta_cap, 0});
                        cons.caps.push_back({Integer(s.gamma_over_mu * lB), 0, 0});
                        BoxMinimum bm = box_minimum({Rational(b), Rational(a)}, cons, box);
                        if (bm.value < res.lower) {
                            rep.violations.push_back(
                                {where, bm.alpha, bm.beta, bm.m, bm.value, res.lower, "box infimum below lower bound"});
                        } else {
                            rep.record_gap(bm.value - res.lower);
                        }

                        // the fibre witnesses, recomputed from their classes
                        const Rational target = res.value ? *res.value : res.upper.q();
                        bool attained = false;
                        for (const auto& w : res.attaining) {
                            Rational ratio(detail::pairing_on_x(a, b, w.curve.a, w.curve.b), w.multiplicity);
                            if (ratio != w.ratio)
                                rep.violations.push_back({where, w.curve.a, w.curve.b, w.multiplicity, ratio, w.ratio,
                                                          "witness ratio mismatch"});
                            attained = attained || ratio == target;
                        }
                        if (!attained)
                            rep.violations.push_back({where, {}, {}, {}, 0, target, "value not attained by a fibre"});
                        if (bm.value == target)
                            ++rep.equalities["box infimum = value"];
                    }
                }
            }
        }
    });
    report.grid = "type " + std::to_string(type) + ", a,b in [1.." + std::to_string(grid_max) +
                  "], s0 in [1..4], t0 per type, box " + std::to_string(box);
    return report;
}

/// Checks the single-point inequality chain on odd types: Bezout caps against
/// the A-fibre and the B-fibre through x give (L.C)/m >= a/(2mu) + b/2 (resp.
/// (a+b)/2 on Singular A), and every exact value claimed by point_on_locus and
/// very_general_point is at most that chain value.
inline OracleReport verify_single_point_chain(const SurfaceData& s, int grid_max, int box, int jobs = 1)
{
    if (!is_odd_type(s))
        throw Error(ErrorCode::UnsupportedType, "single-point chain is only defined on types 1, 3, 5, 7");
    if (grid_max < 1 || box < 1)
        throw Error(ErrorCode::InvalidInput, "grid_max and box must be at least 1");

    const Integer mu = s.mu;
    const int type = s.type_id;

    // grid cells plus probes on the boundaries of the equality conditions
    std::set<std::pair<int, int>> ab_base;
    for (int a = 1; a <= grid_max; ++a)
        for (int b = 1; b <= grid_max; ++b)
            ab_base.insert({a, b});
    for (int b = 1; b <= grid_max; ++b)
        ab_base.insert({s.mu * (2 * s.mu - 1) * b, b});
    for (int t = 1; s.mu * t <= grid_max; ++t)
        ab_base.insert({s.mu * t, (2 * s.mu - 1) * t});

    OracleReport report = detail::run_partitioned(grid_max, jobs, [&](int ir, OracleReport& rep) {
        const int r = ir + 1;
        const Integer k = detail::least_k(r);
        for (int d = 1; d <= grid_max; ++d) {
            std::set<std::pair<int, int>> ab = ab_base;
            for (int b = 1; b <= grid_max; ++b) {
                int probe = s.mu * (2 * s.mu - 1) * b - 2 * s.mu * d;
                if (probe > 0)
                    ab.insert({probe, b});
            }
            for (auto [ai, bi] : ab) {
                const Integer a = ai;
                const Integer b = bi;
                if (a < 2 * k * d || b < 2 * k * d)
                    continue;
                ++rep.instances_checked;
                auto where = detail::params({{"type", std::to_string(type)},
                                             {"a", a.str()},
                                             {"b", b.str()},
                                             {"d", std::to_string(d)},
                                             {"r", std::to_string(r)}});

                ConstraintSet smooth{{{0, mu, 0}, {1, 0, 0}}, "m <= mu*beta, m <= alpha"};
                ConstraintSet singular{{{0, 1, 0}, {1, 0, 0}}, "m <= beta, m <= alpha"};
                RatioWeights half{Rational(b, 2), Rational(a, 2)};
                const Rational chain = Rational(a, 2 * mu) + Rational(b, 2);
                const Rational singular_chain = Rational(a + b, 2);

                BoxMinimum sm = box_minimum(half, smooth, box);
                if (sm.value < chain)
                    rep.violations.push_back({where, sm.alpha, sm.beta, sm.m, sm.value, chain, "smooth chain fails"});
                BoxMinimum sg = box_minimum(half, singular, box);
                if (sg.value < singular_chain)
                    rep.violations.push_back(
                        {where, sg.alpha, sg.beta, sg.m, sg.value, singular_chain, "singular chain fails"});

                const DivisorClass L = DivisorClass::uniform(a, b, static_cast<std::size_t>(r), d);
                auto check_claim = [&](const SeshadriResult& res, const Rational& bound, const std::string& label,
                                       bool smooth_locus) {
                    if (res.status == SeshadriStatus::HypothesesNotMet) {
                        rep.violations.push_back({where + " " + label, {}, {}, {}, 0, 0, "hypotheses rejected"});
                        return;
                    }
                    if (res.status != SeshadriStatus::Exact) {
                        ++rep.equalities["bounds only"];
                        return;
                    }
                    const Rational& value = *res.value;
                    if (value > bound) {
                        rep.violations.push_back({where + " " + label, {}, {}, {}, bound, value, "claim exceeds chain"});
                        return;
                    }
                    rep.record_gap(bound - value);
                    if (value == bound && smooth_locus) {
                        if ((2 * mu - 1) * a == mu * b)
                            ++rep.equalities["(2mu-1)a = mu b"];
                        else if (a == mu * (2 * mu - 1) * b)
                            ++rep.equalities["a = mu(2mu-1)b"];
                        else if (a == mu * (2 * mu - 1) * b - 2 * mu * d)
                            ++rep.equalities["a = mu(2mu-1)b - 2mu d"];
                        else
                            ++rep.equalities["other"];
                    }
                };
                for (bool bme : {false, true}) {
                    std::string tag = bme ? " on B-E" : "";
                    check_claim(point_on_locus(L, s, Locus::SmoothA, bme), chain, "smooth-a" + tag, true);
                    check_claim(point_on_locus(L, s, Locus::AMinusE, bme), chain, "a-minus-e" + tag, true);
                    check_claim(point_on_locus(L, s, Locus::SingularA, bme), singular_chain, "singular-a" + tag, false);
                }
                SeshadriResult vg = very_general_point(L, s);
                if (vg.status != SeshadriStatus::HypothesesNotMet)
                    check_claim(vg, chain, "very-general", true);
            }
        }
    });
    report.grid = "type " + std::to_string(type) + ", a,b,d,r in [1.." + std::to_string(grid_max) +
                  "] plus boundary probes, a,b >= 2kd, box " + std::to_string(box);
    return report;
}

/// Over a grid of uniform bundles, re-derives the witness ratio at
/// Singular A meet (B - E_j) and checks witness^2 < L^2 whenever the
/// hypotheses of a rationality or exact-value criterion hold. Also checks
/// that global_constant issues a certificate on exactly those bundles.
inline OracleReport verify_global_witness(const SurfaceData& s, int grid_max, int jobs = 1)
{
    if (grid_max < 1)
        throw Error(ErrorCode::InvalidInput, "grid_max must be at least 1");
    const int type = s.type_id;
    const Integer mu = s.mu;
    const Integer q = s.gamma_over_mu;

    OracleReport report = detail::run_partitioned(grid_max, jobs, [&](int ir, OracleReport& rep) {
        const Integer r = ir + 1;
        const Integer k = detail::least_k(r);
        for (int di = 1; di <= grid_max; ++di) {
            const Integer d = di;
            for (int ai = 1; ai <= grid_max; ++ai) {
                const Integer a = ai;
                for (int bi = 1; bi <= grid_max; ++bi) {
                    const Integer b = bi;
                    const Integer l2 = 2 * a * b - r * d * d;
                    // numerical shadow of ampleness: positive on L, both fibres through x_i and E_i
                    if (!(l2 > 0 && mu * b > d && q * a > d))
                        continue;

                    bool exact_hyp = false;
                    bool rational_hyp = false;
                    if (type % 2 == 1) {
                        bool window = (2 * mu - 1) * a >= mu * b + 2 * mu * d && a <= mu * b;
                        exact_hyp = a >= 2 * k * d && b >= 2 * k * d && !window;
                        // b (sqrt(r+1) + 1) > r d
                        Integer lhs_gap = r * d - b;
                        bool b_cond = lhs_gap < 0 || (r + 1) * b * b > lhs_gap * lhs_gap;
                        rational_hyp = a * a >= (r + 1) * d * d && b_cond;
                    } else if (type == 6) {
                        rational_hyp = r >= 3 && 2 * a > (r + 1) * d && b > r * d &&
                                       (2 * b >= 9 * a - 4 * d || b <= 2 * (a - d));
                    } else {
                        rational_hyp = b > r * d;
                    }
                    if (!exact_hyp && !rational_hyp)
                        continue;

                    ++rep.instances_checked;
                    auto where = detail::params({{"type", std::to_string(type)},
                                                 {"a", a.str()},
                                                 {"b", b.str()},
                                                 {"d", d.str()},
                                                 {"r", r.str()}});
                    const Integer curve_side = q * a - d; // L.(0, gamma/mu, 1_j)
                    const Integer witness = std::min(curve_side, b);
                    if (!(witness * witness < l2)) {
                        rep.violations.push_back({where, {}, {}, {}, Rational(witness * witness), Rational(l2),
                                                  "witness^2 >= L^2"});
                        continue;
                    }
                    rep.record_gap(Rational(l2 - witness * witness));

                    const DivisorClass L = DivisorClass::uniform(a, b, static_cast<std::size_t>(ir + 1), d);
                    GlobalResult g = global_constant(L, s);
                    bool ample = decide_ample(L, s).status == AmpleStatus::Proven;
                    bool expect_cert = exact_hyp || (rational_hyp && ample);
                    if (g.certificate.has_value() != expect_cert) {
                        rep.violations.push_back({where, {}, {}, {}, Rational(witness),
                                                  g.certificate ? g.certificate->claimed : Rational(0),
                                                  "certificate issued/withheld against oracle hypotheses"});
                        continue;
                    }
                    if (!g.certificate)
                        continue;
                    if (!g.certificate->verify() || g.certificate->claimed != Rational(witness))
                        rep.violations.push_back(
                            {where, {}, {}, {}, Rational(witness), g.certificate->claimed, "certificate mismatch"});
                    if (exact_hyp) {
                        ++rep.equalities["exact value"];
                        if (!g.result.value || *g.result.value != Rational(witness))
                            rep.violations.push_back({where, {}, {}, {}, Rational(witness),
                                                      g.result.value.value_or(Rational(0)), "exact value mismatch"});
                    } else {
                        ++rep.equalities["rationality certificate"];
                    }
                }
            }
        }
    });
    report.grid = "type " + std::to_string(type) + ", a,b,d,r in [1.." + std::to_string(grid_max) + "]";
    return report;
}

} // namespace hypell
