#pragma once

#include "hypell/catalog.hpp"
#include "hypell/lattice.hpp"
#include "hypell/number.hpp"
#include "hypell/positivity.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace hypell {

/// Combinatorial data of a point set x_1..x_r on X. A-fibres are fibres of
/// the map to P^1, B-fibres fibres of the Albanese map.
struct PointConfig {
    int r = 0;
    int s0 = 0;  // max points on one A-fibre
    int t0 = 0;  // max points on one B-fibre
    int lA = 0;  // min number of A-fibres covering all points
    int lB = 0;  // min number of B-fibres covering all points
    bool s0_on_singular_A = false;

    void validate() const
    {
        auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidInput, "point config: " + what); };
        if (r < 1 || s0 < 1 || t0 < 1 || lA < 1 || lB < 1)
            fail("r, s0, t0, lA, lB must all be positive");
        if (lB < s0)
            fail("lB >= s0 violated");
        if (lA < t0)
            fail("lA >= t0 violated");
        if (s0 > r || t0 > r || lA > r || lB > r)
            fail("s0, t0, lA, lB must not exceed r");
    }

    friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

enum class SeshadriStatus { Exact, Bounds, HypothesesNotMet };

inline std::string_view to_string(SeshadriStatus s)
{
    switch (s) {
    case SeshadriStatus::Exact: return "exact";
    case SeshadriStatus::Bounds: return "bounds";
    case SeshadriStatus::HypothesesNotMet: return "hypotheses_not_met";
    }
    return "hypotheses_not_met";
}

struct Hypothesis {
    std::string name;
    bool holds;
    std::string detail;

    friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// A curve class through the point(s) with total multiplicity m and its ratio (L.C)/m.
struct Attaining {
    std::string description;
    DivisorClass curve;
    Integer multiplicity;
    Rational ratio;

    friend bool operator==(const Attaining&, const Attaining&) = default;
};

struct SeshadriResult {
    SeshadriStatus status = SeshadriStatus::HypothesesNotMet;
    std::optional<Rational> value;
    Rational lower = 0;
    Bound upper = Bound::rational(0);
    std::vector<Hypothesis> hypotheses;
    std::vector<Attaining> attaining;

    [[nodiscard]] bool all_hypotheses_hold() const
    {
        return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
    }

    friend bool operator==(const SeshadriResult&, const SeshadriResult&) = default;
};

enum class CertificateKind { GlobalRationality, GlobalExact };

inline std::string_view to_string(CertificateKind k)
{
    return k == CertificateKind::GlobalExact ? "global_exact" : "global_rationality";
}

struct WitnessCurve {
    DivisorClass curve;
    Integer multiplicity;
    Rational ratio;

    friend bool operator==(const WitnessCurve&, const WitnessCurve&) = default;
};

/// claimed^2 < L^2, stored as the two sides so it can be re-checked.
struct Comparison {
    Rational claimed_squared;
    Integer self_intersection;
    bool holds;

    friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// A point x and curves through it whose smallest Seshadri ratio is below
/// sqrt(L^2). By the submaximality criterion for global Seshadri constants
/// this forces eps(L) to be rational; for GlobalExact the ratio is the value.
struct Certificate {
    CertificateKind kind;
    DivisorClass bundle;
    std::string witness_point;
    std::vector<WitnessCurve> witness_curves;
    Rational claimed;
    Comparison comparison;

    /// Re-derives every stored number from the raw integers of bundle and curves.
    [[nodiscard]] bool verify() const
    {
        if (witness_curves.empty())
            return false;
        std::optional<Rational> smallest;
        for (const auto& w : witness_curves) {
            if (w.multiplicity <= 0 || w.curve.r() != bundle.r())
                return false;
            Rational ratio = seshadri_ratio(bundle, w.curve, w.multiplicity);
            if (ratio != w.ratio)
                return false;
            if (!smallest || ratio < *smallest)
                smallest = ratio;
        }
        if (*smallest != claimed)
            return false;
        Integer l2 = self_intersection(bundle);
        if (l2 != comparison.self_intersection || claimed * claimed != comparison.claimed_squared)
            return false;
        Integer num = numerator(claimed);
        Integer den = denominator(claimed);
        bool below = num * num < l2 * den * den;
        return claimed >= 0 && below && comparison.holds;
    }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct GlobalResult {
    SeshadriResult result;
    std::optional<Certificate> certificate;

    friend bool operator==(const GlobalResult&, const GlobalResult&) = default;
};

enum class Locus { SmoothA, AMinusE, SingularA };

namespace detail {

inline Hypothesis hyp(std::string name, bool holds, std::string detail = {})
{
    return {std::move(name), holds, std::move(detail)};
}

inline Attaining attain(std::string description, const DivisorClass& L, DivisorClass curve, Integer m)
{
    Rational ratio = seshadri_ratio(L, curve, m);
    return {std::move(description), std::move(curve), std::move(m), std::move(ratio)};
}

inline Rational min_of(const Rational& x, const Rational& y) { return x < y ? x : y; }

inline Bound sqrt_clamped(const Rational& q) { return Bound::sqrt(q < 0 ? Rational(0) : q); }

inline SeshadriResult exact(Rational value, std::vector<Hypothesis> hyps, std::vector<Attaining> attaining)
{
    SeshadriResult res;
    res.status = SeshadriStatus::Exact;
    res.lower = value;
    res.upper = Bound::rational(value);
    res.value = std::move(value);
    res.hypotheses = std::move(hyps);
    res.attaining = std::move(attaining);
    return res;
}

inline SeshadriResult bounds(Rational lower, Bound upper, std::vector<Hypothesis> hyps,
                             std::vector<Attaining> attaining)
{
    SeshadriResult res;
    res.status = SeshadriStatus::Bounds;
    res.lower = std::move(lower);
    res.upper = std::move(upper);
    res.hypotheses = std::move(hyps);
    res.attaining = std::move(attaining);
    return res;
}

/// Trivial bracket 0 <= eps <= upper attached to a failed hypothesis list.
inline SeshadriResult not_met(std::vector<Hypothesis> hyps, Bound upper)
{
    SeshadriResult res;
    res.status = SeshadriStatus::HypothesesNotMet;
    res.lower = 0;
    res.upper = std::move(upper);
    res.hypotheses = std::move(hyps);
    return res;
}

inline bool all_hold(const std::vector<Hypothesis>& hyps)
{
    return std::all_of(hyps.begin(), hyps.end(), [](const Hypothesis& h) { return h.holds; });
}

inline void require_uniform(const DivisorClass& L, std::string_view op)
{
    if (!L.is_uniform())
        throw Error(ErrorCode::UnsupportedShape,
                    std::string(op) + " requires a bundle (a, b, d, ..., d) with uniform d and r >= 1");
}

inline void require_odd(const SurfaceData& s, std::string_view op)
{
    if (!is_odd_type(s))
        throw Error(ErrorCode::UnsupportedType,
                    std::string(op) + " is only available on surfaces of type 1, 3, 5 or 7; got type " +
                        std::to_string(s.type_id));
}

// a, b >= 2kd with the least admissible k = ceil(sqrt(r/2)).
inline void push_2kd(std::vector<Hypothesis>& hyps, const DivisorClass& L)
{
    const Integer& d = L.d.front();
    Integer k = ceil_sqrt_half(Integer(L.r()));
    Integer bound = 2 * k * d;
    hyps.push_back(hyp("d >= 1", d >= 1, "d = " + d.str()));
    hyps.push_back(hyp("a >= 2kd", L.a >= bound, "a = " + L.a.str() + ", 2kd = " + bound.str() + " (k = " + k.str() + ")"));
    hyps.push_back(hyp("b >= 2kd", L.b >= bound, "b = " + L.b.str() + ", 2kd = " + bound.str() + " (k = " + k.str() + ")"));
}

} // namespace detail

/// Lower bound min{a,b}/k, k = ceil(sqrt(r/2)), for r >= 8 general points,
/// against the upper bound sqrt(L^2/r). The two meet when a = b and r/2 = k^2.
inline SeshadriResult multipoint_general(const DivisorClass& L, int r)
{
    if (L.r() != 0)
        throw Error(ErrorCode::UnsupportedShape, "multipoint_general takes a bundle (a, b) on X itself");
    if (r < 1)
        throw Error(ErrorCode::InvalidInput, "number of points must be positive, got " + std::to_string(r));

    const Integer& a = L.a;
    const Integer& b = L.b;
    Rational upper_sq(2 * a * b, r);

    std::vector<Hypothesis> hyps;
    hyps.push_back(detail::hyp("a, b > 1", a > 1 && b > 1, "a = " + a.str() + ", b = " + b.str()));
    hyps.push_back(detail::hyp("r >= 8", r >= 8, "r = " + std::to_string(r)));
    if (!detail::all_hold(hyps))
        return detail::not_met(std::move(hyps), detail::sqrt_clamped(upper_sq));

    Integer k = ceil_sqrt_half(Integer(r));
    Rational lower(a < b ? a : b, k);
    hyps.push_back(detail::hyp("(a, b, d) nef at d = min{a,b}/k", nef_for_d(a, b, r, lower),
                               "k = " + k.str() + ", d = " + to_string(lower)));

    if (a == b && 2 * k * k == r) {
        hyps.push_back(detail::hyp("a = b and r/2 = k^2", true, "lower bound meets sqrt(L^2/r)"));
        return detail::exact(Rational(a, k), std::move(hyps), {});
    }
    return detail::bounds(lower, Bound::sqrt(upper_sq), std::move(hyps), {});
}

/// Multi-point constant at special configurations lying on fibres. The value
/// is read off the B-fibre through t0 points and the reduced singular A-fibre
/// through s0 points; Bezout against both fibre classes gives the matching
/// lower bound (only 2/3 of it on type 6).
inline SeshadriResult multipoint_special(const DivisorClass& L, const SurfaceData& s, const PointConfig& cfg)
{
    if (L.r() != 0)
        throw Error(ErrorCode::UnsupportedShape, "multipoint_special takes a bundle (a, b) on X itself");
    cfg.validate();

    const Integer& a = L.a;
    const Integer& b = L.b;
    const int type = s.type_id;

    std::vector<Hypothesis> hyps;
    hyps.push_back(detail::hyp("L ample on X: a, b > 0", a > 0 && b > 0, "a = " + a.str() + ", b = " + b.str()));
    auto cfg_detail = "s0 = " + std::to_string(cfg.s0) + ", t0 = " + std::to_string(cfg.t0) +
                      ", lA = " + std::to_string(cfg.lA) + ", lB = " + std::to_string(cfg.lB);

    if (is_odd_type(s)) {
        hyps.push_back(detail::hyp("s0 points on a Singular A", cfg.s0_on_singular_A));
        hyps.push_back(detail::hyp("lA = t0", cfg.lA == cfg.t0, cfg_detail));
        if (type == 1)
            hyps.push_back(detail::hyp("lB <= 2 s0", cfg.lB <= 2 * cfg.s0, cfg_detail));
        else
            hyps.push_back(detail::hyp("lB = s0", cfg.lB == cfg.s0, cfg_detail));
    } else {
        int required_t0 = type == 2 ? 4 : type == 4 ? 2 : 3;
        hyps.push_back(detail::hyp("points on singular A-fibres", cfg.s0_on_singular_A));
        hyps.push_back(detail::hyp("t0 = lA = " + std::to_string(required_t0),
                                   cfg.t0 == required_t0 && cfg.lA == required_t0, cfg_detail));
        hyps.push_back(detail::hyp("lB = s0", cfg.lB == cfg.s0, cfg_detail));
    }
    if (!detail::all_hold(hyps))
        return detail::not_met(std::move(hyps), detail::sqrt_clamped(Rational(2 * a * b, cfg.r)));

    Rational b_part(b, cfg.s0);
    Rational a_part;
    switch (type) {
    case 2: a_part = Rational(a, 2); break;
    case 4:
    case 6: a_part = Rational(a); break;
    default: a_part = Rational(a, cfg.t0); break;
    }
    Rational closed = detail::min_of(a_part, b_part);

    std::vector<Attaining> attaining;
    attaining.push_back(detail::attain("B-fibre through t0 points", L, fibre_class(s, 0, FibreKind::FibreB), cfg.t0));
    attaining.push_back(
        detail::attain("reduced Singular A through s0 points", L, fibre_class(s, 0, FibreKind::SingularAReduced), cfg.s0));

    if (type == 6)
        return detail::bounds(Rational(2, 3) * closed, Bound::rational(closed), std::move(hyps), std::move(attaining));
    return detail::exact(closed, std::move(hyps), std::move(attaining));
}

/// Single-point constant on X_r at a point on a given fibre, odd types only.
inline SeshadriResult point_on_locus(const DivisorClass& L, const SurfaceData& s, Locus locus, bool on_B_minus_E)
{
    detail::require_odd(s, "point_on_locus");
    detail::require_uniform(L, "point_on_locus");

    const std::size_t r = L.r();
    const Integer& a = L.a;
    const Integer& b = L.b;
    const Integer& d = L.d.front();
    const Integer mu = s.mu;
    const Integer l2 = self_intersection(L);

    std::vector<Hypothesis> hyps;
    detail::push_2kd(hyps, L);
    if (!detail::all_hold(hyps))
        return detail::not_met(std::move(hyps), detail::sqrt_clamped(l2));

    std::vector<Attaining> attaining;
    std::size_t a_index = 1;
    std::size_t b_index = r >= 2 ? 2 : 1;
    if (on_B_minus_E)
        attaining.push_back(detail::attain("B-E_j through x", L, fibre_class(s, r, FibreKind::BMinusE, b_index), 1));
    else
        attaining.push_back(detail::attain("B-fibre through x", L, fibre_class(s, r, FibreKind::FibreB), 1));
    const Rational b_side = attaining.back().ratio; // a or a - d

    if (locus == Locus::SingularA) {
        attaining.push_back(detail::attain("Singular A (reduced) through x", L,
                                           fibre_class(s, r, FibreKind::SingularAReduced), 1));
        Rational value = detail::min_of(b_side, Rational(b));
        return detail::exact(value, std::move(hyps), std::move(attaining));
    }

    // x on a smooth A-fibre, possibly the strict transform A - E_i
    const bool through_ei = locus == Locus::AMinusE;
    if (through_ei)
        attaining.push_back(detail::attain("A-E_i through x", L, fibre_class(s, r, FibreKind::AMinusE, a_index), 1));
    else
        attaining.push_back(detail::attain("Smooth A through x", L, fibre_class(s, r, FibreKind::FibreA), 1));
    Rational upper = detail::min_of(attaining.back().ratio, b_side);

    bool small_a = (2 * mu - 1) * a <= mu * b;
    Integer large_threshold = mu * (2 * mu - 1) * b - (through_ei ? 2 * mu * d : Integer(0));
    bool large_a = a >= large_threshold;
    // not a hypothesis of the bound itself, only of equality
    hyps.push_back(detail::hyp(through_ei ? "equality: (2mu-1)a <= mu*b or a >= mu(2mu-1)b - 2mu*d"
                                          : "equality: (2mu-1)a <= mu*b or a >= mu(2mu-1)b",
                               small_a || large_a,
                               "(2mu-1)a = " + Integer((2 * mu - 1) * a).str() + ", mu*b = " + Integer(mu * b).str() +
                                   ", a = " + a.str() + ", threshold = " + large_threshold.str()));

    if (small_a || large_a)
        return detail::exact(upper, std::move(hyps), std::move(attaining));

    Rational chain = Rational(a, 2 * mu) + Rational(b, 2);
    Rational lower = detail::min_of(chain, upper);
    return detail::bounds(lower, min_bound(Bound::rational(upper), detail::sqrt_clamped(l2)), std::move(hyps),
                          std::move(attaining));
}

/// eps(X_r, L, 1): the Seshadri constant at a very general point, odd types.
inline SeshadriResult very_general_point(const DivisorClass& L, const SurfaceData& s)
{
    detail::require_odd(s, "very_general_point");
    detail::require_uniform(L, "very_general_point");

    const std::size_t r = L.r();
    const Integer& a = L.a;
    const Integer& b = L.b;
    const Integer mu = s.mu;
    const Integer l2 = self_intersection(L);

    std::vector<Hypothesis> hyps;
    detail::push_2kd(hyps, L);

    bool small_a = (2 * mu - 1) * a <= mu * b;
    bool large_a = a >= mu * b;
    hyps.push_back(detail::hyp("a >= mu*b or (2mu-1)a <= mu*b", small_a || large_a,
                               "(2mu-1)a = " + Integer((2 * mu - 1) * a).str() + ", mu*b = " + Integer(mu * b).str() +
                                   ", a = " + a.str()));
    if (!detail::all_hold(hyps))
        return detail::not_met(std::move(hyps), detail::sqrt_clamped(l2));

    std::vector<Attaining> attaining;
    attaining.push_back(detail::attain("B-fibre through x", L, fibre_class(s, r, FibreKind::FibreB), 1));
    attaining.push_back(detail::attain("Smooth A through x", L, fibre_class(s, r, FibreKind::FibreA), 1));

    if (small_a)
        return detail::exact(Rational(a), std::move(hyps), std::move(attaining));
    return detail::bounds(Rational(b), min_bound(Bound::rational(Rational(mu * b)), detail::sqrt_clamped(l2)),
                          std::move(hyps), std::move(attaining));
}

namespace detail {

inline Certificate make_certificate(CertificateKind kind, const DivisorClass& L, std::string point,
                                    std::vector<Attaining> const& curves)
{
    Certificate cert;
    cert.kind = kind;
    cert.bundle = L;
    cert.witness_point = std::move(point);
    for (const auto& c : curves)
        cert.witness_curves.push_back({c.curve, c.multiplicity, c.ratio});
    cert.claimed = curves.front().ratio;
    for (const auto& c : curves)
        cert.claimed = min_of(cert.claimed, c.ratio);
    Integer l2 = self_intersection(L);
    Integer num = numerator(cert.claimed);
    Integer den = denominator(cert.claimed);
    cert.comparison = {cert.claimed * cert.claimed, l2, cert.claimed >= 0 && num * num < l2 * den * den};
    return cert;
}

} // namespace detail

/// Global Seshadri constant eps(X_r, L) = inf_x eps(X_r, L, x): the exact
/// value on odd types away from a forbidden window of a, otherwise a
/// rationality certificate where one of the rationality criteria applies.
inline GlobalResult global_constant(const DivisorClass& L, const SurfaceData& s)
{
    detail::require_uniform(L, "global_constant");

    const std::size_t r = L.r();
    const Integer R = r;
    const Integer& a = L.a;
    const Integer& b = L.b;
    const Integer& d = L.d.front();
    const Integer mu = s.mu;
    const Integer l2 = self_intersection(L);
    const int type = s.type_id;

    std::vector<Hypothesis> hyps;
    hyps.push_back(detail::hyp("d >= 1", d >= 1, "d = " + d.str()));
    if (d < 1)
        return {detail::not_met(std::move(hyps), detail::sqrt_clamped(l2)), std::nullopt};

    // x = Singular A meet (B - E_j); on even types the B-fibre class is (0, gamma/mu)
    std::vector<Attaining> witnesses;
    witnesses.push_back(detail::attain("Singular A (reduced) through x", L,
                                       fibre_class(s, r, FibreKind::SingularAReduced), 1));
    witnesses.push_back(detail::attain("B-E_j through x", L, fibre_class(s, r, FibreKind::BMinusE, 1), 1));
    const std::string point = "x in Singular A meet (B-E_j)";

    auto rationality = [&](std::vector<Hypothesis> h) -> GlobalResult {
        AmpleVerdict ample = decide_ample(L, s);
        h.push_back(detail::hyp("L ample", ample.status == AmpleStatus::Proven,
                                "decide_ample: " + std::string(to_string(ample.status))));
        if (!detail::all_hold(h))
            return {detail::not_met(std::move(h), detail::sqrt_clamped(l2)), std::nullopt};
        Certificate cert = detail::make_certificate(CertificateKind::GlobalRationality, L, point, witnesses);
        h.push_back(detail::hyp("min witness ratio^2 < L^2", cert.comparison.holds,
                                to_string(cert.comparison.claimed_squared) + " < " + l2.str()));
        if (!cert.comparison.holds)
            return {detail::not_met(std::move(h), detail::sqrt_clamped(l2)), std::nullopt};
        auto res = detail::bounds(Rational(0), Bound::rational(cert.claimed), std::move(h), witnesses);
        return {std::move(res), std::move(cert)};
    };

    if (is_odd_type(s)) {
        std::vector<Hypothesis> exact_hyps = hyps;
        detail::push_2kd(exact_hyps, L);
        bool in_window = (2 * mu - 1) * a >= mu * b + 2 * mu * d && a <= mu * b;
        exact_hyps.push_back(detail::hyp("a outside [mu b/(2mu-1) + 2mu d/(2mu-1), mu b]", !in_window,
                                         "(2mu-1)a = " + Integer((2 * mu - 1) * a).str() +
                                             ", mu b + 2mu d = " + Integer(mu * b + 2 * mu * d).str() +
                                             ", mu b = " + Integer(mu * b).str()));
        if (detail::all_hold(exact_hyps)) {
            Certificate cert = detail::make_certificate(CertificateKind::GlobalExact, L, point, witnesses);
            Rational value = cert.claimed;
            return {detail::exact(value, std::move(exact_hyps), witnesses), std::move(cert)};
        }

        hyps.push_back(detail::hyp("a >= sqrt(r+1) d", a >= 0 && a * a >= (R + 1) * d * d,
                                   "a^2 = " + Integer(a * a).str() + ", (r+1)d^2 = " + Integer((R + 1) * d * d).str()));
        Integer gap = R * d - b;
        bool b_ok = b > 0 && (gap <= 0 || (R + 1) * b * b > gap * gap);
        hyps.push_back(detail::hyp("b > r d/(sqrt(r+1) + 1)", b_ok,
                                   "b = " + b.str() + ", r d = " + Integer(R * d).str()));
        return rationality(std::move(hyps));
    }

    if (type == 2 || type == 4) {
        hyps.push_back(detail::hyp("b > r d", b > R * d, "b = " + b.str() + ", r d = " + Integer(R * d).str()));
        return rationality(std::move(hyps));
    }

    // type 6
    hyps.push_back(detail::hyp("r >= 3", r >= 3, "r = " + R.str()));
    hyps.push_back(detail::hyp("2a > (r+1)d", 2 * a > (R + 1) * d,
                               "2a = " + Integer(2 * a).str() + ", (r+1)d = " + Integer((R + 1) * d).str()));
    hyps.push_back(detail::hyp("b > r d", b > R * d, "b = " + b.str() + ", r d = " + Integer(R * d).str()));
    bool big_b = 2 * b >= 9 * a - 4 * d;
    bool small_b = b <= 2 * (a - d);
    hyps.push_back(detail::hyp("b >= 9a/2 - 2d or b <= 2(a-d)", big_b || small_b,
                               "2b = " + Integer(2 * b).str() + " vs 9a - 4d = " + Integer(9 * a - 4 * d).str() +
                                   "; b = " + b.str() + " vs 2(a-d) = " + Integer(2 * (a - d)).str()));
    return rationality(std::move(hyps));
}

} // namespace hypell
