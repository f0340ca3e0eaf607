#pragma once

#include "hypell/catalog.hpp"
#include "hypell/lattice.hpp"
#include "hypell/number.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypell {

enum class AmpleStatus { Proven, Refuted, Unknown };
enum class Outcome { Passed, Failed, NotApplicable };

inline std::string_view to_string(AmpleStatus s)
{
    switch (s) {
    case AmpleStatus::Proven: return "proven";
    case AmpleStatus::Refuted: return "refuted";
    case AmpleStatus::Unknown: return "unknown";
    }
    return "unknown";
}

inline std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Passed: return "passed";
    case Outcome::Failed: return "failed";
    case Outcome::NotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

struct CriterionOutcome {
    std::string name;
    Outcome outcome;
    std::string detail;

    friend bool operator==(const CriterionOutcome&, const CriterionOutcome&) = default;
};

/// Tri-state ampleness verdict. Sufficient criteria never refute; only a
/// failed necessary check (with a witness class) does.
struct AmpleVerdict {
    AmpleStatus status = AmpleStatus::Unknown;
    std::vector<CriterionOutcome> criteria;
    std::vector<DivisorClass> witnesses;

    friend bool operator==(const AmpleVerdict&, const AmpleVerdict&) = default;
};

struct NecessaryCheck {
    std::string name;
    bool passed;
    std::string detail;
    std::optional<DivisorClass> witness; // class meeting L non-positively
};

namespace criterion {
inline constexpr std::string_view kuchle = "kuchle";
inline constexpr std::string_view homogeneous = "homogeneous";
inline constexpr std::string_view nonhomogeneous = "nonhomogeneous";
} // namespace criterion

namespace detail {

inline DivisorClass exceptional_curve(std::size_t r, std::size_t i)
{
    // E_i itself: coefficient -1 in the subtracted slot
    DivisorClass e{0, 0, std::vector<Integer>(r, Integer(0))};
    e.d[i] = -1;
    return e;
}

inline AmpleVerdict single_criterion(std::string_view name, Outcome outcome, std::string detail)
{
    AmpleVerdict v;
    v.status = outcome == Outcome::Passed ? AmpleStatus::Proven : AmpleStatus::Unknown;
    v.criteria.push_back({std::string(name), outcome, std::move(detail)});
    return v;
}

} // namespace detail

/// Products of L with the classes every ample bundle must meet positively:
/// both fibres, the fibres through each blown-up point, each E_i and L itself.
inline std::vector<NecessaryCheck> necessary_checks(const DivisorClass& L, const SurfaceData& s)
{
    std::vector<NecessaryCheck> checks;
    const std::size_t r = L.r();

    Integer on_b = s.gamma_over_mu * L.a;
    checks.push_back({"a > 0", L.a > 0, "L.B = (gamma/mu)a = " + on_b.str(),
                      L.a > 0 ? std::nullopt : std::optional(fibre_class(s, r, FibreKind::FibreB))});

    Integer on_a = s.mu * L.b;
    checks.push_back({"b > 0", L.b > 0, "L.A = mu*b = " + on_a.str(),
                      L.b > 0 ? std::nullopt : std::optional(fibre_class(s, r, FibreKind::FibreA))});

    auto per_point = [&](std::string name, auto&& product, auto&& witness) {
        for (std::size_t i = 0; i < r; ++i) {
            Integer value = product(i);
            if (value <= 0) {
                checks.push_back({std::move(name), false,
                                  "fails at i = " + std::to_string(i + 1) + ": product " + value.str(),
                                  witness(i)});
                return;
            }
        }
        checks.push_back({std::move(name), true, r == 0 ? "vacuous (r = 0)" : "holds for all i", std::nullopt});
    };

    per_point("mu*b > d_i", [&](std::size_t i) { return on_a - L.d[i]; },
              [&](std::size_t i) { return fibre_class(s, r, FibreKind::AMinusE, i + 1); });
    per_point("(gamma/mu)*a > d_i", [&](std::size_t i) { return on_b - L.d[i]; },
              [&](std::size_t i) { return fibre_class(s, r, FibreKind::BMinusE, i + 1); });
    per_point("d_i > 0", [&](std::size_t i) { return L.d[i]; },
              [&](std::size_t i) { return detail::exceptional_curve(r, i); });

    // last, so a curve witness is listed before L itself
    Integer l2 = self_intersection(L);
    checks.push_back({"L^2 > 0", l2 > 0, "L^2 = " + l2.str(),
                      l2 > 0 ? std::nullopt : std::optional<DivisorClass>(L)});
    return checks;
}

/// nH' - sum E_i is ample iff its square is positive (n >= 2 on these surfaces).
/// Applies to d = (1, ..., 1) with n = gcd(a, b) >= 2.
inline AmpleVerdict kuchle_ample(const DivisorClass& L, const SurfaceData& /*s*/)
{
    if (!L.is_uniform() || L.d.front() != 1)
        return detail::single_criterion(criterion::kuchle, Outcome::NotApplicable, "requires d_i = 1 for all i, r >= 1");
    if (L.a <= 0 || L.b <= 0)
        return detail::single_criterion(criterion::kuchle, Outcome::NotApplicable, "requires a, b > 0");
    Integer n = gcd(L.a, L.b);
    if (n < 2)
        return detail::single_criterion(criterion::kuchle, Outcome::NotApplicable,
                                        "gcd(a, b) = 1, no decomposition L = nH' - sum E_i with n >= 2");
    Integer l2 = self_intersection(L);
    std::string detail = "n = " + n.str() + ", L^2 = " + l2.str();
    return detail::single_criterion(criterion::kuchle, l2 > 0 ? Outcome::Passed : Outcome::Failed,
                                    detail + (l2 > 0 ? " > 0" : " <= 0"));
}

/// floor(a/d), floor(b/d) > max{1, sqrt(r/2)} for uniform d, checked as
/// f >= 2 and 2f^2 > r.
inline AmpleVerdict homogeneous_ample(const DivisorClass& L, const SurfaceData& /*s*/)
{
    if (!L.is_uniform())
        return detail::single_criterion(criterion::homogeneous, Outcome::NotApplicable, "requires uniform d, r >= 1");
    const Integer& d = L.d.front();
    if (d < 1)
        return detail::single_criterion(criterion::homogeneous, Outcome::NotApplicable, "requires d >= 1");
    if (L.a < 1 || L.b < 1)
        return detail::single_criterion(criterion::homogeneous, Outcome::NotApplicable, "requires a, b >= 1");
    const Integer r = L.r();
    Integer fa = L.a / d;
    Integer fb = L.b / d;
    bool ok = fa >= 2 && fb >= 2 && 2 * fa * fa > r && 2 * fb * fb > r;
    std::string detail = "floor(a/d) = " + fa.str() + " (2f^2 = " + Integer(2 * fa * fa).str() + "), floor(b/d) = " +
                         fb.str() + " (2f^2 = " + Integer(2 * fb * fb).str() + "), r = " + r.str();
    return detail::single_criterion(criterion::homogeneous, ok ? Outcome::Passed : Outcome::Failed, detail);
}

/// (1) a > d_i and mu*b > d_i for all i, (2) a + b > mu * sum d_i.
inline AmpleVerdict nonhomogeneous_ample(const DivisorClass& L, const SurfaceData& s)
{
    if (L.a <= 0 || L.b <= 0)
        return detail::single_criterion(criterion::nonhomogeneous, Outcome::NotApplicable, "requires a, b > 0");
    Integer sum = 0;
    for (const auto& di : L.d) {
        if (di <= 0)
            return detail::single_criterion(criterion::nonhomogeneous, Outcome::NotApplicable,
                                            "requires d_i > 0 on a blow-up");
        sum += di;
    }
    bool cond1 = true;
    std::string detail1 = "condition (1) holds";
    for (std::size_t i = 0; i < L.d.size(); ++i) {
        if (!(L.a > L.d[i] && s.mu * L.b > L.d[i])) {
            cond1 = false;
            detail1 = "condition (1) fails at i = " + std::to_string(i + 1) + ": a = " + L.a.str() +
                      ", mu*b = " + Integer(s.mu * L.b).str() + ", d_i = " + L.d[i].str();
            break;
        }
    }
    Integer lhs = L.a + L.b;
    Integer rhs = s.mu * sum;
    bool cond2 = lhs > rhs;
    std::string detail2 = "condition (2) " + std::string(cond2 ? "holds" : "fails") + ": a + b = " + lhs.str() +
                          (cond2 ? " > " : " <= ") + rhs.str() + " = mu * sum d_i";
    return detail::single_criterion(criterion::nonhomogeneous, cond1 && cond2 ? Outcome::Passed : Outcome::Failed,
                                    detail1 + "; " + detail2);
}

inline AmpleVerdict decide_ample(const DivisorClass& L, const SurfaceData& s)
{
    AmpleVerdict verdict;
    bool refuted = false;
    for (auto& check : necessary_checks(L, s)) {
        verdict.criteria.push_back({"necessary: " + check.name, check.passed ? Outcome::Passed : Outcome::Failed,
                                    check.detail});
        if (!check.passed) {
            refuted = true;
            verdict.witnesses.push_back(std::move(*check.witness));
        }
    }
    if (refuted) {
        verdict.status = AmpleStatus::Refuted;
        return verdict;
    }

    bool proven = false;
    for (auto* criterion_fn : {&kuchle_ample, &homogeneous_ample, &nonhomogeneous_ample}) {
        AmpleVerdict v = criterion_fn(L, s);
        proven = proven || v.status == AmpleStatus::Proven;
        for (auto& c : v.criteria)
            verdict.criteria.push_back(std::move(c));
    }
    verdict.status = proven ? AmpleStatus::Proven : AmpleStatus::Unknown;
    return verdict;
}

/// The nefness test used for multi-point bounds: floor(a/d), floor(b/d) >= k
/// with k the least integer satisfying 2k^2 >= r. Only valid for r >= 8.
inline bool nef_for_d(const Integer& a, const Integer& b, const Integer& r, const Rational& d)
{
    if (r < 8)
        throw Error(ErrorCode::OutOfRegime, "nef_for_d requires r >= 8, got r = " + r.str());
    if (d <= 0)
        throw Error(ErrorCode::InvalidInput, "nef_for_d requires d > 0, got " + to_string(d));
    if (a <= 0 || b <= 0)
        throw Error(ErrorCode::InvalidInput, "nef_for_d requires a, b > 0");
    Integer k = ceil_sqrt_half(r);
    return floor(Rational(a) / d) >= k && floor(Rational(b) / d) >= k;
}

} // namespace hypell
