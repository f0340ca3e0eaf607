#pragma once

#include "hypell/catalog.hpp"
#include "hypell/lattice.hpp"
#include "hypell/number.hpp"
#include "hypell/oracle.hpp"
#include "hypell/positivity.hpp"
#include "hypell/seshadri.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are always strings "p/q" (q omitted when 1).
namespace nlohmann {

template <>
struct adl_serializer<hypell::Integer> {
    static void to_json(json& j, const hypell::Integer& n)
    {
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
            j = static_cast<std::int64_t>(n);
        else
            j = n.str();
    }

    static void from_json(const json& j, hypell::Integer& n)
    {
        if (j.is_number_integer())
            n = j.get<std::int64_t>();
        else if (j.is_string())
            n = hypell::parse_integer(j.get<std::string>());
        else
            throw hypell::Error(hypell::ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
    }
};

template <>
struct adl_serializer<hypell::Rational> {
    static void to_json(json& j, const hypell::Rational& q) { j = hypell::to_string(q); }

    static void from_json(const json& j, hypell::Rational& q)
    {
        if (j.is_string())
            q = hypell::parse_rational(j.get<std::string>());
        else if (j.is_number_integer())
            q = hypell::Rational(j.get<std::int64_t>());
        else
            throw hypell::Error(hypell::ErrorCode::InvalidInput, "expected a rational \"p/q\", got " + j.dump());
    }
};

} // namespace nlohmann

namespace hypell {

using json = nlohmann::json;

namespace detail {

template <class E, std::size_t N>
E parse_enum(const json& j, const std::array<E, N>& values, std::string_view what)
{
    std::string text = j.get<std::string>();
    for (E v : values)
        if (to_string(v) == text)
            return v;
    throw Error(ErrorCode::InvalidInput, "unknown " + std::string(what) + " '" + text + "'");
}

inline const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace detail

// --- catalog -----------------------------------------------------------------

inline void to_json(json& j, const SurfaceData& s)
{
    j = json{{"type", s.type_id},
             {"group", std::string(s.group_label)},
             {"gamma", s.gamma},
             {"multiplicities", std::vector<int>(s.multiplicities.begin(), s.multiplicities.end())},
             {"mu", s.mu},
             {"gamma_over_mu", s.gamma_over_mu}};
}

// --- lattice -----------------------------------------------------------------

inline void to_json(json& j, const DivisorClass& c) { j = json{{"a", c.a}, {"b", c.b}, {"d", c.d}}; }

inline void from_json(const json& j, DivisorClass& c)
{
    c.a = detail::field(j, "a").get<Integer>();
    c.b = detail::field(j, "b").get<Integer>();
    c.d = j.contains("d") ? j.at("d").get<std::vector<Integer>>() : std::vector<Integer>{};
}

inline void to_json(json& j, const Bound& b)
{
    j = json{{"kind", b.is_sqrt() ? "sqrt" : "rational"}, {"q", b.q()}};
}

inline Bound bound_from_json(const json& j)
{
    auto kind = detail::field(j, "kind").get<std::string>();
    auto q = detail::field(j, "q").get<Rational>();
    if (kind == "sqrt")
        return Bound::sqrt(q);
    if (kind == "rational")
        return Bound::rational(q);
    throw Error(ErrorCode::InvalidInput, "unknown bound kind '" + kind + "'");
}

// --- positivity --------------------------------------------------------------

inline void to_json(json& j, const AmpleVerdict& v)
{
    json criteria = json::array();
    for (const auto& c : v.criteria)
        criteria.push_back({{"name", c.name}, {"outcome", std::string(to_string(c.outcome))}, {"detail", c.detail}});
    j = json{{"status", std::string(to_string(v.status))},
             {"criteria", criteria},
             {"witness", v.witnesses.empty() ? json(nullptr) : json(v.witnesses.front())},
             {"witnesses", v.witnesses}};
}

inline void from_json(const json& j, AmpleVerdict& v)
{
    v.status = detail::parse_enum(detail::field(j, "status"),
                                  std::array{AmpleStatus::Proven, AmpleStatus::Refuted, AmpleStatus::Unknown}, "status");
    v.criteria.clear();
    for (const auto& c : detail::field(j, "criteria"))
        v.criteria.push_back({c.at("name").get<std::string>(),
                              detail::parse_enum(c.at("outcome"),
                                                 std::array{Outcome::Passed, Outcome::Failed, Outcome::NotApplicable},
                                                 "outcome"),
                              c.at("detail").get<std::string>()});
    v.witnesses.clear();
    if (j.contains("witnesses"))
        v.witnesses = j.at("witnesses").get<std::vector<DivisorClass>>();
    else if (j.contains("witness") && !j.at("witness").is_null())
        v.witnesses.push_back(j.at("witness").get<DivisorClass>());
}

// --- seshadri ----------------------------------------------------------------

inline void to_json(json& j, const PointConfig& c)
{
    j = json{{"r", c.r}, {"s0", c.s0}, {"t0", c.t0}, {"lA", c.lA}, {"lB", c.lB}, {"singular_a", c.s0_on_singular_A}};
}

inline void from_json(const json& j, PointConfig& c)
{
    c.r = detail::field(j, "r").get<int>();
    c.s0 = detail::field(j, "s0").get<int>();
    c.t0 = detail::field(j, "t0").get<int>();
    c.lA = detail::field(j, "lA").get<int>();
    c.lB = detail::field(j, "lB").get<int>();
    c.s0_on_singular_A = j.value("singular_a", false);
}

inline void to_json(json& j, const Certificate& c)
{
    json curves = json::array();
    for (const auto& w : c.witness_curves)
        curves.push_back({{"class", w.curve}, {"multiplicity", w.multiplicity}, {"ratio", w.ratio}});
    j = json{{"kind", std::string(to_string(c.kind))},
             {"bundle", c.bundle},
             {"witness_point", c.witness_point},
             {"witness_curves", curves},
             {"claimed", c.claimed},
             {"comparison",
              {{"claimed_squared", c.comparison.claimed_squared},
               {"relation", "<"},
               {"self_intersection", c.comparison.self_intersection},
               {"holds", c.comparison.holds}}},
             {"verified", c.verify()}};
}

inline void from_json(const json& j, Certificate& c)
{
    c.kind = detail::parse_enum(detail::field(j, "kind"),
                                std::array{CertificateKind::GlobalRationality, CertificateKind::GlobalExact}, "kind");
    c.bundle = detail::field(j, "bundle").get<DivisorClass>();
    c.witness_point = detail::field(j, "witness_point").get<std::string>();
    c.witness_curves.clear();
    for (const auto& w : detail::field(j, "witness_curves"))
        c.witness_curves.push_back(
            {w.at("class").get<DivisorClass>(), w.at("multiplicity").get<Integer>(), w.at("ratio").get<Rational>()});
    c.claimed = detail::field(j, "claimed").get<Rational>();
    const json& cmp = detail::field(j, "comparison");
    c.comparison = {cmp.at("claimed_squared").get<Rational>(), cmp.at("self_intersection").get<Integer>(),
                    cmp.at("holds").get<bool>()};
}

inline json to_json_result(const SeshadriResult& r, const std::optional<Certificate>& cert = std::nullopt)
{
    json hyps = json::array();
    for (const auto& h : r.hypotheses)
        hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
    json attaining = json::array();
    for (const auto& a : r.attaining)
        attaining.push_back({{"description", a.description},
                             {"class", a.curve},
                             {"multiplicity", a.multiplicity},
                             {"ratio", a.ratio}});
    return json{{"status", std::string(to_string(r.status))},
                {"value", r.value ? json(*r.value) : json(nullptr)},
                {"lower", r.lower},
                {"upper", r.upper},
                {"hypotheses", hyps},
                {"attaining", attaining},
                {"certificate", cert ? json(*cert) : json(nullptr)}};
}

inline GlobalResult result_from_json(const json& j)
{
    GlobalResult g;
    SeshadriResult& r = g.result;
    r.status = detail::parse_enum(
        detail::field(j, "status"),
        std::array{SeshadriStatus::Exact, SeshadriStatus::Bounds, SeshadriStatus::HypothesesNotMet}, "status");
    const json& value = detail::field(j, "value");
    if (!value.is_null())
        r.value = value.get<Rational>();
    r.lower = detail::field(j, "lower").get<Rational>();
    r.upper = bound_from_json(detail::field(j, "upper"));
    for (const auto& h : detail::field(j, "hypotheses"))
        r.hypotheses.push_back({h.at("name").get<std::string>(), h.at("holds").get<bool>(), h.at("detail").get<std::string>()});
    for (const auto& a : detail::field(j, "attaining"))
        r.attaining.push_back({a.at("description").get<std::string>(), a.at("class").get<DivisorClass>(),
                               a.at("multiplicity").get<Integer>(), a.at("ratio").get<Rational>()});
    if (j.contains("certificate") && !j.at("certificate").is_null())
        g.certificate = j.at("certificate").get<Certificate>();
    return g;
}

// --- oracle ------------------------------------------------------------------

inline void to_json(json& j, const OracleReport& rep)
{
    json violations = json::array();
    auto opt = [](const std::optional<Integer>& v) { return v ? json(*v) : json(nullptr); };
    for (const auto& v : rep.violations)
        violations.push_back({{"parameters", v.parameters},
                              {"alpha", opt(v.alpha)},
                              {"beta", opt(v.beta)},
                              {"m", opt(v.m)},
                              {"found", v.found},
                              {"claimed", v.claimed},
                              {"note", v.note}});
    j = json{{"grid", rep.grid},
             {"instances_checked", rep.instances_checked},
             {"violations", violations},
             {"min_gap", rep.min_gap ? json(*rep.min_gap) : json(nullptr)},
             {"equalities", rep.equalities},
             {"pass", rep.pass()}};
}

inline void from_json(const json& j, OracleReport& rep)
{
    rep.grid = detail::field(j, "grid").get<std::string>();
    rep.instances_checked = detail::field(j, "instances_checked").get<std::int64_t>();
    rep.violations.clear();
    auto opt = [](const json& v) { return v.is_null() ? std::optional<Integer>() : std::optional(v.get<Integer>()); };
    for (const auto& v : detail::field(j, "violations"))
        rep.violations.push_back({v.at("parameters").get<std::string>(), opt(v.at("alpha")), opt(v.at("beta")),
                                  opt(v.at("m")), v.at("found").get<Rational>(), v.at("claimed").get<Rational>(),
                                  v.at("note").get<std::string>()});
    const json& gap = detail::field(j, "min_gap");
    rep.min_gap = gap.is_null() ? std::nullopt : std::optional(gap.get<Rational>());
    rep.equalities = j.value("equalities", std::map<std::string, std::int64_t>{});
}

// --- text rendering ----------------------------------------------------------

inline std::string to_text(const DivisorClass& c)
{
    std::string s = "(" + c.a.str() + ", " + c.b.str();
    if (!c.d.empty()) {
        s += "; ";
        for (std::size_t i = 0; i < c.d.size(); ++i)
            s += (i ? "," : "") + c.d[i].str();
    }
    return s + ")";
}

inline std::string to_text(const Bound& b)
{
    return b.is_sqrt() ? "sqrt(" + to_string(b.q()) + ")" : to_string(b.q());
}

inline std::string to_text(const AmpleVerdict& v)
{
    std::ostringstream out;
    out << "ample: " << to_string(v.status) << '\n';
    for (const auto& c : v.criteria)
        out << "  [" << to_string(c.outcome) << "] " << c.name << ": " << c.detail << '\n';
    for (const auto& w : v.witnesses)
        out << "  witness " << to_text(w) << '\n';
    return out.str();
}

inline std::string to_text(const SeshadriResult& r, const std::optional<Certificate>& cert = std::nullopt)
{
    std::ostringstream out;
    out << "status: " << to_string(r.status) << '\n';
    if (r.value)
        out << "value: " << to_string(*r.value) << '\n';
    out << "interval: [" << to_string(r.lower) << ", " << to_text(r.upper) << "]\n";
    for (const auto& h : r.hypotheses)
        out << "  [" << (h.holds ? "holds" : "fails") << "] " << h.name << (h.detail.empty() ? "" : ": ") << h.detail
            << '\n';
    for (const auto& a : r.attaining)
        out << "  curve " << a.description << " " << to_text(a.curve) << ", m = " << a.multiplicity
            << ", ratio = " << to_string(a.ratio) << '\n';
    if (cert) {
        out << "certificate: " << to_string(cert->kind) << " at " << cert->witness_point << '\n'
            << "  claimed " << to_string(cert->claimed) << ", claimed^2 = " << to_string(cert->comparison.claimed_squared)
            << " < " << cert->comparison.self_intersection << " = L^2, verified: " << (cert->verify() ? "yes" : "no")
            << '\n';
    }
    return out.str();
}

inline std::string to_text(const OracleReport& rep)
{
    std::ostringstream out;
    out << "grid: " << rep.grid << '\n'
        << "instances: " << rep.instances_checked << '\n'
        << "violations: " << rep.violations.size() << '\n';
    if (rep.min_gap)
        out << "min gap: " << to_string(*rep.min_gap) << '\n';
    for (const auto& [label, count] : rep.equalities)
        out << "  " << label << ": " << count << '\n';
    for (const auto& v : rep.violations)
        out << "  VIOLATION " << v.parameters << ": " << v.note << " (found " << to_string(v.found) << ", claimed "
            << to_string(v.claimed) << ")\n";
    out << (rep.pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

inline std::string to_text(const SurfaceData& s)
{
    std::ostringstream out;
    out << "type " << s.type_id << ": G = " << s.group_label << ", gamma = " << s.gamma << ", multiplicities = ";
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
        out << (i ? "," : "") << s.multiplicities[i];
    out << ", mu = " << s.mu << ", gamma/mu = " << s.gamma_over_mu << '\n';
    return out.str();
}

} // namespace hypell
