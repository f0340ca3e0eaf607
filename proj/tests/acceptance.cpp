// Acceptance suite: prints one PASS/FAIL line per criterion, exits non-zero on any failure.
#include "support.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace hypell;
using hypell::test::q;

namespace {

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

DivisorClass u(long long a, long long b, std::size_t r, long long d) { return DivisorClass::uniform(a, b, r, d); }

struct Check {
    std::ostringstream notes;
    bool ok = true;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

const Hypothesis* hyp(const SeshadriResult& res, std::string_view name)
{
    for (const auto& h : res.hypotheses)
        if (h.name == name)
            return &h;
    return nullptr;
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

void example_one(Check& c)
{
    const auto& t1 = surface_params(1);
    auto L = u(4, 6, 8, 1);
    auto smooth = point_on_locus(L, t1, Locus::SmoothA, false);
    for (const char* name : {"d >= 1", "a >= 2kd", "b >= 2kd"})
        c.expect(hyp(smooth, name) && hyp(smooth, name)->holds, std::string("smooth-a hypothesis ") + name);
    c.expect(contains(hyp(smooth, "a >= 2kd")->detail, "a = 4, 2kd = 4 (k = 2)"), "k = 2 in trace");
    auto vg = very_general_point(L, t1);
    c.expect(vg.status == SeshadriStatus::Exact && vg.value == Rational(4), "very general point = 4");
    auto g = global_constant(L, t1);
    c.expect(g.result.status == SeshadriStatus::Exact && g.result.value == Rational(3), "global = 3");
    c.expect(g.certificate && g.certificate->verify(), "global certificate verifies");
    c.notes << " eps(X_8,L,1) = " << to_string(*vg.value) << ", eps(X_8,L) = " << to_string(*g.result.value);
}

void example_two(Check& c)
{
    auto L = u(4, 6, 5, 1);
    for (int type : {2, 4, 6}) {
        auto g = global_constant(L, surface_params(type));
        bool cert = g.certificate && g.certificate->kind == CertificateKind::GlobalRationality;
        c.expect(cert, "type " + std::to_string(type) + " rationality certificate");
        c.expect(cert && g.certificate->verify(), "type " + std::to_string(type) + " self-check");
        if (type == 6) {
            const auto& res = g.result;
            c.expect(hyp(res, "2a > (r+1)d")->holds && contains(hyp(res, "2a > (r+1)d")->detail, "2a = 8, (r+1)d = 6"),
                     "2a = 8 > 6");
            c.expect(hyp(res, "b > r d")->holds && contains(hyp(res, "b > r d")->detail, "b = 6, r d = 5"), "b = 6 > 5");
            const auto* alt = hyp(res, "b >= 9a/2 - 2d or b <= 2(a-d)");
            c.expect(alt && alt->holds && contains(alt->detail, "b = 6 vs 2(a-d) = 6"), "b = 6 <= 6");
        }
        if (cert)
            c.notes << " type " << type << ": " << to_string(g.certificate->claimed) << "^2 < "
                    << g.certificate->comparison.self_intersection << ";";
    }
}

void remark(Check& c)
{
    auto v = decide_ample(u(3, 3, 10, 1), surface_params(1));
    c.expect(v.status == AmpleStatus::Proven, "proven");
    bool homog = false, nonhomog = false;
    for (const auto& cr : v.criteria) {
        if (cr.name == criterion::homogeneous)
            homog = cr.outcome == Outcome::Passed && contains(cr.detail, "(2f^2 = 18)") && contains(cr.detail, "r = 10");
        if (cr.name == criterion::nonhomogeneous)
            nonhomog = cr.outcome == Outcome::Failed && contains(cr.detail, "condition (2) fails: a + b = 6 <= 20");
    }
    c.expect(homog, "homogeneous passed with 18 > 10");
    c.expect(nonhomog, "nonhomogeneous condition (2) failed with 6 <= 20");
    c.notes << " homogeneous: 2*3^2 = 18 > 10; nonhomogeneous: 3 + 3 = 6 <= 20";
}

void multipoint(Check& c)
{
    std::int64_t total = 0;
    for (const auto& s : all_surfaces()) {
        auto rep = verify_multipoint_formula(s, 10, 16, jobs());
        total += rep.instances_checked;
        c.expect(rep.pass(), "type " + std::to_string(s.type_id) + " has " + std::to_string(rep.violations.size()) +
                                 " violations");
        // every Exact value is one of the listed fibre ratios
        for (int a = 1; a <= 10; ++a)
            for (int b = 1; b <= 10; ++b)
                for (int s0 = 1; s0 <= 4; ++s0) {
                    int t0 = is_odd_type(s) ? 1 + (a + b) % 4 : (s.type_id == 2 ? 4 : s.type_id == 4 ? 2 : 3);
                    auto res = multipoint_special({a, b}, s, {t0 * s0, s0, t0, t0, s0, true});
                    if (res.status != SeshadriStatus::Exact)
                        continue;
                    bool attained = std::any_of(res.attaining.begin(), res.attaining.end(),
                                                [&](const Attaining& at) { return at.ratio == *res.value; });
                    c.expect(attained, "unattained exact value");
                }
    }
    c.notes << " " << total << " instances, 7 types";
}

void perfect_square(Check& c)
{
    auto res = multipoint_general({5, 5}, 8);
    c.expect(res.status == SeshadriStatus::Exact && res.value == q(5, 2), "exact 5/2");
    c.expect(nef_for_d(5, 5, 8, q(5, 2)), "nef at 5/2");
    int scanned = 0;
    for (long long den = 1; den <= 8; ++den)
        for (long long num = 1; num <= 10 * den; ++num) {
            Rational d(num, den);
            if (d <= q(5, 2))
                continue;
            ++scanned;
            c.expect(!nef_for_d(5, 5, 8, d), "nef at " + to_string(d));
        }
    c.notes << " " << scanned << " larger d scanned";
}

void single_chain(Check& c)
{
    for (int type : {1, 3, 5, 7}) {
        auto rep = verify_single_point_chain(surface_params(type), 8, 16, jobs());
        std::string t = "type " + std::to_string(type);
        c.expect(rep.pass(), t + " violations");
        c.expect(rep.equalities["(2mu-1)a = mu b"] > 0, t + " (2mu-1)a = mu b not observed");
        c.expect(rep.equalities["a = mu(2mu-1)b"] > 0, t + " a = mu(2mu-1)b not observed");
        c.notes << " " << t << ": " << rep.instances_checked << ";";
    }
}

void global_witness(Check& c)
{
    for (const auto& s : all_surfaces()) {
        auto rep = verify_global_witness(s, 12, jobs());
        c.expect(rep.pass(), "type " + std::to_string(s.type_id));
        c.notes << " type " << s.type_id << ": " << rep.instances_checked << ";";
    }
}

void invariants(Check& c)
{
    // each property runs until it has seen N qualifying instances
    constexpr int N = 1000;
    constexpr int attempts = 100 * N;
    test::Gen gen(8008);
    std::map<std::string, int> fails, seen;
    auto check = [&](const char* name, bool ok) {
        ++seen[name];
        fails[name] += !ok;
    };

    for (int i = 0; i < N; ++i) {
        auto r = static_cast<std::size_t>(gen.uniform(0, 6));
        auto c1 = gen.divisor(r, -20, 20), c2 = gen.divisor(r, -20, 20), c3 = gen.divisor(r, -20, 20);
        Integer s = gen.uniform(-5, 5), t = gen.uniform(-5, 5);
        check("pairing symmetry", intersect(c1, c2) == intersect(c2, c1));
        check("pairing bilinearity", intersect(s * c1 + t * c2, c3) == s * intersect(c1, c3) + t * intersect(c2, c3));
        Integer sq = 2 * c1.a * c1.b;
        for (const auto& di : c1.d)
            sq -= di * di;
        check("self-intersection formula", self_intersection(c1) == sq);
        Integer m = gen.uniform(1, 6), k = gen.uniform(1, 9);
        check("ratio homogeneity", seshadri_ratio(k * c1, c2, m) == Rational(k) * seshadri_ratio(c1, c2, m));
    }

    for (int i = 0; i < attempts && (seen["verdict exclusivity"] < N || seen["nonhomogeneous monotone"] < N); ++i) {
        const auto& sd = gen.surface();
        auto L = gen.divisor(static_cast<std::size_t>(gen.uniform(0, 4)), -1, 12);
        auto v = decide_ample(L, sd);
        bool necessary = true;
        for (const auto& ch : necessary_checks(L, sd))
            necessary = necessary && ch.passed;
        bool sufficient = kuchle_ample(L, sd).status == AmpleStatus::Proven ||
                          homogeneous_ample(L, sd).status == AmpleStatus::Proven ||
                          nonhomogeneous_ample(L, sd).status == AmpleStatus::Proven;
        check("verdict exclusivity", !(sufficient && !necessary) &&
                                         (v.status == AmpleStatus::Proven) == (necessary && sufficient) &&
                                         (v.status == AmpleStatus::Refuted) == !necessary);
        if (nonhomogeneous_ample(L, sd).status == AmpleStatus::Proven) {
            auto La = L, Lb = L;
            La.a += 1;
            Lb.b += 1;
            check("nonhomogeneous monotone", nonhomogeneous_ample(La, sd).status == AmpleStatus::Proven &&
                                                 nonhomogeneous_ample(Lb, sd).status == AmpleStatus::Proven);
        }
    }

    for (int i = 0; i < attempts && (seen["lower <= upper"] < N || seen["global <= very general"] < N); ++i) {
        const auto& odd = gen.odd_surface();
        auto L = gen.uniform_bundle(40, 20, 3);
        Bound root = Bound::sqrt(Rational(std::max(Integer(0), self_intersection(L))));
        std::vector<SeshadriResult> results{very_general_point(L, odd), global_constant(L, gen.surface()).result};
        for (auto locus : {Locus::SmoothA, Locus::AMinusE, Locus::SingularA})
            results.push_back(point_on_locus(L, odd, locus, gen.uniform(0, 1) == 1));
        for (const auto& res : results)
            if (res.status == SeshadriStatus::Bounds) {
                check("lower <= upper", compare_bounds(Bound::rational(res.lower), res.upper) <= 0);
                check("upper <= sqrt(L^2)", compare_bounds(res.upper, root) <= 0);
            }
        auto g = global_constant(L, odd).result;
        auto vg = very_general_point(L, odd);
        if (g.status == SeshadriStatus::Exact && vg.status != SeshadriStatus::HypothesesNotMet)
            check("global <= very general", *g.value <= vg.lower);
    }

    for (const auto& [name, n] : seen) {
        c.expect(n >= N, name + " saw only " + std::to_string(n) + " instances");
        c.expect(fails[name] == 0, name + ": " + std::to_string(fails[name]) + " failures");
    }
    c.notes << " " << seen.size() << " properties, each on >= " << N << " instances";
}

void compare_sanity(Check& c)
{
    using Dec = boost::multiprecision::cpp_dec_float_100;
    test::Gen gen(9009);
    auto value = [](const Bound& b) {
        Dec v = Dec(numerator(b.q()).str()) / Dec(denominator(b.q()).str());
        return b.is_sqrt() ? Dec(boost::multiprecision::sqrt(v)) : v;
    };
    int disagreements = 0, ties = 0;
    for (int i = 0; i < 10000; ++i) {
        Bound x = Bound::rational(0), y = Bound::rational(0);
        if (i % 5 == 0) {
            // constructed tie: p/q against sqrt(p^2/q^2)
            Rational r(gen.uniform(0, 200), gen.uniform(1, 30));
            x = Bound::rational(r);
            y = Bound::sqrt(r * r);
        } else {
            auto make = [&] {
                bool sq = gen.uniform(0, 1) == 1;
                Rational v(gen.uniform(sq ? 0 : -1000, 1000), gen.uniform(1, 60));
                return sq ? Bound::sqrt(v) : Bound::rational(v);
            };
            x = make();
            y = make();
        }
        if (i % 2)
            std::swap(x, y);
        auto cmp = compare_bounds(x, y);
        Dec diff = value(x) - value(y);
        bool tie = abs(diff) < Dec("1e-95");
        ties += tie;
        bool agree = tie ? cmp == 0 : (diff < 0 ? cmp < 0 : cmp > 0);
        disagreements += !agree;
    }
    c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
    c.expect(ties >= 2000, "too few ties exercised");
    c.notes << " 10000 pairs, " << ties << " ties";
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Check&)> body;
    };
    std::vector<Criterion> criteria{
        {1, "example X_8, L = (4,6,1): eps(L,1) = 4, eps(L) = 3", example_one},
        {2, "example X_5, L = (4,6,1): rationality certificates on types 2, 4, 6", example_two},
        {3, "ampleness of (3,3,1) on X_10 via homogeneous criterion", remark},
        {4, "multi-point closed forms vs box oracle, all types, grid 10, box 16", multipoint},
        {5, "perfect-square multi-point value 5/2 and nef threshold", perfect_square},
        {6, "single-point chain, odd types, grid 8, box 16", single_chain},
        {7, "global witness transcription, grid 12", global_witness},
        {8, "algebraic invariants on randomized instances", invariants},
        {9, "compare_bounds vs 100-digit decimal evaluation", compare_sanity},
    };
    bool all = true;
    for (const auto& cr : criteria) {
        Check c;
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes << " [exception: " << e.what() << "]";
        }
        all = all && c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " --" << c.notes.str()
                  << std::endl;
    }
    return all ? 0 : 1;
}
