#include "support.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

using namespace hypell;
using hypell::test::q;

namespace {

DivisorClass u(long long a, long long b, std::size_t r, long long d) { return DivisorClass::uniform(a, b, r, d); }

std::vector<long long> to64(const std::vector<Integer>& v)
{
    std::vector<long long> out;
    for (const auto& x : v)
        out.push_back(static_cast<long long>(x));
    return out;
}

} // namespace

TEST(Intersect, Examples)
{
    EXPECT_EQ(intersect({1, 1}, {1, 1}), 2);
    EXPECT_EQ(intersect(u(4, 6, 8, 1), u(4, 6, 8, 1)), 40);
    const auto& t1 = surface_params(1);
    EXPECT_EQ(intersect({3, 5}, fibre_class(t1, 0, FibreKind::FibreA)), 10);
}

TEST(Intersect, DimensionMismatch)
{
    try {
        intersect(u(1, 1, 2, 1), u(1, 1, 3, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(SelfIntersection, Examples)
{
    EXPECT_EQ(self_intersection(u(5, 5, 8, 1)), 42);
    EXPECT_EQ(self_intersection({1, 0}), 0);
    EXPECT_EQ(self_intersection({0, 0, {1}}), -1);
}

TEST(Lattice, PairingPropertiesRandomized)
{
    test::Gen gen(1001);
    for (int i = 0; i < 2000; ++i) {
        auto r = static_cast<std::size_t>(gen.uniform(0, 6));
        auto c1 = gen.divisor(r, -20, 20), c2 = gen.divisor(r, -20, 20), c3 = gen.divisor(r, -20, 20);
        Integer s = gen.uniform(-5, 5), t = gen.uniform(-5, 5);
        ASSERT_EQ(intersect(c1, c2), intersect(c2, c1));
        ASSERT_EQ(intersect(s * c1 + t * c2, c3), s * intersect(c1, c3) + t * intersect(c2, c3));
        ASSERT_EQ(intersect(c1, c2), test::pairing64(static_cast<long long>(c1.a), static_cast<long long>(c1.b),
                                                     to64(c1.d), static_cast<long long>(c2.a),
                                                     static_cast<long long>(c2.b), to64(c2.d)));
        Integer sq = 2 * c1.a * c1.b;
        for (const auto& di : c1.d)
            sq -= di * di;
        ASSERT_EQ(self_intersection(c1), sq);
    }
}

TEST(FibreClass, Examples)
{
    EXPECT_EQ(fibre_class(surface_params(1), 3, FibreKind::FibreA), DivisorClass(2, 0, {0, 0, 0}));
    EXPECT_EQ(fibre_class(surface_params(2), 2, FibreKind::FibreB), DivisorClass(0, 2, {0, 0}));
    EXPECT_EQ(fibre_class(surface_params(6), 3, FibreKind::BMinusE, 1), DivisorClass(0, 3, {1, 0, 0}));
    EXPECT_EQ(fibre_class(surface_params(3), 2, FibreKind::AMinusE, 2), DivisorClass(4, 0, {0, 1}));
    EXPECT_EQ(fibre_class(surface_params(7), 1, FibreKind::SingularAReduced), DivisorClass(1, 0, {0}));
}

TEST(FibreClass, IndexErrors)
{
    const auto& s = surface_params(1);
    for (std::size_t bad : {std::size_t{0}, std::size_t{4}}) {
        try {
            fibre_class(s, 3, FibreKind::AMinusE, bad);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidIndex);
        }
    }
    EXPECT_THROW(fibre_class(s, 0, FibreKind::BMinusE, 1), Error);
}

TEST(FibreClass, FibresAreIsotropicAndMeetInGamma)
{
    for (const auto& s : all_surfaces()) {
        auto A = fibre_class(s, 2, FibreKind::FibreA);
        auto B = fibre_class(s, 2, FibreKind::FibreB);
        EXPECT_EQ(self_intersection(A), 0);
        EXPECT_EQ(self_intersection(B), 0);
        EXPECT_EQ(intersect(A, B), s.gamma);
        EXPECT_EQ(self_intersection(fibre_class(s, 2, FibreKind::AMinusE, 1)), -1);
    }
}

TEST(SeshadriRatio, Examples)
{
    const auto& t1 = surface_params(1);
    auto L = u(4, 6, 8, 1);
    EXPECT_EQ(seshadri_ratio(L, fibre_class(t1, 8, FibreKind::SingularAReduced), 1), 6);
    EXPECT_EQ(seshadri_ratio(L, fibre_class(t1, 8, FibreKind::BMinusE, 3), 1), 3);
    EXPECT_EQ(seshadri_ratio({3, 7}, fibre_class(t1, 0, FibreKind::FibreA), 1), 14);
    EXPECT_EQ(seshadri_ratio(L, fibre_class(t1, 8, FibreKind::FibreB), 2), q(2));
}

TEST(SeshadriRatio, BadMultiplicity)
{
    try {
        seshadri_ratio({1, 1}, {1, 0}, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidMultiplicity);
    }
    EXPECT_THROW(seshadri_ratio({1, 1}, {1, 0}, -2), Error);
}

TEST(SeshadriRatio, HomogeneousInL)
{
    test::Gen gen(1002);
    for (int i = 0; i < 1500; ++i) {
        auto r = static_cast<std::size_t>(gen.uniform(0, 5));
        auto L = gen.divisor(r, -15, 15), C = gen.divisor(r, -15, 15);
        Integer m = gen.uniform(1, 6), t = gen.uniform(1, 9);
        ASSERT_EQ(seshadri_ratio(t * L, C, m), Rational(t) * seshadri_ratio(L, C, m));
    }
}

TEST(PadTo, ExtendsWithZeros)
{
    EXPECT_EQ(pad_to({1, 2, {3}}, 3), DivisorClass(1, 2, {3, 0, 0}));
    EXPECT_THROW(pad_to({1, 2, {3, 4}}, 1), Error);
    EXPECT_EQ(intersect(pad_to(u(4, 6, 2, 1), 4), u(4, 6, 4, 1)), 48 - 2);
}

TEST(CompareBounds, Examples)
{
    EXPECT_EQ(compare_bounds(Bound::rational(q(5, 2)), Bound::sqrt(q(25, 4))), std::strong_ordering::equal);
    EXPECT_EQ(compare_bounds(Bound::rational(3), Bound::sqrt(q(43, 5))), std::strong_ordering::greater);
    EXPECT_EQ(compare_bounds(Bound::sqrt(2), Bound::rational(q(3, 2))), std::strong_ordering::less);
    EXPECT_EQ(compare_bounds(Bound::rational(-1), Bound::sqrt(0)), std::strong_ordering::less);
    EXPECT_EQ(compare_bounds(Bound::sqrt(0), Bound::rational(0)), std::strong_ordering::equal);
    EXPECT_THROW(Bound::sqrt(-1), Error);
}

TEST(CompareBounds, AntisymmetricAndMatchesDecimal)
{
    using Dec = boost::multiprecision::cpp_dec_float_100;
    test::Gen gen(1003);
    auto value = [](const Bound& b) {
        Dec v = Dec(numerator(b.q()).str()) / Dec(denominator(b.q()).str());
        return b.is_sqrt() ? Dec(boost::multiprecision::sqrt(v)) : v;
    };
    for (int i = 0; i < 3000; ++i) {
        auto make = [&] {
            bool sq = gen.uniform(0, 1) == 1;
            Rational x(gen.uniform(sq ? 0 : -50, 50), gen.uniform(1, 12));
            return sq ? Bound::sqrt(x) : Bound::rational(x);
        };
        Bound x = make(), y = make();
        auto c = compare_bounds(x, y);
        ASSERT_EQ(compare_bounds(y, x), 0 <=> c);
        Dec diff = value(x) - value(y);
        if (c == 0) {
            ASSERT_LT(abs(diff), Dec("1e-90"));
        } else if (c < 0) {
            ASSERT_LT(diff, 0);
        } else {
            ASSERT_GT(diff, 0);
        }
    }
}

TEST(Number, CeilSqrtHalfMatchesSearch)
{
    for (long long r = 0; r <= 5000; ++r)
        ASSERT_EQ(ceil_sqrt_half(r), test::least_k64(r)) << r;
}

TEST(Number, RationalText)
{
    EXPECT_EQ(to_string(q(6, 4)), "3/2");
    EXPECT_EQ(to_string(q(-4, 2)), "-2");
    EXPECT_EQ(parse_rational("10/4"), q(5, 2));
    EXPECT_EQ(parse_rational("-7"), q(-7));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
    EXPECT_THROW(parse_integer(""), Error);
    EXPECT_THROW(parse_integer("1e3"), Error);
}
