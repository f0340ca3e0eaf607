#pragma once

#include "hypell/catalog.hpp"
#include "hypell/error.hpp"
#include "hypell/number.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hypell {

/// A numerical class a*(A/mu) + b*(mu*B/gamma) - sum d_i E_i on the blow-up
/// X_r, r = d.size(). The same type carries line bundles and curve classes.
struct DivisorClass {
    Integer a;
    Integer b;
    std::vector<Integer> d;

    DivisorClass() = default;
    DivisorClass(Integer a_, Integer b_, std::vector<Integer> d_ = {})
        : a(std::move(a_)), b(std::move(b_)), d(std::move(d_))
    {
    }

    /// (a, b, d, ..., d) with r copies of d.
    static DivisorClass uniform(Integer a, Integer b, std::size_t r, const Integer& d)
    {
        return {std::move(a), std::move(b), std::vector<Integer>(r, d)};
    }

    [[nodiscard]] std::size_t r() const noexcept { return d.size(); }

    /// True when every d_i has the same value (vacuously false for r = 0).
    [[nodiscard]] bool is_uniform() const
    {
        if (d.empty())
            return false;
        for (const auto& di : d)
            if (di != d.front())
                return false;
        return true;
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass operator*(const Integer& t, const DivisorClass& c)
{
    DivisorClass out{t * c.a, t * c.b, c.d};
    for (auto& di : out.d)
        di *= t;
    return out;
}

inline DivisorClass operator+(const DivisorClass& x, const DivisorClass& y)
{
    if (x.r() != y.r())
        throw Error(ErrorCode::DimensionMismatch, "cannot add classes on X_" + std::to_string(x.r()) +
                                                      " and X_" + std::to_string(y.r()));
    DivisorClass out{x.a + y.a, x.b + y.b, x.d};
    for (std::size_t i = 0; i < out.d.size(); ++i)
        out.d[i] += y.d[i];
    return out;
}

/// Re-reads a class on X_r as a class on X_{r'} (r' >= r) with zero
/// coefficients on the extra exceptional curves.
inline DivisorClass pad_to(const DivisorClass& c, std::size_t r)
{
    if (r < c.r())
        throw Error(ErrorCode::DimensionMismatch,
                    "cannot pad a class on X_" + std::to_string(c.r()) + " down to X_" + std::to_string(r));
    DivisorClass out = c;
    out.d.resize(r, Integer(0));
    return out;
}

/// Intersection pairing: (A/mu)^2 = (mu B/gamma)^2 = 0, (A/mu).(mu B/gamma) = 1,
/// E_i^2 = -1, all mixed products zero.
inline Integer intersect(const DivisorClass& c1, const DivisorClass& c2)
{
    if (c1.r() != c2.r())
        throw Error(ErrorCode::DimensionMismatch, "intersecting classes on X_" + std::to_string(c1.r()) +
                                                      " and X_" + std::to_string(c2.r()));
    Integer value = c1.a * c2.b + c2.a * c1.b;
    for (std::size_t i = 0; i < c1.d.size(); ++i)
        value -= c1.d[i] * c2.d[i];
    return value;
}

inline Integer self_intersection(const DivisorClass& c) { return intersect(c, c); }

enum class FibreKind {
    FibreA,            // smooth fibre of the fibration over P^1, (mu, 0)
    FibreB,            // fibre of the Albanese map, (0, gamma/mu)
    SingularAReduced,  // reduced multiple fibre of maximal multiplicity, (1, 0)
    AMinusE,           // strict transform of the A-fibre through x_i
    BMinusE,           // strict transform of the B-fibre through x_j
};

/// index is 1-based and only consulted for AMinusE / BMinusE.
inline DivisorClass fibre_class(const SurfaceData& s, std::size_t r, FibreKind kind, std::size_t index = 0)
{
    DivisorClass c{0, 0, std::vector<Integer>(r, Integer(0))};
    auto require_index = [&] {
        if (index < 1 || index > r)
            throw Error(ErrorCode::InvalidIndex, "exceptional index " + std::to_string(index) +
                                                     " outside 1.." + std::to_string(r));
    };
    switch (kind) {
    case FibreKind::FibreA:
        c.a = s.mu;
        break;
    case FibreKind::FibreB:
        c.b = s.gamma_over_mu;
        break;
    case FibreKind::SingularAReduced:
        c.a = 1;
        break;
    case FibreKind::AMinusE:
        require_index();
        c.a = s.mu;
        c.d[index - 1] = 1;
        break;
    case FibreKind::BMinusE:
        require_index();
        c.b = s.gamma_over_mu;
        c.d[index - 1] = 1;
        break;
    }
    return c;
}

/// (L.C)/m for a candidate curve class C of multiplicity m.
inline Rational seshadri_ratio(const DivisorClass& L, const DivisorClass& C, const Integer& m)
{
    if (m <= 0)
        throw Error(ErrorCode::InvalidMultiplicity, "multiplicity must be positive, got " + m.str());
    return Rational(intersect(L, C), m);
}

/// Either a rational q or sqrt(q) with q >= 0.
class Bound {
public:
    enum class Kind { Rational, Sqrt };

    static Bound rational(Rational q) { return Bound(Kind::Rational, std::move(q)); }

    static Bound sqrt(Rational q)
    {
        if (q < 0)
            throw Error(ErrorCode::InvalidInput, "sqrt bound of negative value " + to_string(q));
        return Bound(Kind::Sqrt, std::move(q));
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const Rational& q() const noexcept { return q_; }
    [[nodiscard]] bool is_sqrt() const noexcept { return kind_ == Kind::Sqrt; }

    friend bool operator==(const Bound&, const Bound&) = default;

private:
    Bound(Kind kind, Rational q) : kind_(kind), q_(std::move(q)) {}

    Kind kind_;
    Rational q_;
};

namespace detail {

inline std::strong_ordering compare_rational(const Rational& x, const Rational& y)
{
    // cross-multiplied integers; denominators are positive
    Integer lhs = numerator(x) * denominator(y);
    Integer rhs = numerator(y) * denominator(x);
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// x (rational) against sqrt(y), y >= 0
inline std::strong_ordering compare_rational_sqrt(const Rational& x, const Rational& y)
{
    if (x < 0)
        return std::strong_ordering::less;
    return compare_rational(x * x, y);
}

} // namespace detail

inline std::strong_ordering compare_bounds(const Bound& x, const Bound& y)
{
    using K = Bound::Kind;
    if (x.kind() == y.kind())
        return detail::compare_rational(x.q(), y.q()); // sqrt is monotone on q >= 0
    if (x.kind() == K::Rational)
        return detail::compare_rational_sqrt(x.q(), y.q());
    return 0 <=> detail::compare_rational_sqrt(y.q(), x.q());
}

inline const Bound& min_bound(const Bound& x, const Bound& y)
{
    return compare_bounds(y, x) < 0 ? y : x;
}

} // namespace hypell
