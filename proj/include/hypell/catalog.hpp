#pragma once

#include "hypell/error.hpp"

#include <array>
#include <numeric>
#include <span>
#include <string>
#include <string_view>

namespace hypell {

/// One row of the classification of hyperelliptic surfaces: the group G,
/// the multiplicities of the multiple fibres of the elliptic fibration over
/// P^1, and the constants derived from them. Num(X) has basis A/mu, mu*B/gamma.
struct SurfaceData {
    int type_id;
    int gamma;                        // |G| = A.B
    std::span<const int> multiplicities;
    int mu;                           // lcm of the multiplicities
    int gamma_over_mu;                // coefficient of the fibre B in the basis
    std::string_view group_label;
};

namespace detail {

inline constexpr std::array<int, 4> mults_2222{2, 2, 2, 2};
inline constexpr std::array<int, 3> mults_244{2, 4, 4};
inline constexpr std::array<int, 3> mults_333{3, 3, 3};
inline constexpr std::array<int, 3> mults_236{2, 3, 6};

inline constexpr std::array<SurfaceData, 7> surface_table{{
    {1, 2, mults_2222, 2, 1, "Z2"},
    {2, 4, mults_2222, 2, 2, "Z2 x Z2"},
    {3, 4, mults_244, 4, 1, "Z4"},
    {4, 8, mults_244, 4, 2, "Z4 x Z2"},
    {5, 3, mults_333, 3, 1, "Z3"},
    {6, 9, mults_333, 3, 3, "Z3 x Z3"},
    {7, 6, mults_236, 6, 1, "Z6"},
}};

inline void require_type(int type_id)
{
    if (type_id < 1 || type_id > 7)
        throw Error(ErrorCode::InvalidInput,
                    "surface type " + std::to_string(type_id) + " out of range; valid types are 1..7");
}

} // namespace detail

inline const SurfaceData& surface_params(int type_id)
{
    detail::require_type(type_id);
    return detail::surface_table[static_cast<std::size_t>(type_id - 1)];
}

inline std::span<const SurfaceData> all_surfaces() { return detail::surface_table; }

inline bool is_odd_type(int type_id)
{
    detail::require_type(type_id);
    return type_id % 2 == 1;
}

inline bool is_odd_type(const SurfaceData& s) { return is_odd_type(s.type_id); }

} // namespace hypell
