#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>

#include "replisim/vec2.hpp"

namespace replisim {

using CodonId = std::uint32_t;

enum class CodonType : std::uint8_t { Type0, Type1 };

/// The four fields carried by every codon. `Vertical` is purple on a Type0
/// codon and green on a Type1 codon.
enum class FieldSlot : std::uint8_t { Red, Blue, Vertical, Yellow };

/// Display colour of a field; parameters are tabulated per colour.
enum class FieldColor : std::uint8_t { Red, Blue, Green, Purple, Yellow };

enum class FieldSize : std::uint8_t { Small, Large };

enum class SplittingState : std::uint8_t { X, Y, Z };

inline constexpr std::array<FieldSlot, 4> kAllSlots{
    FieldSlot::Red, FieldSlot::Blue, FieldSlot::Vertical, FieldSlot::Yellow};

/// Slots that can hold a designated bond (there is no yellow bond).
inline constexpr std::array<FieldSlot, 3> kBondSlots{FieldSlot::Red, FieldSlot::Blue,
                                                     FieldSlot::Vertical};

constexpr std::size_t index_of(FieldSlot s) { return static_cast<std::size_t>(s); }

constexpr FieldColor color_of(CodonType type, FieldSlot slot) {
    switch (slot) {
        case FieldSlot::Red: return FieldColor::Red;
        case FieldSlot::Blue: return FieldColor::Blue;
        case FieldSlot::Vertical:
            return type == CodonType::Type0 ? FieldColor::Purple : FieldColor::Green;
        case FieldSlot::Yellow: return FieldColor::Yellow;
    }
    return FieldColor::Yellow;
}

/// Slot on the partner that pairs with `s` in a designated bond.
constexpr FieldSlot bond_counterpart(FieldSlot s) {
    switch (s) {
        case FieldSlot::Red: return FieldSlot::Blue;
        case FieldSlot::Blue: return FieldSlot::Red;
        default: return s;
    }
}

constexpr CodonType opposite(CodonType t) {
    return t == CodonType::Type0 ? CodonType::Type1 : CodonType::Type0;
}

/// A value tabulated per field colour.
template <typename T>
struct PerColor {
    T red{};
    T blue{};
    T green{};
    T purple{};
    T yellow{};

    constexpr T& operator[](FieldColor c) {
        switch (c) {
            case FieldColor::Red: return red;
            case FieldColor::Blue: return blue;
            case FieldColor::Green: return green;
            case FieldColor::Purple: return purple;
            case FieldColor::Yellow: return yellow;
        }
        return yellow;
    }
    constexpr const T& operator[](FieldColor c) const {
        return const_cast<PerColor&>(*this)[c];
    }
    friend bool operator==(const PerColor&, const PerColor&) = default;
};

/// Arm lengths and field radii of the T-shaped codon body.
struct Geometry {
    PerColor<double> arm_length{7.0, 7.0, 4.0, 4.0, 1.0};
    PerColor<double> small_field_radius{0.01, 0.01, 0.01, 0.01, 0.01};
    PerColor<double> large_field_radius{4.0, 4.0, 4.0, 4.0, 6.0};

    friend bool operator==(const Geometry&, const Geometry&) = default;
};

struct Codon {
    CodonType type = CodonType::Type0;

    Vec2 position;
    double angle = 0.0;  // heading of the vertical arm, wrapped to (-pi, pi]
    Vec2 velocity;
    double angular_velocity = 0.0;

    std::array<FieldSize, 4> field_size{FieldSize::Small, FieldSize::Small, FieldSize::Small,
                                        FieldSize::Small};
    std::array<std::optional<CodonId>, 3> bond{};

    std::uint8_t strand_location = 0;  // 0, 1 or 2
    SplittingState splitting = SplittingState::X;

    std::uint32_t yellow_steps_large = 0;
    std::uint32_t z_steps = 0;

    FieldSize size(FieldSlot s) const { return field_size[index_of(s)]; }
    void set_size(FieldSlot s, FieldSize v) { field_size[index_of(s)] = v; }

    const std::optional<CodonId>& partner(FieldSlot s) const { return bond[index_of(s)]; }
    std::optional<CodonId>& partner(FieldSlot s) { return bond[index_of(s)]; }

    bool is_free() const { return !bond[0] && !bond[1] && !bond[2]; }

    /// Number of red-or-blue neighbours (0, 1 or 2).
    int strand_neighbours() const { return (bond[0] ? 1 : 0) + (bond[1] ? 1 : 0); }

    friend bool operator==(const Codon&, const Codon&) = default;
};

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (a > -std::numbers::pi && a <= std::numbers::pi) return a;
    double r = std::remainder(a, two_pi);  // in [-pi, pi]
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

inline Vec2 unit_heading(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Direction of an arm for a codon with the given heading. Red is on the left
/// when the vertical arm points up; yellow runs along the vertical arm.
inline Vec2 arm_direction(double angle, FieldSlot slot) {
    Vec2 u = unit_heading(angle);
    switch (slot) {
        case FieldSlot::Red: return u.perp();
        case FieldSlot::Blue: return -u.perp();
        case FieldSlot::Vertical:
        case FieldSlot::Yellow: return u;
    }
    return u;
}

inline double arm_length(const Codon& c, FieldSlot slot, const Geometry& g = {}) {
    return g.arm_length[color_of(c.type, slot)];
}

inline Vec2 tip_position(const Codon& c, FieldSlot slot, const Geometry& g = {}) {
    return c.position + arm_length(c, slot, g) * arm_direction(c.angle, slot);
}

inline double field_radius(const Codon& c, FieldSlot slot, const Geometry& g = {}) {
    FieldColor col = color_of(c.type, slot);
    return c.size(slot) == FieldSize::Large ? g.large_field_radius[col]
                                            : g.small_field_radius[col];
}

}  // namespace replisim
