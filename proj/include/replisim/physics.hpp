#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "replisim/core_model.hpp"
#include "replisim/rng.hpp"

namespace replisim {

/// Converts a base per-unit-time rate into the per-step fraction used at a
/// given timestep: 1 - (1 - rate)^dt.
inline double per_step_fraction(double base_rate, double timestep_duration) {
    return 1.0 - std::pow(1.0 - base_rate, timestep_duration);
}

struct PhysicsParams {
    double timestep_duration = 0.15;
    // Per-step fractions (already converted from base rates).
    double linear_viscosity = per_step_fraction(0.10, 0.15);
    double angular_viscosity = per_step_fraction(0.05, 0.15);
    double linear_spring_damping = per_step_fraction(0.90, 0.15);
    double angular_spring_damping = per_step_fraction(0.99, 0.15);

    PerColor<double> arm_force{1.8, 1.8, 1.0, 1.0, 1.0};
    PerColor<double> straightening_force{1.0, 1.0, 0.5, 0.5, 0.0};

    // Velocity kick half-widths per unit sqrt(time).
    double brownian_linear_amplitude = 0.0;
    double brownian_angular_amplitude = 0.0;

    // Rotational inertia about the middle (mass is 1).
    double moment_of_inertia = 750.0 / 54.0;

    Geometry geometry;
};

/// Inertia of a T whose unit mass is spread uniformly along its red, blue and
/// vertical arms (thin rods pivoting at the middle).
double rod_moment_of_inertia(const Geometry& g);

struct Bounds {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    bool contains(Vec2 p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
};

/// Per-codon force and torque for one step.
class ForceAccumulator {
public:
    explicit ForceAccumulator(std::size_t n = 0) { reset(n); }

    void reset(std::size_t n) {
        m_force.assign(n, Vec2{});
        m_torque.assign(n, 0.0);
    }

    /// Applies `f` at world point `at` on codon `id` whose middle is `middle`.
    void apply_at(CodonId id, Vec2 middle, Vec2 at, Vec2 f) {
        m_force[id] += f;
        m_torque[id] += cross(at - middle, f);
    }
    void add_torque(CodonId id, double t) { m_torque[id] += t; }

    Vec2 force(CodonId id) const { return m_force[id]; }
    double torque(CodonId id) const { return m_torque[id]; }
    std::size_t size() const { return m_force.size(); }

private:
    std::vector<Vec2> m_force;
    std::vector<double> m_torque;
};

void apply_brownian(Codon& c, RandomStream& rng, const PhysicsParams& p);

void apply_viscosity(Codon& c, const PhysicsParams& p);

/// Spring force k*d between the bonded tips (slot_a on a, its counterpart on b).
/// Returns true when the tips are farther apart than the sum of the current
/// field radii, i.e. the bond should break.
bool attractive_spring(std::span<const Codon> codons, CodonId a, FieldSlot slot_a, CodonId b,
                       ForceAccumulator& acc, const PhysicsParams& p);

/// Pushes two large yellow fields apart along the line joining their centres.
/// No-op unless both are Large and their circles overlap.
void repulsive_yellow(std::span<const Codon> codons, CodonId a, CodonId b,
                      ForceAccumulator& acc, const PhysicsParams& p);

/// Signed angle from the direction middle(a)->middle(b) to a's arm in `slot_a`.
double straightening_angle(const Codon& a, FieldSlot slot_a, const Codon& b);

/// Adds -k_s * phi torque on a (but not on b; call once per side).
void straightening_torque(std::span<const Codon> codons, CodonId a, FieldSlot slot_a, CodonId b,
                          ForceAccumulator& acc, const PhysicsParams& p);

void apply_spring_damping(Codon& a, Codon& b, const PhysicsParams& p);

/// Semi-implicit Euler with unit mass.
void integrate(Codon& c, Vec2 force, double torque, const PhysicsParams& p);

/// Clamp to the container and reflect the outward velocity component.
void enforce_container(Codon& c, const Bounds& bounds);

}  // namespace replisim
