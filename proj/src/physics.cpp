#include "replisim/physics.hpp"

#include <numbers>

namespace replisim {

double rod_moment_of_inertia(const Geometry& g) {
    const double lr = g.arm_length.red, lb = g.arm_length.blue;
    const double lv = 0.5 * (g.arm_length.green + g.arm_length.purple);
    const double total = lr + lb + lv;
    return (lr * lr * lr + lb * lb * lb + lv * lv * lv) / (3.0 * total);
}

void apply_brownian(Codon& c, RandomStream& rng, const PhysicsParams& p) {
    const double scale = std::sqrt(p.timestep_duration);
    const double dvx = rng.next_symmetric();
    const double dvy = rng.next_symmetric();
    const double dw = rng.next_symmetric();
    c.velocity.x += p.brownian_linear_amplitude * scale * dvx;
    c.velocity.y += p.brownian_linear_amplitude * scale * dvy;
    c.angular_velocity += p.brownian_angular_amplitude * scale * dw;
}

void apply_viscosity(Codon& c, const PhysicsParams& p) {
    c.velocity *= (1.0 - p.linear_viscosity);
    c.angular_velocity *= (1.0 - p.angular_viscosity);
}

bool attractive_spring(std::span<const Codon> codons, CodonId a, FieldSlot slot_a, CodonId b,
                       ForceAccumulator& acc, const PhysicsParams& p) {
    const Codon& ca = codons[a];
    const Codon& cb = codons[b];
    const FieldSlot slot_b = bond_counterpart(slot_a);
    const Vec2 ta = tip_position(ca, slot_a, p.geometry);
    const Vec2 tb = tip_position(cb, slot_b, p.geometry);
    const double k = 0.5 * (p.arm_force[color_of(ca.type, slot_a)] +
                            p.arm_force[color_of(cb.type, slot_b)]);
    const Vec2 d = tb - ta;
    const Vec2 f = k * d;
    acc.apply_at(a, ca.position, ta, f);
    acc.apply_at(b, cb.position, tb, -f);
    const double reach = field_radius(ca, slot_a, p.geometry) + field_radius(cb, slot_b, p.geometry);
    return d.norm2() > reach * reach;
}

void repulsive_yellow(std::span<const Codon> codons, CodonId a, CodonId b,
                      ForceAccumulator& acc, const PhysicsParams& p) {
    const Codon& ca = codons[a];
    const Codon& cb = codons[b];
    if (ca.size(FieldSlot::Yellow) != FieldSize::Large ||
        cb.size(FieldSlot::Yellow) != FieldSize::Large)
        return;
    const Vec2 ya = tip_position(ca, FieldSlot::Yellow, p.geometry);
    const Vec2 yb = tip_position(cb, FieldSlot::Yellow, p.geometry);
    const double reach = field_radius(ca, FieldSlot::Yellow, p.geometry) +
                         field_radius(cb, FieldSlot::Yellow, p.geometry);
    const Vec2 d = yb - ya;
    const double dist = d.norm();
    if (dist >= reach) return;
    // Coincident centres push along +x.
    const Vec2 n = dist > 0.0 ? (1.0 / dist) * d : Vec2{1.0, 0.0};
    const Vec2 f = p.arm_force.yellow * (reach - dist) * n;
    acc.apply_at(a, ca.position, ya, -f);
    acc.apply_at(b, cb.position, yb, f);
}

double straightening_angle(const Codon& a, FieldSlot slot_a, const Codon& b) {
    const Vec2 line = b.position - a.position;
    if (line.norm2() == 0.0) return 0.0;
    const Vec2 arm = arm_direction(a.angle, slot_a);
    return std::atan2(cross(line, arm), dot(line, arm));
}

void straightening_torque(std::span<const Codon> codons, CodonId a, FieldSlot slot_a, CodonId b,
                          ForceAccumulator& acc, const PhysicsParams& p) {
    const Codon& ca = codons[a];
    const double phi = straightening_angle(ca, slot_a, codons[b]);
    acc.add_torque(a, -p.straightening_force[color_of(ca.type, slot_a)] * phi);
}

void apply_spring_damping(Codon& a, Codon& b, const PhysicsParams& p) {
    const Vec2 mean = 0.5 * (a.velocity + b.velocity);
    a.velocity += p.linear_spring_damping * (mean - a.velocity);
    b.velocity += p.linear_spring_damping * (mean - b.velocity);
    a.angular_velocity *= (1.0 - p.angular_spring_damping);
    b.angular_velocity *= (1.0 - p.angular_spring_damping);
}

void integrate(Codon& c, Vec2 force, double torque, const PhysicsParams& p) {
    const double dt = p.timestep_duration;
    c.velocity += dt * force;
    c.angular_velocity += dt * torque / p.moment_of_inertia;
    c.position += dt * c.velocity;
    c.angle = wrap_angle(c.angle + dt * c.angular_velocity);
}

void enforce_container(Codon& c, const Bounds& bounds) {
    if (c.position.x < bounds.min_x) {
        c.position.x = bounds.min_x;
        c.velocity.x = std::abs(c.velocity.x);
    } else if (c.position.x > bounds.max_x) {
        c.position.x = bounds.max_x;
        c.velocity.x = -std::abs(c.velocity.x);
    }
    if (c.position.y < bounds.min_y) {
        c.position.y = bounds.min_y;
        c.velocity.y = std::abs(c.velocity.y);
    } else if (c.position.y > bounds.max_y) {
        c.position.y = bounds.max_y;
        c.velocity.y = -std::abs(c.velocity.y);
    }
}

}  // namespace replisim
