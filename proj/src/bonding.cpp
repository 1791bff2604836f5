#include "replisim/bonding.hpp"

#include <algorithm>
#include <cmath>

namespace replisim {

SpatialIndex::SpatialIndex(const Bounds& bounds, double cell_size)
    : m_bounds(bounds), m_cell(cell_size) {
    m_nx = std::max<std::int32_t>(1, static_cast<std::int32_t>(
                                         std::ceil((bounds.max_x - bounds.min_x) / cell_size)));
    m_ny = std::max<std::int32_t>(1, static_cast<std::int32_t>(
                                         std::ceil((bounds.max_y - bounds.min_y) / cell_size)));
}

std::int32_t SpatialIndex::cell_coord(double v, double lo, std::int32_t n) const {
    const double c = std::floor((v - lo) / m_cell);
    if (!(c >= 0.0)) return 0;  // also catches NaN
    if (c >= static_cast<double>(n)) return n - 1;
    return static_cast<std::int32_t>(c);
}

void SpatialIndex::rebuild(std::span<const Codon> codons, const Geometry& g) {
    const std::size_t ntips = codons.size() * 4;
    const std::size_t ncells = static_cast<std::size_t>(m_nx) * static_cast<std::size_t>(m_ny);
    m_tips.resize(ntips);
    m_cell_of.resize(ntips);
    m_start.assign(ncells + 1, 0);
    for (std::size_t i = 0; i < codons.size(); ++i) {
        for (FieldSlot s : kAllSlots) {
            const std::size_t h = i * 4 + index_of(s);
            const Vec2 t = tip_position(codons[i], s, g);
            m_tips[h] = t;
            const std::uint32_t cell = static_cast<std::uint32_t>(
                cell_coord(t.y, m_bounds.min_y, m_ny) * m_nx + cell_coord(t.x, m_bounds.min_x, m_nx));
            m_cell_of[h] = cell;
            ++m_start[cell + 1];
        }
    }
    for (std::size_t c = 0; c < ncells; ++c) m_start[c + 1] += m_start[c];
    m_sorted.resize(ntips);
    std::vector<std::uint32_t> cursor(m_start.begin(), m_start.end() - 1);
    for (std::size_t h = 0; h < ntips; ++h) m_sorted[cursor[m_cell_of[h]]++] = static_cast<std::uint32_t>(h);
}

double max_field_radius(const Geometry& g) {
    double r = 0.0;
    for (FieldColor c : {FieldColor::Red, FieldColor::Blue, FieldColor::Green, FieldColor::Purple,
                         FieldColor::Yellow})
        r = std::max({r, g.large_field_radius[c], g.small_field_radius[c]});
    return r;
}

ContactSet detect_contacts(std::span<const Codon> codons, const SpatialIndex& index,
                           const Geometry& g) {
    ContactSet out;
    const double yellow_reach_max = 2.0 * g.large_field_radius.yellow;
    const double any_reach_max = 2.0 * max_field_radius(g);
    const double any_reach_max2 = std::max(any_reach_max, yellow_reach_max) *
                                  std::max(any_reach_max, yellow_reach_max);
    index.for_each_candidate([&](std::uint32_t h1, std::uint32_t h2) {
        const Vec2 d = index.tip(h2) - index.tip(h1);
        const double d2 = d.norm2();
        if (d2 > any_reach_max2) return;
        if (h1 / 4 > h2 / 4) std::swap(h1, h2);
        const CodonId a = h1 / 4, b = h2 / 4;
        const FieldSlot sa = static_cast<FieldSlot>(h1 % 4), sb = static_cast<FieldSlot>(h2 % 4);
        const double reach = field_radius(codons[a], sa, g) + field_radius(codons[b], sb, g);
        const bool both_yellow = sa == FieldSlot::Yellow && sb == FieldSlot::Yellow;
        if (!both_yellow && d2 > 1.0001 * reach * reach) return;
        // Decide on the distance itself so the result matches an all-pairs scan exactly.
        ContactPair cp{a, b, sa, sb, std::sqrt(d2)};
        if (cp.distance <= reach) out.contacts.push_back(cp);
        if (both_yellow && cp.distance <= yellow_reach_max) out.yellow_near.push_back(cp);
    });
    std::sort(out.contacts.begin(), out.contacts.end());
    std::sort(out.yellow_near.begin(), out.yellow_near.end());
    return out;
}

ContactSet detect_contacts_all_pairs(std::span<const Codon> codons, const Geometry& g) {
    ContactSet out;
    const double yellow_reach_max = 2.0 * g.large_field_radius.yellow;
    for (CodonId a = 0; a < codons.size(); ++a)
        for (CodonId b = a + 1; b < codons.size(); ++b)
            for (FieldSlot sa : kAllSlots)
                for (FieldSlot sb : kAllSlots) {
                    const Vec2 dv = tip_position(codons[b], sb, g) - tip_position(codons[a], sa, g);
                    const double d = std::sqrt(dv.norm2());
                    ContactPair cp{a, b, sa, sb, d};
                    if (d <= field_radius(codons[a], sa, g) + field_radius(codons[b], sb, g))
                        out.contacts.push_back(cp);
                    if (sa == FieldSlot::Yellow && sb == FieldSlot::Yellow && d <= yellow_reach_max)
                        out.yellow_near.push_back(cp);
                }
    return out;
}

double alignment_error(const Codon& a, FieldSlot slot_a, const Codon& b, FieldSlot slot_b) {
    const Vec2 da = arm_direction(a.angle, slot_a);
    const Vec2 db = arm_direction(b.angle, slot_b);
    // Angle between da and -db.
    return std::abs(std::atan2(cross(da, -db), dot(da, -db)));
}

namespace {

double pair_tolerance(const Codon& a, FieldSlot sa, const Codon& b, FieldSlot sb,
                      const BondTolerances& tol) {
    return std::min(tol.angle_tolerance[color_of(a.type, sa)],
                    tol.angle_tolerance[color_of(b.type, sb)]);
}

}  // namespace

bool try_form_red_blue(std::span<Codon> codons, CodonId a, CodonId b, const BondTolerances& tol) {
    if (a == b) return false;
    Codon& ca = codons[a];
    Codon& cb = codons[b];
    if (ca.partner(FieldSlot::Red) || cb.partner(FieldSlot::Blue)) return false;
    if (ca.size(FieldSlot::Red) != FieldSize::Small || cb.size(FieldSlot::Blue) != FieldSize::Small)
        return false;
    if (alignment_error(ca, FieldSlot::Red, cb, FieldSlot::Blue) >
        pair_tolerance(ca, FieldSlot::Red, cb, FieldSlot::Blue, tol))
        return false;
    ca.partner(FieldSlot::Red) = b;
    cb.partner(FieldSlot::Blue) = a;
    ca.set_size(FieldSlot::Red, FieldSize::Large);
    cb.set_size(FieldSlot::Blue, FieldSize::Large);
    return true;
}

bool try_form_green_purple(std::span<Codon> codons, CodonId a, CodonId b,
                           const BondTolerances& tol) {
    if (a == b) return false;
    Codon& ca = codons[a];
    Codon& cb = codons[b];
    if (ca.type == cb.type) return false;
    if (ca.partner(FieldSlot::Vertical) || cb.partner(FieldSlot::Vertical)) return false;
    if (ca.size(FieldSlot::Vertical) == FieldSize::Large &&
        cb.size(FieldSlot::Vertical) == FieldSize::Large)
        return false;
    if (alignment_error(ca, FieldSlot::Vertical, cb, FieldSlot::Vertical) >
        pair_tolerance(ca, FieldSlot::Vertical, cb, FieldSlot::Vertical, tol))
        return false;
    ca.partner(FieldSlot::Vertical) = b;
    cb.partner(FieldSlot::Vertical) = a;
    return true;
}

std::string_view bond_label(FieldSlot slot_a) {
    return slot_a == FieldSlot::Vertical ? "vertical" : "red-blue";
}

void form_bonds(std::span<Codon> codons, std::span<const ContactPair> contacts,
                const BondTolerances& tol, std::uint64_t step, std::vector<EventRecord>& events) {
    for (const ContactPair& cp : contacts) {
        if (cp.slot_a == FieldSlot::Red && cp.slot_b == FieldSlot::Blue) {
            if (try_form_red_blue(codons, cp.a, cp.b, tol))
                events.push_back({step, EventKind::BondFormed, {cp.a, cp.b}, "red-blue", {}});
        } else if (cp.slot_a == FieldSlot::Blue && cp.slot_b == FieldSlot::Red) {
            if (try_form_red_blue(codons, cp.b, cp.a, tol))
                events.push_back({step, EventKind::BondFormed, {cp.b, cp.a}, "red-blue", {}});
        } else if (cp.slot_a == FieldSlot::Vertical && cp.slot_b == FieldSlot::Vertical) {
            if (try_form_green_purple(codons, cp.a, cp.b, tol))
                events.push_back({step, EventKind::BondFormed, {cp.a, cp.b}, "vertical", {}});
        }
    }
}

void release_bond(std::span<Codon> codons, CodonId a, FieldSlot slot_a) {
    auto& mine = codons[a].partner(slot_a);
    if (!mine) return;
    auto& theirs = codons[*mine].partner(bond_counterpart(slot_a));
    if (theirs == a) theirs.reset();
    mine.reset();
}

void break_separated_bonds(std::span<Codon> codons, const Geometry& g, std::uint64_t step,
                           std::vector<EventRecord>& events) {
    for (CodonId i = 0; i < codons.size(); ++i) {
        for (FieldSlot s : {FieldSlot::Red, FieldSlot::Vertical}) {
            const auto partner = codons[i].partner(s);
            if (!partner) continue;
            const CodonId j = *partner;
            if (s == FieldSlot::Vertical && j < i) continue;
            const FieldSlot sj = bond_counterpart(s);
            const double reach = field_radius(codons[i], s, g) + field_radius(codons[j], sj, g);
            const Vec2 d = tip_position(codons[j], sj, g) - tip_position(codons[i], s, g);
            if (d.norm2() <= reach * reach) continue;
            release_bond(codons, i, s);
            if (s == FieldSlot::Red) {
                codons[i].set_size(FieldSlot::Red, FieldSize::Small);
                codons[j].set_size(FieldSlot::Blue, FieldSize::Small);
            }
            events.push_back({step, EventKind::BondBroken, {i, j}, std::string(bond_label(s)), {}});
        }
    }
}

void update_field_sizes(Codon& c, std::uint32_t iterations_after_split) {
    c.set_size(FieldSlot::Red, c.partner(FieldSlot::Red) ? FieldSize::Large : FieldSize::Small);
    c.set_size(FieldSlot::Blue, c.partner(FieldSlot::Blue) ? FieldSize::Large : FieldSize::Small);
    c.set_size(FieldSlot::Vertical,
               c.strand_neighbours() > 0 ? FieldSize::Large : FieldSize::Small);
    if (c.size(FieldSlot::Yellow) == FieldSize::Large &&
        c.yellow_steps_large >= iterations_after_split)
        c.set_size(FieldSlot::Yellow, FieldSize::Small);
}

}  // namespace replisim
