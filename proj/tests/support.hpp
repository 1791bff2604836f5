// Shared fixtures and independent oracles for the test suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "replisim/analytics.hpp"
#include "replisim/bonding.hpp"
#include "replisim/config.hpp"
#include "replisim/core_model.hpp"
#include "replisim/engine.hpp"

namespace testing {

using namespace replisim;

inline Codon make_codon(CodonType t, Vec2 pos, double angle) {
    Codon c;
    c.type = t;
    c.position = pos;
    c.angle = angle;
    return c;
}

/// Config with no noise, no viscosity and a large box, for deterministic mechanics.
inline SimulationConfig quiet_config(double box = 400.0) {
    SimulationConfig cfg;
    cfg.container_width = box;
    cfg.container_height = box;
    cfg.free_type0 = 0;
    cfg.free_type1 = 0;
    cfg.seed.reset();
    cfg.brownian_linear_amplitude = 0.0;
    cfg.brownian_angular_amplitude = 0.0;
    return cfg;
}

inline void bond(std::vector<Codon>& cs, CodonId a, FieldSlot sa, CodonId b) {
    cs[a].partner(sa) = b;
    cs[b].partner(bond_counterpart(sa)) = a;
}

/// A complete double strand: `bits` reading along the lower strand (vertical
/// arms up) and its negative mirror above it (vertical arms down), each
/// lower codon k vertically bonded to the upper codon directly above it.
/// Lower strand ids are [0, n), upper ids [n, 2n); upper id n + j sits above
/// lower id n - 1 - j.
inline std::vector<Codon> double_strand(const std::string& bits, Vec2 center) {
    const std::size_t n = bits.size();
    auto lower = encode_seed_strand(bits, center, std::numbers::pi / 2);
    auto upper = encode_seed_strand(negative_mirror(bits), center + Vec2{0.0, 8.0}, -std::numbers::pi / 2);
    std::vector<Codon> cs = lower;
    for (Codon c : upper) {
        for (auto& b : c.bond)
            if (b) *b += static_cast<CodonId>(n);
        cs.push_back(c);
    }
    for (std::size_t k = 0; k < n; ++k)
        bond(cs, static_cast<CodonId>(k), FieldSlot::Vertical, static_cast<CodonId>(2 * n - 1 - k));
    for (Codon& c : cs)
        c.set_size(FieldSlot::Vertical, c.strand_neighbours() > 0 ? FieldSize::Large : FieldSize::Small);
    return cs;
}

/// Removes codon `victim`, dropping its bonds and renumbering the rest.
inline std::vector<Codon> remove_codon(std::vector<Codon> cs, CodonId victim) {
    for (FieldSlot s : kBondSlots)
        if (auto p = cs[victim].partner(s)) cs[*p].partner(bond_counterpart(s)).reset();
    cs.erase(cs.begin() + victim);
    for (Codon& c : cs)
        for (auto& b : c.bond)
            if (b && *b > victim) --*b;
    for (Codon& c : cs) {
        for (FieldSlot s : {FieldSlot::Red, FieldSlot::Blue})
            c.set_size(s, c.partner(s) ? FieldSize::Large : FieldSize::Small);
        c.set_size(FieldSlot::Vertical, c.strand_neighbours() > 0 ? FieldSize::Large : FieldSize::Small);
    }
    return cs;
}

// ---- independent geometry ---------------------------------------------------

/// Tip positions straight from the codon anatomy: red 7 to the left of the
/// heading, blue 7 to the right, vertical 4 ahead, yellow 1 ahead.
inline Vec2 oracle_tip(const Codon& c, int slot) {
    const double ca = std::cos(c.angle), sa = std::sin(c.angle);
    switch (slot) {
        case 0: return {c.position.x - 7.0 * sa, c.position.y + 7.0 * ca};
        case 1: return {c.position.x + 7.0 * sa, c.position.y - 7.0 * ca};
        case 2: return {c.position.x + 4.0 * ca, c.position.y + 4.0 * sa};
        default: return {c.position.x + 1.0 * ca, c.position.y + 1.0 * sa};
    }
}

inline double oracle_radius(const Codon& c, int slot) {
    if (c.field_size[static_cast<std::size_t>(slot)] == FieldSize::Small) return 0.01;
    return slot == 3 ? 6.0 : 4.0;
}

using ContactKey = std::tuple<CodonId, CodonId, int, int>;

/// Every pair of intersecting fields on distinct codons, by exhaustive scan.
inline std::vector<ContactKey> oracle_contacts(const std::vector<Codon>& cs) {
    std::vector<ContactKey> out;
    for (CodonId a = 0; a < cs.size(); ++a)
        for (CodonId b = a + 1; b < cs.size(); ++b)
            for (int sa = 0; sa < 4; ++sa)
                for (int sb = 0; sb < 4; ++sb) {
                    const Vec2 ta = oracle_tip(cs[a], sa), tb = oracle_tip(cs[b], sb);
                    const double dx = tb.x - ta.x, dy = tb.y - ta.y;
                    if (std::sqrt(dx * dx + dy * dy) <= oracle_radius(cs[a], sa) + oracle_radius(cs[b], sb))
                        out.emplace_back(a, b, sa, sb);
                }
    std::sort(out.begin(), out.end());
    return out;
}

/// Strand membership by depth-first search over red/blue adjacency, as sorted
/// id sets, with bit strings read from the end that has no blue bond.
struct OracleStrand {
    std::vector<CodonId> members;  // sorted
    std::string bits;              // empty for cycles
};

inline std::vector<OracleStrand> oracle_strands(const std::vector<Codon>& cs) {
    std::vector<OracleStrand> out;
    std::vector<bool> seen(cs.size(), false);
    for (CodonId s = 0; s < cs.size(); ++s) {
        if (seen[s]) continue;
        std::vector<CodonId> stack{s}, members;
        seen[s] = true;
        while (!stack.empty()) {
            CodonId v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int k = 0; k < 2; ++k)
                if (auto p = cs[v].bond[static_cast<std::size_t>(k)]; p && !seen[*p]) {
                    seen[*p] = true;
                    stack.push_back(*p);
                }
        }
        std::sort(members.begin(), members.end());
        OracleStrand st{members, ""};
        for (CodonId m : members)
            if (!cs[m].bond[1]) {
                for (std::optional<CodonId> v = m; v; v = cs[*v].bond[0])
                    st.bits += cs[*v].type == CodonType::Type0 ? '0' : '1';
                break;
            }
        out.push_back(st);
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.members < r.members; });
    return out;
}

/// Random soup with random red-blue chains and some vertical bonds; bonds are
/// consistent but positions need not match them.
inline std::vector<Codon> random_bonded_state(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> pos(0.0, 100.0), ang(-std::numbers::pi, std::numbers::pi);
    std::vector<Codon> cs;
    for (std::size_t i = 0; i < n; ++i)
        cs.push_back(make_codon(rng() % 2 ? CodonType::Type1 : CodonType::Type0, {pos(rng), pos(rng)}, ang(rng)));
    std::vector<CodonId> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<CodonId>(i);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (rng() % 3 != 0) bond(cs, order[i], FieldSlot::Red, order[i + 1]);
    for (std::size_t k = 0; k < n / 4; ++k) {
        CodonId a = static_cast<CodonId>(rng() % n), b = static_cast<CodonId>(rng() % n);
        if (a != b && cs[a].type != cs[b].type && !cs[a].partner(FieldSlot::Vertical) &&
            !cs[b].partner(FieldSlot::Vertical))
            bond(cs, a, FieldSlot::Vertical, b);
    }
    for (Codon& c : cs) {
        for (FieldSlot s : {FieldSlot::Red, FieldSlot::Blue})
            c.set_size(s, c.partner(s) ? FieldSize::Large : FieldSize::Small);
        c.set_size(FieldSlot::Vertical, c.strand_neighbours() > 0 ? FieldSize::Large : FieldSize::Small);
    }
    return cs;
}

inline std::string random_bits(std::mt19937_64& rng, std::size_t max_len, std::size_t min_len = 0) {
    const std::size_t len = min_len + rng() % (max_len - min_len + 1);
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += rng() % 2 ? '1' : '0';
    return s;
}

}  // namespace testing
