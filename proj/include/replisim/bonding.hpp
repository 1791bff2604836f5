#pragma once

#include <cstdint>
#include <numbers>
#include <tuple>
#include <span>
#include <vector>

#include "replisim/core_model.hpp"
#include "replisim/events.hpp"
#include "replisim/physics.hpp"

namespace replisim {

/// Two intersecting field circles on distinct codons, a < b.
struct ContactPair {
    CodonId a = 0;
    CodonId b = 0;
    FieldSlot slot_a = FieldSlot::Red;
    FieldSlot slot_b = FieldSlot::Red;
    double distance = 0.0;

    auto key() const { return std::tuple(a, b, slot_a, slot_b); }
    friend bool operator<(const ContactPair& l, const ContactPair& r) { return l.key() < r.key(); }
    friend bool operator==(const ContactPair&, const ContactPair&) = default;
};

/// Uniform grid over field tips. Cell coordinates are clamped to the grid,
/// which keeps the 3x3 neighbourhood complete for tips outside the box.
class SpatialIndex {
public:
    SpatialIndex() = default;
    SpatialIndex(const Bounds& bounds, double cell_size);

    void rebuild(std::span<const Codon> codons, const Geometry& g);

    /// Visits every pair of tips (on distinct codons) whose cells are adjacent,
    /// each unordered pair exactly once. Signature: fn(tip_i, tip_j) where a
    /// tip handle encodes codon * 4 + slot.
    template <typename Fn>
    void for_each_candidate(Fn&& fn) const;

    Vec2 tip(std::uint32_t handle) const { return m_tips[handle]; }
    double cell_size() const { return m_cell; }

private:
    std::int32_t cell_coord(double v, double lo, std::int32_t n) const;

    Bounds m_bounds{};
    double m_cell = 12.0;
    std::int32_t m_nx = 1;
    std::int32_t m_ny = 1;
    std::vector<Vec2> m_tips;             // indexed by handle
    std::vector<std::uint32_t> m_start;   // cell -> offset into m_sorted (size cells + 1)
    std::vector<std::uint32_t> m_sorted;  // tip handles grouped by cell, ascending within cell
    std::vector<std::uint32_t> m_cell_of; // handle -> cell
};

template <typename Fn>
void SpatialIndex::for_each_candidate(Fn&& fn) const {
    for (std::int32_t cy = 0; cy < m_ny; ++cy) {
        for (std::int32_t cx = 0; cx < m_nx; ++cx) {
            const std::uint32_t cell = static_cast<std::uint32_t>(cy * m_nx + cx);
            const std::uint32_t b0 = m_start[cell], e0 = m_start[cell + 1];
            if (b0 == e0) continue;
            // Same cell, then the four "forward" neighbours so each cell pair is seen once.
            for (std::uint32_t i = b0; i < e0; ++i)
                for (std::uint32_t j = i + 1; j < e0; ++j)
                    if (m_sorted[i] / 4 != m_sorted[j] / 4) fn(m_sorted[i], m_sorted[j]);
            constexpr std::int32_t fwd[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
            for (const auto& o : fwd) {
                const std::int32_t nx = cx + o[0], ny = cy + o[1];
                if (nx < 0 || nx >= m_nx || ny >= m_ny) continue;
                const std::uint32_t other = static_cast<std::uint32_t>(ny * m_nx + nx);
                const std::uint32_t b1 = m_start[other], e1 = m_start[other + 1];
                for (std::uint32_t i = b0; i < e0; ++i)
                    for (std::uint32_t j = b1; j < e1; ++j)
                        if (m_sorted[i] / 4 != m_sorted[j] / 4) fn(m_sorted[i], m_sorted[j]);
            }
        }
    }
}

/// Result of a contact pass: intersecting fields under current sizes, plus
/// the yellow-yellow pairs close enough to overlap if both were Large.
struct ContactSet {
    std::vector<ContactPair> contacts;
    std::vector<ContactPair> yellow_near;
};

/// Largest radius any field can take.
double max_field_radius(const Geometry& g);

/// Requires `index` rebuilt for the current positions. Output sorted canonically.
ContactSet detect_contacts(std::span<const Codon> codons, const SpatialIndex& index,
                           const Geometry& g);

/// Same result by testing every pair of tips; O(n^2), for cross-checking.
ContactSet detect_contacts_all_pairs(std::span<const Codon> codons, const Geometry& g);

/// Antiparallel misalignment |wrap(theta_a - theta_b - pi)| of two arms.
double alignment_error(const Codon& a, FieldSlot slot_a, const Codon& b, FieldSlot slot_b);

struct BondTolerances {
    PerColor<double> angle_tolerance{std::numbers::pi / 256, std::numbers::pi / 256,
                                     std::numbers::pi / 3, std::numbers::pi / 3, std::numbers::pi};
    friend bool operator==(const BondTolerances&, const BondTolerances&) = default;
};

/// Forms a red(a)-blue(b) bond if both fields are Small, unbonded, and the arms
/// are antiparallel within tolerance. Sets both fields Large.
bool try_form_red_blue(std::span<Codon> codons, CodonId a, CodonId b, const BondTolerances& tol);

/// Forms a vertical bond between complementary codons if neither is bonded,
/// at least one field is Small, and the arms are antiparallel within tolerance.
bool try_form_green_purple(std::span<Codon> codons, CodonId a, CodonId b,
                           const BondTolerances& tol);

/// Runs formation over a canonical contact list; the first contact to claim
/// a slot wins. Appends BondFormed events.
void form_bonds(std::span<Codon> codons, std::span<const ContactPair> contacts,
                const BondTolerances& tol, std::uint64_t step, std::vector<EventRecord>& events);

/// Dissolves every bond whose two field circles no longer intersect.
/// Red and blue fields revert to Small. Appends BondBroken events.
void break_separated_bonds(std::span<Codon> codons, const Geometry& g, std::uint64_t step,
                           std::vector<EventRecord>& events);

/// Field-size rules: Vertical follows the red/blue bonds, Yellow expires after
/// `iterations_after_split` steps.
void update_field_sizes(Codon& c, std::uint32_t iterations_after_split);

/// Clears a bond on both sides (no-op if absent).
void release_bond(std::span<Codon> codons, CodonId a, FieldSlot slot_a);

std::string_view bond_label(FieldSlot slot_a);

}  // namespace replisim
