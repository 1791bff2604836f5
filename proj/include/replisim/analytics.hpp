#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "replisim/core_model.hpp"
#include "replisim/events.hpp"

namespace replisim {

/// A connected component of the red-blue bond graph.
struct StrandRecord {
    std::vector<CodonId> codons;  // blue-free end first, then red-ward
    std::string bits;
    bool complete = false;        // simple path of length >= 2
    bool paired = false;          // some codon holds a vertical bond
    std::optional<std::size_t> partner;  // index of the strand most vertical bonds lead to

    friend bool operator==(const StrandRecord&, const StrandRecord&) = default;
};

std::vector<StrandRecord> extract_strands(std::span<const Codon> codons);

/// Bit pattern of a codon sequence (Type0 -> '0', Type1 -> '1').
std::string decode_bits(std::span<const Codon> codons, std::span<const CodonId> order);

std::string negate(std::string_view x);
std::string reverse(std::string_view x);
std::string concat(std::string_view x, std::string_view y);
/// x followed by its negative mirror image; a fixed point of replication.
std::string symmetrize(std::string_view x);
inline std::string negative_mirror(std::string_view x) { return reverse(negate(x)); }

/// Detects strand-level events between successive analysis points.
///
/// A strand is reported as StrandCompleted the first time its exact codon set
/// exists as a complete, unpaired single strand (after any split). Strand
/// keys present in the baseline are never reported. Mutation marks a seeded
/// run's new strand whose bits are neither the seed pattern nor its negative
/// mirror; SpontaneousDimer marks a new length-two strand outside that lineage.
class StrandTracker {
public:
    StrandTracker() = default;
    explicit StrandTracker(std::optional<std::string> seed_bits);

    /// Records every current complete single strand without emitting events.
    void set_baseline(std::span<const StrandRecord> strands);

    std::vector<EventRecord> detect_events(std::span<const StrandRecord> strands,
                                           std::uint64_t step);

    const std::set<std::vector<CodonId>>& seen() const { return m_seen; }
    void restore_seen(std::set<std::vector<CodonId>> seen) { m_seen = std::move(seen); }
    const std::optional<std::string>& seed_bits() const { return m_seed; }

private:
    bool in_lineage(std::string_view bits) const;

    std::optional<std::string> m_seed;
    std::set<std::vector<CodonId>> m_seen;  // sorted codon ids of reported strands
};

/// Stable canonical key for a strand's membership.
std::vector<CodonId> strand_key(const StrandRecord& s);

}  // namespace replisim
