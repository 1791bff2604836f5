#include "replisim/analytics.hpp"

#include <algorithm>
#include <map>

namespace replisim {

std::vector<StrandRecord> extract_strands(std::span<const Codon> codons) {
    const std::size_t n = codons.size();
    std::vector<std::int64_t> strand_of(n, -1);
    std::vector<StrandRecord> out;
    for (CodonId i = 0; i < n; ++i) {
        if (strand_of[i] >= 0) continue;
        // Walk blue-ward to the blue-free end; a cycle brings us back to i.
        CodonId start = i;
        bool cycle = false;
        for (std::size_t guard = 0; guard <= n; ++guard) {
            const auto& b = codons[start].partner(FieldSlot::Blue);
            if (!b) break;
            if (*b == i) {
                cycle = true;
                break;
            }
            start = *b;
        }
        if (cycle) start = i;
        StrandRecord rec;
        const auto index = static_cast<std::int64_t>(out.size());
        for (CodonId cur = start;;) {
            if (strand_of[cur] >= 0) break;
            strand_of[cur] = index;
            rec.codons.push_back(cur);
            const auto& r = codons[cur].partner(FieldSlot::Red);
            if (!r) break;
            cur = *r;
        }
        rec.bits = decode_bits(codons, rec.codons);
        rec.complete = !cycle && rec.codons.size() >= 2;
        out.push_back(std::move(rec));
    }
    for (StrandRecord& rec : out) {
        std::map<std::size_t, int> votes;
        for (CodonId c : rec.codons) {
            if (const auto& v = codons[c].partner(FieldSlot::Vertical)) {
                rec.paired = true;
                ++votes[static_cast<std::size_t>(strand_of[*v])];
            }
        }
        int best = 0;
        for (const auto& [idx, count] : votes)
            if (count > best) {
                best = count;
                rec.partner = idx;
            }
    }
    return out;
}

std::string decode_bits(std::span<const Codon> codons, std::span<const CodonId> order) {
    std::string bits;
    bits.reserve(order.size());
    for (CodonId id : order) bits.push_back(codons[id].type == CodonType::Type0 ? '0' : '1');
    return bits;
}

std::string negate(std::string_view x) {
    std::string out(x);
    for (char& c : out) c = c == '0' ? '1' : '0';
    return out;
}

std::string reverse(std::string_view x) { return {x.rbegin(), x.rend()}; }

std::string concat(std::string_view x, std::string_view y) {
    std::string out(x);
    out.append(y);
    return out;
}

std::string symmetrize(std::string_view x) { return concat(x, negative_mirror(x)); }

std::vector<CodonId> strand_key(const StrandRecord& s) {
    std::vector<CodonId> key = s.codons;
    std::sort(key.begin(), key.end());
    return key;
}

StrandTracker::StrandTracker(std::optional<std::string> seed_bits) : m_seed(std::move(seed_bits)) {}

bool StrandTracker::in_lineage(std::string_view bits) const {
    return m_seed && (bits == *m_seed || bits == negative_mirror(*m_seed));
}

void StrandTracker::set_baseline(std::span<const StrandRecord> strands) {
    for (const StrandRecord& s : strands)
        if (s.complete && !s.paired) m_seen.insert(strand_key(s));
}

std::vector<EventRecord> StrandTracker::detect_events(std::span<const StrandRecord> strands,
                                                      std::uint64_t step) {
    std::vector<EventRecord> events;
    for (const StrandRecord& s : strands) {
        if (!s.complete || s.paired) continue;
        if (!m_seen.insert(strand_key(s)).second) continue;
        events.push_back({step, EventKind::StrandCompleted, s.codons, {}, s.bits});
        const bool lineage = in_lineage(s.bits);
        if (m_seed && !lineage) events.push_back({step, EventKind::Mutation, s.codons, {}, s.bits});
        if (s.codons.size() == 2 && !lineage)
            events.push_back({step, EventKind::SpontaneousDimer, s.codons, {}, s.bits});
    }
    return events;
}

}  // namespace replisim
