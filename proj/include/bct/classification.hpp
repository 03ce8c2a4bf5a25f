#pragma once

// Static classification data: torsion lists over Q, over quadratic fields,
// over the two quadratic cyclotomic fields, the growth lists over quadratic
// extensions of those, and the growth matrix for E(K)[2] = C2.

#include "bct/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bct {

inline void require_cyclotomic(long D) {
    if (D != -1 && D != -3) throw std::invalid_argument("classification data exists only for D = -1, -3");
}

/// C_n, 1 <= n <= 12, n != 11; C2 + C2n, 1 <= n <= 4.
inline std::vector<Group> mazur_list() {
    std::vector<Group> out;
    for (long n = 1; n <= 12; ++n)
        if (n != 11) out.push_back(Group::cyclic(n));
    for (long n = 1; n <= 4; ++n) out.emplace_back(2, 2 * n);
    return out;
}

/// C_n, 1 <= n <= 18, n != 17; C2 + C2n, n <= 6; C3 + C3n, n <= 2; C4 + C4.
inline std::vector<Group> kamienny_list() {
    std::vector<Group> out;
    for (long n = 1; n <= 18; ++n)
        if (n != 17) out.push_back(Group::cyclic(n));
    for (long n = 1; n <= 6; ++n) out.emplace_back(2, 2 * n);
    out.emplace_back(3, 3);
    out.emplace_back(3, 6);
    out.emplace_back(4, 4);
    return out;
}

/// Possible E(K)_tor over Q(i) (D = -1) and Q(sqrt(-3)) (D = -3).
inline std::vector<Group> najman_list(long D) {
    require_cyclotomic(D);
    auto out = mazur_list();
    if (D == -1) {
        out.emplace_back(4, 4);
    } else {
        out.emplace_back(3, 3);
        out.emplace_back(3, 6);
    }
    return out;
}

/// E(L)_tor for E(K)[2] = C2, as stated.
inline std::vector<Group> two_torsion_growth_list(long D) {
    require_cyclotomic(D);
    std::vector<Group> out;
    for (long n = 1; n <= 8; ++n)
        if (n != 7) out.push_back(Group::cyclic(2 * n));
    for (long n = 1; n <= 8; ++n)
        if (n != 7) out.emplace_back(2, 2 * n);
    out.emplace_back(3, 6);
    if (D == -3) out.emplace_back(4, 4);
    return out;
}

/// Groups realized by table rows with E(K)[2] = C2 but missing from two_torsion_growth_list.
inline std::vector<Group> two_torsion_table_evidence(long D) {
    require_cyclotomic(D);
    return {Group(6, 6)};
}

/// E(L)_tor for trivial E(K)[2], as stated.
inline std::vector<Group> odd_growth_list(long D) {
    require_cyclotomic(D);
    std::vector<Group> out;
    for (long n : {1, 3, 5, 9, 15}) out.push_back(Group::cyclic(n));
    if (D == -3) out.emplace_back(3, 3);
    return out;
}

/// Groups realized by table rows with trivial E(K)[2] but missing from odd_growth_list.
inline std::vector<Group> odd_table_evidence(long D) {
    require_cyclotomic(D);
    std::vector<Group> out = {Group::cyclic(7)};
    if (D == -1) out.emplace_back(3, 3);
    return out;
}

inline std::vector<Group> odd_growth_extended_list(long D) {
    auto out = odd_growth_list(D);
    for (const auto& g : odd_table_evidence(D)) out.push_back(g);
    return out;
}

inline bool in_list(const Group& g, const std::vector<Group>& list) {
    return std::find(list.begin(), list.end(), g) != list.end();
}

enum class Verdict { allowed, forbidden, unlisted };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::allowed: return "allowed";
        case Verdict::forbidden: return "forbidden";
        case Verdict::unlisted: return "unlisted";
    }
    return "unlisted";
}

namespace detail {

// Growth matrix for E(K)[2] = C2. Columns: E(K)_tor. Cell codes:
// 'Y' realized, 'N' excluded by a theorem, '-' no entry, 'c' conditional
// (allowed only under a side condition on the twist), 'i' realized over
// Q(sqrt(-3)) only, 'j' realized over Q(i) only, 'k' realized over
// Q(sqrt(-3)) only and excluded over Q(i).
struct GrowthTable {
    std::array<Group, 7> columns{Group::cyclic(2), Group::cyclic(4),  Group::cyclic(6), Group::cyclic(8),
                                 Group::cyclic(10), Group::cyclic(12), Group(3, 6)};
    std::vector<std::pair<Group, std::string>> rows{
        {Group::cyclic(2), "Y------"},   {Group::cyclic(4), "YY-----"},   {Group::cyclic(6), "Y-Y----"},
        {Group::cyclic(8), "YY-Y---"},   {Group::cyclic(10), "Y---Y--"},  {Group::cyclic(12), "YYY--Y-"},
        {Group::cyclic(14), "N------"},  {Group::cyclic(16), "YN-Y---"},  {Group::cyclic(18), "N-N----"},
        {Group::cyclic(20), "NN--N--"},  {Group::cyclic(24), "NNNN-N-"},  {Group::cyclic(30), "N-N-N--"},
        {Group::cyclic(32), "NN-N---"},  {Group::cyclic(48), "NNNN-N-"},  {Group(2, 2), "Y------"},
        {Group(2, 4), "NYN-N--"},        {Group(2, 6), "Y-Y----"},        {Group(2, 8), "NY-Y---"},
        {Group(2, 10), "Y---Y--"},       {Group(2, 12), "NYN--Y-"},       {Group(2, 16), "Nc-c---"},
        {Group(2, 24), "NNNN-N-"},       {Group(3, 6), "i-j---Y"},        {Group(3, 12), "NNN--NN"},
        {Group(6, 6), "Y-N---Y"},        {Group(4, 4), "Nk-----"},        {Group(4, 8), "NN-N---"},
        {Group(4, 12), "NNNN-NN"},
    };
};

}  // namespace detail

/// Table lookup: allowed for a checkmark, forbidden for an excluded cell,
/// unlisted for an empty or conditional cell or a group outside the matrix.
inline Verdict growth_table_verdict(long D, const Group& from, const Group& to) {
    require_cyclotomic(D);
    static const detail::GrowthTable t;
    auto col = std::find(t.columns.begin(), t.columns.end(), from);
    if (col == t.columns.end()) return Verdict::unlisted;
    const auto c = static_cast<std::size_t>(col - t.columns.begin());
    for (const auto& [g, cells] : t.rows) {
        if (g != to) continue;
        switch (cells[c]) {
            case 'Y': return Verdict::allowed;
            case 'N': return Verdict::forbidden;
            case 'i': return D == -3 ? Verdict::allowed : Verdict::forbidden;
            case 'j': return D == -1 ? Verdict::allowed : Verdict::forbidden;
            case 'k': return D == -3 ? Verdict::allowed : Verdict::forbidden;
            default: return Verdict::unlisted;
        }
    }
    return Verdict::unlisted;
}

/// Whether E(K)_tor = from can grow to E(L)_tor = to over a quadratic L/K.
inline Verdict allowed_growth(long D, const Group& from, const Group& to) {
    require_cyclotomic(D);
    if (!to.contains(from) || to == from) return Verdict::forbidden;
    const Group two = from.kernel(2);
    if (two.order() == 2) {
        // statements valid whenever E(K)[2] = C2
        if (to.contains(Group(2, 20))) return Verdict::forbidden;
        if (from.p_part(2) == Group::cyclic(2) && to.contains(Group(2, 4))) return Verdict::forbidden;
        if (to.contains(Group(2, 24))) return Verdict::forbidden;
        for (long N : {14, 18, 20, 30, 32, 48})
            if (to.has_cyclic(N)) return Verdict::forbidden;
        if (D == -1 && to.contains(Group(4, 4))) return Verdict::forbidden;
        if (D == -3 && to.contains(Group(4, 8))) return Verdict::forbidden;
        Verdict t = growth_table_verdict(D, from, to);
        if (t != Verdict::unlisted) return t;
        if (in_list(to, two_torsion_growth_list(D))) return Verdict::allowed;
        if (in_list(to, two_torsion_table_evidence(D))) return Verdict::unlisted;
        return Verdict::forbidden;
    }
    if (two.order() == 1) {
        if (to.order() % 2 == 0) return Verdict::forbidden;
        if (from == Group::cyclic(7) || from == Group::cyclic(9) || from == Group(3, 3)) return Verdict::forbidden;
        if (in_list(to, odd_growth_list(D))) return Verdict::allowed;
        if (in_list(to, odd_table_evidence(D))) return Verdict::unlisted;
        return Verdict::forbidden;
    }
    return Verdict::unlisted;
}

}  // namespace bct
