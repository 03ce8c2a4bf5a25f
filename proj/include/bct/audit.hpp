#pragma once

// Consistency checks of computed growth records against the known
// restrictions on torsion growth in quadratic extensions.

#include "bct/classification.hpp"
#include "bct/group.hpp"
#include "bct/growth.hpp"

#include <string>
#include <vector>

namespace bct {

struct AuditRecord {
    std::string d;  // label only
    Group TL;       // E(L)_tor
    Group Td;       // E^d(K)_tor
};

struct Violation {
    std::string clause;
    std::string detail;
};

inline std::vector<AuditRecord> audit_records(const GrowthReport& rep) {
    std::vector<AuditRecord> out;
    for (const auto& r : rep.records) out.push_back({render(r.d), r.group.invariants, r.twist_group.invariants});
    return out;
}

/// Every applicable restriction, for the field Q(sqrt D), D in {-1, -3}.
inline std::vector<Violation> growth_audit(long D, const Group& TK, const std::vector<AuditRecord>& records) {
    std::vector<Violation> out;
    auto flag = [&](const std::string& clause, const AuditRecord& r, const std::string& what) {
        out.push_back({clause, "T_K=" + TK.name() + " d=" + r.d + " T_L=" + r.TL.name() + " T_d=" + r.Td.name() + ": " + what});
    };
    const bool two_c2 = TK.kernel_size(2) == 2;
    const bool cyclotomic = D == -1 || D == -3;
    const std::vector<long> odd_primes = {3, 5, 7, 11, 13};

    for (const auto& r : records) {
        const Group& TL = r.TL;
        const Group& Td = r.Td;
        if (!TL.contains(TK)) flag("containment", r, "T_K is not a subgroup of T_L");

        // cyclic or C2 two-torsion over K
        if (TK.p_part(2) == Group::cyclic(2) && TL.contains(Group(2, 4))) flag("cyclic-2-part-no-C2xC4", r, "C2xC4 in E(L) with E(K)[2^inf] = C2");
        for (long p : odd_primes) {
            for (long q = p; TL.n % (2 * q) == 0; q *= p) {
                if (!TK.has_cyclic(2 * q) && !Td.has_cyclic(2 * q))
                    flag("even-cyclic-source", r, "C" + std::to_string(2 * q) + " in E(L) but in neither E(K) nor E^d(K)");
            }
        }
        if (TK == Group::cyclic(4) && TL == Group(4, 8)) flag("C4-to-C4xC8", r, "C4 grows to C4xC8");
        if (TK == Group::cyclic(4) && TL == Group::cyclic(16)) flag("C4-to-C16", r, "C4 grows to C16");
        if (TK == Group::cyclic(8) && TL == Group(2, 16) && Td != Group::cyclic(4)) flag("C8-to-C2xC16", r, "C8 to C2xC16 needs E^d(K)_tor = C4");
        if (two_c2 && TL.contains(Group(2, 20))) flag("no-C2xC20", r, "C2xC20 in E(L) with E(K)[2] = C2");
        if (TK == Group::cyclic(4) && TL == Group(2, 24)) flag("C4-to-C2xC24", r, "C4 grows to C2xC24");
        if (TL.has_cyclic(32) && !TK.has_cyclic(16) && !Td.has_cyclic(16)) flag("C32-needs-16", r, "C32 in E(L) without a point of order 16 on E or E^d");

        // both E and E^d have a 4-torsion point
        if (two_c2 && TL.contains(Group(2, 4)) && !(TK.has_cyclic(4) && Td.has_cyclic(4)))
            flag("four-torsion-on-both", r, "C2xC4 in E(L) but E or E^d lacks a K-rational 4-torsion point");

        if (cyclotomic && two_c2) {
            if (D == -1 && TL.contains(Group(4, 4))) flag("no-full-4-torsion", r, "C4xC4 in E(L) over Q(i)");
            if (D == -3 && TL.contains(Group(4, 8))) flag("no-full-4-torsion", r, "C4xC8 in E(L) over Q(sqrt(-3))");
            if (TK == Group::cyclic(6) && TL == Group(6, 6)) flag("C6-to-C6xC6", r, "C6 grows to C6xC6");
            if (TL.contains(Group(2, 24))) flag("no-C2xC24", r, "C2xC24 in E(L)");
            for (long N : {14, 18, 20, 30, 32, 48})
                if (TL.has_cyclic(N)) flag("excluded-cyclic", r, "C" + std::to_string(N) + " in E(L)");
            // odd part of E(L): p <= 5 and one of C3, C5, C3xC3
            for (long p : odd_primes) {
                const Group part = TL.p_part(p);
                if (part.order() == 1) continue;
                if (p > 5 || !(part == Group::cyclic(3) || part == Group::cyclic(5) || part == Group(3, 3)))
                    flag("odd-part", r, "odd part " + part.name() + " of E(L)");
            }
        }

        if (cyclotomic && TK.order() % 2 == 1) {
            auto ok_twist = [&](std::initializer_list<Group> allowed) {
                for (const auto& g : allowed)
                    if (Td == g) return true;
                return false;
            };
            bool ok = true;
            if (TK == Group::cyclic(7) || TK == Group::cyclic(9) || TK == Group(3, 3)) ok = ok_twist({Group::cyclic(1)});
            else if (TK == Group::cyclic(5)) ok = ok_twist({Group::cyclic(1), Group::cyclic(3)});
            else if (TK == Group::cyclic(3)) ok = ok_twist({Group::cyclic(1), Group::cyclic(3), Group::cyclic(5)});
            else if (TK == Group::cyclic(1))
                ok = ok_twist({Group::cyclic(1), Group::cyclic(3), Group::cyclic(5), Group::cyclic(7), Group::cyclic(9), Group(3, 3)});
            if (!ok) flag("odd-twist", r, "twist torsion " + Td.name() + " impossible for this E(K)_tor");
        }

        // Galois restrictions, p odd
        if (TK.kernel_size(2) == 1 && TL.kernel_size(2) != 1) flag("two-torsion-stable", r, "2-torsion appears over L");
        if (TK.kernel(2) != Td.kernel(2)) flag("twist-two-torsion", r, "E(K)[2] and E^d(K)[2] differ");
        for (long p : odd_primes) {
            const bool mu_p = p == 3 && D == -3;
            const Group Kp = TK.kernel(p), Lp = TL.kernel(p);
            const bool full_L = Lp == Group(p, p);
            if (Kp.order() == 1 && full_L && !mu_p) flag("full-p-needs-mu", r, "E(L)[" + std::to_string(p) + "] full without mu_p in K");
            if (Kp == Group::cyclic(p) && TL.p_part(p) != TK.p_part(p) && !full_L)
                flag("p-growth-full", r, "p-part grows but E(L)[" + std::to_string(p) + "] is not full");
            if (Kp == Group::cyclic(p) && full_L && mu_p) flag("mu3-cyclic", r, "E(L)[3] full with mu_3 in K and E(K)[3] cyclic");
            if (Kp == Group(p, p) && TL.p_part(p) != TK.p_part(p)) flag("full-p-saturated", r, "p-part grows although E(K)[p] is full");
        }

        // odd part direct sum and the injection E(L)/E(K) -> E^d(K)
        for (long n : {3, 5, 7, 9})
            if (TL.kernel_size(n) != TK.kernel_size(n) * Td.kernel_size(n))
                flag("odd-direct-sum", r, "|E(L)[" + std::to_string(n) + "]| != |E(K)[n]| |E^d(K)[n]|");
        if (TL.order() % TK.order() != 0 || Td.order() % (TL.order() / TK.order()) != 0)
            flag("injection", r, "|T_L|/|T_K| does not divide |T_d|");
    }

    if (cyclotomic) {
        if ((TK == Group::cyclic(7) || TK == Group::cyclic(9) || TK == Group(3, 3)) && !records.empty())
            out.push_back({"odd-twist", "T_K=" + TK.name() + " grows in " + std::to_string(records.size()) + " extension(s), expected none"});
        if ((TK == Group::cyclic(3) || TK == Group::cyclic(5)) && records.size() > 1)
            out.push_back({"odd-twist", "T_K=" + TK.name() + " grows in " + std::to_string(records.size()) + " extensions, expected at most one"});
    }
    return out;
}

inline std::vector<Violation> growth_audit(const GrowthReport& rep, long D) {
    return growth_audit(D, rep.base.invariants, audit_records(rep));
}

}  // namespace bct
