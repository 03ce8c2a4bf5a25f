#pragma once

// Quadratic extensions L/K in which E(K)_tor grows: the division
// polynomials to factor, candidate fields from their low degree factors,
// and E(L)_tor for each candidate.

#include "bct/classification.hpp"
#include "bct/factor.hpp"
#include "bct/square_class.hpp"
#include "bct/torsion.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bct {

inline int summand_count(const Group& T, long p) { return T.summand_count(p); }

struct PlanEntry {
    long p;
    /// Empty when f_p = 1.
    std::vector<KPoly> factors;
    std::string label;
    bool pruned = false;
};

struct DetectionPlan {
    std::vector<PlanEntry> entries;  // p = 2, 3, 5, 7

    const PlanEntry& at(long p) const {
        for (const auto& e : entries)
            if (e.p == p) return e;
        throw std::out_of_range("DetectionPlan: prime not in S");
    }
};

struct GrowthOptions {
    /// Skip f_p when no group in the target list has a larger p-part than T_K.
    bool prune = false;
};

namespace detail {

inline std::vector<Group> target_list(long D, const Group& TK) {
    if (TK.kernel_size(2) == 2) {
        auto l = two_torsion_growth_list(D);
        for (const auto& g : two_torsion_table_evidence(D)) l.push_back(g);
        return l;
    }
    if (TK.kernel_size(2) == 1) return odd_growth_extended_list(D);
    return {};
}

inline bool p_part_can_grow(long D, const Group& TK, long p) {
    auto list = target_list(D, TK);
    if (list.empty()) return true;
    const Group base = TK.p_part(p);
    for (const auto& g : list)
        if (g.contains(TK) && g.p_part(p) != base) return true;
    return false;
}

}  // namespace detail

/// Which division polynomials to factor. For the 2-part C_2^a + C_2^b (a <= b)
/// this is the 2-division cubic together with the x-part of psi_{2^(b+1)},
/// capped at psi_16; for odd p it is psi_p or nothing.
inline DetectionPlan detection_plan(const WeierstrassCurve<QuadElem>& S, const Group& TK, const GrowthOptions& opt = {}) {
    if (!S.is_short()) throw std::invalid_argument("detection_plan: short model required");
    const long D = S.field().D();
    DetectionPlan plan;
    {
        PlanEntry e{2, {}, "none"};
        if (summand_count(TK, 2) > 0) {
            long b = TK.p_part(2).n;
            long idx = std::min<long>(2 * b, 16);
            e.label = "psi" + std::to_string(idx);
            if (opt.prune && !detail::p_part_can_grow(D, TK, 2)) {
                e.pruned = true;
            } else {
                e.factors.push_back(two_division_cubic(S));
                e.factors.push_back(division_poly_x(S, static_cast<int>(idx)));
            }
        }
        plan.entries.push_back(std::move(e));
    }
    for (long p : {3L, 5L, 7L}) {
        PlanEntry e{p, {}, "none"};
        const int s = summand_count(TK, p);
        const bool use = p == 3 ? s <= 1 : s == 0;
        if (use) {
            e.label = "psi" + std::to_string(p);
            if (opt.prune && !detail::p_part_can_grow(D, TK, p))
                e.pruned = true;
            else
                e.factors.push_back(division_poly_x(S, static_cast<int>(p)));
        }
        plan.entries.push_back(std::move(e));
    }
    return plan;
}

struct GrowthRecord {
    QuadElem d;                       // canonical square class representative
    QuadElem found_d;                 // the radicand as first produced by the plan
    TorsionGroup<RelQuadElem> group;  // E(L)_tor on the input model
    TorsionGroup<QuadElem> twist_group;
    Point<RelQuadElem> witness;       // point over L found from the plan, on the input model
    std::vector<std::string> provenance;
};

struct GrowthReport {
    TorsionGroup<QuadElem> base;
    DetectionPlan plan;
    std::vector<GrowthRecord> records;  // sorted by d
};

namespace detail {

struct Candidate {
    QuadElem d, found_d;
    QuadElem x_alpha, x_beta;  // witness x = alpha + beta sqrt(d) on the short model
    std::vector<std::string> provenance;
};

}  // namespace detail

inline GrowthReport growth_extensions(const WeierstrassCurve<QuadElem>& C, const GrowthOptions& opt = {}) {
    const QuadField& K = C.field();
    const ShortModel<QuadElem> SM = to_short(C);
    const auto& S = SM.curve;
    GrowthReport rep{torsion_over_quad(C), {}, {}};
    rep.plan = detection_plan(S, rep.base.invariants, opt);

    std::vector<detail::Candidate> cands;
    auto add = [&](const QuadElem& d_raw, const QuadElem& xa, const QuadElem& xb, const std::string& prov) {
        QuadElem d = square_class_rep(d_raw);
        for (auto& c : cands)
            if (c.d == d) {
                if (std::find(c.provenance.begin(), c.provenance.end(), prov) == c.provenance.end())
                    c.provenance.push_back(prov);
                return;
            }
        cands.push_back({d, d_raw, xa, xb, {prov}});
    };

    for (const PlanEntry& e : rep.plan.entries) {
        for (std::size_t fi = 0; fi < e.factors.size(); ++fi) {
            const std::string name = (e.p == 2 && fi == 0) ? std::string("cubic") : e.label;
            for (const KPoly& g : low_degree_factors(e.factors[fi], 2)) {
                if (g.degree() == 1) {
                    const QuadElem c = -g.coeff(0);
                    const QuadElem r = S.rhs(c);
                    if (r.is_zero() || is_square_in_quad(r)) continue;
                    add(r, c, K.zero(), name + ":linear");
                } else {
                    const QuadElem disc = quadratic_discriminant(g);
                    const QuadElem d = square_class_rep(disc);
                    const RelQuadField L(K, d);
                    // sqrt(disc) = t sqrt(d)
                    auto t = sqrt_in_quad(disc / d);
                    if (!t) throw std::logic_error("growth_extensions: square class mismatch");
                    const QuadElem xa = -g.coeff(1) / K.from_int(2), xb = *t / K.from_int(2);
                    const RelQuadElem x = L.element(xa, xb);
                    if (!sqrt_in_relquad(base_change(S, L).rhs(x))) continue;
                    add(disc, xa, xb, name + ":quadratic");
                }
            }
        }
    }

    for (const auto& c : cands) {
        RelTorsion R = torsion_over_relquad(C, c.d, rep.base);
        if (R.group.order() <= rep.base.order()) continue;
        const RelQuadField L(K, c.d);
        const auto SL = base_change(S, L);
        const RelQuadElem x = L.element(c.x_alpha, c.x_beta);
        auto y = sqrt_in_relquad(SL.rhs(x));
        if (!y) throw std::logic_error("growth_extensions: witness point not defined over L");
        const ShortModel<RelQuadElem> SML = to_short(base_change(C, L));
        rep.records.push_back({c.d, c.found_d, R.group, R.twist, SML.backward(Point<RelQuadElem>::affine(x, *y)), c.provenance});
    }
    std::sort(rep.records.begin(), rep.records.end(), [](const GrowthRecord& a, const GrowthRecord& b) { return a.d < b.d; });
    return rep;
}

}  // namespace bct
