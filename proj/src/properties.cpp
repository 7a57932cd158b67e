#include "twopart/properties.hpp"

#include <algorithm>
#include <map>

namespace twopart {

namespace {

inline bool subset_of(SubsetMask a, SubsetMask b) { return (a & b) == a; }
inline bool comparable(SubsetMask a, SubsetMask b) { return subset_of(a, b) || subset_of(b, a); }

void check_family_split(const SetFamily& f, const GroundSplit& split) {
    if (f.n != split.n)
        throw std::invalid_argument("family ground size does not match split");
}

}  // namespace

const char* property_name(PropertyId p) {
    switch (p) {
        case PropertyId::IntersectingLenient: return "intersecting-lenient";
        case PropertyId::IntersectingStrict: return "intersecting-strict";
        case PropertyId::Sperner: return "sperner";
        case PropertyId::TwoPartSperner: return "2-part-sperner";
        case PropertyId::TwoI: return "2I";
        case PropertyId::TwoI2S: return "2I2S";
        case PropertyId::OneI1S: return "1I1S";
        case PropertyId::CrossSpernerPair: return "cross-sperner";
    }
    return "?";
}

bool is_two_part_property(PropertyId p) {
    return p == PropertyId::TwoPartSperner || p == PropertyId::TwoI ||
           p == PropertyId::TwoI2S || p == PropertyId::OneI1S;
}

bool is_intersecting(const SetFamily& f, IntersectMode mode) {
    if (mode == IntersectMode::Strict && !f.empty() && f.masks.front() == 0) return false;
    for (std::size_t i = 0; i < f.masks.size(); ++i)
        for (std::size_t j = i + 1; j < f.masks.size(); ++j)
            if ((f.masks[i] & f.masks[j]) == 0) return false;
    return true;
}

bool is_sperner(const SetFamily& f) {
    for (std::size_t i = 0; i < f.masks.size(); ++i)
        for (std::size_t j = i + 1; j < f.masks.size(); ++j)
            if (comparable(f.masks[i], f.masks[j])) return false;
    return true;
}

SetFamily trace_family(const SetFamily& f, const GroundSplit& split, TraceSide side,
                       SubsetMask fixed) {
    check_family_split(f, split);
    const SubsetMask fixed_part = side == TraceSide::OnX2 ? split.part1() : split.part2();
    const SubsetMask trace_part = side == TraceSide::OnX2 ? split.part2() : split.part1();
    if (fixed & ~fixed_part)
        throw std::invalid_argument("trace_family: fixed set outside the fixed part");
    std::vector<SubsetMask> out;
    for (SubsetMask m : f.masks)
        if ((m & fixed_part) == fixed) out.push_back(m & trace_part);
    return normalize_family(std::move(out), split.n);
}

bool violates(PropertyId p, SubsetMask s, SubsetMask t, const GroundSplit& split) {
    if (s == t) throw std::invalid_argument("violates: the two subsets must be distinct");
    if (!is_two_part_property(p))
        throw std::invalid_argument("violates: not a two-part property");
    const SubsetMask full = full_mask(split.n);
    if ((s & ~full) || (t & ~full))
        throw std::invalid_argument("violates: mask outside ground set");

    const SubsetMask s1 = s & split.part1(), s2 = s & split.part2();
    const SubsetMask t1 = t & split.part1(), t2 = t & split.part2();

    switch (p) {
        case PropertyId::TwoI:
            return (s1 == t1 && (s2 & t2) == 0) || (s2 == t2 && (s1 & t1) == 0);
        case PropertyId::TwoPartSperner: {
            auto nested = [](SubsetMask a1, SubsetMask a2, SubsetMask b1, SubsetMask b2) {
                return subset_of(a1, b1) && subset_of(a2, b2) && (a1 == b1 || a2 == b2);
            };
            return nested(s1, s2, t1, t2) || nested(t1, t2, s1, s2);
        }
        case PropertyId::TwoI2S: {
            // Equal traces at one part; disjoint or properly nested at the other.
            auto bad = [](SubsetMask e1, SubsetMask e2, SubsetMask o1, SubsetMask o2) {
                if (e1 != e2) return false;
                return (o1 & o2) == 0 || (comparable(o1, o2) && o1 != o2);
            };
            return bad(s1, t1, s2, t2) || bad(s2, t2, s1, t1);
        }
        case PropertyId::OneI1S: {
            // Disjoint traces at one part, nested (equality allowed) at the other.
            auto bad = [](SubsetMask d1, SubsetMask d2, SubsetMask c1, SubsetMask c2) {
                return (d1 & d2) == 0 && comparable(c1, c2);
            };
            return bad(s1, t1, s2, t2) || bad(s2, t2, s1, t1);
        }
        default: return false;
    }
}

bool satisfies(PropertyId p, const SetFamily& f, const GroundSplit& split) {
    switch (p) {
        case PropertyId::IntersectingLenient: return is_intersecting(f, IntersectMode::Lenient);
        case PropertyId::IntersectingStrict: return is_intersecting(f, IntersectMode::Strict);
        case PropertyId::Sperner: return is_sperner(f);
        case PropertyId::CrossSpernerPair:
            throw std::invalid_argument("satisfies: cross-sperner applies to a pair");
        default: break;
    }
    check_family_split(f, split);
    for (std::size_t i = 0; i < f.masks.size(); ++i)
        for (std::size_t j = i + 1; j < f.masks.size(); ++j)
            if (violates(p, f.masks[i], f.masks[j], split)) return false;
    return true;
}

std::optional<std::pair<SubsetMask, SubsetMask>> find_violation(PropertyId p,
                                                                const SetFamily& f,
                                                                const GroundSplit& split) {
    check_family_split(f, split);
    for (std::size_t i = 0; i < f.masks.size(); ++i)
        for (std::size_t j = i + 1; j < f.masks.size(); ++j)
            if (violates(p, f.masks[i], f.masks[j], split))
                return std::make_pair(f.masks[i], f.masks[j]);
    return std::nullopt;
}

namespace {

// Iterate submasks of `space` (including 0 and `space` itself).
template <typename Fn>
void for_each_submask(SubsetMask space, Fn&& fn) {
    SubsetMask t = space;
    while (true) {
        fn(t);
        if (t == 0) break;
        t = (t - 1) & space;
    }
}

// Members grouped by their trace on `fixed_part`; values are the traces on
// the other part, kept sorted.
std::map<SubsetMask, std::vector<SubsetMask>> group_traces(const SetFamily& f,
                                                           SubsetMask fixed_part) {
    std::map<SubsetMask, std::vector<SubsetMask>> groups;
    for (SubsetMask m : f.masks) groups[m & fixed_part].push_back(m & ~fixed_part);
    return groups;
}

// No member of a is contained in (or contains) a member of b. When a and b
// are the same group, only distinct member pairs count.
bool cross_containment_free(const std::vector<SubsetMask>& a, const std::vector<SubsetMask>& b,
                            bool same) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t jstart = same ? i + 1 : 0;
        for (std::size_t j = jstart; j < b.size(); ++j)
            if (comparable(a[i], b[j])) return false;
    }
    return true;
}

// Def.-style evaluation of the 1I1S property on one side: for every pair of
// disjoint fixed-part traces, the opposite-side trace groups must be free of
// cross containment.
bool one_i1s_side_ok(const SetFamily& f, SubsetMask fixed_part) {
    auto groups = group_traces(f, fixed_part);
    for (auto ita = groups.begin(); ita != groups.end(); ++ita) {
        const SubsetMask a = ita->first;
        for (auto itb = ita; itb != groups.end(); ++itb) {
            const SubsetMask b = itb->first;
            if (a & b) continue;
            if (!cross_containment_free(ita->second, itb->second, ita == itb)) return false;
        }
    }
    return true;
}

}  // namespace

bool satisfies_by_traces(PropertyId p, const SetFamily& f, const GroundSplit& split) {
    if (!is_two_part_property(p)) return satisfies(p, f, split);
    check_family_split(f, split);

    if (p == PropertyId::OneI1S)
        return one_i1s_side_ok(f, split.part1()) && one_i1s_side_ok(f, split.part2());

    const bool need_int = p == PropertyId::TwoI || p == PropertyId::TwoI2S;
    const bool need_sp = p == PropertyId::TwoPartSperner || p == PropertyId::TwoI2S;
    for (TraceSide side : {TraceSide::OnX2, TraceSide::OnX1}) {
        const SubsetMask fixed_part = side == TraceSide::OnX2 ? split.part1() : split.part2();
        bool ok = true;
        for_each_submask(fixed_part, [&](SubsetMask fixed) {
            if (!ok) return;
            SetFamily tr = trace_family(f, split, side, fixed);
            if (need_int && !is_intersecting(tr, IntersectMode::Lenient)) ok = false;
            if (need_sp && !is_sperner(tr)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_cross_sperner_pair(const FamilyPair& p) { return !find_cross_violation(p).has_value(); }

std::optional<std::pair<SubsetMask, SubsetMask>> find_cross_violation(const FamilyPair& p) {
    for (const SetFamily* f : {&p.first, &p.second}) {
        if (!f->empty() && f->masks.front() == 0)
            return std::make_pair(SubsetMask{0}, SubsetMask{0});
        for (std::size_t i = 0; i < f->masks.size(); ++i)
            for (std::size_t j = i + 1; j < f->masks.size(); ++j)
                if ((f->masks[i] & f->masks[j]) == 0)
                    return std::make_pair(f->masks[i], f->masks[j]);
    }
    for (SubsetMask a : p.first.masks)
        for (SubsetMask b : p.second.masks)
            if (comparable(a, b)) return std::make_pair(a, b);
    return std::nullopt;
}

SetFamily delta_family(const SetFamily& f) {
    std::vector<SubsetMask> out;
    out.reserve(f.size() * f.size());
    for (SubsetMask a : f.masks)
        for (SubsetMask b : f.masks) out.push_back(a & ~b);
    return normalize_family(std::move(out), f.n);
}

SetFamily meet_family(const SetFamily& f, const SetFamily& g) {
    if (f.n != g.n) throw std::invalid_argument("meet_family: ground sizes differ");
    std::vector<SubsetMask> out;
    out.reserve(f.size() * g.size());
    for (SubsetMask a : f.masks)
        for (SubsetMask b : g.masks) out.push_back(a & b);
    return normalize_family(std::move(out), f.n);
}

SetFamily join_family(const SetFamily& f, const SetFamily& g) {
    if (f.n != g.n) throw std::invalid_argument("join_family: ground sizes differ");
    std::vector<SubsetMask> out;
    out.reserve(f.size() * g.size());
    for (SubsetMask a : f.masks)
        for (SubsetMask b : g.masks) out.push_back(a | b);
    return normalize_family(std::move(out), f.n);
}

SetFamily up_closure(const SetFamily& f, int n) {
    require_materializable(n);
    if (f.n > n) throw std::invalid_argument("up_closure: family does not fit in [0,n)");
    std::vector<bool> seen(std::size_t{1} << n, false);
    const SubsetMask full = full_mask(n);
    for (SubsetMask m : f.masks) {
        const SubsetMask free = full & ~m;
        SubsetMask t = free;
        while (true) {
            seen[m | t] = true;
            if (t == 0) break;
            t = (t - 1) & free;
        }
    }
    std::vector<SubsetMask> out;
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (seen[v]) out.push_back(static_cast<SubsetMask>(v));
    SetFamily r(n);
    r.masks = std::move(out);
    return r;
}

SetFamily down_closure(const SetFamily& f, int n) {
    require_materializable(n);
    if (f.n > n) throw std::invalid_argument("down_closure: family does not fit in [0,n)");
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (SubsetMask m : f.masks) {
        SubsetMask t = m;
        while (true) {
            seen[t] = true;
            if (t == 0) break;
            t = (t - 1) & m;
        }
    }
    std::vector<SubsetMask> out;
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (seen[v]) out.push_back(static_cast<SubsetMask>(v));
    SetFamily r(n);
    r.masks = std::move(out);
    return r;
}

BigRatio gkk_lym_sum(const SetFamily& f, int n) {
    if (f.n > n) throw std::invalid_argument("gkk_lym_sum: family does not fit in [0,n)");
    if (!is_intersecting(f, IntersectMode::Strict) || !is_sperner(f))
        throw std::invalid_argument("gkk_lym_sum: family must be strict-intersecting and Sperner");
    BigRatio sum = 0;
    for (SubsetMask m : f.masks) {
        const int sz = popcount_mask(m);
        const BigCount denom = 2 * sz <= n ? binomial(n, sz - 1) : binomial(n, sz);
        sum += BigRatio(1, denom);
    }
    return sum;
}

}  // namespace twopart
