// geometry.cpp -- exact planar checks on the graph of a multi-map.

#include "markovmm/geometry.hpp"

#include "markovmm/errors.hpp"
#include "markovmm/validate.hpp"

#include <algorithm>
#include <set>

namespace markovmm {

namespace {

void require_affine(const MarkovMultiMap& m, const char* what) {
    for (const Symbol& s : m.symbols) {
        if (s.cls == SymbolClass::A0 && s.branch &&
            s.branch->kind == BranchMap::Kind::monomial) {
            throw Error(Errc::unsupported_branch_kind,
                        std::string(what) + " requires affine branches (symbol '" + s.id + "')");
        }
    }
}

// Open-interior intersection of two affine graph pieces.
std::optional<PointQ> open_segment_meet(const Symbol& s1, const Symbol& s2) {
    const Rat xlo = std::max(s1.domain.lo, s2.domain.lo);
    const Rat xhi = std::min(s1.domain.hi, s2.domain.hi);
    if (xlo >= xhi) return std::nullopt;
    const Rat a1 = s1.branch->slope, b1 = s1.branch->intercept;
    const Rat a2 = s2.branch->slope, b2 = s2.branch->intercept;
    if (a1 == a2) {
        if (b1 != b2) return std::nullopt;
        const Rat x = (xlo + xhi) / 2;
        return PointQ{x, a1 * x + b1};
    }
    const Rat x = (b2 - b1) / (a1 - a2);
    if (x <= xlo || x >= xhi) return std::nullopt;
    return PointQ{x, a1 * x + b1};
}

}  // namespace

std::optional<CrossingWitness> check_no_crossing(const MarkovMultiMap& m) {
    require_affine(m, "check_no_crossing");
    for (std::size_t i = 0; i < m.symbols.size(); ++i) {
        if (m.symbols[i].cls != SymbolClass::A0) continue;
        for (std::size_t j = i + 1; j < m.symbols.size(); ++j) {
            if (m.symbols[j].cls != SymbolClass::A0) continue;
            if (auto pt = open_segment_meet(m.symbols[i], m.symbols[j])) {
                return CrossingWitness{m.symbols[i].id, m.symbols[j].id, *pt};
            }
        }
    }
    return std::nullopt;
}

ProperParamReport check_properly_parametrized(const MarkovMultiMap& m) {
    require_affine(m, "check_properly_parametrized");
    ProperParamReport report;

    // (i) pairwise disjoint open parts.
    for (std::size_t i = 0; i < m.symbols.size(); ++i) {
        const Symbol& s1 = m.symbols[i];
        for (std::size_t j = i + 1; j < m.symbols.size(); ++j) {
            const Symbol& s2 = m.symbols[j];
            std::optional<PointQ> meet;
            if (s1.cls == SymbolClass::A0 && s2.cls == SymbolClass::A0) {
                meet = open_segment_meet(s1, s2);
            } else if (s1.cls == SymbolClass::A0 || s2.cls == SymbolClass::A0) {
                const Symbol& seg = s1.cls == SymbolClass::A0 ? s1 : s2;
                const Symbol& other = s1.cls == SymbolClass::A0 ? s2 : s1;
                const Rat x = other.domain.lo;
                if (seg.domain.strictly_contains(x)) {
                    const Rat y = branch_eval(seg, x);
                    const bool hit = other.cls == SymbolClass::A1
                                         ? other.range.strictly_contains(y)
                                         : y == other.range.lo;
                    if (hit) meet = PointQ{x, y};
                }
            } else if (s1.cls == SymbolClass::A1 && s2.cls == SymbolClass::A1) {
                if (s1.domain.lo == s2.domain.lo) {
                    const Rat ylo = std::max(s1.range.lo, s2.range.lo);
                    const Rat yhi = std::min(s1.range.hi, s2.range.hi);
                    if (ylo < yhi) meet = PointQ{s1.domain.lo, (ylo + yhi) / 2};
                }
            } else if (s1.cls == SymbolClass::A2 && s2.cls == SymbolClass::A2) {
                if (s1.domain.lo == s2.domain.lo && s1.range.lo == s2.range.lo) {
                    meet = PointQ{s1.domain.lo, s1.range.lo};
                }
            } else {
                const Symbol& vert = s1.cls == SymbolClass::A1 ? s1 : s2;
                const Symbol& pt = s1.cls == SymbolClass::A1 ? s2 : s1;
                if (vert.domain.lo == pt.domain.lo &&
                    vert.range.strictly_contains(pt.range.lo)) {
                    meet = PointQ{pt.domain.lo, pt.range.lo};
                }
            }
            if (meet) report.overlaps.push_back({s1.id, s2.id, *meet});
        }
    }

    // (ii) every boundary point of every piece is covered by exactly one open part.
    std::vector<std::pair<std::string, PointQ>> boundary;
    for (const GraphPrimitive& g : graph_primitives(m)) {
        boundary.push_back({g.symbol, g.a});
        if (!(g.b == g.a)) boundary.push_back({g.symbol, g.b});
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [owner, pt] : boundary) {
        const auto key = std::make_pair(format_rat(pt.x), format_rat(pt.y));
        if (!seen.insert(key).second) continue;
        std::vector<std::string> covers;
        for (const Symbol& s : m.symbols) {
            if (symbol_open_graph_contains(s, pt)) covers.push_back(s.id);
        }
        if (covers.size() != 1) {
            report.boundary_issues.push_back({owner, pt, covers});
        }
    }

    report.ok = report.overlaps.empty() && report.boundary_issues.empty();
    return report;
}

MarkovMultiMap reparametrize(const MarkovMultiMap& m) {
    if (auto witness = check_no_crossing(m)) {
        throw Error(Errc::not_no_crossing,
                    "open graphs of '" + witness->a + "' and '" + witness->b + "' meet at (" +
                        format_rat(witness->at.x) + ", " + format_rat(witness->at.y) + ")");
    }

    MarkovMultiMap out;
    out.ambient = m.ambient;
    out.partition = m.partition;

    std::set<std::string> taken;
    for (const Symbol& s : m.symbols) {
        if (s.cls == SymbolClass::A0) {
            out.symbols.push_back(s);
            taken.insert(s.id);
        }
    }
    auto fresh_id = [&taken](const std::string& base) {
        std::string id = base;
        for (int n = 2; taken.count(id); ++n) id = base + "_" + std::to_string(n);
        taken.insert(id);
        return id;
    };

    // Verticals, split at interior partition points, deduplicated.
    std::set<std::pair<std::string, std::string>> vertical_seen;
    int vcount = 0;
    const auto cells = m.cells();
    for (const Symbol& s : m.symbols) {
        if (s.cls != SymbolClass::A1) continue;
        for (const IntervalQ& cell : cells) {
            if (!(s.range.lo <= cell.lo && cell.hi <= s.range.hi)) continue;
            const auto key = std::make_pair(format_rat(s.domain.lo), format_rat(cell.lo));
            if (!vertical_seen.insert(key).second) continue;
            Symbol piece;
            piece.id = fresh_id("v" + std::to_string(vcount++));
            piece.cls = SymbolClass::A1;
            piece.domain = s.domain;
            piece.range = cell;
            out.symbols.push_back(std::move(piece));
        }
    }

    // Every graph point with both coordinates in P becomes a point symbol.
    int ecount = 0;
    for (const Rat& p : m.partition) {
        for (const Rat& q : m.partition) {
            if (!graph_contains(m, PointQ{p, q})) continue;
            Symbol pt;
            pt.id = fresh_id("e" + std::to_string(ecount++));
            pt.cls = SymbolClass::A2;
            pt.domain = IntervalQ{p, p, true};
            pt.range = IntervalQ{q, q, true};
            out.symbols.push_back(std::move(pt));
        }
    }

    validate_or_throw(out);
    return out;
}

MarkovMultiMap normalize_to_unit(const MarkovMultiMap& m) {
    const Rat lo = m.ambient.lo;
    const Rat w = m.ambient.hi - m.ambient.lo;
    if (lo == 0 && w == 1) return m;
    for (const Symbol& s : m.symbols) {
        if (s.cls == SymbolClass::A0 && s.branch &&
            s.branch->kind == BranchMap::Kind::monomial) {
            throw Error(Errc::unsupported_branch_kind,
                        "cannot conjugate a monomial branch off [0,1] (symbol '" + s.id + "')");
        }
    }
    auto conj = [&lo, &w](const Rat& x) { return (x - lo) / w; };

    MarkovMultiMap out;
    out.ambient = IntervalQ{Rat(0), Rat(1), true};
    for (const Rat& p : m.partition) out.partition.push_back(conj(p));
    for (const Symbol& s : m.symbols) {
        Symbol t = s;
        t.domain = IntervalQ{conj(s.domain.lo), conj(s.domain.hi), s.domain.exact};
        t.range = IntervalQ{conj(s.range.lo), conj(s.range.hi), s.range.exact};
        if (s.branch) {
            // phi o f o phi^-1 keeps the slope and moves the intercept.
            t.branch->slope = s.branch->slope;
            t.branch->intercept = (s.branch->slope * lo + s.branch->intercept - lo) / w;
        }
        out.symbols.push_back(std::move(t));
    }
    return out;
}

}  // namespace markovmm
