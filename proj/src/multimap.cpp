// multimap.cpp -- branch evaluation and graph geometry for the model type.

#include "markovmm/multimap.hpp"

#include "markovmm/errors.hpp"

#include <algorithm>

namespace markovmm {

const char* symbol_class_name(SymbolClass cls) {
    switch (cls) {
        case SymbolClass::A0: return "A0";
        case SymbolClass::A1: return "A1";
        case SymbolClass::A2: return "A2";
    }
    return "?";
}

int MarkovMultiMap::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i].id == id) return static_cast<int>(i);
    }
    return -1;
}

const Symbol& MarkovMultiMap::at(const std::string& id) const {
    const int i = index_of(id);
    if (i < 0) throw Error(Errc::bad_input, "unknown symbol id '" + id + "'");
    return symbols[i];
}

std::vector<IntervalQ> MarkovMultiMap::cells() const {
    std::vector<IntervalQ> out;
    for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
        out.push_back(IntervalQ{partition[i], partition[i + 1], true});
    }
    return out;
}

int MarkovMultiMap::cell_index(const IntervalQ& cell) const {
    for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
        if (partition[i] == cell.lo && partition[i + 1] == cell.hi) return static_cast<int>(i);
    }
    return -1;
}

bool MarkovMultiMap::is_partition_point(const Rat& x) const {
    return std::find(partition.begin(), partition.end(), x) != partition.end();
}

namespace {

Rat pow_rat(const Rat& x, unsigned k) {
    Rat p = 1;
    for (unsigned i = 0; i < k; ++i) p *= x;
    return p;
}

const BranchMap& branch_of(const Symbol& s) {
    if (s.cls != SymbolClass::A0 || !s.branch) {
        throw Error(Errc::bad_input, "symbol '" + s.id + "' has no branch map");
    }
    return *s.branch;
}

}  // namespace

Rat branch_eval(const Symbol& s, const Rat& x) {
    const BranchMap& b = branch_of(s);
    if (b.kind == BranchMap::Kind::affine) {
        return b.slope * x + b.intercept;
    }
    const Rat arg = b.increasing ? x : s.domain.lo + s.domain.hi - x;
    return pow_rat(arg, b.power);
}

IntervalQ branch_invert_point(const Symbol& s, const Rat& y) {
    const BranchMap& b = branch_of(s);
    if (b.kind == BranchMap::Kind::affine) {
        if (b.slope == 0) throw Error(Errc::bad_input, "affine branch with zero slope");
        const Rat x = (y - b.intercept) / b.slope;
        return IntervalQ{x, x, true};
    }
    IntervalQ root = kth_root_enclosure(y, b.power);
    if (!b.increasing) {
        const Rat mirror = s.domain.lo + s.domain.hi;
        root = IntervalQ{mirror - root.hi, mirror - root.lo, root.exact};
    }
    // Clamp into the domain; the true preimage lies there.
    const Rat lo = std::max(root.lo, s.domain.lo);
    const Rat hi = std::min(root.hi, s.domain.hi);
    if (lo > hi) return IntervalQ{s.domain.lo, s.domain.lo, root.exact};
    return IntervalQ{lo, hi, root.exact};
}

IntervalQ inverse_step(const Symbol& s, const IntervalQ& sub) {
    if (s.cls != SymbolClass::A0) return s.domain;
    const BranchMap& b = branch_of(s);
    if (b.kind == BranchMap::Kind::affine) {
        if (b.slope == 0) throw Error(Errc::bad_input, "affine branch with zero slope");
        Rat x0 = (sub.lo - b.intercept) / b.slope;
        Rat x1 = (sub.hi - b.intercept) / b.slope;
        if (x0 > x1) std::swap(x0, x1);
        const Rat lo = std::max(x0, s.domain.lo);
        const Rat hi = std::min(x1, s.domain.hi);
        if (lo > hi) throw Error(Errc::bad_input, "preimage of interval misses domain");
        return IntervalQ{lo, hi, sub.exact};
    }
    const IntervalQ left = branch_invert_point(s, sub.lo);
    const IntervalQ right = branch_invert_point(s, sub.hi);
    Rat lo = std::min(left.lo, right.lo);
    Rat hi = std::max(left.hi, right.hi);
    lo = std::max(lo, s.domain.lo);
    hi = std::min(hi, s.domain.hi);
    if (lo > hi) throw Error(Errc::bad_input, "preimage of interval misses domain");
    return IntervalQ{lo, hi, sub.exact && left.exact && right.exact};
}

std::optional<Rat> inverse_lipschitz(const Symbol& s) {
    if (s.cls != SymbolClass::A0) return Rat(0);
    const BranchMap& b = branch_of(s);
    if (b.kind == BranchMap::Kind::affine) {
        const Rat a = b.slope < 0 ? Rat(-b.slope) : b.slope;
        if (a == 0) throw Error(Errc::bad_input, "affine branch with zero slope");
        return Rat(1) / a;
    }
    // |f'(x)| = power * t^(power-1) with t the distance from the critical
    // endpoint; the minimum over the domain is at t = domain.lo (increasing)
    // or the reflected equivalent, which is domain.lo again by symmetry.
    const Rat t = s.domain.lo;
    if (t <= 0) return std::nullopt;
    const Rat deriv_min = Rat(b.power) * pow_rat(t, b.power - 1);
    return Rat(1) / deriv_min;
}

std::vector<GraphPrimitive> graph_primitives(const MarkovMultiMap& m) {
    std::vector<GraphPrimitive> out;
    for (const Symbol& s : m.symbols) {
        GraphPrimitive g;
        g.symbol = s.id;
        switch (s.cls) {
            case SymbolClass::A0: {
                const BranchMap& b = *s.branch;
                const Rat ya = branch_eval(s, s.domain.lo);
                const Rat yb = branch_eval(s, s.domain.hi);
                g.a = PointQ{s.domain.lo, ya};
                g.b = PointQ{s.domain.hi, yb};
                if (b.kind == BranchMap::Kind::affine) {
                    g.kind = GraphPrimitive::Kind::segment;
                } else {
                    g.kind = GraphPrimitive::Kind::curve;
                    g.power = b.power;
                    g.increasing = b.increasing;
                }
                break;
            }
            case SymbolClass::A1:
                g.kind = GraphPrimitive::Kind::vertical;
                g.a = PointQ{s.domain.lo, s.range.lo};
                g.b = PointQ{s.domain.lo, s.range.hi};
                break;
            case SymbolClass::A2:
                g.kind = GraphPrimitive::Kind::point;
                g.a = PointQ{s.domain.lo, s.range.lo};
                g.b = g.a;
                break;
        }
        out.push_back(std::move(g));
    }
    return out;
}

bool symbol_graph_contains(const Symbol& s, const PointQ& pt) {
    switch (s.cls) {
        case SymbolClass::A0:
            if (!s.domain.contains(pt.x)) return false;
            return branch_eval(s, pt.x) == pt.y;
        case SymbolClass::A1:
            return pt.x == s.domain.lo && s.range.contains(pt.y);
        case SymbolClass::A2:
            return pt.x == s.domain.lo && pt.y == s.range.lo;
    }
    return false;
}

bool graph_contains(const MarkovMultiMap& m, const PointQ& pt) {
    for (const Symbol& s : m.symbols) {
        if (symbol_graph_contains(s, pt)) return true;
    }
    return false;
}

bool symbol_open_graph_contains(const Symbol& s, const PointQ& pt) {
    switch (s.cls) {
        case SymbolClass::A0:
            if (!s.domain.strictly_contains(pt.x)) return false;
            return branch_eval(s, pt.x) == pt.y;
        case SymbolClass::A1:
            return pt.x == s.domain.lo && s.range.strictly_contains(pt.y);
        case SymbolClass::A2:
            return pt.x == s.domain.lo && pt.y == s.range.lo;
    }
    return false;
}

}  // namespace markovmm
