// multimap.hpp -- the Markov multi-map model: partition, symbols, branch maps.

#pragma once

#include "markovmm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace markovmm {

// Symbol classes: interval branches, vertical segments, isolated points.
enum class SymbolClass { A0, A1, A2 };

const char* symbol_class_name(SymbolClass cls);

// The map carried by an A0 symbol on its domain cell.
//   affine:   x -> slope * x + intercept
//   monomial: increasing  x -> x^power          (domain must lie in [0, inf))
//             decreasing  x -> (lo + hi - x)^power, reflected across the
//                              domain midpoint before powering
struct BranchMap {
    enum class Kind { affine, monomial };

    Kind kind = Kind::affine;
    Rat slope;       // affine only
    Rat intercept;   // affine only
    unsigned power = 0;      // monomial only, >= 2
    bool increasing = true;  // monomial only
};

// One symbol of the multi-map: a domain, a range, and (for A0) a branch map.
//   A0: D is a partition cell, R is the exact image interval.
//   A1: D is a single point {p}, R is a nondegenerate interval.
//   A2: D and R are both single points.
struct Symbol {
    std::string id;
    SymbolClass cls = SymbolClass::A0;
    IntervalQ domain;
    IntervalQ range;
    std::optional<BranchMap> branch;  // present iff cls == A0
};

struct MarkovMultiMap {
    IntervalQ ambient;
    std::vector<Rat> partition;  // sorted, partition.front() == ambient.lo etc.
    std::vector<Symbol> symbols;

    int index_of(const std::string& id) const;
    const Symbol& at(const std::string& id) const;  // throws Error(bad_input)

    // Partition cells [p_i, p_(i+1)] in order.
    std::vector<IntervalQ> cells() const;

    // Index of the cell whose closure is `cell`, or -1.
    int cell_index(const IntervalQ& cell) const;

    bool is_partition_point(const Rat& x) const;
};

// Exact forward image of x under an A0 branch. Pre: x in domain(s).
Rat branch_eval(const Symbol& s, const Rat& x);

// Exact preimage of y under an A0 branch, within domain(s).
// Pre: y in range(s). Exact for affine; enclosure for monomial.
IntervalQ branch_invert_point(const Symbol& s, const Rat& y);

// Preimage of a subinterval of range(s) under the step relation of s.
// For A0 this is the branch preimage; for A1/A2 it is domain(s).
IntervalQ inverse_step(const Symbol& s, const IntervalQ& sub);

// Least upper bound of |(f_s^-1)'| over range(s), i.e. the reciprocal of the
// branch's minimal expansion. nullopt means the bound is infinite (a monomial
// branch whose domain touches a critical point). A1/A2 symbols give 0.
std::optional<Rat> inverse_lipschitz(const Symbol& s);

// One drawable piece of the graph G(F).
struct GraphPrimitive {
    enum class Kind { segment, curve, vertical, point };

    Kind kind = Kind::segment;
    std::string symbol;
    PointQ a;  // left endpoint (segment/curve), bottom (vertical), the point itself
    PointQ b;  // right endpoint (segment/curve), top (vertical), == a for point
    unsigned power = 0;      // curve only
    bool increasing = true;  // curve only
};

std::vector<GraphPrimitive> graph_primitives(const MarkovMultiMap& m);

// Membership of (x, y) in the closed graph piece of one symbol / the whole graph.
bool symbol_graph_contains(const Symbol& s, const PointQ& pt);
bool graph_contains(const MarkovMultiMap& m, const PointQ& pt);

// Membership in the open part G_0: endpoints removed (A0/A1); all of G for A2.
bool symbol_open_graph_contains(const Symbol& s, const PointQ& pt);

}  // namespace markovmm
