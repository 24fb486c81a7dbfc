// geometry.hpp -- exact planar checks on the graph of a multi-map.

#pragma once

#include "markovmm/multimap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace markovmm {

struct CrossingWitness {
    std::string a;
    std::string b;
    PointQ at;
};

// Distinct interval branches may not meet over the open interiors of their
// domains. Returns a witness when two of them do; nullopt when none do.
// Throws Error(unsupported_branch_kind) if any interval branch is monomial.
std::optional<CrossingWitness> check_no_crossing(const MarkovMultiMap& m);

struct OpenOverlap {
    std::string a;
    std::string b;
    PointQ at;
};

struct BoundaryIssue {
    std::string of_symbol;                // whose graph piece owns the boundary point
    PointQ at;
    std::vector<std::string> covered_by;  // open parts containing it (want exactly one)
};

struct ProperParamReport {
    bool ok = false;
    std::vector<OpenOverlap> overlaps;
    std::vector<BoundaryIssue> boundary_issues;
};

// The open graph parts must partition the full graph: pairwise disjoint, and
// every boundary point of every piece covered by exactly one open part.
// Throws Error(unsupported_branch_kind) if any interval branch is monomial.
ProperParamReport check_properly_parametrized(const MarkovMultiMap& m);

// Rebuilds the vertical and point symbols so that the result is properly
// parametrized with the same graph point set: interval branches are kept,
// verticals are split at interior partition points, and every graph point
// with both coordinates in P becomes a point symbol.
// Throws Error(not_no_crossing) when the input graph crosses itself.
MarkovMultiMap reparametrize(const MarkovMultiMap& m);

// Affine change of coordinates onto [0,1]. Slopes are preserved and the
// associated matrix is unchanged. Monomial branches are only supported when
// the ambient interval already is [0,1].
MarkovMultiMap normalize_to_unit(const MarkovMultiMap& m);

}  // namespace markovmm
