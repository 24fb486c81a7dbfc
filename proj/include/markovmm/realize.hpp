// realize.hpp -- build a multi-map whose shift realizes the entropy of a
// given irreducible 0/1 matrix, and verify the construction.

#pragma once

#include "markovmm/dynamics.hpp"
#include "markovmm/multimap.hpp"
#include "markovmm/sft.hpp"

#include <map>
#include <string>
#include <vector>

namespace markovmm {

struct RealizationOutput {
    MarkovMultiMap multimap;  // ambient [1, n+2]
    // order[new_position] = original index (0-based): the simultaneous
    // row/column permutation applied to the input matrix.
    std::vector<int> permutation;
    int k = 0;  // 1-based: row 1 of the permuted matrix has ones at k, k+1
    std::map<std::string, std::string> provenance;  // symbol id -> role
    std::vector<std::string> c0_ids;  // the interval branches encoding matrix entries
};

// The construction: permute the matrix so row 1 has ones in adjacent columns
// k, k+1; on [1, n+2] with half-integer partition, draw one diagonal segment
// per remaining entry, one slope-3 segment merging the two row-1 entries,
// ramps feeding the top band, two final diagonals, and a point symbol at
// every segment endpoint.
// Throws Error(not_irreducible) and Error(zero_entropy) on bad input.
RealizationOutput realize(const AdjacencyMatrix& input);

struct RealizationReport {
    double input_entropy = 0.0;
    double output_sft_entropy = 0.0;
    double c0_component_entropy = 0.0;
    ClassFVerdict class_f_verdict;
    std::vector<GraphPrimitive> figure_segments;  // interval branches only
};

// Checks the construction end to end: the output validates and is properly
// parametrized, the symbols in c0_ids form a strongly connected component of
// branch symbols whose entropy matches the input within tol, no other
// component exceeds it, and the class membership comes out positive.
// Throws Error(verification_failure) naming the first failed assertion.
RealizationReport verify_realization(const AdjacencyMatrix& input, const RealizationOutput& out,
                                     double tol);

}  // namespace markovmm
