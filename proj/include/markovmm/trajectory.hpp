// trajectory.hpp -- set-valued trajectory sampling, the unique special
// labeling, and labeled-trajectory membership checks.

#pragma once

#include "markovmm/multimap.hpp"
#include "markovmm/sft.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace markovmm {

// One admissible move from a point: the branch value (A0), a choice inside a
// vertical range (A1), or a fixed target (A2).
struct StepOption {
    int symbol = -1;
    std::optional<Rat> value;      // A0: exact forward image; A2: the target
    std::optional<IntervalQ> range;  // A1: any point of the range is allowed
};

// Every symbol whose domain contains x, with its move. Never empty for a
// valid map and x in the ambient interval.
std::vector<StepOption> step_options(const MarkovMultiMap& m, const Rat& x);

// Random walk through the step options, deterministic per seed. Vertical
// moves draw from the rationals with denominator <= 64 strictly inside the
// range. Resulting points are exact rationals.
std::vector<Rat> sample_trajectory(const MarkovMultiMap& m, const Rat& x0, int length,
                                   std::uint64_t seed);

// The grid used for vertical moves, sorted ascending.
std::vector<Rat> vertical_choice_grid(const IntervalQ& range);

// The unique word b with (x_n, x_(n+1)) in the open part of G(b_n) for all n.
// Requires a properly parametrized map (that is what makes the label unique).
// Throws Error(not_properly_parametrized) otherwise, Error(not_a_trajectory)
// when a pair lies outside the graph.
std::vector<int> label_special(const MarkovMultiMap& m, const std::vector<Rat>& points);

struct LabelCheck {
    bool admissible = false;  // the word lies in the language of the matrix
    bool in_t = false;        // admissible and every step on the closed graph piece
    bool in_s = false;        // admissible and every step on the open graph part
};

// Exact membership of (points, word) in the labeled-trajectory sets.
// word.size() must be points.size() - 1.
LabelCheck check_labeled(const MarkovMultiMap& m, const AdjacencyMatrix& matrix,
                         const std::vector<Rat>& points, const std::vector<int>& word);

}  // namespace markovmm
