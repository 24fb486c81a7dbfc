// trajectory.cpp -- trajectory sampling and special labeling.

#include "markovmm/trajectory.hpp"

#include "markovmm/errors.hpp"
#include "markovmm/geometry.hpp"

#include <algorithm>
#include <random>

namespace markovmm {

std::vector<StepOption> step_options(const MarkovMultiMap& m, const Rat& x) {
    if (x < m.ambient.lo || x > m.ambient.hi) {
        throw Error(Errc::bad_input, "point " + format_rat(x) + " outside the ambient interval");
    }
    std::vector<StepOption> out;
    for (std::size_t i = 0; i < m.symbols.size(); ++i) {
        const Symbol& s = m.symbols[i];
        if (!s.domain.contains(x)) continue;
        StepOption opt;
        opt.symbol = static_cast<int>(i);
        switch (s.cls) {
            case SymbolClass::A0: opt.value = branch_eval(s, x); break;
            case SymbolClass::A1: opt.range = s.range; break;
            case SymbolClass::A2: opt.value = s.range.lo; break;
        }
        out.push_back(std::move(opt));
    }
    if (out.empty()) {
        throw Error(Errc::bad_input,
                    "no step options at " + format_rat(x) + "; the map fails coverage");
    }
    return out;
}

std::vector<Rat> vertical_choice_grid(const IntervalQ& range) {
    std::vector<Rat> grid;
    for (int den = 1; den <= 64; ++den) {
        // smallest num with num/den > lo, walked up to hi exclusive
        const Rat lo_scaled = range.lo * den;
        Int num = boost::multiprecision::numerator(lo_scaled) /
                  boost::multiprecision::denominator(lo_scaled);
        while (Rat(num, den) <= range.lo) ++num;
        for (; Rat(num, den) < range.hi; ++num) grid.push_back(Rat(num, den));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

// Unbiased bounded draw by rejection; std::uniform_int_distribution is not
// portable across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

}  // namespace

std::vector<Rat> sample_trajectory(const MarkovMultiMap& m, const Rat& x0, int length,
                                   std::uint64_t seed) {
    if (length < 1) throw Error(Errc::bad_input, "trajectory length must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Rat> points{x0};
    Rat x = x0;
    while (static_cast<int>(points.size()) < length) {
        const auto options = step_options(m, x);
        const StepOption& pick = options[draw_below(rng, options.size())];
        Rat next;
        if (pick.value) {
            next = *pick.value;
        } else {
            const auto grid = vertical_choice_grid(*pick.range);
            if (grid.empty()) {
                // A range thinner than the grid spacing; fall back to its midpoint.
                next = (pick.range->lo + pick.range->hi) / 2;
            } else {
                next = grid[draw_below(rng, grid.size())];
            }
        }
        points.push_back(next);
        x = next;
    }
    return points;
}

std::vector<int> label_special(const MarkovMultiMap& m, const std::vector<Rat>& points) {
    if (points.size() < 2) {
        throw Error(Errc::bad_input, "need at least two points to label");
    }
    const ProperParamReport pp = check_properly_parametrized(m);
    if (!pp.ok) {
        throw Error(Errc::not_properly_parametrized,
                    "special labeling needs the open parts to partition the graph");
    }
    std::vector<int> word;
    for (std::size_t n = 0; n + 1 < points.size(); ++n) {
        const PointQ pt{points[n], points[n + 1]};
        int found = -1;
        for (std::size_t i = 0; i < m.symbols.size(); ++i) {
            if (symbol_open_graph_contains(m.symbols[i], pt)) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0) {
            throw Error(Errc::not_a_trajectory,
                        "step " + std::to_string(n) + ": (" + format_rat(pt.x) + ", " +
                            format_rat(pt.y) + ") is not on the graph");
        }
        word.push_back(found);
    }
    return word;
}

LabelCheck check_labeled(const MarkovMultiMap& m, const AdjacencyMatrix& matrix,
                         const std::vector<Rat>& points, const std::vector<int>& word) {
    if (points.size() != word.size() + 1) {
        throw Error(Errc::bad_input, "word length must be one less than the point count");
    }
    LabelCheck result;
    result.admissible = true;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (!matrix.at(word[i], word[i + 1])) result.admissible = false;
    }
    bool closed_all = true, open_all = true;
    for (std::size_t n = 0; n < word.size(); ++n) {
        const PointQ pt{points[n], points[n + 1]};
        const Symbol& s = m.symbols[word[n]];
        closed_all = closed_all && symbol_graph_contains(s, pt);
        open_all = open_all && symbol_open_graph_contains(s, pt);
    }
    result.in_t = result.admissible && closed_all;
    result.in_s = result.admissible && open_all;
    return result;
}

}  // namespace markovmm
