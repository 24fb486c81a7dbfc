// realize.cpp -- entropy realization construction and its verifier.

#include "markovmm/realize.hpp"

#include "markovmm/errors.hpp"
#include "markovmm/geometry.hpp"
#include "markovmm/validate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace markovmm {

namespace {

Symbol make_segment(const std::string& id, const Rat& x0, const Rat& y0, const Rat& x1,
                    const Rat& y1) {
    Symbol s;
    s.id = id;
    s.cls = SymbolClass::A0;
    s.domain = IntervalQ{x0, x1, true};
    s.range = IntervalQ{std::min(y0, y1), std::max(y0, y1), true};
    BranchMap b;
    b.kind = BranchMap::Kind::affine;
    b.slope = (y1 - y0) / (x1 - x0);
    b.intercept = y0 - b.slope * x0;
    s.branch = b;
    return s;
}

Symbol make_point(const std::string& id, const Rat& x, const Rat& y) {
    Symbol s;
    s.id = id;
    s.cls = SymbolClass::A2;
    s.domain = IntervalQ{x, x, true};
    s.range = IntervalQ{y, y, true};
    return s;
}

}  // namespace

RealizationOutput realize(const AdjacencyMatrix& input) {
    const int n = static_cast<int>(input.size());
    if (!is_irreducible(input)) {
        throw Error(Errc::not_irreducible, "the input graph is not strongly connected");
    }
    int row = -1;
    for (int i = 0; i < n && row < 0; ++i) {
        int ones = 0;
        for (int j = 0; j < n; ++j) ones += input.rows[i][j] ? 1 : 0;
        if (ones >= 2) row = i;
    }
    if (row < 0) {
        throw Error(Errc::zero_entropy, "no row has two ones; the shift is a single cycle");
    }
    int c1 = -1, c2 = -1;
    for (int j = 0; j < n; ++j) {
        if (!input.rows[row][j]) continue;
        if (c1 < 0) c1 = j;
        else if (c2 < 0) {
            c2 = j;
            break;
        }
    }

    RealizationOutput out;
    // order[new_position] = old index; built from the minimal transpositions
    // that bring the chosen row to position 0 and the chosen columns to
    // adjacent positions.
    std::vector<int>& order = out.permutation;
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    auto move_to = [&order](int pos, int old_index) {
        for (int p = 0; p < static_cast<int>(order.size()); ++p) {
            if (order[p] == old_index) {
                std::swap(order[p], order[pos]);
                return;
            }
        }
    };
    move_to(0, row);
    if (c1 == row) {
        move_to(1, c2);
        out.k = 1;
    } else if (c2 == row) {
        move_to(1, c1);
        out.k = 1;
    } else {
        move_to(1, c1);
        move_to(2, c2);
        out.k = 2;
    }
    auto permuted = [&](int i, int j) { return input.rows[order[i]][order[j]] != 0; };
    const int k = out.k;

    MarkovMultiMap& mm = out.multimap;
    mm.ambient = IntervalQ{Rat(1), Rat(n + 2), true};
    for (int t = 2; t <= 2 * (n + 2); ++t) mm.partition.push_back(Rat(t, 2));

    const Rat half(1, 2);
    std::vector<Symbol> segments;

    // One diagonal per matrix entry, with the two adjacent row-1 entries
    // merged into a single slope-3 segment spanning both target cells.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (!permuted(i - 1, j - 1)) continue;
            if (i == 1 && j == k) {
                Symbol s = make_segment("c1_" + std::to_string(k) + "m", Rat(1), Rat(k),
                                        Rat(1) + half, Rat(k) + 1 + half);
                out.provenance[s.id] = "C0-merged";
                out.c0_ids.push_back(s.id);
                segments.push_back(std::move(s));
                continue;
            }
            if (i == 1 && j == k + 1) continue;  // folded into the merged segment
            Symbol s = make_segment("c" + std::to_string(i) + "_" + std::to_string(j), Rat(i),
                                    Rat(j), Rat(i) + half, Rat(j) + half);
            out.provenance[s.id] = "C0(" + std::to_string(i) + "," + std::to_string(j) + ")";
            out.c0_ids.push_back(s.id);
            segments.push_back(std::move(s));
        }
    }
    for (int i = 1; i <= n; ++i) {
        Symbol s = make_segment("r" + std::to_string(i), Rat(i) + half, Rat(n + 1) + half,
                                Rat(i + 1), Rat(n + 2));
        out.provenance[s.id] = "B0-ramp(" + std::to_string(i) + ")";
        segments.push_back(std::move(s));
    }
    {
        Symbol s = make_segment("fl", Rat(n + 1), Rat(n + 1) + half, Rat(n + 1) + half,
                                Rat(n + 2));
        out.provenance[s.id] = "B0-final-left";
        segments.push_back(std::move(s));
    }
    {
        Symbol s = make_segment("fr", Rat(n + 1) + half, Rat(n + 1) + half, Rat(n + 2),
                                Rat(n + 2));
        out.provenance[s.id] = "B0-final-right";
        segments.push_back(std::move(s));
    }

    for (const Symbol& s : segments) mm.symbols.push_back(s);
    // Left endpoints, then right endpoints, in segment order.
    for (const Symbol& s : segments) {
        const Rat y = branch_eval(s, s.domain.lo);
        Symbol p = make_point(s.id + "_bl", s.domain.lo, y);
        out.provenance[p.id] = "C2(" + s.id + ")";
        mm.symbols.push_back(std::move(p));
    }
    for (const Symbol& s : segments) {
        const Rat y = branch_eval(s, s.domain.hi);
        Symbol p = make_point(s.id + "_tr", s.domain.hi, y);
        out.provenance[p.id] = "B2(" + s.id + ")";
        mm.symbols.push_back(std::move(p));
    }

    validate_or_throw(mm);
    return out;
}

RealizationReport verify_realization(const AdjacencyMatrix& input, const RealizationOutput& out,
                                     double tol) {
    auto fail = [](const std::string& what) -> void {
        throw Error(Errc::verification_failure, what);
    };

    const auto violations = check_multimap(out.multimap);
    if (!violations.empty()) fail("the output does not validate");
    const ProperParamReport pp = check_properly_parametrized(out.multimap);
    if (!pp.ok) fail("the output is not properly parametrized");

    RealizationReport report;
    report.input_entropy = entropy(input).value;

    const AdjacencyMatrix m = build_matrix(out.multimap);
    const Decomposition decomposition = decompose(out.multimap, m);

    std::set<std::string> c0(out.c0_ids.begin(), out.c0_ids.end());
    const Component* c0_component = nullptr;
    for (const Component& c : decomposition.components) {
        for (int v : c.symbols) {
            if (c0.count(m.alphabet[v])) {
                c0_component = &c;
                break;
            }
        }
        if (c0_component) break;
    }
    if (!c0_component) fail("no component contains the matrix-entry branches");
    {
        std::set<std::string> found;
        for (int v : c0_component->symbols) found.insert(m.alphabet[v]);
        if (found != c0) fail("the matrix-entry branches do not form a whole component");
    }
    if (c0_component->kind != ComponentKind::type_i) {
        fail("the matrix-entry component is not Type I");
    }

    report.c0_component_entropy = entropy_of_component(m, c0_component->symbols).value;
    report.output_sft_entropy = entropy(m).value;
    if (std::abs(report.input_entropy - report.c0_component_entropy) > tol) {
        fail("entropy mismatch: input " + std::to_string(report.input_entropy) + " vs component " +
             std::to_string(report.c0_component_entropy));
    }
    for (const Component& c : decomposition.components) {
        if (&c == c0_component) continue;
        const double h = entropy_of_component(m, c.symbols).value;
        if (h > report.c0_component_entropy + tol) {
            fail("another component has larger entropy (" + std::to_string(h) + ")");
        }
    }

    report.class_f_verdict = certify_class_f(out.multimap);
    if (report.class_f_verdict.status != ClassFVerdict::Status::in_f) {
        fail("class membership came out " +
             std::string(class_f_status_name(report.class_f_verdict.status)));
    }

    for (const GraphPrimitive& g : graph_primitives(out.multimap)) {
        if (g.kind == GraphPrimitive::Kind::segment) report.figure_segments.push_back(g);
    }
    return report;
}

}  // namespace markovmm
