// property_test.cpp
// Randomized law checks: nested word intervals, labeled trajectories,
// the positive-entropy equivalence, and reparametrization round-trips.

#include <doctest.h>

#include <markovmm/dynamics.hpp>
#include <markovmm/geometry.hpp>
#include <markovmm/sft.hpp>
#include <markovmm/trajectory.hpp>
#include <markovmm/validate.hpp>

#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace markovmm;

namespace {

std::vector<int> random_admissible_word(const AdjacencyMatrix& m, std::mt19937_64& rng,
                                        int max_len) {
    const int n = static_cast<int>(m.size());
    std::vector<int> word;
    word.push_back(static_cast<int>(rng() % n));
    const int target = 1 + static_cast<int>(rng() % max_len);
    while (static_cast<int>(word.size()) < target) {
        std::vector<int> nexts;
        for (int j = 0; j < n; ++j)
            if (m.at(word.back(), j)) nexts.push_back(j);
        if (nexts.empty()) break;
        word.push_back(nexts[rng() % nexts.size()]);
    }
    return word;
}

}  // namespace

TEST_CASE("random words obey the nested-interval laws exactly") {
    std::mt19937_64 rng(20240817);
    for (const char* name : {"notue.json", "typeiii.json", "fullshift2.json"}) {
        CAPTURE(name);
        auto mm = mmtest::load_fixture(name);
        auto m = build_matrix(mm);
        for (int trial = 0; trial < 500; ++trial) {
            CAPTURE(trial);
            auto word = random_admissible_word(m, rng, 10);
            IntervalQ prev;
            bool have_prev = false;
            for (std::size_t len = 1; len <= word.size(); ++len) {
                std::vector<int> prefix(word.begin(), word.begin() + len);
                auto iv = interval_of_word(mm, m, prefix);
                REQUIRE(iv.lo <= iv.hi);
                REQUIRE(iv.exact);
                // Start points live in the first symbol's domain.
                REQUIRE(mm.symbols[word[0]].domain.contains(iv));
                // Extending the word never grows the interval.
                if (have_prev) REQUIRE(prev.contains(iv));
                prev = iv;
                have_prev = true;
            }

            // Recursion identity. Base: a one-symbol word yields its domain.
            // Step: pulling the tail interval back through the head symbol
            // (affine inverse for branches, the domain point for the rest)
            // reproduces the full interval.
            {
                const Symbol& head = mm.symbols[word[0]];
                auto base = interval_of_word(mm, m, {word[0]});
                REQUIRE(base.lo == head.domain.lo);
                REQUIRE(base.hi == head.domain.hi);
            }
            if (word.size() >= 2) {
                const Symbol& head = mm.symbols[word[0]];
                std::vector<int> tail(word.begin() + 1, word.end());
                auto whole = interval_of_word(mm, m, word);
                auto rest = interval_of_word(mm, m, tail);
                if (head.cls == SymbolClass::A0) {
                    REQUIRE(head.branch.has_value());
                    REQUIRE(head.branch->kind == BranchMap::Kind::affine);
                    Rat lo = std::max(rest.lo, head.range.lo);
                    Rat hi = std::min(rest.hi, head.range.hi);
                    REQUIRE(lo <= hi);
                    Rat xa((lo - head.branch->intercept) / head.branch->slope);
                    Rat xb((hi - head.branch->intercept) / head.branch->slope);
                    REQUIRE(whole.lo == std::min(xa, xb));
                    REQUIRE(whole.hi == std::max(xa, xb));
                } else {
                    REQUIRE(whole.lo == head.domain.lo);
                    REQUIRE(whole.hi == head.domain.lo);
                }
            }
        }
    }
}

TEST_CASE("sampled trajectories have unique admissible labels") {
    for (const char* name : {"notue.json", "typeiii.json", "fullshift2.json"}) {
        CAPTURE(name);
        auto mm = mmtest::load_fixture(name);
        auto m = build_matrix(mm);

        // Start pool: partition points plus a fixed rational grid.
        std::vector<Rat> starts(mm.partition.begin(), mm.partition.end());
        for (int k = 1; k < 17; ++k) {
            Rat x = mm.ambient.lo + (mm.ambient.hi - mm.ambient.lo) * k / 17;
            starts.push_back(x);
        }

        for (int trial = 0; trial < 1000; ++trial) {
            CAPTURE(trial);
            const Rat& x0 = starts[trial % starts.size()];
            auto traj = sample_trajectory(mm, x0, 8, static_cast<std::uint64_t>(trial));
            auto word = label_special(mm, traj);
            REQUIRE(word.size() == traj.size() - 1);

            auto c = check_labeled(mm, m, traj, word);
            REQUIRE(c.admissible);
            REQUIRE(c.in_t);
            REQUIRE(c.in_s);

            // Uniqueness: each consecutive pair lies in exactly one open part.
            for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
                int covers = 0;
                for (const Symbol& s : mm.symbols)
                    if (symbol_open_graph_contains(s, PointQ{traj[i], traj[i + 1]})) ++covers;
                REQUIRE(covers == 1);
            }
        }
    }
}

TEST_CASE("combinatorial positivity matches measured entropy on random matrices") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(trial);
        const int n = 1 + static_cast<int>(rng() % 8);
        AdjacencyMatrix m;
        for (int i = 0; i < n; ++i) m.alphabet.push_back("s" + std::to_string(i));
        m.rows.assign(n, std::vector<std::uint8_t>(n, 0));

        const int mode = static_cast<int>(rng() % 3);
        if (mode == 0) {
            // A permutation cycle: one loop, zero entropy.
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            for (int i = 0; i < n; ++i) m.rows[order[i]][order[(i + 1) % n]] = 1;
        } else {
            const int den = mode == 1 ? 10 : 5;  // edge probability 3/10 or 3/5
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.rows[i][j] = (rng() % den < 3) ? 1 : 0;
        }

        for (const auto& comp : nontrivial_components(m)) {
            CAPTURE(comp.size());
            bool positive = positive_entropy(m, comp);
            auto r = entropy_of_component(m, comp);
            REQUIRE(r.converged);
            REQUIRE(positive == (r.value > 1e-9));
        }
    }
}

TEST_CASE("random no-crossing maps reparametrize to proper form") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        CAPTURE(trial);
        const int n = 2 + static_cast<int>(rng() % 4);  // cells
        MarkovMultiMap m;
        m.ambient = {Rat(0), Rat(1), true};
        for (int i = 0; i <= n; ++i) m.partition.push_back(Rat(i, n));

        int sid = 0;
        for (int i = 0; i < n; ++i) {
            const Rat dlo(i, n), dhi(i + 1, n);
            if (rng() % 4 == 0) {
                // A single branch, possibly decreasing.
                const int span = 1 + static_cast<int>(rng() % n);
                const int start = static_cast<int>(rng() % (n - span + 1));
                const bool down = rng() % 2 == 0;
                const Rat slope = down ? Rat(-span) : Rat(span);
                // slope * x + b maps [i/n, (i+1)/n] onto [start/n, (start+span)/n].
                const Rat b = down ? Rat(start + span, n) - slope * dlo
                                   : Rat(start, n) - slope * dlo;
                m.symbols.push_back(
                    mmtest::affine("s" + std::to_string(sid++), dlo, dhi, slope, b));
            } else {
                // Parallel increasing branches with one shared span.
                const int span = 1 + static_cast<int>(rng() % n);
                std::set<int> used;
                const int count = 1 + static_cast<int>(rng() % 3);
                for (int k = 0; k < count; ++k)
                    used.insert(static_cast<int>(rng() % (n - span + 1)));
                for (int start : used) {
                    const Rat slope(span);
                    const Rat b = Rat(start, n) - slope * dlo;
                    m.symbols.push_back(
                        mmtest::affine("s" + std::to_string(sid++), dlo, dhi, slope, b));
                }
            }
        }
        for (int i = 1; i < n; ++i) {
            if (rng() % 2 == 0) continue;
            int a = static_cast<int>(rng() % n);
            int b = a + 1 + static_cast<int>(rng() % (n - a));
            m.symbols.push_back(mmtest::vertical("v" + std::to_string(sid++), Rat(i, n),
                                                 Rat(a, n), Rat(b, n)));
        }

        REQUIRE_NOTHROW(validate_or_throw(m, A1RangePolicy::allow_multicell));
        REQUIRE(!check_no_crossing(m).has_value());

        auto out = reparametrize(m);
        REQUIRE_NOTHROW(validate_or_throw(out));
        auto pp = check_properly_parametrized(out);
        REQUIRE(pp.ok);

        // Graph point sets agree, sampled in both directions.
        auto sample_points = [](const MarkovMultiMap& map) {
            std::vector<PointQ> pts;
            for (const Symbol& s : map.symbols) {
                if (s.cls == SymbolClass::A0) {
                    for (const Rat& x :
                         {s.domain.lo, s.domain.hi,
                          Rat((s.domain.lo + s.domain.hi) / 2),
                          Rat(s.domain.lo + (s.domain.hi - s.domain.lo) / 3)}) {
                        pts.push_back({x, branch_eval(s, x)});
                    }
                } else {
                    for (const Rat& y :
                         {s.range.lo, s.range.hi, Rat((s.range.lo + s.range.hi) / 2)}) {
                        pts.push_back({s.domain.lo, y});
                    }
                }
            }
            return pts;
        };
        for (const auto& p : sample_points(m)) REQUIRE(graph_contains(out, p));
        for (const auto& p : sample_points(out)) REQUIRE(graph_contains(m, p));
    }
}
