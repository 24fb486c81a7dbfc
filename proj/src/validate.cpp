// validate.cpp -- conditions (1)-(6) for Markov multi-maps.

#include "markovmm/validate.hpp"

#include <set>

namespace markovmm {

namespace {

void check_partition(const MarkovMultiMap& m, std::vector<Violation>& out) {
    if (m.partition.size() < 2) {
        out.push_back({1, "", "partition needs at least 2 points"});
        return;
    }
    for (std::size_t i = 0; i + 1 < m.partition.size(); ++i) {
        if (m.partition[i] >= m.partition[i + 1]) {
            throw Error(Errc::unsorted_partition,
                        "partition points must be strictly increasing (index " +
                            std::to_string(i) + ")");
        }
    }
    if (m.ambient.lo >= m.ambient.hi) {
        out.push_back({1, "", "ambient interval is degenerate"});
    }
    if (m.partition.front() != m.ambient.lo || m.partition.back() != m.ambient.hi) {
        out.push_back({1, "", "partition endpoints must equal the ambient endpoints"});
    }
}

void check_ids(const MarkovMultiMap& m, std::vector<Violation>& out) {
    std::set<std::string> seen;
    for (const Symbol& s : m.symbols) {
        if (s.id.empty()) {
            out.push_back({2, s.id, "symbol id is empty"});
        } else if (!seen.insert(s.id).second) {
            out.push_back({2, s.id, "duplicate symbol id"});
        }
    }
    if (m.symbols.empty()) {
        out.push_back({2, "", "alphabet is empty"});
    }
}

void check_domain(const MarkovMultiMap& m, const Symbol& s, std::vector<Violation>& out) {
    if (s.domain.lo > s.domain.hi) {
        out.push_back({3, s.id, "domain has lo > hi"});
        return;
    }
    if (s.domain.lo < m.ambient.lo || s.domain.hi > m.ambient.hi) {
        out.push_back({3, s.id, "domain leaves the ambient interval"});
        return;
    }
    if (s.cls == SymbolClass::A0) {
        if (m.cell_index(s.domain) < 0) {
            out.push_back({3, s.id, "A0 domain is not a partition cell"});
        }
    } else {
        if (!s.domain.is_point()) {
            out.push_back({3, s.id, "A1/A2 domain must be a single point"});
        } else if (!m.is_partition_point(s.domain.lo)) {
            out.push_back({3, s.id, "A1/A2 domain point is not a partition point"});
        }
    }
}

void check_range(const MarkovMultiMap& m, const Symbol& s, A1RangePolicy policy,
                 std::vector<Violation>& out) {
    if (s.range.lo > s.range.hi) {
        out.push_back({4, s.id, "range has lo > hi"});
        return;
    }
    if (s.range.lo < m.ambient.lo || s.range.hi > m.ambient.hi) {
        out.push_back({4, s.id, "range leaves the ambient interval"});
        return;
    }
    if (!m.is_partition_point(s.range.lo) || !m.is_partition_point(s.range.hi)) {
        out.push_back({4, s.id, "range endpoints must be partition points"});
        return;
    }
    switch (s.cls) {
        case SymbolClass::A0:
            if (!(s.range.lo < s.range.hi)) {
                out.push_back({4, s.id, "A0 range must be nondegenerate"});
            }
            break;
        case SymbolClass::A1: {
            if (!(s.range.lo < s.range.hi)) {
                out.push_back({4, s.id, "A1 range must be nondegenerate"});
                break;
            }
            if (policy == A1RangePolicy::strict) {
                for (const Rat& p : m.partition) {
                    if (s.range.lo < p && p < s.range.hi) {
                        out.push_back(
                            {4, s.id, "A1 range contains interior partition point " + format_rat(p)});
                        break;
                    }
                }
            }
            break;
        }
        case SymbolClass::A2:
            if (!s.range.is_point()) {
                out.push_back({4, s.id, "A2 range must be a single point"});
            }
            break;
    }
}

void check_branch(const Symbol& s, std::vector<Violation>& out) {
    if (s.cls != SymbolClass::A0) {
        if (s.branch) out.push_back({5, s.id, "A1/A2 symbol carries a branch map"});
        return;
    }
    if (!s.branch) {
        out.push_back({5, s.id, "A0 symbol is missing its branch map"});
        return;
    }
    const BranchMap& b = *s.branch;
    if (b.kind == BranchMap::Kind::affine) {
        if (b.slope == 0) {
            out.push_back({5, s.id, "affine branch has zero slope"});
            return;
        }
    } else {
        if (b.power < 2) {
            out.push_back({5, s.id, "monomial branch needs power >= 2"});
            return;
        }
        if (s.domain.lo < 0) {
            out.push_back({5, s.id, "monomial branch domain must lie in [0, inf)"});
            return;
        }
    }
    const bool increasing =
        (b.kind == BranchMap::Kind::affine) ? b.slope > 0 : b.increasing;
    const Rat ylo = branch_eval(s, s.domain.lo);
    const Rat yhi = branch_eval(s, s.domain.hi);
    const Rat image_lo = increasing ? ylo : yhi;
    const Rat image_hi = increasing ? yhi : ylo;
    if (image_lo != s.range.lo || image_hi != s.range.hi) {
        out.push_back({5, s.id,
                       "branch does not map the domain onto the range (image [" +
                           format_rat(image_lo) + ", " + format_rat(image_hi) + "])"});
    }
}

void check_coverage(const MarkovMultiMap& m, std::vector<Violation>& out) {
    const auto cells = m.cells();
    for (const IntervalQ& cell : cells) {
        bool covered = false;
        for (const Symbol& s : m.symbols) {
            if (s.cls == SymbolClass::A0 && s.domain == cell) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            out.push_back({6, "",
                           "cell [" + format_rat(cell.lo) + ", " + format_rat(cell.hi) +
                               "] is not the domain of any interval branch"});
        }
    }
}

}  // namespace

std::vector<Violation> check_multimap(const MarkovMultiMap& m, A1RangePolicy policy) {
    std::vector<Violation> out;
    check_partition(m, out);
    if (!out.empty()) return out;
    check_ids(m, out);
    for (const Symbol& s : m.symbols) {
        check_domain(m, s, out);
        check_range(m, s, policy, out);
        check_branch(s, out);
    }
    check_coverage(m, out);
    return out;
}

void validate_or_throw(const MarkovMultiMap& m, A1RangePolicy policy) {
    auto violations = check_multimap(m, policy);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace markovmm
