// dynamics.cpp -- nested intervals, certificates, and the class verdict.

#include "markovmm/dynamics.hpp"

#include "markovmm/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace markovmm {

namespace {

// Composition of inverse branch steps, specialised to the affine case: either
// a genuine affine map y -> c*y + d, or the constant map created by passing
// through a vertical/point symbol.
struct InverseChain {
    bool constant = false;
    Rat c = 1;  // affine coefficient
    Rat d = 0;  // affine offset
    Rat point;  // image when constant

    IntervalQ apply(const IntervalQ& iv) const {
        if (constant) return IntervalQ{point, point, true};
        Rat a = c * iv.lo + d;
        Rat b = c * iv.hi + d;
        if (a > b) std::swap(a, b);
        return IntervalQ{a, b, iv.exact};
    }

    // this := this o (inverse step of s)
    InverseChain then_inverse_of(const Symbol& s) const {
        InverseChain out = *this;
        if (constant) return out;
        if (s.cls != SymbolClass::A0) {
            out.constant = true;
            out.point = apply(IntervalQ{s.domain.lo, s.domain.lo, true}).lo;
            return out;
        }
        const BranchMap& b = *s.branch;
        // f^-1(y) = y/slope - intercept/slope
        out.c = c / b.slope;
        out.d = d - c * b.intercept / b.slope;
        return out;
    }
};

bool all_affine(const MarkovMultiMap& mm, const std::vector<int>& word) {
    for (int s : word) {
        const Symbol& sym = mm.symbols[s];
        if (sym.cls == SymbolClass::A0 && sym.branch->kind == BranchMap::Kind::monomial) {
            return false;
        }
    }
    return true;
}

void require_admissible(const AdjacencyMatrix& m, const std::vector<int>& word) {
    if (word.empty()) throw Error(Errc::bad_input, "empty word");
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (!m.at(word[i], word[i + 1])) {
            throw Error(Errc::not_admissible,
                        "no edge " + m.alphabet[word[i]] + " -> " + m.alphabet[word[i + 1]]);
        }
    }
}

IntervalQ interval_by_fold(const MarkovMultiMap& mm, const std::vector<int>& word) {
    IntervalQ iv = mm.symbols[word.back()].domain;
    for (std::size_t i = word.size() - 1; i-- > 0;) {
        iv = inverse_step(mm.symbols[word[i]], iv);
    }
    return iv;
}

bool interval_avoids_partition(const MarkovMultiMap& mm, const IntervalQ& iv) {
    for (const Rat& p : mm.partition) {
        if (iv.lo <= p && p <= iv.hi) return false;
    }
    return true;
}

// One BFS node: a word over the component plus the inverse chain of all its
// symbols, so a child interval costs O(1) rational operations.
struct SearchNode {
    std::vector<int> word;
    InverseChain chain;   // inverse of every symbol in `word`
    IntervalQ interval;   // I_word
};

std::optional<Rat> symbol_inverse_bound(const Symbol& s) { return inverse_lipschitz(s); }

}  // namespace

IntervalQ interval_of_word(const MarkovMultiMap& mm, const AdjacencyMatrix& m,
                           const std::vector<int>& word) {
    require_admissible(m, word);
    return interval_by_fold(mm, word);
}

const char* certificate_rule_name(WordCertificate::Rule rule) {
    switch (rule) {
        case WordCertificate::Rule::contains_a1a2: return "contains-A1A2";
        case WordCertificate::Rule::contracting_word:
            return "contracting-word-in-nonexpanding-component";
        case WordCertificate::Rule::expansion_blanket: return "uniform-expansion-blanket";
        case WordCertificate::Rule::interval_disjoint: return "exact-interval-disjoint-from-P";
        case WordCertificate::Rule::type_iii_step: return "typeIII-A0-into-A1A2";
    }
    return "?";
}

std::optional<WordCertificate> find_avoiding_word(const MarkovMultiMap& mm,
                                                  const AdjacencyMatrix& m,
                                                  const std::vector<int>& component,
                                                  int max_len, std::size_t cap) {
    std::vector<int> symbols = component;
    std::sort(symbols.begin(), symbols.end());

    // Mixed components: one branch step into a vertical/point symbol lands
    // strictly inside a cell, so the two-symbol word avoids the partition.
    for (int a : symbols) {
        if (mm.symbols[a].cls != SymbolClass::A0) continue;
        for (int b : symbols) {
            if (mm.symbols[b].cls == SymbolClass::A0 || !m.at(a, b)) continue;
            const std::vector<int> word{a, b};
            const IntervalQ iv = interval_by_fold(mm, word);
            if (!interval_avoids_partition(mm, iv)) continue;  // monomial rounding
            WordCertificate cert;
            cert.kind = WordCertificate::Kind::avoiding;
            cert.rule = WordCertificate::Rule::type_iii_step;
            cert.word = word;
            cert.interval = iv;
            return cert;
        }
    }

    const bool affine = [&] {
        for (int s : symbols) {
            if (!all_affine(mm, {s})) return false;
        }
        return true;
    }();

    std::deque<SearchNode> frontier;
    for (int s : symbols) {
        SearchNode node;
        node.word = {s};
        node.interval = mm.symbols[s].domain;
        if (affine) node.chain = InverseChain{}.then_inverse_of(mm.symbols[s]);
        frontier.push_back(std::move(node));
    }
    std::size_t produced = symbols.size();

    for (int len = 1; len <= max_len; ++len) {
        for (const SearchNode& node : frontier) {
            if (interval_avoids_partition(mm, node.interval)) {
                WordCertificate cert;
                cert.kind = WordCertificate::Kind::avoiding;
                cert.rule = WordCertificate::Rule::interval_disjoint;
                cert.word = node.word;
                cert.interval = node.interval;
                return cert;
            }
        }
        if (len == max_len) break;
        std::deque<SearchNode> next;
        for (const SearchNode& node : frontier) {
            for (int s : symbols) {
                if (!m.at(node.word.back(), s)) continue;
                if (++produced > cap) return std::nullopt;  // exhausted the budget
                SearchNode child;
                child.word = node.word;
                child.word.push_back(s);
                if (affine) {
                    child.interval = node.chain.apply(mm.symbols[s].domain);
                    child.chain = node.chain.then_inverse_of(mm.symbols[s]);
                } else {
                    child.interval = interval_by_fold(mm, child.word);
                }
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::optional<WordCertificate> find_coding_certificate(const MarkovMultiMap& mm,
                                                       const AdjacencyMatrix& m,
                                                       const std::vector<int>& component,
                                                       int max_len, std::size_t cap) {
    std::vector<int> symbols = component;
    std::sort(symbols.begin(), symbols.end());

    // (a) a vertical/point symbol: one visit pins the interval to a point.
    for (int s : symbols) {
        if (mm.symbols[s].cls != SymbolClass::A0) {
            WordCertificate cert;
            cert.kind = WordCertificate::Kind::coding;
            cert.rule = WordCertificate::Rule::contains_a1a2;
            cert.word = {s};
            return cert;
        }
    }

    // (b) if no branch stretches lengths on the way back, one strictly
    // contracting word forces every sequence visiting it infinitely often
    // down to a point.
    bool nonexpanding = true;
    for (int s : symbols) {
        const auto bound = symbol_inverse_bound(mm.symbols[s]);
        if (!bound || *bound > 1) {
            nonexpanding = false;
            break;
        }
    }
    if (nonexpanding) {
        std::deque<std::pair<std::vector<int>, Rat>> frontier;
        for (int s : symbols) frontier.push_back({{s}, *symbol_inverse_bound(mm.symbols[s])});
        std::size_t produced = symbols.size();
        for (int len = 1; len <= max_len; ++len) {
            for (const auto& [word, product] : frontier) {
                if (product < 1) {
                    WordCertificate cert;
                    cert.kind = WordCertificate::Kind::coding;
                    cert.rule = WordCertificate::Rule::contracting_word;
                    cert.word = word;
                    cert.product = product;
                    return cert;
                }
            }
            if (len == max_len) break;
            std::deque<std::pair<std::vector<int>, Rat>> next;
            bool overflow = false;
            for (const auto& [word, product] : frontier) {
                for (int s : symbols) {
                    if (!m.at(word.back(), s)) continue;
                    if (++produced > cap) {
                        overflow = true;
                        break;
                    }
                    auto extended = word;
                    extended.push_back(s);
                    next.push_back({std::move(extended), product * *symbol_inverse_bound(mm.symbols[s])});
                }
                if (overflow) break;
            }
            if (overflow) break;
            frontier = std::move(next);
        }
    }

    // (c) uniform expansion at some depth makes every word coding.
    for (int n = 1; n <= max_len; ++n) {
        const ExpansionReport report = check_uniformly_expanding(mm, m, component, n);
        if (report.uniformly_expanding) {
            WordCertificate cert;
            cert.kind = WordCertificate::Kind::coding;
            cert.rule = WordCertificate::Rule::expansion_blanket;
            cert.product = report.max_product;
            cert.blanket_n = n;
            return cert;
        }
    }
    return std::nullopt;
}

ExpansionReport check_uniformly_expanding(const MarkovMultiMap& mm, const AdjacencyMatrix& m,
                                          const std::vector<int>& component, int n) {
    ExpansionReport report;
    report.n = n;
    if (n < 1) throw Error(Errc::bad_input, "expansion depth must be >= 1");

    // value per end symbol: the largest inverse product over admissible words
    // of t+1 symbols ending there, taking the first t factors.
    // nullopt = unbounded.
    std::map<int, std::optional<Rat>> value;
    for (int s : component) value[s] = Rat(1);
    for (int t = 0; t < n; ++t) {
        std::map<int, std::optional<Rat>> next;
        for (int b : component) {
            bool reachable = false;
            bool unbounded = false;
            Rat best = 0;
            for (int a : component) {
                if (!m.at(a, b)) continue;
                const auto incoming = value.at(a);
                const auto factor = symbol_inverse_bound(mm.symbols[a]);
                reachable = true;
                if ((incoming && *incoming == 0) || (factor && *factor == 0)) {
                    continue;  // contributes 0
                }
                if (!factor || !incoming) {
                    // an unbounded factor against a positive (or unbounded) value
                    unbounded = true;
                    continue;
                }
                best = std::max(best, Rat(*incoming * *factor));
            }
            if (reachable) next[b] = unbounded ? std::optional<Rat>() : std::optional<Rat>(best);
        }
        value = std::move(next);
        if (value.empty()) break;  // no admissible words of this length
    }

    if (value.empty()) {
        // No words of length n+1 at all; the supremum over an empty set is
        // vacuously < 1.
        report.uniformly_expanding = true;
        report.max_product = Rat(0);
        return report;
    }
    bool unbounded = false;
    Rat best = 0;
    for (const auto& [sym, val] : value) {
        if (!val) unbounded = true;
        else best = std::max(best, *val);
    }
    if (unbounded) {
        report.max_product = std::nullopt;
        report.uniformly_expanding = false;
    } else {
        report.max_product = best;
        report.uniformly_expanding = best < 1;
    }
    return report;
}

const char* decay_verdict_name(DecayReport::Verdict verdict) {
    switch (verdict) {
        case DecayReport::Verdict::consistent_with_coding: return "consistent with coding";
        case DecayReport::Verdict::stagnant: return "stagnant";
        case DecayReport::Verdict::plateau: return "plateau";
    }
    return "?";
}

DecayReport check_codes_for_points(const MarkovMultiMap& mm, const AdjacencyMatrix& m,
                                   const std::vector<int>& component, int depth,
                                   std::size_t cap) {
    if (depth < 1) throw Error(Errc::bad_input, "depth must be >= 1");
    std::vector<int> symbols = component;
    std::sort(symbols.begin(), symbols.end());

    const bool affine = [&] {
        for (int s : symbols) {
            if (!all_affine(mm, {s})) return false;
        }
        return true;
    }();

    DecayReport report;
    std::deque<SearchNode> frontier;
    for (int s : symbols) {
        SearchNode node;
        node.word = {s};
        node.interval = mm.symbols[s].domain;
        if (affine) node.chain = InverseChain{}.then_inverse_of(mm.symbols[s]);
        frontier.push_back(std::move(node));
    }
    std::size_t produced = symbols.size();

    for (int len = 1; len <= depth; ++len) {
        if (frontier.empty()) break;
        Rat row = 0;
        for (const SearchNode& node : frontier) {
            row = std::max(row, node.interval.length());
            report.exact = report.exact && node.interval.exact;
        }
        report.max_lengths.push_back(row);
        if (len == depth) break;
        std::deque<SearchNode> next;
        for (const SearchNode& node : frontier) {
            for (int s : symbols) {
                if (!m.at(node.word.back(), s)) continue;
                if (++produced > cap) {
                    throw Error(Errc::explosion_guard,
                                "more than " + std::to_string(cap) + " words at depth " +
                                    std::to_string(len + 1));
                }
                SearchNode child;
                child.word = node.word;
                child.word.push_back(s);
                if (affine) {
                    child.interval = node.chain.apply(mm.symbols[s].domain);
                    child.chain = node.chain.then_inverse_of(mm.symbols[s]);
                } else {
                    child.interval = interval_by_fold(mm, child.word);
                }
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    const auto& rows = report.max_lengths;
    if (rows.size() >= 2 && rows.back() < rows[rows.size() - 2]) {
        report.verdict = DecayReport::Verdict::consistent_with_coding;
    } else {
        bool constant = true;
        for (const Rat& r : rows) constant = constant && r == rows.front();
        bool cell_length = false;
        for (const IntervalQ& cell : mm.cells()) {
            if (!rows.empty() && cell.length() == rows.front()) cell_length = true;
        }
        report.verdict = (constant && cell_length) ? DecayReport::Verdict::stagnant
                                                   : DecayReport::Verdict::plateau;
    }
    return report;
}

const char* tri_state_name(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::unknown: return "unknown";
    }
    return "?";
}

const char* class_f_status_name(ClassFVerdict::Status status) {
    switch (status) {
        case ClassFVerdict::Status::in_f: return "in_F";
        case ClassFVerdict::Status::not_in_f: return "not_in_F";
        case ClassFVerdict::Status::unknown: return "unknown";
    }
    return "?";
}

ClassFVerdict certify_class_f(const MarkovMultiMap& mm, int coding_depth, int avoiding_depth,
                              std::size_t cap) {
    ClassFVerdict verdict;
    verdict.coding_depth = coding_depth;
    verdict.avoiding_depth = avoiding_depth;

    try {
        const ProperParamReport pp = check_properly_parametrized(mm);
        verdict.properly_parametrized = pp.ok ? TriState::yes : TriState::no;
    } catch (const Error& e) {
        if (e.code() != Errc::unsupported_branch_kind) throw;
        verdict.properly_parametrized = TriState::unknown;
    }

    const AdjacencyMatrix m = build_matrix(mm);
    const Decomposition decomposition = decompose(mm, m);

    bool any_positive = false;
    bool all_required_found = true;
    for (const Component& c : decomposition.components) {
        ComponentFinding finding;
        finding.component = c;
        finding.positive = positive_entropy(m, c.symbols);
        finding.entropy_value = entropy_of_component(m, c.symbols).value;
        any_positive = any_positive || finding.positive;
        if (finding.positive) {
            finding.coding = find_coding_certificate(mm, m, c.symbols, coding_depth, cap);
            finding.needs_avoiding = c.kind == ComponentKind::type_i;
            if (finding.needs_avoiding) {
                finding.avoiding = find_avoiding_word(mm, m, c.symbols, avoiding_depth, cap);
            }
            if (!finding.coding) {
                finding.decay = check_codes_for_points(mm, m, c.symbols, coding_depth, cap);
            }
            all_required_found = all_required_found && finding.coding &&
                                 (!finding.needs_avoiding || finding.avoiding);
        }
        verdict.findings.push_back(std::move(finding));
    }
    verdict.positive_entropy = any_positive;

    if (verdict.properly_parametrized == TriState::no) {
        verdict.status = ClassFVerdict::Status::not_in_f;
        verdict.refutation = "the open graph parts do not partition the graph";
        return verdict;
    }
    if (!any_positive) {
        verdict.status = ClassFVerdict::Status::not_in_f;
        verdict.refutation = "the associated shift has zero entropy";
        return verdict;
    }
    if (verdict.properly_parametrized == TriState::yes && all_required_found) {
        verdict.status = ClassFVerdict::Status::in_f;
    } else {
        verdict.status = ClassFVerdict::Status::unknown;
    }
    return verdict;
}

}  // namespace markovmm
