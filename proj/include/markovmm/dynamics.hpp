// dynamics.hpp -- nested intervals of words, coding/avoiding certificates,
// expansion checks, and the class membership verdict.

#pragma once

#include "markovmm/geometry.hpp"
#include "markovmm/multimap.hpp"
#include "markovmm/sft.hpp"

#include <optional>
#include <string>
#include <vector>

namespace markovmm {

// The interval I_u of an admissible word u = a_0 ... a_n: the set of start
// points whose first n steps can follow the branches a_0 ... a_(n-1) and land
// in D(a_n). Computed as the composition of inverse branch steps applied to
// D(a_n). Exact for affine branches; outward-rounded for monomial ones.
// Throws Error(not_admissible) when consecutive symbols have no edge.
IntervalQ interval_of_word(const MarkovMultiMap& mm, const AdjacencyMatrix& m,
                           const std::vector<int>& word);

struct WordCertificate {
    enum class Kind { coding, avoiding };
    enum class Rule {
        contains_a1a2,     // coding: the word is a single vertical/point symbol
        contracting_word,  // coding: nonexpanding component, word with product < 1
        expansion_blanket, // coding: max inverse product over all words of one length < 1
        interval_disjoint, // avoiding: I_word proven disjoint from the partition
        type_iii_step,     // avoiding: branch symbol into a vertical/point symbol
    };

    Kind kind = Kind::coding;
    Rule rule = Rule::contains_a1a2;
    std::vector<int> word;               // empty for the blanket rule
    std::optional<IntervalQ> interval;   // avoiding rules
    std::optional<Rat> product;          // contracting word / blanket max
    std::optional<int> blanket_n;        // blanket rule: the expansion depth N
};

const char* certificate_rule_name(WordCertificate::Rule rule);

// Breadth-first search for a word u over C with I_u disjoint from the
// partition, shortest first and lexicographic by symbol index within a
// length. For mixed components the branch-into-vertical shortcut is tried
// first. nullopt when the search space is exhausted up to max_len (or the
// word cap is hit); absence is a value, not an error.
std::optional<WordCertificate> find_avoiding_word(const MarkovMultiMap& mm,
                                                  const AdjacencyMatrix& m,
                                                  const std::vector<int>& component,
                                                  int max_len, std::size_t cap);

// First applicable coding certificate:
//   (a) a vertical/point symbol inside C;
//   (b) if no inverse branch on C expands lengths, the first word whose
//       inverse Lipschitz product is < 1;
//   (c) the smallest N <= max_len at which the component is uniformly
//       expanding (then every word codes).
std::optional<WordCertificate> find_coding_certificate(const MarkovMultiMap& mm,
                                                       const AdjacencyMatrix& m,
                                                       const std::vector<int>& component,
                                                       int max_len, std::size_t cap);

struct ExpansionReport {
    bool uniformly_expanding = false;
    // Maximum over words a_0 ... a_N of the product of inverse Lipschitz
    // bounds of a_0 ... a_(N-1). nullopt = unbounded (a monomial branch whose
    // domain touches a critical point).
    std::optional<Rat> max_product;
    int n = 0;
};

ExpansionReport check_uniformly_expanding(const MarkovMultiMap& mm, const AdjacencyMatrix& m,
                                          const std::vector<int>& component, int n);

struct DecayReport {
    enum class Verdict { consistent_with_coding, stagnant, plateau };

    std::vector<Rat> max_lengths;  // entry k = max length(I_u) over words of length k+1
    bool exact = true;
    Verdict verdict = Verdict::consistent_with_coding;
};

const char* decay_verdict_name(DecayReport::Verdict verdict);

// Tabulates the worst-case interval length per word length, 1..depth.
// The maxima can only decrease with depth; the verdict reads the tail:
// still strictly shrinking at the horizon, stuck at a full cell length from
// the start (stagnant), or flattened somewhere in between (plateau).
DecayReport check_codes_for_points(const MarkovMultiMap& mm, const AdjacencyMatrix& m,
                                   const std::vector<int>& component, int depth,
                                   std::size_t cap);

enum class TriState { yes, no, unknown };

const char* tri_state_name(TriState t);

struct ComponentFinding {
    Component component;
    bool positive = false;        // combinatorial positive-entropy test
    double entropy_value = 0.0;
    std::optional<WordCertificate> coding;
    std::optional<WordCertificate> avoiding;
    bool needs_avoiding = false;  // positive entropy and entirely branch symbols
    std::optional<DecayReport> decay;  // attached when a required coding proof is missing
};

struct ClassFVerdict {
    enum class Status { in_f, not_in_f, unknown };

    Status status = Status::unknown;
    TriState properly_parametrized = TriState::unknown;
    bool positive_entropy = false;
    std::vector<ComponentFinding> findings;
    int coding_depth = 0;
    int avoiding_depth = 0;
    std::string refutation;  // nonempty exactly when status == not_in_f
};

const char* class_f_status_name(ClassFVerdict::Status status);

// Assembles the membership obligations: properly parametrized, positive
// entropy, a coding certificate for every positive-entropy component, and an
// avoiding certificate for every positive-entropy component made entirely of
// branch symbols. in_f requires every obligation certified; not_in_f carries
// a refutation; everything else is unknown.
ClassFVerdict certify_class_f(const MarkovMultiMap& mm, int coding_depth = 8,
                              int avoiding_depth = 8, std::size_t cap = default_word_cap());

}  // namespace markovmm
