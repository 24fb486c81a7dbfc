// sft.hpp -- the shift of finite type associated to a multi-map: adjacency
// matrix, irreducible components, entropy, and word enumeration.

#pragma once

#include "markovmm/multimap.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace markovmm {

struct AdjacencyMatrix {
    std::vector<std::string> alphabet;
    std::vector<std::vector<std::uint8_t>> rows;

    std::size_t size() const { return alphabet.size(); }
    bool at(int i, int j) const { return rows[i][j] != 0; }
    int index_of(const std::string& id) const;
};

// M(a,b) = 1 iff the open domain of b sits inside the open range of a.
AdjacencyMatrix build_matrix(const MarkovMultiMap& m);

enum class ComponentKind { type_i, type_ii, type_iii };

const char* component_kind_name(ComponentKind kind);

struct Component {
    std::vector<int> symbols;  // indices into the alphabet, sorted
    ComponentKind kind = ComponentKind::type_i;
};

struct Decomposition {
    std::vector<Component> components;  // nontrivial ones, in discovery order
    std::vector<int> wandering;         // symbols in no nontrivial component
};

// Maximal strongly connected components of the M-graph, every vertex in
// exactly one class. Trivial loopless singletons are excluded.
std::vector<std::vector<int>> strongly_connected_components(const AdjacencyMatrix& m);
std::vector<std::vector<int>> nontrivial_components(const AdjacencyMatrix& m);

// Nontrivial components classified by the symbol classes they contain:
// type I all interval branches, type II all fixed points, type III mixed.
Decomposition decompose(const MarkovMultiMap& mm, const AdjacencyMatrix& m);

// True iff the component supports more than one loop, equivalently some
// vertex has out-degree >= 2 inside the component. Such a component has
// positive entropy; a single cycle has entropy zero.
bool positive_entropy(const AdjacencyMatrix& m, const std::vector<int>& component);

struct EntropyResult {
    double value = 0.0;       // natural log of the spectral radius
    double residual = 0.0;    // width of the final eigenvalue enclosure
    double tol = 0.0;         // enclosure width the iteration was asked for
    int iterations = 0;
    bool converged = true;
};

// Entropy of one strongly connected component, by power iteration on the
// component submatrix shifted by the identity, with two-sided quotient
// bounds. Exact 0.0 for a single cycle. Throws Error(non_convergence) if the
// enclosure fails to shrink below tol within the iteration cap.
EntropyResult entropy_of_component(const AdjacencyMatrix& m, const std::vector<int>& component,
                                   double tol = 1e-12, int max_iterations = 5000);

// Entropy of the whole shift: the maximum over nontrivial components.
EntropyResult entropy(const AdjacencyMatrix& m, double tol = 1e-12, int max_iterations = 5000);

// True iff the M-graph is strongly connected (and every symbol has a path to
// itself, so single vertices without loops do not count).
bool is_irreducible(const AdjacencyMatrix& m);

// All admissible words of the given length (>= 1) using only the symbols in
// `subset`, in lexicographic order by symbol index. Throws
// Error(explosion_guard) when more than `cap` words would be produced.
std::vector<std::vector<int>> enumerate_words(const AdjacencyMatrix& m,
                                              const std::vector<int>& subset, int length,
                                              std::size_t cap);

// The word cap honoured by the CLI and the certification routines; reads
// MULTIMAP_WORD_CAP from the environment, defaulting to 2'000'000.
std::size_t default_word_cap();

}  // namespace markovmm
