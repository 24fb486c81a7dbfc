// sft.cpp -- adjacency matrix, components, entropy, and word enumeration.

#include "markovmm/sft.hpp"

#include "markovmm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace markovmm {

int AdjacencyMatrix::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i] == id) return static_cast<int>(i);
    }
    return -1;
}

AdjacencyMatrix build_matrix(const MarkovMultiMap& m) {
    const std::size_t n = m.symbols.size();
    AdjacencyMatrix out;
    out.alphabet.reserve(n);
    for (const Symbol& s : m.symbols) out.alphabet.push_back(s.id);
    out.rows.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const Symbol& a = m.symbols[i];
        for (std::size_t j = 0; j < n; ++j) {
            const Symbol& b = m.symbols[j];
            bool edge = false;
            if (a.cls == SymbolClass::A2) {
                // Open range is the single point R(a); only a singleton open
                // domain can sit inside it.
                edge = b.cls != SymbolClass::A0 && b.domain.lo == a.range.lo;
            } else if (b.cls == SymbolClass::A0) {
                edge = a.range.lo <= b.domain.lo && b.domain.hi <= a.range.hi;
            } else {
                edge = a.range.strictly_contains(b.domain.lo);
            }
            if (edge) out.rows[i][j] = 1;
        }
    }
    return out;
}

const char* component_kind_name(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::type_i: return "I";
        case ComponentKind::type_ii: return "II";
        case ComponentKind::type_iii: return "III";
    }
    return "?";
}

namespace {

// Iterative Tarjan; recursion is unrolled with an explicit edge cursor.
struct TarjanState {
    const AdjacencyMatrix& m;
    std::vector<int> index, lowlink, on_stack;
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    explicit TarjanState(const AdjacencyMatrix& mm)
        : m(mm),
          index(mm.size(), -1),
          lowlink(mm.size(), 0),
          on_stack(mm.size(), 0) {}

    void run(int root) {
        std::vector<std::pair<int, int>> call_stack;  // (vertex, next edge)
        call_stack.push_back({root, 0});
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call_stack.empty()) {
            auto& [v, cursor] = call_stack.back();
            bool descended = false;
            const int n = static_cast<int>(m.size());
            while (cursor < n) {
                const int w = cursor++;
                if (!m.at(v, w)) continue;
                if (index[w] < 0) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call_stack.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
            }
            if (descended) continue;
            if (lowlink[v] == index[v]) {
                std::vector<int> component;
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                    if (w == v) break;
                }
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const int parent = call_stack.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const AdjacencyMatrix& m) {
    TarjanState t(m);
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (t.index[v] < 0) t.run(static_cast<int>(v));
    }
    return t.components;
}

std::vector<std::vector<int>> nontrivial_components(const AdjacencyMatrix& m) {
    std::vector<std::vector<int>> out;
    for (auto& c : strongly_connected_components(m)) {
        if (c.size() > 1 || m.at(c[0], c[0])) out.push_back(std::move(c));
    }
    return out;
}

Decomposition decompose(const MarkovMultiMap& mm, const AdjacencyMatrix& m) {
    Decomposition out;
    std::vector<char> placed(m.size(), 0);
    for (auto& c : nontrivial_components(m)) {
        bool all_a0 = true, all_a2 = true;
        for (int v : c) {
            placed[v] = 1;
            const SymbolClass cls = mm.symbols[v].cls;
            all_a0 = all_a0 && cls == SymbolClass::A0;
            all_a2 = all_a2 && cls == SymbolClass::A2;
        }
        Component comp;
        comp.symbols = std::move(c);
        comp.kind = all_a0   ? ComponentKind::type_i
                    : all_a2 ? ComponentKind::type_ii
                             : ComponentKind::type_iii;
        out.components.push_back(std::move(comp));
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (!placed[v]) out.wandering.push_back(static_cast<int>(v));
    }
    return out;
}

bool positive_entropy(const AdjacencyMatrix& m, const std::vector<int>& component) {
    if (component.empty()) return false;
    if (component.size() == 1 && !m.at(component[0], component[0])) return false;
    for (int v : component) {
        int out_degree = 0;
        for (int w : component) {
            if (m.at(v, w)) ++out_degree;
        }
        if (out_degree >= 2) return true;
    }
    return false;
}

EntropyResult entropy_of_component(const AdjacencyMatrix& m, const std::vector<int>& component,
                                   double tol, int max_iterations) {
    EntropyResult result;
    result.tol = tol;
    if (!positive_entropy(m, component)) {
        // A single cycle: spectral radius exactly 1, entropy exactly 0.
        return result;
    }
    const std::size_t k = component.size();
    // Power iteration on (M_C + I); the shift makes the matrix primitive, so
    // the Collatz-Wielandt quotients converge from both sides.
    std::vector<double> v(k, 1.0), w(k, 0.0);
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_iterations; ++it) {
        for (std::size_t i = 0; i < k; ++i) {
            double sum = v[i];
            for (std::size_t j = 0; j < k; ++j) {
                if (m.at(component[i], component[j])) sum += v[j];
            }
            w[i] = sum;
        }
        double qmin = std::numeric_limits<double>::infinity(), qmax = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double q = w[i] / v[i];
            qmin = std::min(qmin, q);
            qmax = std::max(qmax, q);
            norm = std::max(norm, w[i]);
        }
        lo = std::max(lo, qmin);
        hi = std::min(hi, qmax);
        result.iterations = it;
        result.residual = hi - lo;
        if (hi - lo < tol) {
            const double rho = (lo + hi) / 2.0 - 1.0;
            result.value = std::log(rho);
            return result;
        }
        for (std::size_t i = 0; i < k; ++i) v[i] = w[i] / norm;
    }
    throw Error(Errc::non_convergence,
                "eigenvalue enclosure stuck at width " + std::to_string(hi - lo) + " after " +
                    std::to_string(max_iterations) + " iterations");
}

EntropyResult entropy(const AdjacencyMatrix& m, double tol, int max_iterations) {
    EntropyResult best;
    best.tol = tol;
    for (const auto& c : nontrivial_components(m)) {
        EntropyResult r = entropy_of_component(m, c, tol, max_iterations);
        if (r.value > best.value) best = r;
    }
    return best;
}

bool is_irreducible(const AdjacencyMatrix& m) {
    if (m.size() == 0) return false;
    const auto sccs = strongly_connected_components(m);
    if (sccs.size() != 1) return false;
    // A lone vertex without a self-loop is not irreducible.
    return m.size() > 1 || m.at(0, 0);
}

std::vector<std::vector<int>> enumerate_words(const AdjacencyMatrix& m,
                                              const std::vector<int>& subset, int length,
                                              std::size_t cap) {
    if (length < 1) throw Error(Errc::bad_input, "word length must be >= 1");
    std::vector<int> symbols = subset;
    std::sort(symbols.begin(), symbols.end());
    std::vector<std::vector<int>> words;
    for (int s : symbols) words.push_back({s});
    for (int step = 1; step < length; ++step) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words) {
            for (int s : symbols) {
                if (!m.at(w.back(), s)) continue;
                if (next.size() >= cap) {
                    throw Error(Errc::explosion_guard,
                                "more than " + std::to_string(cap) + " words of length " +
                                    std::to_string(step + 1));
                }
                auto extended = w;
                extended.push_back(s);
                next.push_back(std::move(extended));
            }
        }
        words = std::move(next);
    }
    if (words.size() > cap) {
        throw Error(Errc::explosion_guard,
                    "more than " + std::to_string(cap) + " words of length " +
                        std::to_string(length));
    }
    return words;
}

std::size_t default_word_cap() {
    if (const char* env = std::getenv("MULTIMAP_WORD_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

}  // namespace markovmm
