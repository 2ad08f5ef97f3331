#ifndef LTC_MINORS_HPP
#define LTC_MINORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltc/graph.hpp"

namespace ltc {

// Witness for pattern-minor containment: one connected branch set per pattern vertex.
struct MinorModel {
    Graph pattern;
    std::vector<VertexSet> branch_sets;  // host vertex ids
};

// Disjointness, per-set connectivity in the host, and host-edge cover of every
// pattern edge. Independent of the search path that produced the model.
bool validate_minor_model(const Graph &host, const MinorModel &m);

std::string minor_model_to_json(const MinorModel &m);

inline constexpr std::uint64_t kDefaultMinorBudget = 10'000'000;

enum class MinorSearchOutcome { Found, NotFound, Exceeded };

struct MinorSearchResult {
    MinorSearchOutcome outcome = MinorSearchOutcome::NotFound;
    std::optional<MinorModel> model;
};

// Exact branch-set search with an expanded-node budget. `Exceeded` means
// unknown, never "no".
MinorSearchResult has_minor(const Graph &host, const Graph &pattern,
                            std::uint64_t budget = kDefaultMinorBudget);

Graph complete_graph(int t);

enum class TriBool { True, False, Unknown };

// t=3: forest test. t=4: series-parallel reduction. t=5: budgeted exact search.
TriBool is_kt_minor_free(const Graph &g, int t, std::uint64_t budget = kDefaultMinorBudget);

struct LocalMinorFreeResult {
    TriBool verdict = TriBool::True;
    std::optional<Vertex> witness;       // minimum vertex whose ball fails (or where budget ran out)
    std::optional<MinorModel> model;     // in host ids, when verdict == False
};

LocalMinorFreeResult is_locally_minor_free(const Graph &g, int t, int radius,
                                           std::uint64_t budget = kDefaultMinorBudget);

struct TreeDecomposition {
    Graph tree;
    std::vector<VertexSet> bags;  // bags[i] belongs to tree vertex i
    int width() const;
};

// The three decomposition axioms plus tree-ness, for the given graph.
bool validate_decomposition(const Graph &g, const TreeDecomposition &td);

// Width-2 decomposition by replaying the series-parallel elimination order;
// nullopt iff g has a K4 minor.
std::optional<TreeDecomposition> tree_decomposition_w2(const Graph &g);

// Pads/interpolates to bags of exactly k+1 vertices with adjacent bags sharing
// exactly k. A decomposition whose graph has at most k+1 vertices collapses to
// a single bag. Throws if td has width > k.
TreeDecomposition make_smooth(const TreeDecomposition &td, int k);

}  // namespace ltc

#endif
