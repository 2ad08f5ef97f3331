#ifndef LTC_DELETABILITY_HPP
#define LTC_DELETABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ltc/graph.hpp"

namespace ltc {

// Colour budget f(v) = c - (d_G(v) - d_{G[S]}(v)) for each v of a candidate set,
// in the order of the (sorted) set.
struct DegreeBudget {
    std::vector<int> f;
    bool feasible = true;  // false iff some f(v) <= 0
};

enum class DeletableDecision { Yes, No, Unknown };
enum class DeletableMethod { Infeasible, Degeneracy, Gallai, Exact, BudgetExceeded };

struct DeletabilityVerdict {
    DeletableDecision decision = DeletableDecision::Unknown;
    DeletableMethod method = DeletableMethod::BudgetExceeded;
    // Yes via Degeneracy: elimination order over the set's local indices.
    std::vector<int> elimination_order;
    // No: a list assignment of the induced subgraph that is not colourable.
    std::optional<ListAssignment> failing_assignment;
};

DegreeBudget list_budget(const Graph &g, const VertexSet &s, int c);

inline constexpr int kDefaultExactCap = 6;

// Exact f-choosability by enumeration of all list assignments with |L(v)| = f(v),
// canonicalized up to colour permutation. Refuses graphs above exact_cap.
// On false, *failing holds a witness assignment.
bool choosable_exact(const Graph &h, const std::vector<int> &f,
                     std::optional<ListAssignment> *failing = nullptr,
                     int exact_cap = kDefaultExactCap);

// Sufficient-only check: f-degeneracy elimination, with stalled remainders
// accepted when every component is degree-tight and not a Gallai tree.
struct SufficientResult {
    std::vector<int> elimination_order;  // stalled vertices omitted
    bool used_gallai = false;
};
std::optional<SufficientResult> choosable_sufficient(const Graph &h, const std::vector<int> &f);

// Connected graph whose blocks are all cliques or odd cycles.
bool is_gallai_tree(const Graph &h);

DeletabilityVerdict is_deletable(const Graph &g, const VertexSet &s, int c,
                                 int exact_cap = kDefaultExactCap);

// First (by size, then lexicographic sorted ids) connected set containing v of size
// <= size_cap that is a cap-pocket with deletability verdict Yes. `degrees`, when
// given, replaces g's degrees in the cap admission test; callers holding a partial
// view of a host graph use it so fringe vertices are judged by their true degree.
std::optional<VertexSet> find_deletable_pocket(const Graph &g, Vertex v, int cap, int c,
                                               int size_cap, int exact_cap = kDefaultExactCap,
                                               const std::vector<int> *degrees = nullptr);

// Like find_deletable_pocket but seeded from every vertex outside x, candidates
// avoid x, and no host-degree cap applies.
std::optional<VertexSet> find_deletable_disjoint_from(const Graph &g, const VertexSet &x, int c,
                                                      int size_cap,
                                                      int exact_cap = kDefaultExactCap);

// Backtracking extension of phi into s; phi entries outside s constrain lists.
std::optional<Colouring> extend_into(const Graph &g, const VertexSet &s, const Colouring &phi,
                                     const ListAssignment &l);

std::optional<Colouring> list_colour_exhaustive(const Graph &g, const ListAssignment &l);

struct ChromaticResult {
    bool exceeded = false;
    int chi = 0;
};

ChromaticResult chromatic_number_exact(const Graph &g, int limit);

std::string verdict_to_json(const DeletabilityVerdict &v);

}  // namespace ltc

#endif
