#ifndef LTC_ALGORITHM_HPP
#define LTC_ALGORITHM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ltc/deletability.hpp"
#include "ltc/graph.hpp"
#include "ltc/sim.hpp"

namespace ltc {

struct AlgoParams {
    int c = 0;         // required list size / colours available to the budget
    int cap = 0;       // pocket degree cap; also the number of conflict rounds
    int size_cap = 0;  // pocket size cap, at most cap
    int k_base = 5;    // base case fires for components of radius < k_base
    int max_levels = 200;
    int exact_cap = kDefaultExactCap;
};

// Tuned defaults for K_t-minor-free inputs, t in {3,4,5}.
AlgoParams params_for_t(int t);

struct LevelRecord {
    int level = 0;
    int remaining = 0;  // vertices alive when the level starts
    int removed = 0;    // vertices leaving this level (pockets plus base components)
    int pockets = 0;    // surviving pockets
    int classes = 0;    // distinct contact classes among the survivors
    int rounds = 0;     // fixed per-level round cost of the schedule
    bool operator==(const LevelRecord &) const = default;
};

// How a vertex left the remaining graph.
enum class FateKind : std::uint8_t { Pocket = 0, Base = 1 };

struct VertexFate {
    int level = 0;
    FateKind kind = FateKind::Base;
    int klass = 0;    // conflict round that selected the pocket; 0 for base
    Vertex seed = -1;  // pocket seed; -1 for base
    bool operator==(const VertexFate &) const = default;
};

struct AlgoOutcome {
    Colouring colouring;
    std::vector<LevelRecord> levels;
    std::vector<VertexFate> fates;  // one per vertex
    std::vector<std::string> warnings;
};

struct DistOutcome {
    AlgoOutcome outcome;
    SimTrace trace;
};

// Centralised mirror of the distributed protocol: same pockets, same classes,
// same colours, same level records.
AlgoOutcome sequential_reference_colour(const Graph &g, const ListAssignment &lists,
                                        const AlgoParams &params);

// Runs the node program under the round simulator; always self-verifies.
DistOutcome distributed_list_colour(const Graph &g, const ListAssignment &lists,
                                    const AlgoParams &params);

std::string stats_to_json(const std::vector<LevelRecord> &levels, int rounds, bool verified);

// Deterministic colouring of a pocket-contact overlay from unique 64-bit ids:
// polynomial palette shrinking followed by one-class-a-round greedy reduction
// to at most max_degree + 1 colours.
struct ContactColouring {
    std::vector<int> colour;
    int overlay_rounds = 0;
};

ContactColouring contact_graph_colouring(const Graph &contact, const std::vector<std::uint64_t> &ids,
                                         int max_degree);

}  // namespace ltc

#endif
