#ifndef LTC_LEVEL_RULES_HPP
#define LTC_LEVEL_RULES_HPP

// Rules shared verbatim by the sequential reference and the distributed node
// program. Anything that influences which pockets form, which survive, or
// which colours get picked lives here so the two implementations cannot drift.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ltc/algorithm.hpp"
#include "ltc/graph.hpp"

namespace ltc::rules {

// Fixed per-level round schedule (1-based offsets within a level). Pocket
// members always have active degree <= cap, so every flood below travels only
// between low-degree nodes: high-degree nodes neither inject nor relay, which
// keeps gathered views small no matter how dense the neighbourhood is.
//   1                     degree exchange: every active node tells its active
//                         neighbours its active degree
//   2 .. r_g+1            gather: low-degree nodes flood (id, list, active
//                         neighbours with degree flags) descriptors; radius-r_g
//                         knowledge in the low-degree subgraph after the step
//                         at offset r_g+2
//   r_g+2                 base detection: a node seeing its whole component,
//                         all of it low-degree, solves it and starts flooding
//                         the solution
//   r_g+3 .. c0-1         base solution flood window
//   c0 = r_g+k_base+2     candidates: low-degree nodes search for a deletable
//                         pocket and flood (seed, key, set)
//   m(i) = c0 + i*d_c     conflict round i of z: status updates + flood
//   f0 = m(z) + d_c       survivors' members leave; removal announcements
//   f0 + 1 = t_level      active nodes digest removals; level ends
struct Schedule {
    int r_g = 0;
    int d_c = 0;
    int z = 0;
    int c0 = 0;
    int f0 = 0;
    int t_level = 0;
    int m(int i) const { return c0 + i * d_c; }
};

Schedule make_schedule(const AlgoParams &params);

// Validates parameter sanity and that every list has at least c colours.
void validate_inputs(const Graph &g, const ListAssignment &lists, const AlgoParams &params);

std::uint64_t pocket_key(int level, Vertex seed);

// Strict total order on candidates: by key, seed breaking (theoretical) ties.
bool key_less(std::uint64_t ka, Vertex sa, std::uint64_t kb, Vertex sb);

struct Cand {
    Vertex seed = -1;
    VertexSet set;
    std::uint64_t key = 0;
};

enum class CandStatus : std::uint8_t { Available = 0, Survivor = 1, Blocked = 2 };

// One conflict-round update for a single candidate, exactly as a node computes
// it from its neighbours' last broadcast statuses: block if a known survivor
// touches it, survive if its key is minimal among touchers still believed
// available. Returns the new status.
CandStatus conflict_update(const Cand &self, CandStatus current,
                           const std::vector<const Cand *> &touchers,
                           const std::function<CandStatus(Vertex)> &known);

// Full z-round automaton over all candidates; returns the class (conflict
// round of survival) per candidate, 0 for non-survivors. touch[i] lists the
// indices of candidates touching candidate i.
std::vector<int> resolve_conflicts(const std::vector<Cand> &cands,
                                   const std::vector<std::vector<int>> &touch, int z);

std::vector<LevelRecord> build_records(const std::vector<VertexFate> &fates, int n,
                                       const Schedule &schedule);

// One warning per level whose progress fraction falls below 1/(2*cap).
std::vector<std::string> progress_warnings(const std::vector<LevelRecord> &levels, int cap);

}  // namespace ltc::rules

#endif
