#include "level_rules.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ltc::rules {

Schedule make_schedule(const AlgoParams &params) {
    Schedule s;
    s.r_g = std::max(params.k_base, params.size_cap);
    s.d_c = std::max(1, 2 * params.size_cap - 1);
    s.z = params.cap;
    s.c0 = s.r_g + params.k_base + 2;
    s.f0 = s.c0 + (s.z + 1) * s.d_c;
    s.t_level = s.f0 + 1;
    return s;
}

void validate_inputs(const Graph &g, const ListAssignment &lists, const AlgoParams &params) {
    if (params.c < 1) throw std::invalid_argument("c must be positive");
    if (params.cap < 1) throw std::invalid_argument("cap must be positive");
    if (params.size_cap < 1 || params.size_cap > params.cap)
        throw std::invalid_argument("size_cap must be in [1, cap]");
    if (params.k_base < 1) throw std::invalid_argument("k_base must be positive");
    if (params.max_levels < 1) throw std::invalid_argument("max_levels must be positive");
    if (static_cast<int>(lists.lists.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment size mismatch");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(lists.lists[v].size()) < params.c)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has fewer than c = " +
                                        std::to_string(params.c) + " colours");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t pocket_key(int level, Vertex seed) {
    return splitmix64(splitmix64(static_cast<std::uint64_t>(level)) ^
                      static_cast<std::uint64_t>(static_cast<std::uint32_t>(seed)));
}

bool key_less(std::uint64_t ka, Vertex sa, std::uint64_t kb, Vertex sb) {
    if (ka != kb) return ka < kb;
    return sa < sb;
}

CandStatus conflict_update(const Cand &self, CandStatus current,
                           const std::vector<const Cand *> &touchers,
                           const std::function<CandStatus(Vertex)> &known) {
    if (current != CandStatus::Available) return current;
    for (const Cand *q : touchers)
        if (known(q->seed) == CandStatus::Survivor) return CandStatus::Blocked;
    for (const Cand *q : touchers)
        if (known(q->seed) == CandStatus::Available &&
            !key_less(self.key, self.seed, q->key, q->seed))
            return CandStatus::Available;
    return CandStatus::Survivor;
}

std::vector<int> resolve_conflicts(const std::vector<Cand> &cands,
                                   const std::vector<std::vector<int>> &touch, int z) {
    const int m = static_cast<int>(cands.size());
    std::vector<CandStatus> status(m, CandStatus::Available);
    std::vector<int> klass(m, 0);
    for (int i = 1; i <= z; ++i) {
        // `snapshot` is what every node's broadcast from the previous round
        // conveys; all round-i updates read it, none see each other.
        std::vector<CandStatus> snapshot = status;
        for (int p = 0; p < m; ++p) {
            if (status[p] != CandStatus::Available) continue;
            std::vector<const Cand *> touchers;
            touchers.reserve(touch[p].size());
            for (int q : touch[p]) touchers.push_back(&cands[q]);
            // map seed -> snapshot status for this candidate's touchers
            auto lookup = [&](Vertex seed) {
                for (int q : touch[p])
                    if (cands[q].seed == seed) return snapshot[q];
                return CandStatus::Available;
            };
            CandStatus next = conflict_update(cands[p], status[p], touchers, lookup);
            if (next == CandStatus::Survivor) klass[p] = i;
            status[p] = next;
        }
    }
    return klass;
}

std::vector<LevelRecord> build_records(const std::vector<VertexFate> &fates, int n,
                                       const Schedule &schedule) {
    int last = 0;
    for (const VertexFate &f : fates) last = std::max(last, f.level);
    std::vector<LevelRecord> records(last);
    for (int l = 1; l <= last; ++l) {
        records[l - 1].level = l;
        records[l - 1].rounds = schedule.t_level;
    }
    std::vector<std::vector<Vertex>> seeds(last);
    std::vector<std::vector<char>> classes(last);
    for (const VertexFate &f : fates) {
        if (f.level < 1) throw std::logic_error("vertex without a fate");
        LevelRecord &r = records[f.level - 1];
        ++r.removed;
        if (f.kind == FateKind::Pocket) {
            seeds[f.level - 1].push_back(f.seed);
            if (static_cast<int>(classes[f.level - 1].size()) < f.klass)
                classes[f.level - 1].resize(f.klass, 0);
            classes[f.level - 1][f.klass - 1] = 1;
        }
    }
    int remaining = n;
    for (int l = 1; l <= last; ++l) {
        LevelRecord &r = records[l - 1];
        r.remaining = remaining;
        remaining -= r.removed;
        auto &s = seeds[l - 1];
        std::sort(s.begin(), s.end());
        r.pockets = static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
        r.classes = static_cast<int>(std::count(classes[l - 1].begin(), classes[l - 1].end(), 1));
    }
    if (remaining != 0) throw std::logic_error("fates do not cover the graph");
    return records;
}

std::vector<std::string> progress_warnings(const std::vector<LevelRecord> &levels, int cap) {
    std::vector<std::string> out;
    for (const LevelRecord &r : levels) {
        // removed / remaining < 1 / (2 * cap), compared exactly
        if (static_cast<long long>(r.removed) * 2 * cap < r.remaining)
            out.push_back("level " + std::to_string(r.level) + " removed " +
                          std::to_string(r.removed) + " of " + std::to_string(r.remaining) +
                          " vertices, below the 1/" + std::to_string(2 * cap) +
                          " progress floor");
    }
    return out;
}

}  // namespace ltc::rules
