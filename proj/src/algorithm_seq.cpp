#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <queue>
#include <stdexcept>

#include "level_rules.hpp"
#include "ltc/algorithm.hpp"

namespace ltc {

AlgoParams params_for_t(int t) {
    AlgoParams p;
    switch (t) {
        case 3: p.c = 3, p.cap = 3, p.size_cap = 1; break;
        case 4: p.c = 4, p.cap = 4, p.size_cap = 4; break;
        case 5: p.c = 5, p.cap = 5, p.size_cap = 5; break;
        default: throw std::invalid_argument("t must be 3, 4 or 5");
    }
    return p;
}

namespace {

// eccentricity of `start` in its component of g, by BFS
int eccentricity(const Graph &g, Vertex start) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[start] = 0;
    q.push(start);
    int ecc = 0;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        ecc = dist[v];
        for (Vertex w : g.neighbours(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return ecc;
}

// Base case: the component is low-degree throughout and some vertex sees all
// of it within k_base - 1 hops. The degree bound mirrors the distributed side,
// where descriptors only travel between low-degree nodes.
// Cheap pre-filter: radius <= k_base - 1 forces every eccentricity <= 2(k_base - 1).
bool component_is_base(const Graph &local, const VertexSet &comp, int k_base, int cap) {
    for (Vertex v : comp)
        if (local.degree(v) > cap) return false;
    if (eccentricity(local, comp.front()) > 2 * (k_base - 1)) return false;
    for (Vertex v : comp)
        if (eccentricity(local, v) <= k_base - 1) return true;
    return false;
}

struct Survivor {
    int level;
    int klass;
    Vertex seed;
    VertexSet set;  // host ids
};

}  // namespace

AlgoOutcome sequential_reference_colour(const Graph &g, const ListAssignment &lists,
                                        const AlgoParams &params) {
    rules::validate_inputs(g, lists, params);
    const rules::Schedule schedule = rules::make_schedule(params);
    const int n = g.vertex_count();

    AlgoOutcome out;
    out.colouring.colour.assign(n, -1);
    out.fates.assign(n, VertexFate{});
    std::vector<Survivor> survivors;

    VertexSet active(n);
    for (Vertex v = 0; v < n; ++v) active[v] = v;
    int zero_streak = 0;

    for (int level = 1; !active.empty(); ++level) {
        if (level > params.max_levels)
            throw std::runtime_error("level budget exhausted at level " + std::to_string(level));

        Graph local = g.induced(active);
        const int na = static_cast<int>(active.size());
        ListAssignment local_lists;
        local_lists.universe = lists.universe;
        local_lists.lists.resize(na);
        for (int i = 0; i < na; ++i) local_lists.lists[i] = lists.lists[active[i]];

        int removed_here = 0;
        std::vector<char> leaving(na, 0);

        // base components: solved in place, unconstrained by the rest
        for (const VertexSet &comp : local.components()) {
            if (!component_is_base(local, comp, params.k_base, params.cap)) continue;
            Graph comp_graph = local.induced(comp);
            ListAssignment comp_lists;
            comp_lists.universe = lists.universe;
            for (Vertex i : comp) comp_lists.lists.push_back(local_lists.lists[i]);
            auto phi = list_colour_exhaustive(comp_graph, comp_lists);
            if (!phi)
                throw std::runtime_error("base component at level " + std::to_string(level) +
                                         " is not list-colourable");
            for (size_t i = 0; i < comp.size(); ++i) {
                Vertex host = active[comp[i]];
                out.colouring.colour[host] = phi->colour[i];
                out.fates[host] = {level, FateKind::Base, 0, -1};
                leaving[comp[i]] = 1;
                ++removed_here;
            }
        }

        // candidate pockets at low-degree vertices
        std::vector<rules::Cand> cands;
        for (int i = 0; i < na; ++i) {
            if (leaving[i] || local.degree(i) > params.cap) continue;
            auto pocket = find_deletable_pocket(local, i, params.cap, params.c, params.size_cap,
                                                params.exact_cap);
            if (!pocket) continue;
            rules::Cand cand;
            cand.seed = active[i];
            cand.set = *pocket;  // local ids for now
            cand.key = rules::pocket_key(level, cand.seed);
            cands.push_back(std::move(cand));
        }

        // contact relation: shared vertex or a joining edge
        std::vector<std::vector<int>> cover(na);
        for (size_t p = 0; p < cands.size(); ++p)
            for (Vertex v : cands[p].set) cover[v].push_back(static_cast<int>(p));
        std::vector<std::vector<int>> touch(cands.size());
        for (size_t p = 0; p < cands.size(); ++p) {
            std::vector<char> seen(cands.size(), 0);
            seen[p] = 1;
            auto add = [&](int q) {
                if (!seen[q]) {
                    seen[q] = 1;
                    touch[p].push_back(q);
                }
            };
            for (Vertex v : cands[p].set) {
                for (int q : cover[v]) add(q);
                for (Vertex w : local.neighbours(v))
                    for (int q : cover[w]) add(q);
            }
            std::sort(touch[p].begin(), touch[p].end());
        }

        std::vector<int> klass = rules::resolve_conflicts(cands, touch, schedule.z);
        for (size_t p = 0; p < cands.size(); ++p) {
            if (klass[p] == 0) continue;
            Survivor s;
            s.level = level;
            s.klass = klass[p];
            s.seed = cands[p].seed;
            for (Vertex v : cands[p].set) {
                s.set.push_back(active[v]);
                out.fates[active[v]] = {level, FateKind::Pocket, klass[p], s.seed};
                leaving[v] = 1;
                ++removed_here;
            }
            survivors.push_back(std::move(s));
        }

        zero_streak = removed_here == 0 ? zero_streak + 1 : 0;
        if (zero_streak == 2)
            throw std::runtime_error("no progress for two consecutive levels, aborting at level " +
                                     std::to_string(level));

        VertexSet next;
        next.reserve(na - removed_here);
        for (int i = 0; i < na; ++i)
            if (!leaving[i]) next.push_back(active[i]);
        active = std::move(next);
    }

    // unwind: later levels first, classes in conflict-round order
    std::sort(survivors.begin(), survivors.end(), [](const Survivor &a, const Survivor &b) {
        if (a.level != b.level) return a.level > b.level;
        if (a.klass != b.klass) return a.klass < b.klass;
        return a.seed < b.seed;
    });
    for (const Survivor &s : survivors) {
        auto extended = extend_into(g, s.set, out.colouring, lists);
        if (!extended) throw std::logic_error("deletable pocket failed to extend");
        out.colouring = std::move(*extended);
    }

    auto verdict = verify_colouring(g, out.colouring, &lists);
    if (!verdict.ok) throw std::logic_error("reference colouring failed self-verification");

    out.levels = rules::build_records(out.fates, n, schedule);
    out.warnings = rules::progress_warnings(out.levels, params.cap);
    return out;
}

std::string stats_to_json(const std::vector<LevelRecord> &levels, int rounds, bool verified) {
    nlohmann::json j;
    j["rounds"] = rounds;
    j["levels"] = nlohmann::json::array();
    for (const LevelRecord &r : levels)
        j["levels"].push_back({{"level", r.level},
                               {"remaining", r.remaining},
                               {"removed", r.removed},
                               {"pockets", r.pockets},
                               {"classes", r.classes},
                               {"rounds", r.rounds}});
    j["verified"] = verified;
    return j.dump();
}

namespace {

std::uint64_t next_prime(std::uint64_t x) {
    auto is_prime = [](std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    while (!is_prime(x)) ++x;
    return x;
}

// smallest prime q > d * delta with q^(d+1) >= m (m == 0 encodes 2^64)
bool q_feasible(std::uint64_t q, int d, std::uint64_t m) {
    long double need = m == 0 ? 64.0L : std::log2(static_cast<long double>(m));
    return (d + 1) * std::log2(static_cast<long double>(q)) >= need;
}

}  // namespace

ContactColouring contact_graph_colouring(const Graph &contact,
                                         const std::vector<std::uint64_t> &ids, int max_degree) {
    const int n = contact.vertex_count();
    if (static_cast<int>(ids.size()) != n) throw std::invalid_argument("one id per pocket required");
    {
        std::vector<std::uint64_t> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("pocket ids must be distinct");
    }
    int delta = max_degree;
    if (delta < 0)
        for (Vertex v = 0; v < n; ++v) delta = std::max(delta, contact.degree(v));
    for (Vertex v = 0; v < n; ++v)
        if (contact.degree(v) > delta) throw std::invalid_argument("degree bound violated");

    ContactColouring result;
    result.colour.assign(n, 0);
    if (n == 0) return result;
    if (delta == 0) return result;  // no edges: everyone takes colour 0 at once

    std::vector<std::uint64_t> cur = ids;
    std::uint64_t m = 0;  // palette bound; 0 encodes 2^64 for the raw ids

    // polynomial palette shrinking: colour -> (evaluation point, value)
    while (true) {
        int d = 1;
        std::uint64_t q = next_prime(static_cast<std::uint64_t>(d) * delta + 1);
        while (!q_feasible(q, d, m)) {
            ++d;
            q = next_prime(static_cast<std::uint64_t>(d) * delta + 1);
        }
        if (m != 0 && q * q >= m) break;  // no further shrink possible
        std::vector<std::uint64_t> next(n);
        for (Vertex v = 0; v < n; ++v) {
            // base-q digits of the current colour are the coefficients
            auto eval = [&](std::uint64_t colour, std::uint64_t e) {
                std::uint64_t value = 0, power = 1;
                for (int j = 0; j <= d; ++j) {
                    value = (value + (colour % q) * power) % q;
                    colour /= q;
                    power = power * e % q;
                }
                return value;
            };
            std::uint64_t e = 0;
            for (; e < q; ++e) {
                bool clash = false;
                for (Vertex u : contact.neighbours(v))
                    if (eval(cur[v], e) == eval(cur[u], e)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (e == q) throw std::logic_error("no safe evaluation point");
            next[v] = e * q + eval(cur[v], e);
        }
        cur = std::move(next);
        m = q * q;
        ++result.overlay_rounds;
    }

    // greedy reduction: one colour class per round, highest class first
    for (std::uint64_t k = m; k-- > static_cast<std::uint64_t>(delta) + 1;) {
        ++result.overlay_rounds;
        for (Vertex v = 0; v < n; ++v) {
            if (cur[v] != k) continue;
            std::vector<char> used(delta + 1, 0);
            for (Vertex u : contact.neighbours(v))
                if (cur[u] <= static_cast<std::uint64_t>(delta)) used[cur[u]] = 1;
            std::uint64_t pick = 0;
            while (used[pick]) ++pick;
            cur[v] = pick;
        }
    }

    for (Vertex v = 0; v < n; ++v) result.colour[v] = static_cast<int>(cur[v]);
    for (auto [a, b] : contact.edges())
        if (result.colour[a] == result.colour[b]) throw std::logic_error("improper contact colouring");
    return result;
}

}  // namespace ltc
