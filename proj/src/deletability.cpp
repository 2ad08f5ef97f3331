#include "ltc/deletability.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <nlohmann/json.hpp>

namespace ltc {

DegreeBudget list_budget(const Graph &g, const VertexSet &s, int c) {
    if (s.empty()) throw std::invalid_argument("empty set");
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    DegreeBudget b;
    b.f.reserve(s.size());
    for (Vertex v : s) {
        int internal = 0;
        for (Vertex w : g.neighbours(v))
            if (in[w]) ++internal;
        int fv = c - (g.degree(v) - internal);
        b.f.push_back(fv);
        if (fv <= 0) b.feasible = false;
    }
    return b;
}

namespace {

// Backtracking list colouring with smallest-remaining-list ordering and forward
// checking. `fixed` pins a vertex's colour before search (-1 = free).
std::optional<Colouring> solve_lists(const Graph &g, std::vector<std::vector<int>> lists) {
    const int n = g.vertex_count();
    Colouring phi;
    phi.colour.assign(n, -1);
    if (n == 0) return phi;

    struct Frame {
        Vertex v;
        std::vector<std::pair<Vertex, int>> removed;  // forward-checking undo log
    };

    std::vector<Frame> stack;
    std::vector<int> choice(n, -1);  // index into lists[v] of the colour tried

    auto pick = [&]() -> Vertex {
        Vertex best = -1;
        size_t best_size = SIZE_MAX;
        for (Vertex v = 0; v < n; ++v)
            if (phi.colour[v] < 0 && lists[v].size() < best_size) {
                best = v;
                best_size = lists[v].size();
            }
        return best;
    };

    Vertex v = pick();
    if (v < 0) return phi;
    stack.push_back({v, {}});
    while (!stack.empty()) {
        Frame &fr = stack.back();
        Vertex u = fr.v;
        // undo previous attempt at this frame
        for (auto [w, c] : fr.removed) lists[w].insert(std::lower_bound(lists[w].begin(), lists[w].end(), c), c);
        fr.removed.clear();
        ++choice[u];
        if (choice[u] >= static_cast<int>(lists[u].size())) {
            choice[u] = -1;
            phi.colour[u] = -1;
            stack.pop_back();
            continue;
        }
        int c = lists[u][choice[u]];
        phi.colour[u] = c;
        bool dead = false;
        for (Vertex w : g.neighbours(u)) {
            if (phi.colour[w] >= 0) {
                if (phi.colour[w] == c) { dead = true; break; }
                continue;
            }
            auto it = std::lower_bound(lists[w].begin(), lists[w].end(), c);
            if (it != lists[w].end() && *it == c) {
                lists[w].erase(it);
                fr.removed.push_back({w, c});
                if (lists[w].empty()) { dead = true; break; }
            }
        }
        if (dead) continue;
        Vertex next = pick();
        if (next < 0) return phi;
        stack.push_back({next, {}});
    }
    return std::nullopt;
}

}  // namespace

std::optional<Colouring> list_colour_exhaustive(const Graph &g, const ListAssignment &l) {
    if (static_cast<int>(l.lists.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment size mismatch");
    return solve_lists(g, l.lists);
}

namespace {

// Enumerates canonical list assignments (up to colour permutation) with
// |L(v)| = f(v), invoking `test` on each; stops early when `test` returns false.
bool for_each_canonical_assignment(const std::vector<int> &f,
                                   const std::function<bool(const std::vector<std::vector<int>> &)> &test) {
    const int n = static_cast<int>(f.size());
    std::vector<std::vector<int>> lists(n);
    // choose(v, used): lists[0..v) fixed, `used` distinct colours so far.
    std::function<bool(int, int)> choose = [&](int v, int used) -> bool {
        if (v == n) return test(lists);
        const int fv = f[v];
        // j new colours (forced to be used..used+j-1), fv-j old colours.
        for (int j = 0; j <= fv; ++j) {
            int old_needed = fv - j;
            if (old_needed > used) continue;
            // iterate over old-colour subsets of size old_needed from {0..used-1}
            std::vector<int> subset(old_needed);
            std::function<bool(int, int)> pick_old = [&](int idx, int start) -> bool {
                if (idx == old_needed) {
                    lists[v].assign(subset.begin(), subset.end());
                    for (int k = 0; k < j; ++k) lists[v].push_back(used + k);
                    return choose(v + 1, used + j);
                }
                for (int c = start; c < used; ++c) {
                    subset[idx] = c;
                    if (!pick_old(idx + 1, c + 1)) return false;
                }
                return true;
            };
            if (!pick_old(0, 0)) return false;
        }
        return true;
    };
    return choose(0, 0);
}

}  // namespace

bool choosable_exact(const Graph &h, const std::vector<int> &f,
                     std::optional<ListAssignment> *failing, int exact_cap) {
    const int n = h.vertex_count();
    if (n > exact_cap) throw std::invalid_argument("graph exceeds exact choosability cap");
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("budget size mismatch");
    for (int fv : f)
        if (fv < 1) throw std::invalid_argument("all budgets must be >= 1");
    // kernelize: a vertex with budget above its current degree colours last
    // whatever its list, so it never witnesses a failure
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = h.degree(v);
    std::vector<char> gone(n, 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && f[v] > deg[v]) {
                gone[v] = 1;
                for (Vertex w : h.neighbours(v))
                    if (!gone[w]) --deg[w];
                progress = true;
            }
    }
    VertexSet kernel;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) kernel.push_back(v);
    if (kernel.empty()) return true;
    Graph hk = h.induced(kernel);
    std::vector<int> fk;
    for (Vertex v : kernel) fk.push_back(f[v]);
    int universe = 0;
    for (int fv : fk) universe += fv;
    bool ok = for_each_canonical_assignment(fk, [&](const std::vector<std::vector<int>> &lists) {
        if (solve_lists(hk, lists)) return true;
        if (failing) {
            // removed vertices take disjoint fresh colours; the kernel still blocks
            ListAssignment l;
            l.lists.resize(n);
            for (size_t i = 0; i < kernel.size(); ++i) l.lists[kernel[i]] = lists[i];
            int fresh = universe;
            for (Vertex v = 0; v < n; ++v)
                if (gone[v])
                    for (int k = 0; k < f[v]; ++k) l.lists[v].push_back(fresh++);
            l.universe = fresh;
            *failing = l;
        }
        return false;
    });
    return ok;
}

namespace {

// Biconnected components as edge-partitioned vertex sets.
std::vector<VertexSet> blocks_of(const Graph &g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<VertexSet> blocks;
    int timer = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        for (Vertex w : g.neighbours(v)) {
            if (w == parent) { parent = -2; continue; }  // skip one parent edge only
            if (disc[w] < 0) {
                edge_stack.push_back({v, w});
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::set<Vertex> verts;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        verts.insert(a);
                        verts.insert(b);
                        if (a == v && b == w) break;
                    }
                    blocks.emplace_back(verts.begin(), verts.end());
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back({v, w});
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    return blocks;
}

}  // namespace

bool is_gallai_tree(const Graph &h) {
    if (h.vertex_count() == 0) return true;
    for (const auto &bv : blocks_of(h)) {
        Graph b = h.induced(bv);
        const int bn = b.vertex_count();
        const int be = b.edge_count();
        bool clique = be == bn * (bn - 1) / 2;
        bool odd_cycle = bn >= 3 && bn % 2 == 1 && be == bn;
        if (odd_cycle)
            for (Vertex v = 0; v < bn; ++v)
                if (b.degree(v) != 2) odd_cycle = false;
        if (!clique && !odd_cycle) return false;
    }
    return true;
}

std::optional<SufficientResult> choosable_sufficient(const Graph &h, const std::vector<int> &f) {
    const int n = h.vertex_count();
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("budget size mismatch");
    for (int fv : f)
        if (fv < 1) throw std::invalid_argument("all budgets must be >= 1");
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = h.degree(v);
    std::vector<char> gone(n, 0);
    SufficientResult res;
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!gone[v] && deg[v] < f[v]) {
                gone[v] = 1;
                res.elimination_order.push_back(v);
                for (Vertex w : h.neighbours(v))
                    if (!gone[w]) --deg[w];
                progress = true;
                break;
            }
        }
    }
    VertexSet rest;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) rest.push_back(v);
    if (rest.empty()) return res;
    // Stalled: every remaining vertex has current degree >= f(v). Degree-choosability
    // applies only to components that are degree-tight and not Gallai trees.
    Graph r = h.induced(rest);
    for (int i = 0; i < r.vertex_count(); ++i)
        if (f[rest[i]] != r.degree(i)) return std::nullopt;
    for (const auto &comp : r.components()) {
        if (is_gallai_tree(r.induced(comp))) return std::nullopt;
    }
    res.used_gallai = true;
    return res;
}

DeletabilityVerdict is_deletable(const Graph &g, const VertexSet &s, int c, int exact_cap) {
    DeletabilityVerdict v;
    DegreeBudget b = list_budget(g, s, c);
    Graph h = g.induced(s);
    if (!b.feasible) {
        v.decision = DeletableDecision::No;
        v.method = DeletableMethod::Infeasible;
        ListAssignment l;
        l.lists.resize(s.size());
        int colour = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            for (int k = 0; k < std::max(b.f[i], 0); ++k) l.lists[i].push_back(colour++);
        }
        l.universe = std::max(colour, 1);
        v.failing_assignment = l;
        return v;
    }
    if (auto suff = choosable_sufficient(h, b.f)) {
        v.decision = DeletableDecision::Yes;
        v.method = suff->used_gallai ? DeletableMethod::Gallai : DeletableMethod::Degeneracy;
        v.elimination_order = suff->elimination_order;
        return v;
    }
    if (static_cast<int>(s.size()) <= exact_cap) {
        std::optional<ListAssignment> failing;
        if (choosable_exact(h, b.f, &failing, exact_cap)) {
            v.decision = DeletableDecision::Yes;
            v.method = DeletableMethod::Exact;
        } else {
            v.decision = DeletableDecision::No;
            v.method = DeletableMethod::Exact;
            v.failing_assignment = failing;
        }
        return v;
    }
    v.decision = DeletableDecision::Unknown;
    v.method = DeletableMethod::BudgetExceeded;
    return v;
}

namespace {

// Connected sets containing seed, by layer of increasing size, each layer in
// lexicographic order of sorted ids. `admit` prunes vertices as they are added.
std::optional<VertexSet> first_connected_set(
    const Graph &g, Vertex seed, int size_cap, const std::function<bool(Vertex)> &admit,
    const std::function<bool(const VertexSet &)> &accept) {
    if (!admit(seed)) return std::nullopt;
    std::set<VertexSet> layer{{seed}};
    for (int size = 1; size <= size_cap; ++size) {
        for (const auto &s : layer)
            if (accept(s)) return s;
        if (size == size_cap) break;
        std::set<VertexSet> next;
        for (const auto &s : layer) {
            for (Vertex v : s)
                for (Vertex w : g.neighbours(v)) {
                    if (vertex_set_contains(s, w) || !admit(w)) continue;
                    VertexSet t = s;
                    t.insert(std::lower_bound(t.begin(), t.end(), w), w);
                    next.insert(std::move(t));
                }
        }
        layer = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> find_deletable_pocket(const Graph &g, Vertex v, int cap, int c,
                                               int size_cap, int exact_cap,
                                               const std::vector<int> *degrees) {
    if (size_cap > cap) throw std::invalid_argument("size_cap must be <= cap");
    auto admit = [&](Vertex w) { return (degrees ? (*degrees)[w] : g.degree(w)) <= cap; };
    auto accept = [&](const VertexSet &s) {
        return is_deletable(g, s, c, exact_cap).decision == DeletableDecision::Yes;
    };
    return first_connected_set(g, v, size_cap, admit, accept);
}

std::optional<VertexSet> find_deletable_disjoint_from(const Graph &g, const VertexSet &x, int c,
                                                      int size_cap, int exact_cap) {
    auto admit = [&](Vertex w) { return !vertex_set_contains(x, w); };
    auto accept = [&](const VertexSet &s) {
        return is_deletable(g, s, c, exact_cap).decision == DeletableDecision::Yes;
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (vertex_set_contains(x, v)) continue;
        if (auto s = first_connected_set(g, v, size_cap, admit, accept)) return s;
    }
    return std::nullopt;
}

std::optional<Colouring> extend_into(const Graph &g, const VertexSet &s, const Colouring &phi,
                                     const ListAssignment &l) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    std::vector<std::vector<int>> lists(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        std::vector<int> mine = l.lists[s[i]];
        for (Vertex w : g.neighbours(s[i])) {
            if (in[w] || phi.colour[w] < 0) continue;
            auto it = std::lower_bound(mine.begin(), mine.end(), phi.colour[w]);
            if (it != mine.end() && *it == phi.colour[w]) mine.erase(it);
        }
        lists[i] = std::move(mine);
    }
    Graph h = g.induced(s);
    auto local = solve_lists(h, lists);
    if (!local) return std::nullopt;
    Colouring out = phi;
    if (out.colour.empty()) out.colour.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i) out.colour[s[i]] = local->colour[i];
    return out;
}

ChromaticResult chromatic_number_exact(const Graph &g, int limit) {
    if (g.vertex_count() == 0) return {false, 0};
    for (int k = 1; k <= limit; ++k) {
        ListAssignment l;
        l.universe = k;
        std::vector<int> full(k);
        for (int c = 0; c < k; ++c) full[c] = c;
        l.lists.assign(g.vertex_count(), full);
        l.lists[0] = {0};  // colour-permutation symmetry break
        if (list_colour_exhaustive(g, l)) return {false, k};
    }
    return {true, 0};
}

std::string verdict_to_json(const DeletabilityVerdict &v) {
    nlohmann::json j;
    switch (v.decision) {
        case DeletableDecision::Yes: j["decision"] = "yes"; break;
        case DeletableDecision::No: j["decision"] = "no"; break;
        case DeletableDecision::Unknown: j["decision"] = "unknown"; break;
    }
    switch (v.method) {
        case DeletableMethod::Infeasible: j["method"] = "infeasible"; break;
        case DeletableMethod::Degeneracy: j["method"] = "degeneracy"; break;
        case DeletableMethod::Gallai: j["method"] = "gallai"; break;
        case DeletableMethod::Exact: j["method"] = "exact"; break;
        case DeletableMethod::BudgetExceeded: j["method"] = "budget-exceeded"; break;
    }
    if (!v.elimination_order.empty()) j["elimination_order"] = v.elimination_order;
    if (v.failing_assignment) j["failing_assignment"] = nlohmann::json::parse(lists_to_json(*v.failing_assignment));
    return j.dump();
}

}  // namespace ltc
