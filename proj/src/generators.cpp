#include "ltc/generators.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace ltc {

Graph necklace(int t, int n) {
    if (t < 3 || n < 1) throw std::invalid_argument("necklace requires t >= 3, n >= 1");
    // copy i (0-based) occupies ids i(t-1) .. i(t-1)+t-1; the first id is the
    // b endpoint, the last the a endpoint shared with the next copy
    std::set<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i) {
        int base = i * (t - 1);
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) {
                if (a == 0 && b == t - 1) continue;  // the missing H_t edge
                es.insert({base + a, base + b});
            }
    }
    es.insert({0, n * (t - 1)});  // close the necklace at the free endpoints
    return Graph(n * (t - 1) + 1, {es.begin(), es.end()});
}

Graph wagner_v8() {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < 8; ++i) es.push_back({i, (i + 1) % 8});
    for (int i = 0; i < 4; ++i) es.push_back({i, i + 4});
    return Graph(8, es);
}

Graph series_parallel_random(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("series_parallel_random requires n >= 2");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}};
    int count = 2;
    while (count < n) {
        size_t e = rng.below(edges.size());
        auto [u, v] = edges[e];
        Vertex w = count++;
        if (rng.below(2) == 0) {
            // subdivide uv
            edges[e] = {u, w};
            edges.push_back({w, v});
        } else {
            // parallel path of length 2 alongside uv
            edges.push_back({u, w});
            edges.push_back({w, v});
        }
    }
    return Graph(n, edges);
}

Graph planar_triangulation_random(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("planar_triangulation_random requires n >= 3");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};  // both sides of the triangle
    for (Vertex v = 3; v < n; ++v) {
        size_t f = rng.below(faces.size());
        auto [a, b, c] = faces[f];
        edges.push_back({a, v});
        edges.push_back({b, v});
        edges.push_back({c, v});
        faces[f] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    return Graph(n, edges);
}

namespace {

bool is_clique(const Graph &g, const VertexSet &k) {
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = i + 1; j < k.size(); ++j)
            if (!g.has_edge(k[i], k[j])) return false;
    return true;
}

}  // namespace

Graph clique_sum(const Graph &g1, const VertexSet &k1, const Graph &g2, const VertexSet &k2,
                 const std::vector<std::pair<int, int>> &drop) {
    if (k1.size() != k2.size()) throw std::invalid_argument("clique size mismatch");
    if (k1.empty()) throw std::invalid_argument("empty clique");
    if (!is_clique(g1, k1) || !is_clique(g2, k2)) throw std::invalid_argument("non-clique inputs");
    const int n1 = g1.vertex_count();
    // map g2 ids: clique vertices onto k1 (sorted pairing), the rest appended
    std::vector<int> map2(g2.vertex_count(), -1);
    for (size_t i = 0; i < k2.size(); ++i) map2[k2[i]] = k1[i];
    int next = n1;
    for (Vertex v = 0; v < g2.vertex_count(); ++v)
        if (map2[v] < 0) map2[v] = next++;
    std::set<std::pair<Vertex, Vertex>> es;
    for (auto [u, v] : g1.edges()) es.insert({u, v});
    for (auto [u, v] : g2.edges()) {
        Vertex a = map2[u], b = map2[v];
        if (a > b) std::swap(a, b);
        es.insert({a, b});
    }
    for (auto [i, j] : drop) {
        if (i < 0 || j < 0 || i >= static_cast<int>(k1.size()) || j >= static_cast<int>(k1.size()) || i == j)
            throw std::invalid_argument("bad drop index");
        Vertex a = k1[i], b = k1[j];
        if (a > b) std::swap(a, b);
        es.erase({a, b});
    }
    return Graph(next, {es.begin(), es.end()});
}

namespace {

// random clique of the requested size, shrinking the request when none is found
VertexSet pick_clique(const Graph &g, int want, Rng &rng) {
    if (want >= 3) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            if (g.edge_count() == 0) break;
            auto [u, v] = g.edges()[rng.below(g.edges().size())];
            VertexSet common;
            for (Vertex w : g.neighbours(u))
                if (w != v && g.has_edge(v, w)) common.push_back(w);
            if (!common.empty())
                return make_vertex_set({u, v, common[rng.below(common.size())]});
        }
        want = 2;
    }
    if (want == 2) {
        if (g.edge_count() > 0) {
            auto [u, v] = g.edges()[rng.below(g.edges().size())];
            return {u, v};
        }
        want = 1;
    }
    return {static_cast<Vertex>(rng.below(g.vertex_count()))};
}

}  // namespace

Graph wagner_composition_random(int blocks, int n_per_block, std::uint64_t seed) {
    if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
    if (n_per_block < 3) throw std::invalid_argument("n_per_block must be >= 3");
    Rng rng(seed);
    auto make_block = [&]() {
        if (rng.below(4) == 0) return wagner_v8();
        return planar_triangulation_random(n_per_block, rng.next());
    };
    Graph g = make_block();
    for (int b = 1; b < blocks; ++b) {
        Graph block = make_block();
        int arity = 1 + static_cast<int>(rng.below(3));
        VertexSet kb = pick_clique(block, arity, rng);
        VertexSet kg = pick_clique(g, static_cast<int>(kb.size()), rng);
        while (kg.size() < kb.size()) kb.pop_back();  // V8 host has no triangles
        while (kb.size() < kg.size()) kg.pop_back();
        std::vector<std::pair<int, int>> drop;
        for (size_t i = 0; i < kg.size(); ++i)
            for (size_t j = i + 1; j < kg.size(); ++j)
                if (rng.chance(0.25)) drop.push_back({static_cast<int>(i), static_cast<int>(j)});
        g = clique_sum(g, kg, block, kb, drop);
    }
    return g;
}

ListAssignment random_lists(const Graph &g, int size, int universe, std::uint64_t seed) {
    if (size < 1 || size > universe) throw std::invalid_argument("need 1 <= size <= universe");
    Rng rng(seed);
    ListAssignment l;
    l.universe = universe;
    l.lists.resize(g.vertex_count());
    std::vector<int> pool(universe);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (int c = 0; c < universe; ++c) pool[c] = c;
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng.below(universe - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> lst(pool.begin(), pool.begin() + size);
        std::sort(lst.begin(), lst.end());
        l.lists[v] = std::move(lst);
    }
    return l;
}

}  // namespace ltc
