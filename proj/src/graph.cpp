#include "ltc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

namespace ltc {

using nlohmann::json;

VertexSet make_vertex_set(std::vector<Vertex> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool vertex_set_contains(const VertexSet &s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>> &edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
        edges_.push_back({u, v});
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto &nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    const auto &nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced(const VertexSet &s) const {
    std::vector<int> local(n_, -1);
    for (size_t i = 0; i < s.size(); ++i) local[check(s[i])] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u : s)
        for (Vertex w : adj_[u])
            if (u < w && local[w] >= 0) es.push_back({local[u], local[w]});
    return Graph(static_cast<int>(s.size()), es);
}

std::vector<std::vector<Vertex>> Graph::induced_adjacency(const VertexSet &s) const {
    std::vector<char> in(n_, 0);
    for (Vertex v : s) in[check(v)] = 1;
    std::vector<std::vector<Vertex>> out(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        for (Vertex w : adj_[s[i]])
            if (in[w]) out[i].push_back(w);
    return out;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<VertexSet> out;
    for (Vertex start = 0; start < n_; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<Vertex> q{start};
        comp[start] = id;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            out[id].push_back(v);
            for (Vertex w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Colouring::total() const {
    for (int c : colour)
        if (c < 0) return false;
    return true;
}

VertexSet ball(const Graph &g, Vertex v, int radius) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> q{v};
    dist[v] = 0;
    VertexSet out{v};
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        if (dist[u] == radius) continue;
        for (Vertex w : g.neighbours(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                out.push_back(w);
                q.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<VertexSet, VertexSet> boundary_and_coboundary(const Graph &g, const VertexSet &s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    VertexSet bd, cobd;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex v : s) {
        bool on_bd = false;
        for (Vertex w : g.neighbours(v)) {
            if (!in[w]) {
                on_bd = true;
                if (!seen[w]) {
                    seen[w] = 1;
                    cobd.push_back(w);
                }
            }
        }
        if (on_bd) bd.push_back(v);
    }
    std::sort(cobd.begin(), cobd.end());
    return {bd, cobd};
}

namespace {

bool induced_connected(const Graph &g, const VertexSet &s) {
    if (s.empty()) return false;
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    std::vector<char> vis(g.vertex_count(), 0);
    std::deque<Vertex> q{s[0]};
    vis[s[0]] = 1;
    size_t count = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex w : g.neighbours(v))
            if (in[w] && !vis[w]) {
                vis[w] = 1;
                ++count;
                q.push_back(w);
            }
    }
    return count == s.size();
}

}  // namespace

bool is_pocket(const Graph &g, const VertexSet &s, int cap) {
    if (s.empty()) throw std::invalid_argument("empty pocket candidate");
    if (static_cast<int>(s.size()) > cap) return false;
    for (Vertex v : s)
        if (g.degree(v) > cap) return false;
    return induced_connected(g, s);
}

bool is_deep(const Graph &g, const VertexSet &s, int k) {
    if (s.empty()) throw std::invalid_argument("empty set");
    auto [bd, cobd] = boundary_and_coboundary(g, s);
    if (cobd.empty()) return false;
    // |cobd| <= |s|/k without rounding
    return static_cast<long long>(cobd.size()) * k <= static_cast<long long>(s.size());
}

ColouringVerdict verify_colouring(const Graph &g, const Colouring &phi, const ListAssignment *lists) {
    if (static_cast<int>(phi.colour.size()) != g.vertex_count() || !phi.total())
        throw std::invalid_argument("colouring must be total");
    ColouringVerdict v;
    for (auto [a, b] : g.edges()) {
        if (phi.colour[a] == phi.colour[b]) {
            v.ok = false;
            v.bad_edge = {a, b};
            return v;
        }
    }
    if (lists) {
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            const auto &l = lists->lists[u];
            if (!std::binary_search(l.begin(), l.end(), phi.colour[u])) {
                v.ok = false;
                v.bad_vertex = u;
                return v;
            }
        }
    }
    return v;
}

std::string graph_to_json(const Graph &g) {
    json j;
    j["n"] = g.vertex_count();
    json es = json::array();
    for (auto [u, v] : g.edges()) es.push_back(json::array({u, v}));
    j["edges"] = es;
    return j.dump();
}

Graph graph_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::runtime_error(std::string("graph parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::runtime_error("graph parse error: expected object with \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<Vertex, Vertex>> es;
    size_t idx = 0;
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error("graph parse error: edge " + std::to_string(idx) + " is not a pair");
        es.push_back({e[0].get<int>(), e[1].get<int>()});
        ++idx;
    }
    try {
        return Graph(n, es);
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(std::string("graph parse error: ") + e.what());
    }
}

std::string lists_to_json(const ListAssignment &l) {
    json j;
    j["universe"] = l.universe;
    json m = json::object();
    for (size_t v = 0; v < l.lists.size(); ++v) m[std::to_string(v)] = l.lists[v];
    j["lists"] = m;
    return j.dump();
}

ListAssignment lists_from_json(const std::string &text, int n) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::runtime_error(std::string("lists parse error: ") + e.what());
    }
    ListAssignment l;
    l.universe = j.at("universe").get<int>();
    l.lists.assign(n, {});
    for (auto &[k, val] : j.at("lists").items()) {
        int v = std::stoi(k);
        if (v < 0 || v >= n) throw std::runtime_error("lists parse error: vertex id out of range");
        std::vector<int> cs = val.get<std::vector<int>>();
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        for (int c : cs)
            if (c < 0 || c >= l.universe) throw std::runtime_error("lists parse error: colour outside universe");
        l.lists[v] = std::move(cs);
    }
    return l;
}

std::string colouring_to_json(const Colouring &phi) {
    json m = json::object();
    for (size_t v = 0; v < phi.colour.size(); ++v)
        if (phi.colour[v] >= 0) m[std::to_string(v)] = phi.colour[v];
    json j;
    j["colors"] = m;
    return j.dump();
}

Colouring colouring_from_json(const std::string &text, int n) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::runtime_error(std::string("colouring parse error: ") + e.what());
    }
    Colouring phi;
    phi.colour.assign(n, -1);
    for (auto &[k, val] : j.at("colors").items()) {
        int v = std::stoi(k);
        if (v < 0 || v >= n) throw std::runtime_error("colouring parse error: vertex id out of range");
        phi.colour[v] = val.get<int>();
    }
    return phi;
}

}  // namespace ltc
