#ifndef LTC_GRAPH_HPP
#define LTC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ltc {

using Vertex = int;

// Sorted set of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> ids);
bool vertex_set_contains(const VertexSet &s, Vertex v);

// Immutable simple undirected graph with dense ids 0..n-1.
class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on loops, duplicate edges or out-of-range ids.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>> &edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<Vertex> &neighbours(Vertex v) const { return adj_[check(v)]; }
    bool has_edge(Vertex u, Vertex v) const;

    // Canonical edge list: pairs (u,v) with u<v, sorted ascending.
    const std::vector<std::pair<Vertex, Vertex>> &edges() const { return edges_; }

    Graph induced(const VertexSet &s) const;
    // Induced subgraph keeping the original ids of s via the returned map:
    // local id i of the subgraph corresponds to s[i].
    std::vector<std::vector<Vertex>> induced_adjacency(const VertexSet &s) const;

    std::vector<VertexSet> components() const;

private:
    Vertex check(Vertex v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
        return v;
    }
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Per-vertex colour lists over universe {0..universe-1}.
struct ListAssignment {
    int universe = 0;
    std::vector<std::vector<int>> lists;  // sorted, distinct colours per vertex
};

// Partial or total map vertex -> colour; -1 marks unassigned.
struct Colouring {
    std::vector<int> colour;
    bool total() const;
};

struct ColouringVerdict {
    bool ok = true;
    // On failure exactly one of these describes the first violation.
    std::optional<std::pair<Vertex, Vertex>> bad_edge;
    std::optional<Vertex> bad_vertex;  // colour not in list
};

VertexSet ball(const Graph &g, Vertex v, int radius);

// (boundary of s, coboundary of s).
std::pair<VertexSet, VertexSet> boundary_and_coboundary(const Graph &g, const VertexSet &s);

// g[s] connected, |s| <= cap, and every v in s has host degree <= cap.
bool is_pocket(const Graph &g, const VertexSet &s, int cap);

// Non-empty coboundary of size at most |s|/k (exact rational comparison).
bool is_deep(const Graph &g, const VertexSet &s, int k);

// Rejects partial colourings via std::invalid_argument.
ColouringVerdict verify_colouring(const Graph &g, const Colouring &phi,
                                  const ListAssignment *lists = nullptr);

// Canonical JSON round trip. Parse errors raise std::runtime_error with location info.
std::string graph_to_json(const Graph &g);
Graph graph_from_json(const std::string &text);
std::string lists_to_json(const ListAssignment &l);
ListAssignment lists_from_json(const std::string &text, int n);
std::string colouring_to_json(const Colouring &phi);
Colouring colouring_from_json(const std::string &text, int n);

}  // namespace ltc

#endif
