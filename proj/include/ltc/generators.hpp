#ifndef LTC_GENERATORS_HPP
#define LTC_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltc/graph.hpp"

namespace ltc {

// splitmix64: documented mixing constants, bit-exact across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound) by rejection-free modulo of a 64-bit draw; bound > 0
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

private:
    std::uint64_t state_;
};

// n copies of K_t minus an edge, chained by identifying the degree-(t-2)
// endpoints, closed by an edge between the two free endpoints. n(t-1)+1 vertices.
Graph necklace(int t, int n);

// 8-cycle plus the four long chords; 3-regular on 8 vertices.
Graph wagner_v8();

// K4-minor-free by construction: random edge subdivisions and parallel 2-paths
// grown from K2 until n vertices.
Graph series_parallel_random(int n, std::uint64_t seed);

// Random maximal planar graph by repeated vertex insertion into a random face.
Graph planar_triangulation_random(int n, std::uint64_t seed);

// Identify clique k1 of g1 with clique k2 of g2 (sorted-order pairing), then
// delete the identified-clique edges listed in drop (indices into the pairing).
Graph clique_sum(const Graph &g1, const VertexSet &k1, const Graph &g2, const VertexSet &k2,
                 const std::vector<std::pair<int, int>> &drop);

// K5-minor-free by construction: clique sums (arity <= 3) of random planar
// triangulations and V8 copies.
Graph wagner_composition_random(int blocks, int n_per_block, std::uint64_t seed);

ListAssignment random_lists(const Graph &g, int size, int universe, std::uint64_t seed);

}  // namespace ltc

#endif
