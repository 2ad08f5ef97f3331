#ifndef LTC_SIM_HPP
#define LTC_SIM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltc/graph.hpp"

namespace ltc {

// Synchronous message-passing round model: all nodes advance in lockstep, a
// message sent in one round is delivered at the start of the next, message
// size is unbounded, and cost is measured purely in rounds.

using Payload = std::string;

struct Incoming {
    Vertex from;
    Payload payload;
};

// Everything a node may do in one activation: send per-neighbour messages,
// commit a final output (at most once), and ask to be stepped next round even
// if no message arrives.
struct NodeIo {
    std::vector<std::pair<Vertex, Payload>> outbox;
    std::optional<Payload> output;
    bool wake_next = false;

    void send(Vertex to, Payload payload) { outbox.emplace_back(to, std::move(payload)); }
};

class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    // Runs once before round 1. `neighbours` is the node's sorted list of
    // neighbour ids; it may already send and even output.
    virtual void init(Vertex id, const std::vector<Vertex> &neighbours, NodeIo &io) = 0;
    // Runs in round `round` (1-based) whenever the node has mail or asked for
    // a wake-up. Must depend only on stored state, the round number and the
    // inbox (sorted by sender id).
    virtual void step(int round, const std::vector<Incoming> &inbox, NodeIo &io) = 0;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(Vertex)>;

struct SimTrace {
    int rounds_used = 0;                   // max over nodes of their output round
    std::size_t max_msg_bytes = 0;         // largest single payload observed
    std::vector<std::int64_t> per_round;   // messages delivered in rounds 1..rounds_used
    std::vector<int> output_round;         // per node; 0 means output during init
};

struct SimResult {
    std::vector<Payload> outputs;  // one per node
    SimTrace trace;
};

inline constexpr int kDefaultMaxRounds = 1 << 20;

// Runs the protocol until every node has produced an output; throws
// std::runtime_error naming a silent node if `max_rounds` rounds pass first.
SimResult run(const Graph &g, const ProgramFactory &make, int max_rounds = kDefaultMaxRounds);

std::string trace_to_json(const SimTrace &trace);

// A program whose output after r rounds is the node's radius-r ball: the
// vertices at distance <= r and all edges of the host graph between them.
ProgramFactory gather_ball_program(int r);

struct BallView {
    VertexSet vertices;                            // sorted, includes the node itself
    std::vector<std::pair<Vertex, Vertex>> edges;  // canonical: u < v, sorted
};

BallView decode_ball(const Payload &payload);

}  // namespace ltc

#endif
