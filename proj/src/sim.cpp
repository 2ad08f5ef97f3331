#include "ltc/sim.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "ltc/wire.hpp"

namespace ltc {

namespace {

struct NodeSlot {
    std::unique_ptr<NodeProgram> program;
    std::vector<Incoming> inbox;
    bool wake = false;
    bool has_output = false;
};

}  // namespace

SimResult run(const Graph &g, const ProgramFactory &make, int max_rounds) {
    const int n = g.vertex_count();
    std::vector<NodeSlot> nodes(n);
    SimResult result;
    result.outputs.resize(n);
    result.trace.output_round.assign(n, -1);
    int outputs_done = 0;

    // sends from round k are buffered here and delivered at round k + 1
    std::vector<std::vector<Incoming>> pending(n);
    std::int64_t pending_count = 0;

    auto absorb = [&](Vertex v, NodeIo &io, int round) {
        for (auto &[to, payload] : io.outbox) {
            if (!g.has_edge(v, to))
                throw std::runtime_error("node " + std::to_string(v) + " sent to non-neighbour " +
                                         std::to_string(to));
            result.trace.max_msg_bytes = std::max(result.trace.max_msg_bytes, payload.size());
            pending[to].push_back({v, std::move(payload)});
            ++pending_count;
        }
        if (io.output) {
            if (nodes[v].has_output)
                throw std::runtime_error("node " + std::to_string(v) + " produced output twice");
            nodes[v].has_output = true;
            result.outputs[v] = std::move(*io.output);
            result.trace.output_round[v] = round;
            result.trace.rounds_used = std::max(result.trace.rounds_used, round);
            ++outputs_done;
        }
        nodes[v].wake = io.wake_next;
    };

    for (Vertex v = 0; v < n; ++v) {
        nodes[v].program = make(v);
        NodeIo io;
        nodes[v].program->init(v, g.neighbours(v), io);
        absorb(v, io, 0);
    }

    for (int round = 1; outputs_done < n; ++round) {
        if (round > max_rounds)
            throw std::runtime_error("round budget exhausted after " + std::to_string(max_rounds) +
                                     " rounds with unfinished nodes");
        result.trace.per_round.push_back(pending_count);
        pending_count = 0;
        std::vector<Vertex> active;
        for (Vertex v = 0; v < n; ++v) {
            if (pending[v].empty() && !nodes[v].wake) continue;
            active.push_back(v);
            nodes[v].inbox = std::move(pending[v]);
            pending[v].clear();
            std::sort(nodes[v].inbox.begin(), nodes[v].inbox.end(),
                      [](const Incoming &a, const Incoming &b) { return a.from < b.from; });
        }
        if (active.empty())
            throw std::runtime_error("deadlock: no messages or wake-ups but " +
                                     std::to_string(n - outputs_done) + " nodes lack output");
        for (Vertex v : active) {
            NodeIo io;
            nodes[v].program->step(round, nodes[v].inbox, io);
            nodes[v].inbox.clear();
            absorb(v, io, round);
        }
    }

    result.trace.per_round.resize(result.trace.rounds_used);
    return result;
}

std::string trace_to_json(const SimTrace &trace) {
    nlohmann::json j;
    j["rounds"] = trace.rounds_used;
    j["max_msg_bytes"] = trace.max_msg_bytes;
    j["per_round"] = trace.per_round;
    return j.dump();
}

namespace {

// Flooded descriptor: a vertex id plus its full neighbour list. After r
// forwarding rounds a node has received exactly the descriptors of vertices
// within distance r.
class GatherProgram final : public NodeProgram {
public:
    explicit GatherProgram(int radius) : radius_(radius) {}

    void init(Vertex id, const std::vector<Vertex> &neighbours, NodeIo &io) override {
        id_ = id;
        neighbours_ = neighbours;
        known_[id] = neighbours;
        if (radius_ == 0) {
            io.output = encode();
            return;
        }
        std::string d;
        encode_descriptor(d, id, neighbours);
        for (Vertex u : neighbours_) io.send(u, d);
        io.wake_next = true;
    }

    void step(int round, const std::vector<Incoming> &inbox, NodeIo &io) override {
        std::string fresh;
        for (const auto &msg : inbox) {
            wire::Reader r(msg.payload);
            while (!r.done()) {
                Vertex v = r.i32();
                std::vector<Vertex> adj = r.i32s();
                if (known_.emplace(v, adj).second) encode_descriptor(fresh, v, adj);
            }
        }
        if (round < radius_) {
            if (!fresh.empty())
                for (Vertex u : neighbours_) io.send(u, fresh);
            io.wake_next = true;
        } else {
            io.output = encode();
        }
    }

private:
    static void encode_descriptor(std::string &b, Vertex v, const std::vector<Vertex> &adj) {
        wire::put_i32(b, v);
        wire::put_u32s(b, adj);
    }

    std::string encode() const {
        VertexSet vs;
        vs.reserve(known_.size());
        for (const auto &[v, adj] : known_) vs.push_back(v);
        std::vector<std::pair<Vertex, Vertex>> es;
        for (const auto &[v, adj] : known_)
            for (Vertex u : adj)
                if (v < u && known_.count(u)) es.emplace_back(v, u);
        std::sort(es.begin(), es.end());
        std::string out;
        wire::put_u32s(out, vs);
        wire::put_u32(out, static_cast<std::uint32_t>(es.size()));
        for (auto [a, b] : es) {
            wire::put_i32(out, a);
            wire::put_i32(out, b);
        }
        return out;
    }

    int radius_;
    Vertex id_ = -1;
    std::vector<Vertex> neighbours_;
    std::map<Vertex, std::vector<Vertex>> known_;
};

}  // namespace

ProgramFactory gather_ball_program(int r) {
    if (r < 0) throw std::invalid_argument("gather radius must be non-negative");
    return [r](Vertex) { return std::make_unique<GatherProgram>(r); };
}

BallView decode_ball(const Payload &payload) {
    wire::Reader r(payload);
    BallView view;
    view.vertices = r.i32s();
    std::uint32_t m = r.u32();
    view.edges.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        Vertex a = r.i32();
        Vertex b = r.i32();
        view.edges.emplace_back(a, b);
    }
    return view;
}

}  // namespace ltc
