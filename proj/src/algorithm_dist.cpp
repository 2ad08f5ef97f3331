#include <algorithm>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <stdexcept>

#include "level_rules.hpp"
#include "ltc/algorithm.hpp"
#include "ltc/sim.hpp"
#include "ltc/wire.hpp"

namespace ltc {

namespace {

using rules::CandStatus;

// Every flood (gather, base solutions, candidates, conflict traffic) travels
// only between low-degree nodes: pocket members always have active degree
// <= cap, and the base case is restricted to all-low-degree components, so
// nothing relevant ever needs to cross a high-degree node. High-degree nodes
// only speak in the degree exchange and hear removal and fact messages.
enum MsgType : std::uint8_t {
    kDegree = 1,   // my active degree, opening every level
    kGather = 2,   // (vertex, list, flagged active neighbours) descriptors
    kBaseSol = 3,  // full colouring of a base component
    kCand = 4,     // (seed, key, set) candidate pockets
    kMisdec = 5,   // (seed, conflict round, new status)
    kPocket = 6,   // (seed, class, set) surviving pockets
    kRemoved = 7,  // (level, class) from members leaving the remaining graph
    kFact = 8,     // (vertex, colour) pairs driving the extension unwind
};

struct Config {
    AlgoParams params;
    rules::Schedule sched;
    const ListAssignment *lists = nullptr;
};

struct GEntry {
    std::vector<int> list;
    std::vector<Vertex> nbrs;
    std::vector<std::uint8_t> high;  // per neighbour: active degree exceeds cap
};

std::string tag(MsgType t) {
    std::string s;
    wire::put_u8(s, t);
    return s;
}

class ColourProgram final : public NodeProgram {
public:
    explicit ColourProgram(const Config &cfg) : cfg_(cfg) {}

    void init(Vertex id, const std::vector<Vertex> &neighbours, NodeIo &io) override {
        id_ = id;
        all_nbrs_ = neighbours;
        active_nbrs_ = neighbours;
        if (active_nbrs_.empty()) {
            solve_alone(1, io);
            return;
        }
        io.wake_next = true;
    }

    void step(int round, const std::vector<Incoming> &inbox, NodeIo &io) override {
        if (phase_ == Phase::Done) return;
        if (phase_ == Phase::Pending) {
            pending_step(inbox, io);
            return;
        }
        const rules::Schedule &s = cfg_.sched;
        const int level = (round - 1) / s.t_level + 1;
        const int offset = round - (level - 1) * s.t_level;

        if (offset == 1) start_level(level, io);
        if (phase_ != Phase::Active) return;

        // everything fresh this round goes out as one batch per type
        Batches out;
        for (const Incoming &msg : inbox) {
            if (phase_ != Phase::Active) break;
            handle(msg, out, io);
        }
        if (phase_ == Phase::Active && offset == 2) announce_self(out);
        if (phase_ == Phase::Active && offset == s.r_g + 2) detect_base(io);
        if (phase_ != Phase::Active) return;  // a base solution settled this node

        if (offset == s.c0) propose_candidate(out);
        if (offset > s.c0 && offset <= s.m(s.z) && (offset - s.c0) % s.d_c == 0)
            conflict_round((offset - s.c0) / s.d_c, out);
        if (offset <= s.r_g + 1) flush(io, kGather, out.gather);
        if (offset < s.m(1)) flush(io, kCand, out.cands);
        if (offset < s.f0) {
            flush(io, kMisdec, out.mis);
            flush(io, kPocket, out.pockets);
        }
        if (offset == s.f0) leave_if_selected(io);
        io.wake_next = phase_ == Phase::Active;
    }

private:
    enum class Phase { Active, Pending, Done };

    // ---- active-phase message handling -------------------------------------

    struct Batches {
        std::string gather, cands, mis, pockets;
    };

    void flush(NodeIo &io, MsgType type, const std::string &items) {
        if (items.empty()) return;
        std::string msg = tag(type);
        msg += items;
        send_low(io, msg);
    }

    void handle(const Incoming &msg, Batches &out, NodeIo &io) {
        wire::Reader r(msg.payload);
        auto type = static_cast<MsgType>(r.u8());
        switch (type) {
            case kDegree: {
                if (static_cast<int>(r.u32()) <= cfg_.params.cap)
                    low_nbrs_.push_back(msg.from);
                break;
            }
            case kGather: {
                while (!r.done()) {
                    Vertex v = r.i32();
                    GEntry e;
                    e.list = r.i32s();
                    e.nbrs = r.i32s();
                    e.high.resize(e.nbrs.size());
                    for (auto &flag : e.high) flag = r.u8();
                    if (gathered_.count(v)) continue;
                    encode_descriptor(out.gather, v, e);
                    gathered_.emplace(v, std::move(e));
                }
                break;
            }
            case kBaseSol: {
                if (basesol_seen_) break;
                basesol_seen_ = true;
                std::uint32_t count = r.u32();
                int mine = -1;
                for (std::uint32_t i = 0; i < count; ++i) {
                    Vertex v = r.i32();
                    int colour = r.i32();
                    if (v == id_) mine = colour;
                }
                if (mine < 0) throw std::logic_error("base solution misses a component member");
                send_low(io, msg.payload);  // keep the flood moving first
                finish(mine, {cur_level_, FateKind::Base, 0, -1}, io);
                break;
            }
            case kCand: {
                while (!r.done()) {
                    rules::Cand c;
                    c.seed = r.i32();
                    c.key = r.u64();
                    c.set = r.i32s();
                    if (cands_.count(c.seed)) continue;
                    encode_cand(out.cands, c);
                    cands_.emplace(c.seed, std::move(c));
                }
                break;
            }
            case kMisdec: {
                while (!r.done()) {
                    Vertex seed = r.i32();
                    std::uint8_t iter = r.u8();
                    std::uint8_t status = r.u8();
                    if (statuses_.count(seed)) continue;
                    statuses_.emplace(seed, static_cast<CandStatus>(status));
                    wire::put_i32(out.mis, seed);
                    wire::put_u8(out.mis, iter);
                    wire::put_u8(out.mis, status);
                }
                break;
            }
            case kPocket: {
                while (!r.done()) {
                    Vertex seed = r.i32();
                    int klass = r.u8();
                    VertexSet set = r.i32s();
                    if (pockets_seen_.count(seed)) continue;
                    wire::put_i32(out.pockets, seed);
                    wire::put_u8(out.pockets, static_cast<std::uint8_t>(klass));
                    wire::put_u32s(out.pockets, set);
                    pockets_seen_.emplace(seed, std::make_pair(klass, std::move(set)));
                }
                break;
            }
            case kRemoved: {
                auto it = std::find(active_nbrs_.begin(), active_nbrs_.end(), msg.from);
                if (it != active_nbrs_.end()) active_nbrs_.erase(it);
                break;
            }
            case kFact:
                // colours travel between removed nodes only; an active node
                // cannot be a constraint of anyone coloured before it
                break;
        }
    }

    // ---- level phases -------------------------------------------------------

    void start_level(int level, NodeIo &io) {
        if (level > cfg_.params.max_levels)
            throw std::runtime_error("level budget exhausted at level " + std::to_string(level));
        cur_level_ = level;
        gathered_.clear();
        low_nbrs_.clear();
        basesol_seen_ = false;
        cands_.clear();
        statuses_.clear();
        pockets_seen_.clear();
        my_status_ = CandStatus::Available;
        my_klass_ = 0;
        have_cand_ = false;

        if (active_nbrs_.empty()) {
            solve_alone(level, io);
            return;
        }
        std::string d = tag(kDegree);
        wire::put_u32(d, static_cast<std::uint32_t>(active_nbrs_.size()));
        send_active(io, d);
    }

    // offset 2: neighbour degrees are in; low-degree nodes inject their descriptor
    void announce_self(Batches &out) {
        if (static_cast<int>(active_nbrs_.size()) > cfg_.params.cap) return;
        GEntry self;
        self.list = cfg_.lists->lists[id_];
        self.nbrs = active_nbrs_;
        self.high.assign(active_nbrs_.size(), 1);
        for (size_t i = 0; i < active_nbrs_.size(); ++i)
            if (vertex_set_contains(low_nbrs_, active_nbrs_[i])) self.high[i] = 0;
        encode_descriptor(out.gather, id_, self);
        gathered_.emplace(id_, std::move(self));
    }

    void solve_alone(int level, NodeIo &io) {
        Graph one(1, {});
        ListAssignment l;
        l.universe = cfg_.lists->universe;
        l.lists = {cfg_.lists->lists[id_]};
        auto phi = list_colour_exhaustive(one, l);
        if (!phi) throw std::runtime_error("base component at level " + std::to_string(level) +
                                           " is not list-colourable");
        cur_level_ = level;
        finish(phi->colour[0], {level, FateKind::Base, 0, -1}, io);
    }

    void detect_base(NodeIo &io) {
        // BFS over gathered descriptors. A neighbour flagged high-degree or a
        // vertex without a descriptor means the component is not base: it has
        // a high-degree member or leaks past radius k_base - 1.
        if (!gathered_.count(id_)) return;
        std::map<Vertex, int> dist{{id_, 0}};
        std::queue<Vertex> q;
        q.push(id_);
        VertexSet comp;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            auto it = gathered_.find(v);
            if (it == gathered_.end()) return;
            if (dist[v] > cfg_.params.k_base - 1) return;
            comp.push_back(v);
            for (size_t i = 0; i < it->second.nbrs.size(); ++i) {
                if (it->second.high[i]) return;
                Vertex w = it->second.nbrs[i];
                if (dist.emplace(w, dist[v] + 1).second) q.push(w);
            }
        }
        // the whole component is in view: solve and flood the solution
        std::sort(comp.begin(), comp.end());
        Graph local = local_graph(comp);
        ListAssignment l;
        l.universe = cfg_.lists->universe;
        for (Vertex v : comp) l.lists.push_back(gathered_.at(v).list);
        auto phi = list_colour_exhaustive(local, l);
        if (!phi) throw std::runtime_error("base component at level " + std::to_string(cur_level_) +
                                           " is not list-colourable");
        std::string sol = tag(kBaseSol);
        wire::put_u32(sol, static_cast<std::uint32_t>(comp.size()));
        int mine = -1;
        for (size_t i = 0; i < comp.size(); ++i) {
            wire::put_i32(sol, comp[i]);
            wire::put_i32(sol, phi->colour[i]);
            if (comp[i] == id_) mine = phi->colour[i];
        }
        basesol_seen_ = true;
        send_low(io, sol);
        finish(mine, {cur_level_, FateKind::Base, 0, -1}, io);
    }

    void propose_candidate(Batches &out) {
        if (static_cast<int>(active_nbrs_.size()) > cfg_.params.cap) return;
        // The search graph holds every descriptor vertex plus every neighbour
        // any of them mentions. Fringe vertices keep their edges to the view,
        // so member degrees are exact; the admission test judges everyone by
        // true degree, with the fringe pinned above cap (high-degree for sure,
        // or too far from this seed to ever join one of its pockets).
        VertexSet view;
        for (const auto &[v, e] : gathered_) {
            view.push_back(v);
            for (Vertex u : e.nbrs) view.push_back(u);
        }
        std::sort(view.begin(), view.end());
        view.erase(std::unique(view.begin(), view.end()), view.end());
        auto rank = [&](Vertex v) {
            return static_cast<int>(std::lower_bound(view.begin(), view.end(), v) - view.begin());
        };
        std::vector<int> degree(view.size(), cfg_.params.cap + 1);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto &[v, e] : gathered_) {
            degree[rank(v)] = static_cast<int>(e.nbrs.size());
            for (Vertex u : e.nbrs)
                if (v < u || !gathered_.count(u)) edges.push_back({rank(v), rank(u)});
        }
        Graph local(static_cast<int>(view.size()), edges);
        auto pocket = find_deletable_pocket(local, rank(id_), cfg_.params.cap, cfg_.params.c,
                                            cfg_.params.size_cap, cfg_.params.exact_cap, &degree);
        if (!pocket) return;
        rules::Cand c;
        c.seed = id_;
        c.key = rules::pocket_key(cur_level_, id_);
        for (Vertex i : *pocket) c.set.push_back(view[i]);
        have_cand_ = true;
        encode_cand(out.cands, c);
        cands_.emplace(id_, std::move(c));
    }

    void conflict_round(int i, Batches &out) {
        if (!have_cand_ || my_status_ != CandStatus::Available) return;
        const rules::Cand &self = cands_.at(id_);
        std::vector<const rules::Cand *> touchers;
        for (const auto &[seed, cand] : cands_)
            if (seed != id_ && touches(self.set, cand.set)) touchers.push_back(&cand);
        auto known = [&](Vertex seed) {
            auto it = statuses_.find(seed);
            return it == statuses_.end() ? CandStatus::Available : it->second;
        };
        CandStatus next = rules::conflict_update(self, my_status_, touchers, known);
        if (next == my_status_) return;
        my_status_ = next;
        wire::put_i32(out.mis, id_);
        wire::put_u8(out.mis, static_cast<std::uint8_t>(i));
        wire::put_u8(out.mis, static_cast<std::uint8_t>(next));
        if (next == CandStatus::Survivor) {
            my_klass_ = i;
            wire::put_i32(out.pockets, id_);
            wire::put_u8(out.pockets, static_cast<std::uint8_t>(i));
            wire::put_u32s(out.pockets, self.set);
            pockets_seen_.emplace(id_, std::make_pair(i, self.set));
        }
    }

    void leave_if_selected(NodeIo &io) {
        Vertex my_seed = -1;
        for (const auto &[seed, p] : pockets_seen_)
            if (vertex_set_contains(p.second, id_)) {
                my_seed = seed;
                break;
            }
        if (my_seed < 0) return;

        pend_.level = cur_level_;
        pend_.klass = pockets_seen_.at(my_seed).first;
        pend_.seed = my_seed;
        pend_.set = pockets_seen_.at(my_seed).second;
        for (Vertex w : gathered_.at(id_).nbrs)
            if (vertex_set_contains(pend_.set, w)) pend_.internal.push_back(w);
        if (my_seed == id_) {
            pend_.is_seed = true;
            std::set<Vertex> wait;
            for (Vertex x : pend_.set) {
                pend_.snapshot.emplace(x, gathered_.at(x));
                for (Vertex u : gathered_.at(x).nbrs) {
                    if (vertex_set_contains(pend_.set, u)) continue;
                    bool later_or_equal = false;
                    for (const auto &[seed, p] : pockets_seen_)
                        if (p.first >= pend_.klass && vertex_set_contains(p.second, u)) {
                            later_or_equal = true;
                            break;
                        }
                    if (!later_or_equal) wait.insert(u);
                }
            }
            pend_.wait_all.assign(wait.begin(), wait.end());
        }

        std::string msg = tag(kRemoved);
        wire::put_i32(msg, cur_level_);
        wire::put_u8(msg, static_cast<std::uint8_t>(pend_.klass));
        for (Vertex w : all_nbrs_) io.send(w, msg);
        phase_ = Phase::Pending;
        if (pend_.is_seed) try_solve(io);
    }

    // ---- extension unwind ---------------------------------------------------

    void pending_step(const std::vector<Incoming> &inbox, NodeIo &io) {
        std::vector<std::pair<Vertex, int>> fresh;
        for (const Incoming &msg : inbox) {
            wire::Reader r(msg.payload);
            if (static_cast<MsgType>(r.u8()) != kFact) continue;
            while (!r.done()) {
                Vertex v = r.i32();
                int colour = r.i32();
                if (pend_.facts.emplace(v, colour).second) fresh.push_back({v, colour});
            }
        }
        if (!fresh.empty()) forward_facts(fresh, io);
        if (pend_.is_seed && !pend_.solved) try_solve(io);
        adopt_own(io);
    }

    void try_solve(NodeIo &io) {
        for (Vertex u : pend_.wait_all)
            if (!pend_.facts.count(u)) return;
        pend_.solved = true;

        VertexSet all = pend_.set;
        all.insert(all.end(), pend_.wait_all.begin(), pend_.wait_all.end());
        std::sort(all.begin(), all.end());
        std::set<std::pair<Vertex, Vertex>> edge_set;
        for (Vertex x : pend_.set)
            for (Vertex u : pend_.snapshot.at(x).nbrs)
                if (vertex_set_contains(all, u)) edge_set.insert({std::min(x, u), std::max(x, u)});
        auto local_of = [&](Vertex v) {
            return static_cast<int>(std::lower_bound(all.begin(), all.end(), v) - all.begin());
        };
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (auto [a, b] : edge_set) edges.push_back({local_of(a), local_of(b)});
        Graph local(static_cast<int>(all.size()), edges);

        Colouring phi;
        phi.colour.assign(all.size(), -1);
        for (Vertex u : pend_.wait_all) phi.colour[local_of(u)] = pend_.facts.at(u);
        ListAssignment l;
        l.universe = cfg_.lists->universe;
        l.lists.resize(all.size());
        VertexSet members_local;
        for (Vertex x : pend_.set) {
            l.lists[local_of(x)] = pend_.snapshot.at(x).list;
            members_local.push_back(local_of(x));
        }
        auto extended = extend_into(local, members_local, phi, l);
        if (!extended) throw std::logic_error("deletable pocket failed to extend");

        std::vector<std::pair<Vertex, int>> fresh;
        for (Vertex x : pend_.set) {
            int colour = extended->colour[local_of(x)];
            if (pend_.facts.emplace(x, colour).second) fresh.push_back({x, colour});
        }
        forward_facts(fresh, io);
        adopt_own(io);
    }

    void forward_facts(const std::vector<std::pair<Vertex, int>> &fresh, NodeIo &io) {
        if (fresh.empty() || pend_.internal.empty()) return;
        std::string msg = tag(kFact);
        for (auto [v, colour] : fresh) {
            wire::put_i32(msg, v);
            wire::put_i32(msg, colour);
        }
        for (Vertex w : pend_.internal) io.send(w, msg);
    }

    void adopt_own(NodeIo &io) {
        auto it = pend_.facts.find(id_);
        if (it == pend_.facts.end() || pend_.output_done) return;
        pend_.output_done = true;
        finish(it->second, {pend_.level, FateKind::Pocket, pend_.klass, pend_.seed}, io);
    }

    // ---- shared helpers -----------------------------------------------------

    void finish(int colour, VertexFate fate, NodeIo &io) {
        std::string out;
        wire::put_i32(out, colour);
        wire::put_i32(out, fate.level);
        wire::put_u8(out, static_cast<std::uint8_t>(fate.kind));
        wire::put_u8(out, static_cast<std::uint8_t>(fate.klass));
        wire::put_i32(out, fate.seed);
        io.output = std::move(out);
        phase_ = Phase::Done;
        std::string fact = tag(kFact);
        wire::put_i32(fact, id_);
        wire::put_i32(fact, colour);
        for (Vertex w : all_nbrs_) io.send(w, fact);
    }

    // graph on the descriptor-bearing vertices of the gathered ball
    Graph local_graph(const VertexSet &view) const {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (size_t i = 0; i < view.size(); ++i)
            for (Vertex u : gathered_.at(view[i]).nbrs) {
                if (u <= view[i]) continue;
                auto it = std::lower_bound(view.begin(), view.end(), u);
                if (it != view.end() && *it == u)
                    edges.push_back({static_cast<int>(i), static_cast<int>(it - view.begin())});
            }
        return Graph(static_cast<int>(view.size()), edges);
    }

    bool touches(const VertexSet &a, const VertexSet &b) const {
        for (Vertex v : a) {
            if (vertex_set_contains(b, v)) return true;
            for (Vertex w : gathered_.at(v).nbrs)
                if (vertex_set_contains(b, w)) return true;
        }
        return false;
    }

    void send_active(NodeIo &io, const std::string &payload) {
        for (Vertex w : active_nbrs_) io.send(w, payload);
    }

    void send_low(NodeIo &io, const std::string &payload) {
        for (Vertex w : low_nbrs_) io.send(w, payload);
    }

    static void encode_descriptor(std::string &b, Vertex v, const GEntry &e) {
        wire::put_i32(b, v);
        wire::put_u32s(b, e.list);
        wire::put_u32s(b, e.nbrs);
        for (std::uint8_t flag : e.high) wire::put_u8(b, flag);
    }

    static void encode_cand(std::string &b, const rules::Cand &c) {
        wire::put_i32(b, c.seed);
        wire::put_u64(b, c.key);
        wire::put_u32s(b, c.set);
    }

    struct Pending {
        int level = 0;
        int klass = 0;
        Vertex seed = -1;
        VertexSet set;
        std::vector<Vertex> internal;
        bool is_seed = false;
        bool solved = false;
        VertexSet wait_all;
        std::map<Vertex, GEntry> snapshot;
        std::map<Vertex, int> facts;
        bool output_done = false;
    };

    const Config &cfg_;
    Vertex id_ = -1;
    std::vector<Vertex> all_nbrs_;
    std::vector<Vertex> active_nbrs_;
    std::vector<Vertex> low_nbrs_;  // active neighbours with active degree <= cap
    Phase phase_ = Phase::Active;

    int cur_level_ = 0;
    std::map<Vertex, GEntry> gathered_;
    bool basesol_seen_ = false;
    std::map<Vertex, rules::Cand> cands_;
    std::map<Vertex, CandStatus> statuses_;
    std::map<Vertex, std::pair<int, VertexSet>> pockets_seen_;
    bool have_cand_ = false;
    CandStatus my_status_ = CandStatus::Available;
    int my_klass_ = 0;

    Pending pend_;
};

}  // namespace

DistOutcome distributed_list_colour(const Graph &g, const ListAssignment &lists,
                                    const AlgoParams &params) {
    rules::validate_inputs(g, lists, params);
    Config cfg{params, rules::make_schedule(params), &lists};
    const int n = g.vertex_count();

    int max_rounds = 2 * cfg.sched.t_level * (params.max_levels + 2);
    auto sim = run(g, [&cfg](Vertex) { return std::make_unique<ColourProgram>(cfg); }, max_rounds);

    DistOutcome out;
    out.trace = std::move(sim.trace);
    out.outcome.colouring.colour.assign(n, -1);
    out.outcome.fates.assign(n, VertexFate{});
    for (Vertex v = 0; v < n; ++v) {
        wire::Reader r(sim.outputs[v]);
        out.outcome.colouring.colour[v] = r.i32();
        VertexFate &f = out.outcome.fates[v];
        f.level = r.i32();
        f.kind = static_cast<FateKind>(r.u8());
        f.klass = r.u8();
        f.seed = r.i32();
    }

    auto verdict = verify_colouring(g, out.outcome.colouring, &lists);
    if (!verdict.ok) throw std::logic_error("distributed colouring failed self-verification");
    out.outcome.levels = rules::build_records(out.outcome.fates, n, cfg.sched);
    out.outcome.warnings = rules::progress_warnings(out.outcome.levels, params.cap);
    return out;
}

}  // namespace ltc
