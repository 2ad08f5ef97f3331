#include "ltc.h"

#include <cstdlib>
#include <cstring>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "ltc/algorithm.hpp"
#include "ltc/generators.hpp"
#include "ltc/graph.hpp"
#include "ltc/minors.hpp"

struct ltc_graph {
    ltc::Graph g;
};

namespace {

thread_local std::string g_error = "no error";

// C copy of a std::string, released by ltc_string_free
char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs f, translating exceptions to status codes. Functions whose
// runtime_errors stem from parsing pass LTC_EPARSE as `on_runtime`.
template <typename F>
ltc_status guard(ltc_status on_runtime, F &&f) {
    try {
        f();
        return LTC_OK;
    } catch (const std::invalid_argument &e) {
        g_error = e.what();
        return LTC_EINVAL;
    } catch (const std::out_of_range &e) {
        g_error = e.what();
        return LTC_EINVAL;
    } catch (const std::runtime_error &e) {
        g_error = e.what();
        return on_runtime;
    } catch (const std::exception &e) {
        g_error = e.what();
        return LTC_ERROR;
    }
}

void require(bool ok, const char *what) {
    if (!ok) throw std::invalid_argument(what);
}

const char *verdict_name(ltc::TriBool v) {
    switch (v) {
        case ltc::TriBool::True: return "free";
        case ltc::TriBool::False: return "minor";
        default: return "unknown";
    }
}

int verdict_code(ltc::TriBool v) {
    switch (v) {
        case ltc::TriBool::True: return 0;
        case ltc::TriBool::False: return 1;
        default: return 2;
    }
}

}  // namespace

extern "C" {

const char *ltc_last_error(void) { return g_error.c_str(); }

void ltc_string_free(char *s) { std::free(s); }

enum ltc_status ltc_graph_from_json(const char *json, ltc_graph **out) {
    return guard(LTC_EPARSE, [&] {
        require(json && out, "null argument");
        auto *h = new ltc_graph{ltc::graph_from_json(json)};
        *out = h;
    });
}

enum ltc_status ltc_graph_generate(const char *family, int n, int t, uint64_t seed,
                                   ltc_graph **out) {
    return guard(LTC_ERROR, [&] {
        require(family && out, "null argument");
        std::string f = family;
        ltc::Graph g;
        if (f == "necklace")
            g = ltc::necklace(t, n);
        else if (f == "sp")
            g = ltc::series_parallel_random(n, seed);
        else if (f == "planar")
            g = ltc::planar_triangulation_random(n, seed);
        else if (f == "wagner-sum")
            g = ltc::wagner_composition_random(std::max(1, n / 6), 8, seed);
        else if (f == "v8")
            g = ltc::wagner_v8();
        else
            throw std::invalid_argument("unknown family: " + f);
        *out = new ltc_graph{std::move(g)};
    });
}

void ltc_graph_free(ltc_graph *g) { delete g; }

enum ltc_status ltc_graph_to_json(const ltc_graph *g, char **json_out) {
    return guard(LTC_ERROR, [&] {
        require(g && json_out, "null argument");
        *json_out = dup_string(ltc::graph_to_json(g->g));
    });
}

int ltc_graph_order(const ltc_graph *g) { return g ? g->g.vertex_count() : -1; }

enum ltc_status ltc_random_lists(const ltc_graph *g, int size, int universe, uint64_t seed,
                                 char **lists_json_out) {
    return guard(LTC_ERROR, [&] {
        require(g && lists_json_out, "null argument");
        *lists_json_out = dup_string(ltc::lists_to_json(ltc::random_lists(g->g, size, universe, seed)));
    });
}

enum ltc_status ltc_check_minor_free(const ltc_graph *g, int t, uint64_t budget,
                                     int *verdict_out, char **report_json_out) {
    return guard(LTC_ERROR, [&] {
        require(g && verdict_out, "null argument");
        if (budget == 0) budget = ltc::kDefaultMinorBudget;
        ltc::TriBool v = ltc::is_kt_minor_free(g->g, t, budget);
        *verdict_out = verdict_code(v);
        if (!report_json_out) return;
        nlohmann::json j;
        j["t"] = t;
        j["verdict"] = verdict_name(v);
        if (v == ltc::TriBool::False) {
            // the fast paths answer without a model; fetch one for the report
            auto found = ltc::has_minor(g->g, ltc::complete_graph(t), budget);
            if (found.model && ltc::validate_minor_model(g->g, *found.model))
                j["model"] = nlohmann::json::parse(ltc::minor_model_to_json(*found.model));
        }
        *report_json_out = dup_string(j.dump());
    });
}

enum ltc_status ltc_check_local(const ltc_graph *g, int t, int radius, uint64_t budget,
                                int *verdict_out, char **report_json_out) {
    return guard(LTC_ERROR, [&] {
        require(g && verdict_out, "null argument");
        require(radius >= 0, "radius must be non-negative");
        if (budget == 0) budget = ltc::kDefaultMinorBudget;
        auto res = ltc::is_locally_minor_free(g->g, t, radius, budget);
        *verdict_out = verdict_code(res.verdict);
        if (!report_json_out) return;
        nlohmann::json j;
        j["t"] = t;
        j["radius"] = radius;
        j["verdict"] = res.verdict == ltc::TriBool::True    ? "locally-free"
                       : res.verdict == ltc::TriBool::False ? "ball-has-minor"
                                                            : "unknown";
        if (res.witness) j["witness_vertex"] = *res.witness;
        if (res.model) j["model"] = nlohmann::json::parse(ltc::minor_model_to_json(*res.model));
        *report_json_out = dup_string(j.dump());
    });
}

enum ltc_status ltc_colour(const ltc_graph *g, const char *lists_json, int c, int cap,
                           int size_cap, int k_base, char **colouring_json_out,
                           char **stats_json_out) {
    return guard(LTC_ERROR, [&] {
        require(g && lists_json && colouring_json_out, "null argument");
        ltc::ListAssignment lists = ltc::lists_from_json(lists_json, g->g.vertex_count());
        ltc::AlgoParams p;
        p.c = c;
        p.cap = cap;
        p.size_cap = size_cap;
        if (k_base > 0) p.k_base = k_base;
        auto res = ltc::distributed_list_colour(g->g, lists, p);
        *colouring_json_out = dup_string(ltc::colouring_to_json(res.outcome.colouring));
        if (!stats_json_out) return;
        auto j = nlohmann::json::parse(
            ltc::stats_to_json(res.outcome.levels, res.trace.rounds_used, true));
        j["max_msg_bytes"] = res.trace.max_msg_bytes;
        j["warnings"] = res.outcome.warnings;
        *stats_json_out = dup_string(j.dump());
    });
}

enum ltc_status ltc_verify(const ltc_graph *g, const char *lists_json,
                           const char *colouring_json, int *ok_out, char **report_json_out) {
    return guard(LTC_EPARSE, [&] {
        require(g && colouring_json && ok_out, "null argument");
        const int n = g->g.vertex_count();
        ltc::Colouring phi = ltc::colouring_from_json(colouring_json, n);
        ltc::ListAssignment lists;
        if (lists_json) lists = ltc::lists_from_json(lists_json, n);
        auto verdict = ltc::verify_colouring(g->g, phi, lists_json ? &lists : nullptr);
        *ok_out = verdict.ok ? 1 : 0;
        if (!report_json_out) return;
        nlohmann::json j;
        j["ok"] = verdict.ok;
        if (verdict.bad_edge) j["bad_edge"] = {verdict.bad_edge->first, verdict.bad_edge->second};
        if (verdict.bad_vertex) j["bad_vertex"] = *verdict.bad_vertex;
        *report_json_out = dup_string(j.dump());
    });
}

}  // extern "C"
