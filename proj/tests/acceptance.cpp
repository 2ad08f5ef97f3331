// End-to-end acceptance gate: eight independent criteria, one pass/fail line
// each. Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ltc/algorithm.hpp"
#include "ltc/deletability.hpp"
#include "ltc/generators.hpp"
#include "ltc/minors.hpp"

using namespace ltc;

namespace {

using Clock = std::chrono::steady_clock;

Graph random_tree(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 1; i < n; ++i) es.push_back({static_cast<Vertex>(rng.below(i)), i});
    return Graph(n, es);
}

// 1. colour-and-verify 200 series-parallel + 100 Wagner-composition instances
bool colouring_correctness(std::string &detail) {
    Rng rng(11);
    int verified = 0, total = 0;
    for (int i = 0; i < 200; ++i, ++total) {
        int n = 100 + (4900 * i) / 199;
        Graph g = series_parallel_random(n, rng.next());
        ListAssignment l = random_lists(g, 4, 8, rng.next());
        auto d = distributed_list_colour(g, l, params_for_t(4));
        if (verify_colouring(g, d.outcome.colouring, &l).ok) ++verified;
    }
    for (int i = 0; i < 100; ++i, ++total) {
        int blocks = 17 + (310 * i) / 99;
        Graph g = wagner_composition_random(blocks, 8, rng.next());
        if (g.vertex_count() < 100 || g.vertex_count() > 2000) return false;
        ListAssignment l = random_lists(g, 5, 10, rng.next());
        auto d = distributed_list_colour(g, l, params_for_t(5));
        if (verify_colouring(g, d.outcome.colouring, &l).ok) ++verified;
    }
    detail = std::to_string(verified) + "/" + std::to_string(total) + " runs verified";
    return verified == total;
}

// 2. median rounds across doubling sizes fit a*log2(n) + b
bool logarithmic_rounds(std::string &detail) {
    std::vector<double> xs, ys;
    for (int e = 10; e <= 16; ++e) {
        int n = 1 << e;
        std::vector<int> rounds;
        for (int trial = 0; trial < 5; ++trial) {
            std::uint64_t s = 100 * static_cast<std::uint64_t>(e) + trial;
            Graph g = random_tree(n, s);
            ListAssignment l = random_lists(g, 3, 6, s + 7);
            rounds.push_back(distributed_list_colour(g, l, params_for_t(3)).trace.rounds_used);
        }
        std::sort(rounds.begin(), rounds.end());
        xs.push_back(e);
        ys.push_back(rounds[rounds.size() / 2]);
    }
    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double a = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double b = (sy - a * sx) / m;
    double worst = 0;
    for (size_t i = 0; i < xs.size(); ++i)
        worst = std::max(worst, std::fabs(ys[i] - (a * xs[i] + b)) / ys[i]);
    double ratio = ys.back() / ys.front();
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "fit rounds <= %.1f*log2(n) + %.1f, worst residual %.1f%%, "
                  "rounds(2^16)/rounds(2^10) = %.2f",
                  a, b, 100 * worst, ratio);
    detail = buf;
    return worst < 0.15 && ratio <= 2.0;
}

// 3. per-level progress floor 1/(2*cap) on K4-minor-free inputs, size_cap = 4
bool per_level_progress(std::string &detail) {
    AlgoParams p = params_for_t(4);  // cap = size_cap = 4
    Rng rng(33);
    double min_fraction = 1.0;
    int levels_seen = 0;
    for (int i = 0; i < 40; ++i) {
        int n = 200 + static_cast<int>(rng.below(2800));
        Graph g = series_parallel_random(n, rng.next());
        ListAssignment l = random_lists(g, 4, 8, rng.next());
        auto out = sequential_reference_colour(g, l, p);
        if (!out.warnings.empty()) {
            detail = "progress warning raised: " + out.warnings.front();
            return false;
        }
        for (const LevelRecord &r : out.levels) {
            ++levels_seen;
            min_fraction = std::min(min_fraction, double(r.removed) / r.remaining);
            if (static_cast<long long>(r.removed) * 2 * p.cap < r.remaining) {
                detail = "level below floor at n = " + std::to_string(n);
                return false;
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "empirical minimum %.3f over %d levels (floor %.3f)",
                  min_fraction, levels_seen, 1.0 / (2 * p.cap));
    detail = buf;
    return true;
}

// 4. necklaces: chromatic number exactly t, and floor(n/2)-locally minor-free
bool lower_bound_family(std::string &detail) {
    for (int t = 3; t <= 5; ++t)
        for (int n = 2; n <= 6; ++n) {
            Graph g = necklace(t, n);
            auto chi = chromatic_number_exact(g, t);
            if (chi.exceeded || chi.chi != t) {
                detail = "necklace(" + std::to_string(t) + "," + std::to_string(n) +
                         ") chromatic number != " + std::to_string(t);
                return false;
            }
            auto local = is_locally_minor_free(g, t, n / 2);
            if (local.verdict != TriBool::True) {
                detail = "necklace(" + std::to_string(t) + "," + std::to_string(n) +
                         ") not " + std::to_string(n / 2) + "-locally minor-free";
                return false;
            }
        }
    detail = "15 necklaces: chromatic number t, balls minor-free";
    return true;
}

// 5. deletable witnesses avoiding X: trees (size 1) and series-parallel (size <= 4)
bool deletability_bounds(std::string &detail) {
    Rng rng(55);
    for (int i = 0; i < 200; ++i) {
        int n = 20 + static_cast<int>(rng.below(300));
        Graph g = random_tree(n, rng.next());
        int xsize = 1 + static_cast<int>(rng.below(n / 2));  // v(G) > 2(|X|-1)
        VertexSet x;
        while (static_cast<int>(x.size()) < xsize) {
            Vertex v = static_cast<Vertex>(rng.below(n));
            if (!vertex_set_contains(x, v)) x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
        auto s = find_deletable_disjoint_from(g, x, 3, 1);
        if (!s || s->size() != 1 || vertex_set_contains(x, s->front()) ||
            is_deletable(g, *s, 3).decision != DeletableDecision::Yes) {
            detail = "tree witness missing at trial " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 200; ++i) {
        int n = 60 + static_cast<int>(rng.below(1000));
        Graph g = series_parallel_random(n, rng.next());
        int xsize = std::max(1, n / 12);  // v(G) > 11|X|
        VertexSet x;
        while (static_cast<int>(x.size()) < xsize) {
            Vertex v = static_cast<Vertex>(rng.below(n));
            if (!vertex_set_contains(x, v)) x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
        auto s = find_deletable_disjoint_from(g, x, 4, 4);
        bool ok = s && s->size() <= 4 && is_deletable(g, *s, 4).decision == DeletableDecision::Yes;
        if (ok)
            for (Vertex v : *s) ok = ok && !vertex_set_contains(x, v);
        if (!ok) {
            detail = "series-parallel witness missing at trial " + std::to_string(i);
            return false;
        }
    }
    detail = "400/400 witnesses found, disjoint from X, within size bounds";
    return true;
}

// 6. choosability: sufficient implies exact on every small graph and budget
bool choosability_agreement(std::string &detail) {
    long long checked = 0, exact_calls = 0;
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> es;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask & (1 << bit)) es.push_back({i, j});
            Graph g(n, es);
            if (g.components().size() != 1) continue;
            // odometer over budgets 1 <= f(v) <= d(v)+1
            std::vector<int> f(n, 1);
            while (true) {
                ++checked;
                if (choosable_sufficient(g, f)) {
                    ++exact_calls;
                    if (!choosable_exact(g, f)) {
                        detail = "sufficient=yes but exact=false on n=" + std::to_string(n) +
                                 " mask=" + std::to_string(mask);
                        return false;
                    }
                }
                int k = 0;
                while (k < n && f[k] == g.degree(k) + 1) f[k++] = 1;
                if (k == n) break;
                ++f[k];
            }
        }
    }
    // named instances
    Graph k4_minus_e(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    if (!choosable_exact(k4_minus_e, {2, 3, 3, 2})) {
        detail = "K4 minus an edge with budgets (2,3,3,2) not choosable";
        return false;
    }
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    if (choosable_exact(c5, {2, 2, 2, 2, 2})) {
        detail = "C5 with budgets 2 reported choosable";
        return false;
    }
    detail = std::to_string(checked) + " (graph, budget) pairs, " +
             std::to_string(exact_calls) + " exact confirmations, named instances agree";
    return true;
}

// 7. sequential reference and distributed run are bit-identical
bool differential_equality(std::string &detail) {
    Rng rng(77);
    int matched = 0;
    for (int i = 0; i < 200; ++i) {
        Graph g;
        ListAssignment l;
        AlgoParams p;
        if (i % 3 == 0) {
            g = random_tree(5 + static_cast<int>(rng.below(400)), rng.next());
            l = random_lists(g, 3, 6, rng.next());
            p = params_for_t(3);
        } else if (i % 3 == 1) {
            g = series_parallel_random(10 + static_cast<int>(rng.below(600)), rng.next());
            l = random_lists(g, 4, 8, rng.next());
            p = params_for_t(4);
        } else {
            g = wagner_composition_random(2 + static_cast<int>(rng.below(20)), 8, rng.next());
            l = random_lists(g, 5, 10, rng.next());
            p = params_for_t(5);
        }
        auto seq = sequential_reference_colour(g, l, p);
        auto dist = distributed_list_colour(g, l, p);
        if (seq.colouring.colour == dist.outcome.colouring.colour && seq.levels == dist.outcome.levels &&
            seq.fates == dist.outcome.fates)
            ++matched;
    }
    detail = std::to_string(matched) + "/200 instances bit-identical (colours, levels, fates)";
    return matched == 200;
}

// 8. budgeted minor search agrees with the t=3 / t=4 fast paths; V8 sanity
bool minor_detection_sanity(std::string &detail) {
    Rng rng(99);
    Graph k3 = complete_graph(3), k4 = complete_graph(4);
    for (int i = 0; i < 10000; ++i) {
        int n = 1 + static_cast<int>(rng.below(9));
        double p = 0.05 + 0.9 * (rng.next() % 1000) / 1000.0;
        std::vector<std::pair<Vertex, Vertex>> es;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.chance(p)) es.push_back({a, b});
        Graph g(n, es);
        for (int t = 3; t <= 4; ++t) {
            TriBool fast = is_kt_minor_free(g, t);
            auto search = has_minor(g, t == 3 ? k3 : k4);
            if (search.outcome == MinorSearchOutcome::Exceeded || fast == TriBool::Unknown) {
                detail = "budget exhausted on a 9-vertex graph";
                return false;
            }
            bool fast_free = fast == TriBool::True;
            bool search_free = search.outcome == MinorSearchOutcome::NotFound;
            if (fast_free != search_free) {
                detail = "fast path disagrees with search at trial " + std::to_string(i);
                return false;
            }
            if (search.model && !validate_minor_model(g, *search.model)) {
                detail = "invalid witness model at trial " + std::to_string(i);
                return false;
            }
        }
    }
    Graph v8 = wagner_v8();
    if (is_kt_minor_free(v8, 5) != TriBool::True) {
        detail = "V8 reported to contain a K5 minor";
        return false;
    }
    if (has_minor(v8, k4).outcome != MinorSearchOutcome::Found) {
        detail = "V8 reported K4-minor-free";
        return false;
    }
    detail = "10000 graphs x {t=3, t=4} agree; V8 is K5-free with a K4 minor";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<bool(std::string &)> run;
    };
    const Criterion criteria[] = {
        {"colouring correctness (300 instances)", colouring_correctness},
        {"logarithmic rounds (n = 2^10 .. 2^16)", logarithmic_rounds},
        {"per-level progress floor", per_level_progress},
        {"necklace lower-bound family", lower_bound_family},
        {"deletable witnesses avoiding X", deletability_bounds},
        {"choosability oracle agreement", choosability_agreement},
        {"sequential/distributed equality", differential_equality},
        {"minor-detection sanity", minor_detection_sanity},
    };
    int failures = 0;
    int index = 0;
    for (const Criterion &c : criteria) {
        ++index;
        std::string detail;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("criterion %d [%s]: %s (%.1fs) — %s\n", index, c.name,
                    ok ? "PASS" : "FAIL", secs, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
