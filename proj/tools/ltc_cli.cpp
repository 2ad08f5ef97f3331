// Command-line front end. Links only the C API; all graph work happens behind
// the shared library boundary.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ltc.h"

namespace {

using nlohmann::json;

struct CommandError {
    std::string message;
    int exit_code;
};

[[noreturn]] void fail(const std::string &message, int exit_code = 1) {
    throw CommandError{message, exit_code};
}

[[noreturn]] void fail_api(const std::string &context) {
    fail(context + ": " + ltc_last_error());
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open " + path + " for writing");
    out << text;
    if (!out) fail("write to " + path + " failed");
}

// adopts a C-API string and frees it
std::string take(char *s) {
    std::string out = s ? s : "";
    ltc_string_free(s);
    return out;
}

struct GraphHandle {
    ltc_graph *g = nullptr;
    GraphHandle() = default;
    GraphHandle(const GraphHandle &) = delete;
    GraphHandle &operator=(const GraphHandle &) = delete;
    ~GraphHandle() { ltc_graph_free(g); }
};

void load_graph(const std::string &path, GraphHandle &h) {
    std::string text = read_file(path);
    if (ltc_graph_from_json(text.c_str(), &h.g) != LTC_OK) fail_api(path);
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text + "\n");
}

// ---- gen --------------------------------------------------------------------

int run_gen(const std::string &family, int n, int t, std::uint64_t seed, bool seed_given,
            const std::string &out_path, int list_size, int universe,
            const std::string &lists_out) {
    bool random_family = family == "sp" || family == "planar" || family == "wagner-sum";
    if (random_family && !seed_given) fail("--seed is required for family " + family);

    GraphHandle h;
    if (ltc_graph_generate(family.c_str(), n, t, seed, &h.g) != LTC_OK) fail_api("gen");

    if (list_size > 0) {
        if (lists_out.empty()) fail("--list-size needs --lists-o");
        if (!seed_given) fail("--seed is required for random lists");
        char *lists = nullptr;
        if (ltc_random_lists(h.g, list_size, universe > 0 ? universe : 2 * list_size, seed + 1,
                             &lists) != LTC_OK)
            fail_api("gen lists");
        write_file(lists_out, take(lists) + "\n");
    }

    char *raw = nullptr;
    if (ltc_graph_to_json(h.g, &raw) != LTC_OK) fail_api("gen");
    json j = json::parse(take(raw));
    json meta{{"family", family}};
    if (family == "necklace") {
        meta["t"] = t;
        meta["n"] = n;
    } else if (random_family) {
        meta["n"] = n;
        meta["seed"] = seed;
    }
    j["meta"] = meta;
    emit(j.dump(), out_path);
    return 0;
}

// ---- check ------------------------------------------------------------------

int run_check_minor_free(const std::string &graph_path, int t, std::uint64_t budget) {
    GraphHandle h;
    load_graph(graph_path, h);
    int verdict = -1;
    char *report = nullptr;
    if (ltc_check_minor_free(h.g, t, budget, &verdict, &report) != LTC_OK)
        fail_api("check minor-free");
    std::cout << take(report) << "\n";
    return verdict;  // 0 free / 1 has minor / 2 unknown
}

int run_check_local(const std::string &graph_path, int t, int radius, std::uint64_t budget) {
    GraphHandle h;
    load_graph(graph_path, h);
    int verdict = -1;
    char *report = nullptr;
    if (ltc_check_local(h.g, t, radius, budget, &verdict, &report) != LTC_OK)
        fail_api("check local");
    std::cout << take(report) << "\n";
    return verdict;
}

// ---- color / verify -----------------------------------------------------------

int run_color(const std::string &graph_path, const std::string &lists_path, int c, int cap,
              int size_cap, int k_base, const std::string &out_path,
              const std::string &stats_path) {
    GraphHandle h;
    load_graph(graph_path, h);
    std::string lists = read_file(lists_path);
    char *colouring = nullptr;
    char *stats = nullptr;
    // the library re-verifies before returning; failure surfaces here
    if (ltc_colour(h.g, lists.c_str(), c, cap, size_cap, k_base, &colouring, &stats) != LTC_OK)
        fail_api("color");
    emit(take(colouring), out_path);
    std::string stats_text = take(stats);
    if (!stats_path.empty())
        write_file(stats_path, stats_text + "\n");
    else
        std::cerr << stats_text << "\n";
    return 0;
}

int run_verify(const std::string &graph_path, const std::string &lists_path,
               const std::string &colouring_path) {
    GraphHandle h;
    load_graph(graph_path, h);
    std::string colouring = read_file(colouring_path);
    std::string lists;
    if (!lists_path.empty()) lists = read_file(lists_path);
    int ok = 0;
    char *report = nullptr;
    if (ltc_verify(h.g, lists_path.empty() ? nullptr : lists.c_str(), colouring.c_str(), &ok,
                   &report) != LTC_OK)
        fail_api("verify");
    std::cout << take(report) << "\n";
    return ok ? 0 : 1;
}

// ---- experiment ---------------------------------------------------------------

int run_experiment(const std::string &config_path, const std::string &out_path) {
    json cfg;
    try {
        cfg = json::parse(read_file(config_path));
    } catch (const json::exception &e) {
        fail(std::string("config parse error: ") + e.what());
    }
    const std::string family = cfg.value("family", "sp");
    const std::vector<int> sizes = cfg.at("sizes").get<std::vector<int>>();
    const int trials = cfg.value("trials", 1);
    const std::uint64_t base_seed = cfg.value("seed", 1ULL);
    const int list_size = cfg.value("list_size", 4);
    const int universe = cfg.value("universe", 2 * list_size);
    const json params = cfg.value("params", json::object());
    const int c = params.value("c", 4);
    const int cap = params.value("cap", 4);
    const int size_cap = params.value("size_cap", 4);
    const int k_base = params.value("k_base", 0);
    if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end()))
        fail("config sizes must be non-empty and ascending");
    if (trials < 1) fail("config trials must be >= 1");

    json table = json::array();
    std::vector<double> log_n, med_rounds;
    std::uint64_t run_index = 0;
    for (int n : sizes) {
        std::vector<int> rounds;
        int max_rounds = 0;
        double min_progress = 1.0;
        for (int trial = 0; trial < trials; ++trial, ++run_index) {
            GraphHandle h;
            if (ltc_graph_generate(family.c_str(), n, 0, base_seed + 2 * run_index, &h.g) !=
                LTC_OK)
                fail_api("experiment gen");
            char *lists = nullptr;
            if (ltc_random_lists(h.g, list_size, universe, base_seed + 2 * run_index + 1,
                                 &lists) != LTC_OK)
                fail_api("experiment lists");
            std::string lists_text = take(lists);
            char *colouring = nullptr;
            char *stats_raw = nullptr;
            if (ltc_colour(h.g, lists_text.c_str(), c, cap, size_cap, k_base, &colouring,
                           &stats_raw) != LTC_OK)
                fail_api("experiment color");
            ltc_string_free(colouring);
            json stats = json::parse(take(stats_raw));
            if (stats.at("verified") != true) fail("experiment run failed verification");
            int r = stats.at("rounds").get<int>();
            rounds.push_back(r);
            max_rounds = std::max(max_rounds, r);
            for (const auto &level : stats.at("levels"))
                min_progress =
                    std::min(min_progress, level.at("removed").get<double>() /
                                               level.at("remaining").get<double>());
        }
        std::sort(rounds.begin(), rounds.end());
        double median = rounds.size() % 2 == 1
                            ? rounds[rounds.size() / 2]
                            : (rounds[rounds.size() / 2 - 1] + rounds[rounds.size() / 2]) / 2.0;
        table.push_back({{"n", n},
                         {"median_rounds", median},
                         {"max_rounds", max_rounds},
                         {"min_progress", min_progress}});
        log_n.push_back(std::log2(static_cast<double>(n)));
        med_rounds.push_back(median);
    }

    // least-squares fit median_rounds ~ a * log2(n) + b
    const double m = static_cast<double>(log_n.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < log_n.size(); ++i) {
        sx += log_n[i];
        sy += med_rounds[i];
        sxx += log_n[i] * log_n[i];
        sxy += log_n[i] * med_rounds[i];
    }
    double denom = m * sxx - sx * sx;
    double a = denom != 0 ? (m * sxy - sx * sy) / denom : 0.0;
    double b = denom != 0 ? (sy - a * sx) / m : sy / m;
    double max_residual_pct = 0;
    for (size_t i = 0; i < log_n.size(); ++i) {
        double predicted = a * log_n[i] + b;
        if (med_rounds[i] > 0)
            max_residual_pct = std::max(
                max_residual_pct, 100.0 * std::abs(med_rounds[i] - predicted) / med_rounds[i]);
    }

    json out{{"family", family},
             {"trials", trials},
             {"table", table},
             {"fit", {{"a", a}, {"b", b}, {"max_residual_pct", max_residual_pct}}}};
    emit(out.dump(2), out_path);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"deterministic LOCAL-model list colouring toolkit"};
    app.require_subcommand(1);

    // gen
    std::string family, out_path;
    int n = 0, t = 4;
    std::uint64_t seed = 0;
    auto *gen = app.add_subcommand("gen", "generate a graph as canonical JSON");
    gen->add_option("--family", family, "necklace|sp|planar|wagner-sum|v8")->required();
    gen->add_option("--n", n, "target vertex count (family-dependent)");
    gen->add_option("--t", t, "clique order for necklace");
    auto *seed_opt = gen->add_option("--seed", seed, "generator seed");
    gen->add_option("-o,--output", out_path, "output path (default stdout)");
    int list_size = 0, universe = 0;
    std::string lists_out;
    gen->add_option("--list-size", list_size, "also emit random lists of this size");
    gen->add_option("--universe", universe, "colour universe for --list-size");
    gen->add_option("--lists-o", lists_out, "output path for the lists");

    // check minor-free / check local
    std::string check_graph;
    int check_t = 4, radius = 1;
    std::uint64_t budget = 0;
    auto *check = app.add_subcommand("check", "minor-freeness checks");
    check->require_subcommand(1);
    auto *mf = check->add_subcommand("minor-free", "is the graph K_t-minor-free?");
    mf->add_option("--t", check_t, "3, 4 or 5")->required();
    mf->add_option("--budget", budget, "search budget (0 = default)");
    mf->add_option("graph", check_graph, "graph JSON path")->required();
    auto *loc = check->add_subcommand("local", "is every radius-r ball K_t-minor-free?");
    loc->add_option("--t", check_t, "3, 4 or 5")->required();
    loc->add_option("--radius", radius, "ball radius")->required();
    loc->add_option("--budget", budget, "search budget (0 = default)");
    loc->add_option("graph", check_graph, "graph JSON path")->required();

    // color
    std::string color_graph, lists_path, stats_path;
    int c = 4, cap = 4, size_cap = 4, k_base = 0;
    auto *color = app.add_subcommand("color", "distributed list colouring (self-verifying)");
    color->add_option("--lists", lists_path, "list assignment JSON path")->required();
    color->add_option("--c", c, "guaranteed list size");
    color->add_option("--cap", cap, "pocket degree cap");
    color->add_option("--size-cap", size_cap, "pocket size cap");
    color->add_option("--k-base", k_base, "base-case radius bound (0 = default)");
    color->add_option("-o,--output", out_path, "colouring output path (default stdout)");
    color->add_option("--stats", stats_path, "stats output path (default stderr)");
    color->add_option("graph", color_graph, "graph JSON path")->required();

    // verify
    std::string verify_graph, colouring_path;
    auto *verify = app.add_subcommand("verify", "independent colouring verification");
    verify->add_option("--lists", lists_path, "list assignment JSON path (optional)");
    verify->add_option("--coloring", colouring_path, "colouring JSON path")->required();
    verify->add_option("graph", verify_graph, "graph JSON path")->required();

    // experiment scaling
    std::string config_path;
    auto *experiment = app.add_subcommand("experiment", "batch experiments");
    experiment->require_subcommand(1);
    auto *scaling = experiment->add_subcommand("scaling", "rounds-vs-size scaling study");
    scaling->add_option("--config", config_path, "experiment config JSON path")->required();
    scaling->add_option("-o,--output", out_path, "results output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(family, n, t, seed, seed_opt->count() > 0, out_path, list_size,
                           universe, lists_out);
        if (mf->parsed()) return run_check_minor_free(check_graph, check_t, budget);
        if (loc->parsed()) return run_check_local(check_graph, check_t, radius, budget);
        if (color->parsed())
            return run_color(color_graph, lists_path, c, cap, size_cap, k_base, out_path,
                             stats_path);
        if (verify->parsed()) return run_verify(verify_graph, lists_path, colouring_path);
        if (scaling->parsed()) return run_experiment(config_path, out_path);
    } catch (const CommandError &e) {
        std::cerr << json{{"error", e.message}}.dump() << "\n";
        return e.exit_code;
    } catch (const std::exception &e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 1;
}
