// tnt: command-line front end.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tnt/canonical.hpp"
#include "tnt/constructions.hpp"
#include "tnt/counting.hpp"
#include "tnt/graph_io.hpp"
#include "tnt/harness.hpp"
#include "tnt/hypergraph.hpp"
#include "tnt/search.hpp"
#include "tnt/serialize.hpp"

namespace {

using namespace tnt;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

struct Config {
    std::string cache_dir;
    std::string output; // empty: per-command default
    int n_cap = kAdvisoryCap;
};

std::string resolve_cache_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("TNT_CACHE_DIR"); env && *env)
        return env;
    return ".tnt-cache";
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Graph load_graph_file(const std::string& path)
{
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::string text = slurp(path);
        std::string line = text.substr(0, text.find('\n'));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return graph6_decode(line);
    }
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return read_adjacency_list(in);
}

Hypergraph load_hypergraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return read_hypergraph(in);
}

std::string join(const std::vector<int>& xs, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

std::vector<int> parse_ints(const std::string& text)
{
    if (text.empty())
        return {};
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("bad integer list '" + text + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------- count

struct CountArgs {
    std::string g6, file, construct, pattern;
};

int cmd_count(const CountArgs& args, const Config& cfg)
{
    Graph g;
    int sources = !args.g6.empty() + !args.file.empty() + !args.construct.empty();
    if (sources != 1)
        throw InputError("give exactly one of --g6, --file, --construct");
    if (!args.g6.empty())
        g = graph6_decode(args.g6);
    else if (!args.file.empty())
        g = load_graph_file(args.file);
    else {
        Json spec;
        try {
            spec = Json::parse(args.construct);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("construction spec: ") + e.what());
        }
        g = build(spec.get<ConstructionSpec>());
    }
    MultipartitePattern p = MultipartitePattern::parse(args.pattern);
    Count c = count_multipartite(g, p);
    std::string mode = cfg.output.empty() ? "plain" : cfg.output;
    if (mode == "json")
        std::cout << Json{{"n", g.order()},
                          {"edges", g.edge_count()},
                          {"pattern", p},
                          {"count", c},
                          {"canonical", canonical_form(g).bytes}}
                         .dump(2)
                  << '\n';
    else if (mode == "csv")
        std::cout << "n,pattern,count\n" << g.order() << ',' << join(p.parts(), ";") << ',' << c << '\n';
    else
        std::cout << c << '\n';
    return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    int n = 0;
    std::string pattern, forbid, engine = "exhaustive";
    long budget = 10'000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool force = false, no_cache = false, prune = false;
};

int cmd_search(const SearchArgs& args, const Config& cfg)
{
    SearchOptions opts;
    opts.engine = engine_from_string(args.engine);
    opts.workers = args.workers;
    opts.budget = args.budget;
    opts.seed = args.seed;
    opts.force = args.force;
    opts.prune_bounds = args.prune;
    if (opts.engine == Engine::exhaustive && args.n > cfg.n_cap && !args.force)
        throw SearchCapError("n = " + std::to_string(args.n) + " exceeds the exhaustive cap " +
                             std::to_string(cfg.n_cap) + "; pass --force to run anyway");
    MultipartitePattern h = MultipartitePattern::parse(args.pattern);
    MultipartitePattern f = MultipartitePattern::parse(args.forbid);
    SearchResult r;
    // Pruned runs skip the cache: the key does not record the option.
    if (args.no_cache || args.prune) {
        r = run_search(args.n, h, f, opts);
    } else {
        ResultCache cache(resolve_cache_dir(cfg.cache_dir));
        r = cache.get_or_compute(args.n, h, f, opts);
    }
    std::string mode = cfg.output.empty() ? "json" : cfg.output;
    if (mode == "json")
        std::cout << Json(r).dump(2) << '\n';
    else if (mode == "csv")
        std::cout << "n,H,F,value,exhaustive,engine,certificates\n"
                  << r.n << ',' << join(r.h.parts(), ";") << ',' << join(r.f.parts(), ";") << ',' << r.value << ','
                  << (r.exhaustive ? "true" : "false") << ',' << to_string(r.engine) << ','
                  << r.certificates.size() << '\n';
    else
        std::cout << r.value << '\n';
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string filter = "*";
    int n_max = 9;
    unsigned workers = 1;
    std::string claim, params;
    int n_lo = 0, n_hi = 0;
    std::uint64_t seed = 0;
};

void print_plain(const SuiteReport& report)
{
    for (const auto& r : report.records) {
        std::cout << r.claim_id << " [" << join(r.params, ",") << "] " << to_string(r.status);
        if (r.threshold)
            std::cout << " (n* = " << *r.threshold << ")";
        std::cout << '\n';
        for (const auto& row : r.rows) {
            std::cout << "  n=" << row.n << " value=" << row.value;
            if (row.reference)
                std::cout << " reference=" << *row.reference;
            std::cout << (row.holds ? " ok" : " FAIL");
            if (!row.note.empty())
                std::cout << "  " << row.note;
            std::cout << '\n';
        }
        if (!r.details.empty())
            std::cout << "  " << r.details << '\n';
    }
}

int cmd_verify(const VerifyArgs& args, const Config& cfg)
{
    if (args.n_max > kHardCap)
        throw SearchCapError("--n-max above " + std::to_string(kHardCap));
    SuiteReport report;
    if (!args.claim.empty()) {
        ResultCache cache(resolve_cache_dir(cfg.cache_dir));
        HarnessConfig hc;
        hc.n_max = args.n_max;
        hc.workers = args.workers;
        hc.seed = args.seed;
        std::vector<int> params = parse_ints(args.params);
        auto range = std::pair{args.n_lo, args.n_hi > 0 ? args.n_hi : args.n_max};
        if (args.params.empty()) {
            for (const auto& c : default_cases(args.claim))
                report.records.push_back(run_claim(args.claim, c.params, c.n_range, &cache, hc));
        } else {
            report.records.push_back(run_claim(args.claim, params, range, &cache, hc));
        }
        for (const auto& r : report.records)
            report.any_mismatch = report.any_mismatch || r.status == ClaimStatus::mismatch;
    } else {
        report = run_suite(args.filter, args.n_max, resolve_cache_dir(cfg.cache_dir), args.workers);
    }
    std::string mode = cfg.output.empty() ? "csv" : cfg.output;
    if (mode == "json")
        std::cout << suite_json(report).dump(2) << '\n';
    else if (mode == "csv")
        std::cout << suite_csv(report);
    else
        print_plain(report);
    return report.any_mismatch ? kMismatch : kOk;
}

// ---------------------------------------------------------------- hyper

struct HyperArgs {
    std::string file, pattern, mode = "berge", rule = "lowest_lex", out;
    int a = 0, b = 0, s = 0, p = 0, n = 0, r = 0;
    long edges = -1;
    std::uint64_t seed = 0;
};

BergeMode mode_from(const std::string& m)
{
    if (m == "berge")
        return BergeMode::berge;
    if (m == "expansion")
        return BergeMode::expansion;
    throw InputError("unknown mode '" + m + "' (berge or expansion)");
}

PlacementRule rule_from(const std::string& r)
{
    if (r == "lowest_lex")
        return PlacementRule::lowest_lex;
    if (r == "seeded_random")
        return PlacementRule::seeded_random;
    throw InputError("unknown rule '" + r + "' (lowest_lex or seeded_random)");
}

int hyper_girth(const HyperArgs& args, const Config& cfg)
{
    Hypergraph h = load_hypergraph(args.file);
    auto g = berge_girth(h);
    if (cfg.output == "json")
        std::cout << Json{{"girth", g ? Json(*g) : Json(nullptr)}, {"linear", is_linear(h)}}.dump() << '\n';
    else
        std::cout << (g ? std::to_string(*g) : "acyclic") << '\n';
    return kOk;
}

int hyper_berge(const HyperArgs& args, const Config& cfg)
{
    Hypergraph h = load_hypergraph(args.file);
    BergeQuery q{MultipartitePattern::parse(args.pattern), mode_from(args.mode)};
    bool found = contains_berge(h, q);
    if (cfg.output == "json")
        std::cout << Json{{"pattern", q.pattern}, {"mode", args.mode}, {"contains", found}}.dump() << '\n';
    else
        std::cout << (found ? "true" : "false") << '\n';
    return kOk;
}

int hyper_place(const HyperArgs& args, const Config& cfg)
{
    Hypergraph h = load_hypergraph(args.file);
    Graph g = place_bipartite(h, args.a, args.b, rule_from(args.rule), args.seed);
    if (cfg.output == "json")
        std::cout << Json{{"graph6", graph6_encode(g)}, {"n", g.order()}, {"edges", g.edge_count()}}.dump() << '\n';
    else
        std::cout << graph6_encode(g) << '\n';
    return kOk;
}

int hyper_premises(const HyperArgs& args, const Config& cfg)
{
    Hypergraph h = load_hypergraph(args.file);
    PlacementReport rep = check_placement_premises(h, args.s, args.p, args.a, args.b, mode_from(args.mode),
                                                   rule_from(args.rule));
    if (cfg.output == "plain")
        std::cout << "premises " << (rep.premises_hold ? "hold" : "fail") << ", t0 = " << rep.t0
                  << ", placement " << (rep.placed_free ? "free" : "not certified free") << '\n';
    else
        std::cout << Json(rep).dump(2) << '\n';
    return kOk;
}

int hyper_gen(const HyperArgs& args, const Config& cfg)
{
    std::optional<std::size_t> target;
    if (args.edges >= 0)
        target = static_cast<std::size_t>(args.edges);
    Hypergraph h = generate_girth5_linear(args.n, args.r, args.seed, target);
    std::ostringstream text;
    if (cfg.output == "json")
        text << Json(h).dump(2) << '\n';
    else
        write_hypergraph(text, h);
    if (args.out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(args.out);
        if (!(out << text.str()))
            throw InputError("cannot write '" + args.out + "'");
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tnt: generalized Turan numbers of complete bipartite graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand
    app.set_version_flag("--version", std::string(kToolVersion));

    Config cfg;
    app.add_option("--cache-dir", cfg.cache_dir, "Result cache directory (overrides TNT_CACHE_DIR)");
    app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--n-cap", cfg.n_cap, "Exhaustive order cap without --force")->check(CLI::Range(1, kHardCap));

    int code = kOk;
    std::function<int()> action;

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count copies of a complete multipartite pattern");
    count->add_option("--g6", count_args.g6, "Graph in graph6");
    count->add_option("--file", count_args.file, "Graph file (.g6, otherwise adjacency list)");
    count->add_option("--construct", count_args.construct, "Construction spec as JSON");
    count->add_option("--pattern", count_args.pattern, "Part sizes, e.g. 2,3")->required();
    count->callback([&] { action = [&] { return cmd_count(count_args, cfg); }; });

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Maximize copies of H over F-free graphs");
    search->add_option("--n", search_args.n, "Number of vertices")->required()->check(CLI::Range(1, kMaxVertices));
    search->add_option("--pattern", search_args.pattern, "Counted pattern H")->required();
    search->add_option("--forbid", search_args.forbid, "Forbidden pattern F")->required();
    search->add_option("--engine", search_args.engine, "exhaustive or heuristic")
        ->check(CLI::IsMember({"exhaustive", "heuristic"}));
    search->add_option("--budget", search_args.budget, "Heuristic iterations")->check(CLI::PositiveNumber);
    search->add_option("--seed", search_args.seed, "Heuristic seed");
    search->add_option("--workers", search_args.workers, "Worker threads")->check(CLI::Range(1U, 256U));
    search->add_flag("--force", search_args.force, "Allow exhaustive runs above the advisory cap");
    search->add_flag("--prune", search_args.prune, "Bound-based pruning with a heuristic incumbent");
    search->add_flag("--no-cache", search_args.no_cache, "Neither read nor write the cache");
    search->callback([&] { action = [&] { return cmd_search(search_args, cfg); }; });

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check registered claims against exhaustive search");
    verify->add_option("--filter", verify_args.filter, "Shell glob over claim ids");
    verify->add_option("--n-max", verify_args.n_max, "Largest order searched")->check(CLI::Range(1, kHardCap));
    verify->add_option("--workers", verify_args.workers, "Worker threads")->check(CLI::Range(1U, 256U));
    verify->add_option("--claim", verify_args.claim, "Run one claim (overrides --filter)");
    verify->add_option("--params", verify_args.params, "Claim parameters, comma separated");
    verify->add_option("--n-lo", verify_args.n_lo, "Smallest order for --params");
    verify->add_option("--n-hi", verify_args.n_hi, "Largest order for --params");
    verify->add_option("--seed", verify_args.seed, "Seed for randomized constructions");
    verify->callback([&] { action = [&] { return cmd_verify(verify_args, cfg); }; });

    HyperArgs hyper_args;
    auto* hyper = app.add_subcommand("hyper", "Hypergraph tools");
    hyper->require_subcommand(1);
    auto* girth = hyper->add_subcommand("girth", "Berge girth");
    girth->add_option("--file", hyper_args.file, "Hypergraph file")->required();
    girth->callback([&] { action = [&] { return hyper_girth(hyper_args, cfg); }; });
    auto* berge = hyper->add_subcommand("berge", "Berge containment of a complete multipartite pattern");
    berge->add_option("--file", hyper_args.file, "Hypergraph file")->required();
    berge->add_option("--pattern", hyper_args.pattern, "Pattern part sizes")->required();
    berge->add_option("--mode", hyper_args.mode, "berge or expansion");
    berge->callback([&] { action = [&] { return hyper_berge(hyper_args, cfg); }; });
    auto* place = hyper->add_subcommand("place", "Place K_{a,b} into every hyperedge");
    place->add_option("--file", hyper_args.file, "Hypergraph file")->required();
    place->add_option("--a", hyper_args.a, "Small side")->required();
    place->add_option("--b", hyper_args.b, "Large side")->required();
    place->add_option("--rule", hyper_args.rule, "lowest_lex or seeded_random");
    place->add_option("--seed", hyper_args.seed, "Seed for seeded_random");
    place->callback([&] { action = [&] { return hyper_place(hyper_args, cfg); }; });
    auto* premises = hyper->add_subcommand("premises", "Check placement premises and threshold");
    premises->add_option("--file", hyper_args.file, "Hypergraph file")->required();
    premises->add_option("--s", hyper_args.s, "s")->required();
    premises->add_option("--p", hyper_args.p, "p")->required();
    premises->add_option("--a", hyper_args.a, "a")->required();
    premises->add_option("--b", hyper_args.b, "b")->required();
    premises->add_option("--mode", hyper_args.mode, "berge or expansion");
    premises->add_option("--rule", hyper_args.rule, "lowest_lex or seeded_random");
    premises->callback([&] { action = [&] { return hyper_premises(hyper_args, cfg); }; });
    auto* gen = hyper->add_subcommand("gen", "Random linear hypergraph with Berge girth at least 5");
    gen->add_option("--n", hyper_args.n, "Vertices")->required();
    gen->add_option("--r", hyper_args.r, "Uniformity")->required();
    gen->add_option("--seed", hyper_args.seed, "Seed");
    gen->add_option("--edges", hyper_args.edges, "Stop at this many edges");
    gen->add_option("--out", hyper_args.out, "Write to a file instead of stdout");
    gen->callback([&] { action = [&] { return hyper_gen(hyper_args, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        code = action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CacheError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return code;
}
