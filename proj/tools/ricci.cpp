// ricci - exact graph-curvature engine CLI.
//
// Subcommands:
//   edge    per-edge curvature report (kappa, kappa_0, kappa_alpha, flags)
//   scan    batch-classify a file of graph6 lines (CSV or JSON lines)
//   census  enumerate connected regular graphs and classify them
//   family  emit a named graph family as graph6 or an edge list

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ricci/ricci.hpp"

namespace {

using nlohmann::json;
using namespace ricci;

json rational_json(const Rational& r)
{
    std::ostringstream decimal;
    decimal.precision(12);
    decimal << r.to_double();
    return json{{"num", r.num()}, {"den", r.den()}, {"decimal", decimal.str()}};
}

int exit_code_for(const error& e)
{
    switch (e.code()) {
    case errc::malformed_graph6:
    case errc::malformed_edge_list:
    case errc::unsupported_size:
    case errc::invalid_params:
    case errc::unknown_fixture:
        return 2;
    case errc::out_of_supported_range:
    case errc::too_large:
        return 4;
    case errc::division_by_zero:
    case errc::arithmetic_overflow:
        return 1;
    default:
        return 3; // domain precondition
    }
}

// --- family spec grammar: name[:p1[,p2]]; `product` consumes two nested specs ---

Graph parse_family_tokens(const std::vector<std::string>& tokens, std::size_t& pos)
{
    if (pos >= tokens.size())
        fail(errc::invalid_params, "family spec expected; grammar: name[:p1[,p2]] "
                                   "(product takes two nested specs)");
    std::string token = tokens[pos++];
    std::string name = token;
    std::vector<int> params;
    if (auto colon = token.find(':'); colon != std::string::npos) {
        name = token.substr(0, colon);
        std::string rest = token.substr(colon + 1);
        std::istringstream in(rest);
        std::string field;
        while (std::getline(in, field, ',')) {
            try {
                params.push_back(std::stoi(field));
            } catch (const std::logic_error&) {
                fail(errc::invalid_params, "bad family parameter '" + field + "'");
            }
        }
        if (params.empty()) fail(errc::invalid_params, "empty parameter list in '" + token + "'");
    }

    if (name == "product") {
        if (!params.empty()) fail(errc::invalid_params, "product takes nested specs, not parameters");
        Graph a = parse_family_tokens(tokens, pos);
        Graph b = parse_family_tokens(tokens, pos);
        return cartesian_product(a, b);
    }

    static const std::map<std::string, Family> names{
        {"cycle", Family::cycle},
        {"path", Family::path},
        {"star", Family::star},
        {"complete", Family::complete},
        {"kbipartite", Family::complete_bipartite},
        {"hypercube", Family::hypercube},
        {"cocktail", Family::cocktail_party},
        {"petersen", Family::petersen},
        {"dodecahedral", Family::dodecahedral},
        {"prism", Family::prism},
        {"moebius", Family::moebius_ladder},
        {"bi", Family::bone_idle_ring},
        {"sharpness", Family::sharpness},
    };
    if (auto it = names.find(name); it != names.end())
        return generate({it->second, params, ""});
    if (name == "example1" || name == "example2" || name == "counterexample_9v4r")
        return figure_fixture(name);
    fail(errc::invalid_params,
         "unknown family '" + name +
             "'; names: cycle, path, star, complete, kbipartite, hypercube, cocktail, "
             "petersen, dodecahedral, prism, moebius, bi, sharpness, product");
}

Graph parse_family_spec(const std::string& spec)
{
    std::vector<std::string> tokens;
    std::istringstream in(spec);
    std::string token;
    while (in >> token) tokens.push_back(token);
    std::size_t pos = 0;
    Graph g = parse_family_tokens(tokens, pos);
    if (pos != tokens.size()) fail(errc::invalid_params, "trailing tokens in family spec");
    return g;
}

Graph load_graph(const std::string& family_spec, const std::string& file)
{
    if (!family_spec.empty()) return parse_family_spec(family_spec);
    std::ifstream in(file);
    if (!in) fail(errc::invalid_params, "cannot open '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

// --- edge ---

int cmd_edge(const std::string& family_spec, const std::string& file, int x, int y,
             const std::vector<std::string>& alpha_args, bool as_json)
{
    Graph g = load_graph(family_spec, file);
    CurvatureReport report = edge_report(g, x, y);
    std::vector<std::pair<Rational, Rational>> alpha_table;
    for (const std::string& arg : alpha_args) {
        Rational alpha = Rational::parse(arg);
        alpha_table.emplace_back(alpha, kappa_alpha(g, x, y, alpha));
    }

    if (as_json) {
        json out{{"x", report.x},
                 {"y", report.y},
                 {"deg", {report.deg_x, report.deg_y}},
                 {"triangles", report.triangle_count},
                 {"kappa", rational_json(report.kappa)},
                 {"kappa0", rational_json(report.kappa0)},
                 {"breakpoint", rational_json(report.breakpoint)},
                 {"flags",
                  {{"ricci_flat_edge", report.is_ricci_flat_edge},
                   {"zero_ricci_flat_edge", report.is_zero_ricci_flat_edge},
                   {"bone_idle_edge", report.is_bone_idle_edge}}}};
        if (report.gap_numerator) out["gap_numerator"] = *report.gap_numerator;
        json alphas = json::array();
        for (const auto& [alpha, value] : alpha_table)
            alphas.push_back({{"alpha", rational_json(alpha)}, {"kappa_alpha", rational_json(value)}});
        out["alphas"] = alphas;
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "edge " << report.x << " ~ " << report.y << "  (deg " << report.deg_x << ", "
              << report.deg_y << ", triangles " << report.triangle_count << ")\n";
    std::cout << "  kappa      = " << report.kappa << "\n";
    std::cout << "  kappa_0    = " << report.kappa0 << "\n";
    std::cout << "  breakpoint = " << report.breakpoint << "\n";
    if (report.gap_numerator)
        std::cout << "  gap        = " << *report.gap_numerator << "/" << report.deg_x << "\n";
    std::cout << "  flags      = ricci_flat:" << (report.is_ricci_flat_edge ? "yes" : "no")
              << " zero_ricci_flat:" << (report.is_zero_ricci_flat_edge ? "yes" : "no")
              << " bone_idle:" << (report.is_bone_idle_edge ? "yes" : "no") << "\n";
    for (const auto& [alpha, value] : alpha_table)
        std::cout << "  kappa_" << alpha << " = " << value << "\n";
    return 0;
}

// --- scan ---

struct ScanOutcome {
    std::optional<GraphClass> cls;
    int n = 0;
    std::optional<int> degree;
    std::vector<CurvatureReport> details;
    std::string parse_error; // nonempty for malformed lines
};

ScanOutcome scan_line(const std::string& line, bool want_details)
{
    ScanOutcome out;
    Graph g;
    try {
        g = parse_graph6(line);
    } catch (const error& e) {
        out.parse_error = e.what();
        return out;
    }
    out.n = g.order();
    out.degree = g.regular_degree();
    try {
        out.cls = classify_graph(g, want_details ? &out.details : nullptr);
    } catch (const error& e) {
        if (e.code() != errc::disconnected && e.code() != errc::no_edges) throw;
        // record stays unclassified
    }
    return out;
}

std::string render_csv(std::size_t id, const ScanOutcome& out)
{
    std::ostringstream row;
    row << id << ',' << out.n << ',';
    if (out.degree) row << *out.degree;
    else row << "irregular";
    if (out.cls) {
        row << ',' << out.cls->ric_min.num() << ',' << out.cls->ric_min.den() << ','
            << (out.cls->ricci_flat ? 1 : 0) << ',' << (out.cls->zero_ricci_flat ? 1 : 0) << ','
            << (out.cls->bone_idle ? 1 : 0);
    } else {
        row << ",,,,," ;
    }
    return row.str();
}

json report_json(const CurvatureReport& r)
{
    json out{{"x", r.x},
             {"y", r.y},
             {"deg", {r.deg_x, r.deg_y}},
             {"triangles", r.triangle_count},
             {"kappa", rational_json(r.kappa)},
             {"kappa0", rational_json(r.kappa0)},
             {"flags",
              {{"ricci_flat_edge", r.is_ricci_flat_edge},
               {"zero_ricci_flat_edge", r.is_zero_ricci_flat_edge},
               {"bone_idle_edge", r.is_bone_idle_edge}}}};
    if (r.gap_numerator) out["gap_numerator"] = *r.gap_numerator;
    return out;
}

std::string render_json(std::size_t id, const ScanOutcome& out, bool want_details)
{
    json rec{{"id", id}, {"n", out.n}};
    if (out.degree) rec["d"] = *out.degree;
    else rec["d"] = "irregular";
    if (out.cls) {
        rec["ric_min"] = rational_json(out.cls->ric_min);
        rec["flags"] = {{"ricci_flat", out.cls->ricci_flat},
                        {"zero_ricci_flat", out.cls->zero_ricci_flat},
                        {"bone_idle", out.cls->bone_idle}};
    } else {
        rec["ric_min"] = nullptr;
        rec["flags"] = {{"ricci_flat", false}, {"zero_ricci_flat", false}, {"bone_idle", false}};
    }
    if (want_details) {
        json edges = json::array();
        for (const CurvatureReport& r : out.details) edges.push_back(report_json(r));
        rec["edges"] = edges;
    }
    return rec.dump();
}

int default_jobs()
{
    if (const char* env = std::getenv("RICCI_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

int cmd_scan(const std::string& path, int jobs, const std::string& emit, bool detail, bool strict)
{
    if (detail && emit != "json")
        fail(errc::invalid_params, "--detail requires --emit json");

    std::vector<std::string> lines;
    {
        std::ifstream file;
        if (path != "-") {
            file.open(path);
            if (!file) fail(errc::invalid_params, "cannot open '" + path + "'");
        }
        std::istream& in = (path == "-") ? std::cin : file;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    }

    std::size_t total = lines.size();
    std::vector<std::optional<ScanOutcome>> results(total);
    std::mutex mtx;
    std::condition_variable produced;
    std::condition_variable window_open;
    std::size_t emit_base = 0;
    std::atomic<std::size_t> next_claim{0};
    std::atomic<bool> cancelled{false};
    const std::size_t window = static_cast<std::size_t>(std::max(16, 4 * jobs));

    auto worker = [&]() {
        while (!cancelled.load()) {
            std::size_t i = next_claim.fetch_add(1);
            if (i >= total) return;
            {
                std::unique_lock<std::mutex> lock(mtx);
                window_open.wait(lock, [&] { return cancelled.load() || i < emit_base + window; });
                if (cancelled.load()) return;
            }
            ScanOutcome out = scan_line(lines[i], detail);
            {
                std::lock_guard<std::mutex> lock(mtx);
                results[i] = std::move(out);
            }
            produced.notify_all();
        }
    };

    std::vector<std::thread> pool;
    int thread_count = std::max(1, jobs);
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);

    bool csv = emit == "csv";
    if (csv) std::cout << "id,n,regular_degree,ric_min_num,ric_min_den,ricci_flat,zero_ricci_flat,bone_idle\n";

    std::size_t failures = 0;
    std::size_t counted = 0;
    std::size_t ric_positive = 0;
    std::size_t ricci_flat = 0;
    std::size_t bone_idle = 0;
    for (std::size_t i = 0; i < total && !cancelled.load(); ++i) {
        ScanOutcome out;
        {
            std::unique_lock<std::mutex> lock(mtx);
            produced.wait(lock, [&] { return results[i].has_value(); });
            out = std::move(*results[i]);
            results[i].reset();
            ++emit_base;
        }
        window_open.notify_all();
        if (!out.parse_error.empty()) {
            ++failures;
            std::cerr << "line " << (i + 1) << ": " << out.parse_error << "\n";
            if (strict) cancelled.store(true);
            continue;
        }
        ++counted;
        if (out.cls) {
            if (out.cls->ric_min > Rational(0)) ++ric_positive;
            if (out.cls->ricci_flat) ++ricci_flat;
            if (out.cls->bone_idle) ++bone_idle;
        }
        std::cout << (csv ? render_csv(i + 1, out) : render_json(i + 1, out, detail)) << "\n";
    }
    cancelled.store(true);
    window_open.notify_all();
    for (std::thread& t : pool) t.join();

    if (csv) {
        std::cout << "# total=" << counted << " ric_positive=" << ric_positive
                  << " ricci_flat=" << ricci_flat << " bone_idle=" << bone_idle << "\n";
    } else {
        json summary{{"summary",
                      {{"total", counted},
                       {"ric_positive", ric_positive},
                       {"ricci_flat", ricci_flat},
                       {"bone_idle", bone_idle}}}};
        std::cout << summary.dump() << "\n";
    }
    return failures > 0 ? 2 : 0;
}

// --- census ---

int cmd_census(int n, int d, bool as_json, bool list_graphs)
{
    if (list_graphs) {
        for (const Graph& g : enumerate_regular({n, d})) std::cout << emit_graph6(g) << "\n";
        return 0;
    }
    CensusTable table = census_with_classification({n, d});
    if (as_json) {
        json out{{"n", n},
                 {"d", d},
                 {"total", table.total},
                 {"ric_positive", table.ric_positive},
                 {"ricci_flat", table.ricci_flat},
                 {"bone_idle", table.bone_idle}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "n=" << n << " d=" << d << ": total=" << table.total
                  << " ric_positive=" << table.ric_positive << " ricci_flat=" << table.ricci_flat
                  << " bone_idle=" << table.bone_idle << "\n";
    }
    return 0;
}

// --- family ---

int cmd_family(const std::vector<std::string>& tokens, const std::string& format)
{
    std::size_t pos = 0;
    Graph g = parse_family_tokens(tokens, pos);
    if (pos != tokens.size()) fail(errc::invalid_params, "trailing tokens in family spec");
    if (format == "graph6") std::cout << emit_graph6(g) << "\n";
    else std::cout << emit_edge_list(g);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Ollivier-Ricci / Lin-Lu-Yau graph curvature engine"};
    app.require_subcommand(1);

    // edge
    auto* edge = app.add_subcommand("edge", "curvature report for one edge");
    std::string edge_family;
    std::string edge_file;
    int edge_x = 0;
    int edge_y = 0;
    std::vector<std::string> edge_alphas;
    bool edge_json = false;
    edge->add_option("--family,-F", edge_family, "family spec, e.g. petersen or cocktail:4");
    edge->add_option("--file,-f", edge_file, "edge-list file ('n m' header, then 'u v' lines)");
    edge->add_option("x", edge_x, "first endpoint")->required();
    edge->add_option("y", edge_y, "second endpoint")->required();
    edge->add_option("--alpha,-a", edge_alphas, "idleness value(s) to evaluate, e.g. 1/2");
    edge->add_flag("--json", edge_json, "emit JSON instead of text");

    // scan
    auto* scan = app.add_subcommand("scan", "classify every graph6 line of a file");
    std::string scan_path;
    int scan_jobs = default_jobs();
    std::string scan_emit = "csv";
    bool scan_detail = false;
    bool scan_strict = false;
    scan->add_option("file", scan_path, "graph6 file, one graph per line ('-' for stdin)")->required();
    scan->add_option("--jobs,-j", scan_jobs, "worker threads (default $RICCI_JOBS or 1)");
    scan->add_option("--emit", scan_emit, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_flag("--detail", scan_detail, "attach per-edge reports (json only)");
    scan->add_flag("--strict", scan_strict, "abort on the first malformed line");

    // census
    auto* census = app.add_subcommand("census", "enumerate and classify connected regular graphs");
    int census_n = 0;
    int census_d = 0;
    bool census_json = false;
    bool census_list = false;
    census->add_option("n", census_n, "vertex count")->required();
    census->add_option("d", census_d, "degree")->required();
    census->add_flag("--json", census_json, "emit JSON instead of text");
    census->add_flag("--list", census_list, "emit the graphs themselves as graph6 lines");

    // family
    auto* family = app.add_subcommand("family", "emit a graph family");
    std::vector<std::string> family_tokens;
    std::string family_format = "graph6";
    family->add_option("spec", family_tokens, "family spec, e.g. bi:6 or: product cycle:5 cycle:5")
        ->required();
    family->add_option("--format", family_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*edge) {
            if (edge_family.empty() == edge_file.empty())
                fail(errc::invalid_params, "need exactly one of --family or --file");
            return cmd_edge(edge_family, edge_file, edge_x, edge_y, edge_alphas, edge_json);
        }
        if (*scan) return cmd_scan(scan_path, scan_jobs, scan_emit, scan_detail, scan_strict);
        if (*census) return cmd_census(census_n, census_d, census_json, census_list);
        if (*family) return cmd_family(family_tokens, family_format);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
