#include "shiish/cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiish/arrangement.h"
#include "shiish/bijections.h"
#include "shiish/counting.h"
#include "shiish/ish.h"
#include "shiish/json_io.h"
#include "shiish/shi.h"
#include "shiish/verify.h"

namespace shiish::cli {

using nlohmann::json;

namespace {

constexpr int kEnumerationLimit = 6;
constexpr int kOracleLimit = 4;

struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int n = 3;
    std::string graph = "complete";
    std::string arrangement = "ish";
    std::string bijection = "dominance";
    std::string by;
    std::string format = "json";
    std::string suite = "all";
    std::string input = "-";
    bool inverse = false;
    int jobs = 1;
    bool allow_large = false;

    json to_json() const {
        json j = {{"command", command}, {"n", n}, {"graph", graph}, {"format", format}};
        if (command == "enumerate" || command == "oracle") j["arrangement"] = arrangement;
        if (command == "map") {
            j["bijection"] = bijection;
            j["input"] = input;
            j["inverse"] = inverse;
        }
        if (command == "count") j["by"] = by;
        if (command == "verify") {
            j["suite"] = suite;
            j["jobs"] = jobs;
        }
        j["allow_large"] = allow_large;
        return j;
    }
};

json envelope(const RunConfig& c) {
    json cfg = c.to_json();
    return {{"config", cfg}, {"config_hash", fnv1a_hex(cfg.dump())}};
}

void require_limit(const RunConfig& c, int limit, const char* what) {
    if (c.n > limit && !c.allow_large)
        throw LimitExceeded(std::string(what) + " at n = " + std::to_string(c.n) + " exceeds the default limit " +
                            std::to_string(limit) + "; pass --allow-large");
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

// ---------------------------------------------------------------- count

struct SideCounts {
    long regions = 0;
    long dominant = 0;
    long relatively_bounded = 0;
    std::map<int, long> by_dof;
    std::map<std::string, long> by_partition;

    void add(const SetPartition& cp, int dof, bool dom, bool rb) {
        ++regions;
        dominant += dom;
        relatively_bounded += rb;
        ++by_dof[dof];
        ++by_partition[cp.to_string()];
    }
};

json side_json(const SideCounts& s, const std::string& by) {
    json j = {{"regions", s.regions}};
    if (by.empty() || by == "dominance") {
        j["dominant"] = s.dominant;
        j["non_dominant"] = s.regions - s.dominant;
    }
    if (by.empty()) j["relatively_bounded"] = s.relatively_bounded;
    if (by.empty() || by == "dof") {
        json d = json::object();
        for (auto [k, v] : s.by_dof) d[std::to_string(k)] = v;
        j["by_dof"] = d;
    }
    if (by.empty() || by == "ceiling-partition") j["by_ceiling_partition"] = s.by_partition;
    return j;
}

int cmd_count(const RunConfig& c, std::ostream& out) {
    require_limit(c, kEnumerationLimit, "enumeration");
    Graph g = parse_graph_spec(c.graph, c.n);
    SideCounts shi, ish;
    for_each_shi(c.n, g, [&](const ShiCeilingDiagram& d) {
        auto s = shi_statistics(d);
        shi.add(s.ceiling_partition, s.dof, s.dominant, s.relatively_bounded);
    });
    for_each_ish(c.n, g, [&](const IshCeilingDiagram& d) {
        auto s = ish_statistics(d);
        ish.add(s.ceiling_partition, s.dof, s.dominant, s.relatively_bounded);
    });
    json shi_j = side_json(shi, c.by), ish_j = side_json(ish, c.by);
    if (c.format == "tsv") {
        out << "statistic\tshi\tish\n";
        auto row = [&](const std::string& key, const json& a, const json& b) { out << key << '\t' << a.dump() << '\t' << b.dump() << '\n'; };
        for (const char* key : {"regions", "dominant", "non_dominant", "relatively_bounded"})
            if (shi_j.contains(key)) row(key, shi_j[key], ish_j[key]);
        for (const char* group : {"by_dof", "by_ceiling_partition"}) {
            if (!shi_j.contains(group)) continue;
            json keys = shi_j[group];
            keys.update(ish_j[group]);
            for (auto it = keys.begin(); it != keys.end(); ++it)
                row(std::string(group) + "." + it.key(), shi_j[group].value(it.key(), 0), ish_j[group].value(it.key(), 0));
        }
        const json formula = json::parse(ish_region_count(g).get_str());
        row("formula", formula, formula);
        return exit_pass;
    }
    json j = envelope(c);
    j["graph"] = io::to_json(g);
    j["shi"] = shi_j;
    j["ish"] = ish_j;
    j["formula"] = ish_region_count(g).get_str();
    j["identical"] = shi_j == ish_j;
    out << j.dump(2) << '\n';
    return exit_pass;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
    require_limit(c, kEnumerationLimit, "enumeration");
    Graph g = parse_graph_spec(c.graph, c.n);
    const bool tsv = c.format == "tsv";
    json regions = json::array();
    auto emit = [&](const json& diagram, const std::string& first, const std::string& second, const SetPartition& cp,
                    int dof, bool dominant, bool rb) {
        if (tsv) {
            out << first << '\t' << second << '\t' << cp.to_string() << '\t' << dof << '\t' << dominant << '\t' << rb << '\n';
            return;
        }
        regions.push_back({{"diagram", diagram},
                           {"ceiling_partition", io::to_json(cp)},
                           {"dof", dof},
                           {"dominant", dominant},
                           {"relatively_bounded", rb}});
    };
    auto kind = geometry::parse_kind(c.arrangement);
    if (tsv) out << (kind == geometry::Kind::shi ? "pi\tPi" : "pi\teps") << "\tceiling_partition\tdof\tdominant\trelatively_bounded\n";
    if (kind == geometry::Kind::shi) {
        for_each_shi(c.n, g, [&](const ShiCeilingDiagram& d) {
            auto s = shi_statistics(d);
            emit(io::to_json(d), d.pi.to_string(), d.Pi.to_string(), s.ceiling_partition, s.dof, s.dominant, s.relatively_bounded);
        });
    } else {
        // The Coxeter arrangement is Ish with no affine hyperplanes.
        Graph h = kind == geometry::Kind::cox ? Graph::empty(c.n) : g;
        for_each_ish(c.n, h, [&](const IshCeilingDiagram& d) {
            auto s = ish_statistics(d);
            std::string eps;
            for (std::size_t i = 0; i < d.eps.size(); ++i) eps += (i ? "," : "") + std::to_string(d.eps[i]);
            emit(io::to_json(d), d.pi.to_string(), eps, s.ceiling_partition, s.dof, s.dominant, s.relatively_bounded);
        });
    }
    if (!tsv) {
        json j = envelope(c);
        j["count"] = regions.size();
        j["regions"] = regions;
        out << j.dump(2) << '\n';
    }
    return exit_pass;
}

// ---------------------------------------------------------------- map

json certificates(const IshStatistics& a, const ShiStatistics& b) {
    auto entry = [](const json& x, const json& y) { return json{{"input", x}, {"output", y}, {"preserved", x == y}}; };
    return {{"ceiling_partition", entry(io::to_json(a.ceiling_partition), io::to_json(b.ceiling_partition))},
            {"dof", entry(a.dof, b.dof)},
            {"dominant", entry(a.dominant, b.dominant)}};
}

int cmd_map(RunConfig c, std::ostream& out) {
    auto kind = parse_bijection_kind(c.bijection);
    json in = parse_json(read_all(c.input), "input");
    if (in.is_object() && in.contains("input")) in = in.at("input");
    if (in.is_object() && in.contains("pi") && in.at("pi").is_array()) c.n = static_cast<int>(in.at("pi").size());
    json j = envelope(c);
    j["bijection"] = bijection_name(kind);
    if (!c.inverse) {
        IshCeilingDiagram d = io::ish_from_json(in);
        Graph g = parse_graph_spec(c.graph, d.pi.size());
        if (!validate_ish(d, g)) throw std::invalid_argument("input region is not valid for the graph");
        ShiCeilingDiagram s = apply_bijection(kind, d, g);
        j["input"] = io::to_json(d);
        j["output"] = io::to_json(s);
        if (kind != BijectionKind::basic) j["certificates"] = certificates(ish_statistics(d), shi_statistics(s));
    } else {
        ShiCeilingDiagram s = io::shi_from_json(in);
        Graph g = parse_graph_spec(c.graph, s.pi.size());
        if (kind == BijectionKind::bounded && !shi_statistics(s).relatively_bounded)
            throw std::invalid_argument("bounded: input region is not relatively bounded");
        IshCeilingDiagram d = invert_bijection(kind, s, g);
        j["input"] = io::to_json(s);
        j["output"] = io::to_json(d);
        if (kind != BijectionKind::basic) j["certificates"] = certificates(ish_statistics(d), shi_statistics(s));
    }
    if (c.format == "tsv") {
        out << "input\toutput\n" << j["input"].dump() << '\t' << j["output"].dump() << '\n';
        return exit_pass;
    }
    out << j.dump(2) << '\n';
    return exit_pass;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    verify::SuiteOptions opts;
    opts.n = c.n;
    if (c.graph != "all") opts.graph = parse_graph_spec(c.graph, c.n);
    opts.jobs = c.jobs > 0 ? c.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    opts.allow_large = c.allow_large;
    opts.progress = [&err](const std::string& msg) { err << "[progress] " << msg << '\n'; };

    std::vector<std::string> names;
    if (c.suite == "all")
        for (auto s : verify::suite_names()) names.emplace_back(s);
    else
        names.push_back(c.suite);

    bool failed = false, skipped = false;
    json reports = json::array();
    if (c.format == "tsv") out << "suite\tcheck\tstatus\tdetail\n";
    for (const auto& name : names) {
        err << "[progress] suite " << name << " n=" << c.n << '\n';
        auto r = verify::run_suite(name, opts);
        failed |= r.status == verify::Status::fail;
        skipped |= r.status == verify::Status::skipped;
        if (c.format == "tsv") {
            for (const auto& ch : r.checks) out << r.suite << '\t' << ch.name << '\t' << (ch.passed ? "pass" : "fail") << '\t' << ch.detail << '\n';
            for (const auto& n : r.notes) out << r.suite << "\tnote\t-\t" << n << '\n';
            if (r.status == verify::Status::skipped) out << r.suite << "\t-\tskipped\t\n";
        } else {
            reports.push_back(r.to_json());
        }
    }
    const char* status = failed ? "fail" : skipped ? "skipped" : "pass";
    if (c.format != "tsv") {
        json j = envelope(c);
        j["status"] = status;
        j["reports"] = reports;
        out << j.dump(2) << '\n';
    }
    return failed ? exit_fail : skipped ? exit_skipped : exit_pass;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const RunConfig& c, std::ostream& out) {
    auto kind = geometry::parse_kind(c.arrangement);
    Graph g = parse_graph_spec(c.graph, c.n);
    require_limit(c, kOracleLimit, "the geometric oracle");
    auto cv = geometry::cross_validate(kind, c.n, g);
    json report = io::to_json(cv);
    if (c.format == "tsv") {
        out << "key\tvalue\n";
        for (auto it = report["summary"].begin(); it != report["summary"].end(); ++it) out << it.key() << '\t' << it->dump() << '\n';
    } else {
        json j = envelope(c);
        j.update(report);
        out << j.dump(2) << '\n';
    }
    return cv.ok ? exit_pass : exit_fail;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Graph parse_graph_spec(const std::string& spec, int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (spec == "complete") return Graph::complete(n);
    if (spec == "empty") return Graph::empty(n);
    if (spec == "path") return Graph::path(n);
    std::ifstream file(spec);
    if (file) {
        std::stringstream ss;
        ss << file.rdbuf();
        Graph g = io::graph_from_json(parse_json(ss.str(), "graph file '" + spec + "'"));
        if (g.vertex_count() != n)
            throw std::invalid_argument("graph file has n = " + std::to_string(g.vertex_count()) + " but --n is " + std::to_string(n));
        return g;
    }
    // Inline edge list "1-2,2-3".
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int i = 0, j = 0;
        char dash = 0, extra = 0;
        if (std::sscanf(item.c_str(), "%d%c%d%c", &i, &dash, &j, &extra) != 3 || dash != '-')
            throw std::invalid_argument("graph '" + spec + "' is not a preset, a readable file, or an edge list like 1-2,2-3");
        edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    return Graph(n, std::move(edges));
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shi and Ish arrangement regions: counts, bijections, verification"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "number of coordinates")->check(CLI::Range(1, 12));
        sub->add_option("--graph", c.graph, "complete | empty | path | 1-2,2-3 | graph.json");
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_flag("--allow-large", c.allow_large, "lift the default size limits");
    };
    auto* count = app.add_subcommand("count", "count regions of both arrangements side by side");
    add_common(count);
    count->add_option("--by", c.by, "restrict the breakdown")->check(CLI::IsMember({"dof", "dominance", "ceiling-partition"}));

    auto* enumerate = app.add_subcommand("enumerate", "list regions as ceiling diagrams");
    add_common(enumerate);
    enumerate->add_option("--arrangement", c.arrangement)->check(CLI::IsMember({"shi", "ish", "cox"}));

    auto* map = app.add_subcommand("map", "send an Ish region through a bijection");
    add_common(map);
    map->add_option("--bijection", c.bijection)->check(CLI::IsMember({"basic", "dominance", "bounded", "freedom"}));
    map->add_option("--input", c.input, "JSON region file, - for stdin");
    map->add_flag("--inverse", c.inverse, "input is a Shi region; apply the inverse map");

    auto* verify = app.add_subcommand("verify", "run exhaustive verification suites");
    add_common(verify);
    std::vector<std::string> suites{"all"};
    for (auto s : verify::suite_names()) suites.emplace_back(s);
    verify->add_option("--suite", c.suite)->check(CLI::IsMember(suites));
    verify->add_option("--jobs", c.jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);

    auto* oracle = app.add_subcommand("oracle", "cross-check enumeration against exact geometry");
    add_common(oracle);
    oracle->add_option("--arrangement", c.arrangement)->check(CLI::IsMember({"shi", "ish", "cox"}));

    // The default graph for verify is "every graph on [n]" where the suite sweeps them.
    bool graph_given = false;
    try {
        app.parse(argc, argv);
        for (auto* sub : {count, enumerate, map, verify, oracle}) {
            if (sub->parsed()) {
                c.command = sub->get_name();
                graph_given = sub->count("--graph") > 0;
            }
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }
    if (c.command == "verify" && !graph_given) c.graph = "all";

    try {
        if (c.command == "count") return cmd_count(c, out);
        if (c.command == "enumerate") return cmd_enumerate(c, out);
        if (c.command == "map") return cmd_map(c, out);
        if (c.command == "verify") return cmd_verify(c, out, err);
        if (c.command == "oracle") return cmd_oracle(c, out);
    } catch (const LimitExceeded& e) {
        err << "skipped: " << e.what() << '\n';
        json j = envelope(c);
        j["status"] = "skipped";
        j["reason"] = e.what();
        if (c.format != "tsv") out << j.dump(2) << '\n';
        return exit_skipped;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_usage;
}

}  // namespace shiish::cli
