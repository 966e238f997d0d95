#include "shiish/json_io.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shiish::io {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
        out.push_back(x.get<int>());
    }
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

json to_json(const Word& w) { return w.letters(); }

Word word_from_json(const json& j, int alphabet_size) {
    auto letters = int_array(j, "word");
    int m = alphabet_size == 0 ? static_cast<int>(letters.size()) : alphabet_size;
    return Word(std::move(letters), m);
}

json to_json(const Permutation& p) { return p.one_line(); }

Permutation permutation_from_json(const json& j) { return Permutation(int_array(j, "permutation")); }

json to_json(const SetPartition& p) { return p.blocks(); }

SetPartition partition_from_json(const json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j) blocks.push_back(int_array(b, "partition block"));
    return SetPartition(n, std::move(blocks));
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    const json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<int>() < 1) throw std::invalid_argument("graph: \"n\" must be a positive integer");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            auto pair = int_array(e, "graph edge");
            if (pair.size() != 2) throw std::invalid_argument("graph: every edge must have two endpoints");
            edges.emplace_back(pair[0], pair[1]);
        }
    }
    return Graph(n.get<int>(), std::move(edges));
}

json to_json(const LabeledDyckPath& d) { return {{"columns", d.columns()}}; }

LabeledDyckPath dyck_from_json(const json& j) {
    std::vector<std::vector<int>> cols;
    for (const auto& c : field(j, "columns")) cols.push_back(int_array(c, "dyck column"));
    return LabeledDyckPath(std::move(cols));
}

json to_json(const ShiCeilingDiagram& d) { return {{"pi", to_json(d.pi)}, {"Pi", to_json(d.Pi)}}; }

ShiCeilingDiagram shi_from_json(const json& j) {
    Permutation pi = permutation_from_json(field(j, "pi"));
    SetPartition Pi = partition_from_json(field(j, "Pi"), pi.size());
    ShiCeilingDiagram d{std::move(pi), std::move(Pi)};
    if (!is_shi_diagram(d)) throw std::invalid_argument("not a Shi ceiling diagram");
    return d;
}

json to_json(const IshCeilingDiagram& d) { return {{"pi", to_json(d.pi)}, {"eps", d.eps}}; }

IshCeilingDiagram ish_from_json(const json& j) {
    IshCeilingDiagram d{permutation_from_json(field(j, "pi")), int_array(field(j, "eps"), "eps")};
    if (!is_ish_diagram(d)) throw std::invalid_argument("not an Ish ceiling diagram");
    return d;
}

json to_json(const RookPlacement& p) {
    json rooks = json::array();
    for (const auto& s : p.rooks) rooks.push_back({s.col, s.row});
    return {{"board", {{"n", p.board.n()}, {"hatted", p.board.hatted()}, {"graph", to_json(p.board.graph())}}},
            {"rooks", rooks}};
}

RookPlacement placement_from_json(const json& j) {
    const json& board = field(j, "board");
    const int n = field(board, "n").get<int>();
    Graph g = board.contains("graph") ? graph_from_json(board.at("graph")) : Graph::complete(n);
    if (g.vertex_count() != n) throw std::invalid_argument("placement: board graph size differs from n");
    RookPlacement p{Board(std::move(g), field(board, "hatted").get<bool>()), {}};
    for (const auto& r : field(j, "rooks")) {
        auto sq = int_array(r, "rook");
        if (sq.size() != 2) throw std::invalid_argument("placement: every rook is [col, row]");
        p.rooks.push_back({sq[0], sq[1]});
    }
    std::sort(p.rooks.begin(), p.rooks.end());
    if (!is_non_attacking(p)) throw std::invalid_argument("placement: rooks attack each other or leave the board");
    return p;
}

json to_json(const geometry::RegionReport& r, const geometry::Arrangement& A) {
    json witness = json::array();
    for (const auto& q : r.region.witness) witness.push_back(geometry::to_string(q));
    json ceilings = json::array();
    for (std::size_t h : r.ceilings) ceilings.push_back(A.hyperplanes[h].to_string());
    return {{"signs", r.region.signs},
            {"witness", witness},
            {"order", to_json(r.order)},
            {"ceilings", ceilings},
            {"ceiling_partition", to_json(r.ceiling_partition)},
            {"dof", r.dof},
            {"dominant", r.dominant}};
}

json to_json(const geometry::CrossValidation& cv) {
    const auto& A = cv.arrangement;
    json hyperplanes = json::array();
    for (const auto& H : A.hyperplanes) hyperplanes.push_back(H.to_string());
    json regions = json::array();
    std::map<int, int> by_dof;
    std::map<std::string, int> by_partition;
    int dominant = 0;
    for (const auto& r : cv.regions) {
        regions.push_back(to_json(r, A));
        ++by_dof[r.dof];
        ++by_partition[r.ceiling_partition.to_string()];
        dominant += r.dominant ? 1 : 0;
    }
    json dof_json = json::object();
    for (auto [d, c] : by_dof) dof_json[std::to_string(d)] = c;
    return {{"arrangement",
             {{"kind", geometry::kind_name(A.kind)}, {"n", A.n}, {"graph", to_json(A.graph)}, {"hyperplanes", hyperplanes}}},
            {"regions", regions},
            {"summary",
             {{"regions", cv.regions.size()},
              {"combinatorial", cv.combinatorial_count},
              {"matched", cv.matched},
              {"ok", cv.ok},
              {"dominant", dominant},
              {"by_dof", dof_json},
              {"by_ceiling_partition", by_partition}}},
            {"first_mismatch", cv.first_mismatch}};
}

}  // namespace shiish::io
