#include "shiish/shi.h"

#include <map>
#include <stdexcept>

#include "shiish/parking.h"

namespace shiish {

bool is_shi_diagram(const ShiCeilingDiagram& d) {
    if (d.pi.size() != d.Pi.ground_size()) return false;
    if (!is_nonnesting(d.Pi)) return false;
    for (const auto& b : d.Pi.blocks())
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (d.pi(b[i]) > d.pi(b[i + 1])) return false;
    return true;
}

bool validate_shi(const ShiCeilingDiagram& d, const Graph& g) {
    if (g.vertex_count() != d.pi.size() || !is_shi_diagram(d)) return false;
    for (const auto& b : d.Pi.blocks())
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (!g.has_edge(d.pi(b[i]), d.pi(b[i + 1]))) return false;
    return true;
}

ShiStatistics shi_statistics(const ShiCeilingDiagram& d) {
    if (!is_shi_diagram(d)) throw std::invalid_argument("shi_statistics: not a Shi ceiling diagram");
    ShiStatistics s;
    s.ceiling_partition = apply_permutation(d.pi, d.Pi);
    s.dof = static_cast<int>(connected_components(d.Pi).size());
    s.dominant = d.pi.is_identity();
    s.relatively_bounded = s.dof == 1;
    return s;
}

ShiCeilingDiagram omega(const Word& w) {
    if (!is_parking_function(w)) throw std::invalid_argument("omega: " + w.to_string() + " is not a parking function");
    const int n = static_cast<int>(w.size());
    std::map<int, std::vector<int>> positions;  // letter -> positions holding it
    for (int i = 1; i <= n; ++i) positions[w.at(i)].push_back(i);
    std::vector<BlockSpec> specs;
    for (const auto& [c, ps] : positions) specs.push_back({c, static_cast<int>(ps.size())});
    SetPartition Pi = nonnesting_from_block_specs(specs, n);

    std::vector<int> one_line(n, 0);
    for (const auto& b : Pi.blocks()) {
        const auto& ps = positions.at(b.front());
        for (std::size_t k = 0; k < b.size(); ++k) one_line[b[k] - 1] = ps[k];
    }
    return {Permutation(std::move(one_line)), std::move(Pi)};
}

Word omega_inverse(const ShiCeilingDiagram& d) {
    if (!is_shi_diagram(d)) throw std::invalid_argument("omega_inverse: not a Shi ceiling diagram");
    std::vector<int> letters(d.pi.size(), 0);
    for (const auto& b : d.Pi.blocks())
        for (int x : b) letters[d.pi(x) - 1] = b.front();
    return Word(std::move(letters));
}

void for_each_shi(int n, const Graph& g, const std::function<void(const ShiCeilingDiagram&)>& visit) {
    for_each_parking(n, &g, [&](const Word& w) { visit(omega(w)); });
}

std::vector<ShiCeilingDiagram> enumerate_shi(int n, const Graph& g) {
    std::vector<ShiCeilingDiagram> out;
    for_each_shi(n, g, [&](const ShiCeilingDiagram& d) { out.push_back(d); });
    return out;
}

std::vector<ShiCeilingDiagram> enumerate_shi_direct(int n, const Graph& g) {
    std::vector<SetPartition> nonnesting;
    for_each_set_partition(n, [&](const SetPartition& p) {
        if (is_nonnesting(p)) nonnesting.push_back(p);
    });
    std::vector<ShiCeilingDiagram> out;
    for (const auto& pi : all_permutations(n))
        for (const auto& p : nonnesting) {
            ShiCeilingDiagram d{pi, p};
            if (validate_shi(d, g)) out.push_back(std::move(d));
        }
    return out;
}

}  // namespace shiish
