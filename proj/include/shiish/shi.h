#pragma once

#include <functional>
#include <vector>

#include "shiish/core.h"

namespace shiish {

/// (pi, Pi): Pi nonnesting, and pi increasing along every block of Pi.
struct ShiCeilingDiagram {
    Permutation pi;
    SetPartition Pi;

    friend auto operator<=>(const ShiCeilingDiagram&, const ShiCeilingDiagram&) = default;
};

/// Checks the diagram invariants only (no graph).
bool is_shi_diagram(const ShiCeilingDiagram& d);
/// Invariants plus: for consecutive b < b' in a block, (pi_b, pi_b') is an edge of G.
bool validate_shi(const ShiCeilingDiagram& d, const Graph& g);

struct ShiStatistics {
    SetPartition ceiling_partition;
    int dof = 0;
    bool dominant = false;
    /// Minimal degrees of freedom, i.e. Pi connected.
    bool relatively_bounded = false;
};

ShiStatistics shi_statistics(const ShiCeilingDiagram& d);

/// Parking function -> Shi ceiling diagram.
ShiCeilingDiagram omega(const Word& parking_function);
/// Diagram -> parking function: w_i is the minimum of the block of Pi whose
/// pi-image contains i.
Word omega_inverse(const ShiCeilingDiagram& d);

/// All valid diagrams for G, as omega of the G-compatible parking functions.
void for_each_shi(int n, const Graph& g, const std::function<void(const ShiCeilingDiagram&)>& visit);
std::vector<ShiCeilingDiagram> enumerate_shi(int n, const Graph& g);
/// Independent enumeration straight from the diagram conditions
/// (every permutation against every nonnesting partition).
std::vector<ShiCeilingDiagram> enumerate_shi_direct(int n, const Graph& g);

}  // namespace shiish
