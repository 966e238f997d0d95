#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiish/core.h"
#include "shiish/ish.h"
#include "shiish/shi.h"

namespace shiish {

/// Intermediate word of delta/gamma. std::nullopt is the diamond.
using DiamondWord = std::vector<std::optional<int>>;

/// Labels run together (comma separated once any label exceeds 9);
/// diamonds print as U+25C7.
std::string to_string(const DiamondWord& w);

struct DeltaTrace {
    DiamondWord after_first_component;
    std::vector<DiamondWord> after_component;  // after C_2, C_3, ...
    DiamondWord after_prefix_rotation;
    DiamondWord after_global_rotation;
};

/// Parking function -> Ish ceiling diagram with the same ceiling partition
/// and the same number of degrees of freedom.
IshCeilingDiagram delta(const Word& parking_function, DeltaTrace* trace = nullptr);

struct GammaTrace {
    int cycle_index = 0;
    /// components[i] holds the columns of C_{i+1}, with original labels.
    std::vector<std::vector<std::vector<int>>> components;
    /// 1-based component indices in left-to-right order of the result.
    std::vector<int> concatenation;
};

/// Inverse of delta.
Word gamma(const IshCeilingDiagram& d, GammaTrace* trace = nullptr);

enum class BijectionKind { basic, dominance, bounded, freedom };

BijectionKind parse_bijection_kind(std::string_view name);
std::string_view bijection_name(BijectionKind kind);

/// omega . alpha . rho on the complete graph.
ShiCeilingDiagram bijection_basic(const IshCeilingDiagram& d);
/// omega . beta . lambda . rho_hat; keeps ceiling partitions and dominance.
ShiCeilingDiagram bijection_dominance(const IshCeilingDiagram& d, const Graph& g);
/// omega . beta' . lambda . rho_hat on relatively bounded regions.
ShiCeilingDiagram bijection_bounded(const IshCeilingDiagram& d, const Graph& g);
/// omega . gamma; keeps ceiling partitions and degrees of freedom.
ShiCeilingDiagram bijection_freedom(const IshCeilingDiagram& d, const Graph& g);

ShiCeilingDiagram apply_bijection(BijectionKind kind, const IshCeilingDiagram& d, const Graph& g);
IshCeilingDiagram invert_bijection(BijectionKind kind, const ShiCeilingDiagram& s, const Graph& g);

}  // namespace shiish
