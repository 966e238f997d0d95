#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shiish/core.h"
#include "shiish/lp.h"

namespace shiish::geometry {

enum class Kind { cox, shi, ish };

Kind parse_kind(std::string_view name);
std::string_view kind_name(Kind kind);

enum class Tag { coxeter, shi_affine, ish_affine };

/// a.x = b with an integer normal; (i, j) identifies the hyperplane within its family.
struct Hyperplane {
    std::vector<int> a;
    int b = 0;
    Tag tag = Tag::coxeter;
    int i = 0;
    int j = 0;

    bool affine() const noexcept { return b != 0; }
    /// "x1 - x3 = 1"
    std::string to_string() const;
};

struct Arrangement {
    Kind kind = Kind::cox;
    int n = 0;
    Graph graph;
    std::vector<Hyperplane> hyperplanes;
};

/// Cox(n) first, then the affine hyperplanes of G in lexicographic edge order.
Arrangement build_arrangement(Kind kind, int n, const Graph& g);

struct GeomRegion {
    std::vector<int> signs;  // +1 / -1 per hyperplane, in arrangement order
    lp::Vector witness;      // length n, strictly inside the region
};

/// The strict system sign_H (a_H.x - b_H) > 0 defining a region.
std::vector<lp::StrictInequality> region_constraints(const Arrangement& A, const std::vector<int>& signs);

/// Incremental insertion; regions sorted by sign vector. An empty order
/// means arrangement order.
std::vector<GeomRegion> enumerate_regions(const Arrangement& A, const std::vector<std::size_t>& insertion_order = {});
/// Tests every sign vector. Exponential; meant for differential tests.
std::vector<GeomRegion> enumerate_regions_sweep(const Arrangement& A);

Permutation region_order(const Arrangement& A, const GeomRegion& R);
bool region_dominant(const Arrangement& A, const GeomRegion& R);
/// Indices of the affine hyperplanes that are ceilings of R.
std::vector<std::size_t> region_ceilings(const Arrangement& A, const GeomRegion& R);
SetPartition ceiling_partition(const Arrangement& A, const std::vector<std::size_t>& ceilings);
int recession_dimension(const Arrangement& A, const GeomRegion& R);

struct RegionReport {
    GeomRegion region;
    Permutation order;
    std::vector<std::size_t> ceilings;
    SetPartition ceiling_partition;
    int dof = 0;
    bool dominant = false;
};

RegionReport analyze_region(const Arrangement& A, const GeomRegion& R);

struct CrossValidation {
    Arrangement arrangement;
    std::vector<RegionReport> regions;
    std::size_t combinatorial_count = 0;
    std::size_t matched = 0;
    bool witnesses_ok = true;
    bool ok = false;
    std::string first_mismatch;  // empty when ok
};

/// Matches every geometric region with the combinatorial diagram having the
/// same order and ceiling set, and compares dof, dominance and ceiling partitions.
CrossValidation cross_validate(Kind kind, int n, const Graph& g);

std::string to_string(const mpq_class& q);

}  // namespace shiish::geometry
