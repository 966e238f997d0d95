#include "shiish/arrangement.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "shiish/ish.h"
#include "shiish/shi.h"

namespace shiish::geometry {

Kind parse_kind(std::string_view name) {
    if (name == "cox") return Kind::cox;
    if (name == "shi") return Kind::shi;
    if (name == "ish") return Kind::ish;
    throw std::invalid_argument("unknown arrangement '" + std::string(name) + "'");
}

std::string_view kind_name(Kind kind) {
    switch (kind) {
        case Kind::cox: return "cox";
        case Kind::shi: return "shi";
        case Kind::ish: return "ish";
    }
    return "?";
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string Hyperplane::to_string() const {
    std::string lhs;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        std::string var = "x" + std::to_string(k + 1);
        if (lhs.empty())
            lhs = (a[k] < 0 ? "-" : "") + var;
        else
            lhs += (a[k] < 0 ? " - " : " + ") + var;
    }
    return lhs + " = " + std::to_string(b);
}

Arrangement build_arrangement(Kind kind, int n, const Graph& g) {
    if (n < 1) throw std::invalid_argument("build_arrangement: n must be positive");
    if (g.vertex_count() != n) throw std::invalid_argument("build_arrangement: graph size differs from n");
    Arrangement A{kind, n, g, {}};
    auto normal = [n](int p, int q) {
        std::vector<int> a(n, 0);
        a[p - 1] = 1;
        a[q - 1] = -1;
        return a;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) A.hyperplanes.push_back({normal(i, j), 0, Tag::coxeter, i, j});
    if (kind == Kind::cox) return A;
    for (auto [i, j] : g.edges()) {
        if (kind == Kind::shi)
            A.hyperplanes.push_back({normal(i, j), 1, Tag::shi_affine, i, j});
        else
            A.hyperplanes.push_back({normal(1, j), i, Tag::ish_affine, i, j});
    }
    return A;
}

std::vector<lp::StrictInequality> region_constraints(const Arrangement& A, const std::vector<int>& signs) {
    std::vector<lp::StrictInequality> out;
    for (std::size_t h = 0; h < A.hyperplanes.size(); ++h) {
        if (signs[h] == 0) continue;
        const auto& H = A.hyperplanes[h];
        out.push_back({lp::Vector(H.a.begin(), H.a.end()), H.b, signs[h]});
    }
    return out;
}

namespace {

// Every hyperplane here is invariant under x -> x + t(1,...,1), so all
// feasibility questions are posed on the slice x_n = 0 in dimension n - 1.

lp::StrictInequality reduced(const Hyperplane& H, int sign) {
    lp::Vector a(H.a.begin(), H.a.end() - 1);
    return {std::move(a), H.b, sign};
}

std::vector<lp::StrictInequality> reduced_constraints(const Arrangement& A, const std::vector<int>& signs,
                                                      std::size_t skip = static_cast<std::size_t>(-1)) {
    std::vector<lp::StrictInequality> out;
    for (std::size_t h = 0; h < A.hyperplanes.size(); ++h)
        if (signs[h] != 0 && h != skip) out.push_back(reduced(A.hyperplanes[h], signs[h]));
    return out;
}

int side_of(const Hyperplane& H, const lp::Vector& reduced_point) {
    mpq_class v = -H.b;
    for (std::size_t k = 0; k < reduced_point.size(); ++k)
        if (H.a[k] != 0) v += H.a[k] * reduced_point[k];
    return sgn(v);
}

lp::Vector lift(const lp::Vector& reduced_point) {
    lp::Vector x(reduced_point);
    x.push_back(0);
    return x;
}

struct Working {
    std::vector<int> signs;
    lp::Vector point;  // reduced
};

}  // namespace

std::vector<GeomRegion> enumerate_regions(const Arrangement& A, const std::vector<std::size_t>& insertion_order) {
    const std::size_t m = A.hyperplanes.size();
    std::vector<std::size_t> order(insertion_order);
    if (order.empty())
        for (std::size_t h = 0; h < m; ++h) order.push_back(h);
    {
        std::vector<std::size_t> check(order);
        std::sort(check.begin(), check.end());
        for (std::size_t h = 0; h < check.size(); ++h)
            if (check[h] != h || check.size() != m) throw std::invalid_argument("enumerate_regions: bad insertion order");
    }

    const int dim = A.n - 1;
    std::vector<Working> regions{{std::vector<int>(m, 0), lp::Vector(dim)}};
    for (std::size_t h : order) {
        const auto& H = A.hyperplanes[h];
        std::vector<Working> next;
        next.reserve(regions.size() * 2);
        for (auto& R : regions) {
            int known = side_of(H, R.point);
            auto base = reduced_constraints(A, R.signs);
            for (int s : {1, -1}) {
                Working child{R.signs, {}};
                child.signs[h] = s;
                if (known == s) {
                    child.point = R.point;
                } else {
                    auto cons = base;
                    cons.push_back(reduced(H, s));
                    auto f = lp::strict_feasible(cons, dim);
                    if (!f.feasible) continue;
                    child.point = std::move(f.witness);
                }
                next.push_back(std::move(child));
            }
        }
        regions = std::move(next);
    }

    std::vector<GeomRegion> out;
    for (auto& R : regions) out.push_back({std::move(R.signs), lift(R.point)});
    std::sort(out.begin(), out.end(), [](const GeomRegion& a, const GeomRegion& b) { return a.signs < b.signs; });
    return out;
}

std::vector<GeomRegion> enumerate_regions_sweep(const Arrangement& A) {
    const std::size_t m = A.hyperplanes.size();
    if (m > 20) throw std::invalid_argument("enumerate_regions_sweep: too many hyperplanes");
    const int dim = A.n - 1;
    std::vector<GeomRegion> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> signs(m);
        for (std::size_t h = 0; h < m; ++h) signs[h] = (mask >> h & 1U) ? -1 : 1;
        auto f = lp::strict_feasible(reduced_constraints(A, signs), dim);
        if (f.feasible) out.push_back({std::move(signs), lift(f.witness)});
    }
    std::sort(out.begin(), out.end(), [](const GeomRegion& a, const GeomRegion& b) { return a.signs < b.signs; });
    return out;
}

Permutation region_order(const Arrangement& A, const GeomRegion& R) {
    const int n = A.n;
    // above[i] = number of coordinates known to exceed x_i.
    std::vector<int> above(n + 1, 0);
    for (std::size_t h = 0; h < A.hyperplanes.size(); ++h) {
        const auto& H = A.hyperplanes[h];
        if (H.tag != Tag::coxeter) continue;
        if (R.signs[h] > 0)
            ++above[H.j];
        else
            ++above[H.i];
    }
    std::vector<int> one_line(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (one_line[above[i]] != 0) throw std::logic_error("region_order: Coxeter signs are not a total order");
        one_line[above[i]] = i;
    }
    return Permutation(std::move(one_line));
}

bool region_dominant(const Arrangement& A, const GeomRegion& R) { return region_order(A, R).is_identity(); }

std::vector<std::size_t> region_ceilings(const Arrangement& A, const GeomRegion& R) {
    std::vector<std::size_t> out;
    const int dim = A.n - 1;
    for (std::size_t h = 0; h < A.hyperplanes.size(); ++h) {
        const auto& H = A.hyperplanes[h];
        // The origin satisfies a.0 - b < 0, so only the "-" side faces it.
        if (!H.affine() || R.signs[h] != -1) continue;
        auto cons = reduced_constraints(A, R.signs, h);
        lp::Equation eq{lp::Vector(H.a.begin(), H.a.end() - 1), H.b};
        if (lp::strict_feasible(cons, dim, {eq}).feasible) out.push_back(h);
    }
    return out;
}

SetPartition ceiling_partition(const Arrangement& A, const std::vector<std::size_t>& ceilings) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t h : ceilings) pairs.emplace_back(A.hyperplanes[h].i, A.hyperplanes[h].j);
    return SetPartition::generated_by(A.n, pairs);
}

int recession_dimension(const Arrangement& A, const GeomRegion& R) {
    const int dim = A.n - 1;
    // Distinct signed linear forms s_H a_H; the cone is where all are >= 0.
    std::vector<std::vector<int>> forms;
    for (std::size_t h = 0; h < A.hyperplanes.size(); ++h) {
        std::vector<int> f(A.hyperplanes[h].a);
        for (int& c : f) c *= R.signs[h];
        if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(std::move(f));
    }
    const std::size_t k = forms.size();
    if (dim == 0) return A.n;

    // Variables (v_1..v_dim, t_1..t_k). Maximize sum t subject to
    // f.v >= 0, f.v >= t_f, t_f <= 1. Then t_f = 0 exactly when f vanishes on the cone.
    std::vector<lp::Vector> rows;
    lp::Vector rhs;
    for (std::size_t q = 0; q < k; ++q) {
        lp::Vector cone(dim + k);
        lp::Vector link(dim + k);
        for (int c = 0; c < dim; ++c) {
            cone[c] = -forms[q][c];
            link[c] = -forms[q][c];
        }
        link[dim + q] = 1;
        lp::Vector cap(dim + k);
        cap[dim + q] = 1;
        rows.push_back(std::move(cone));
        rhs.push_back(0);
        rows.push_back(std::move(link));
        rhs.push_back(0);
        rows.push_back(std::move(cap));
        rhs.push_back(1);
    }
    lp::Vector c(dim + k);
    for (std::size_t q = 0; q < k; ++q) c[dim + q] = 1;
    auto res = lp::maximize(c, rows, rhs);
    if (res.status != lp::LpResult::Status::optimal) throw std::logic_error("recession_dimension: LP unbounded");

    std::vector<std::vector<mpz_class>> vanishing;
    for (std::size_t q = 0; q < k; ++q) {
        if (sgn(res.x[dim + q]) > 0) continue;
        vanishing.emplace_back(forms[q].begin(), forms[q].end());
    }
    return A.n - lp::rank(std::move(vanishing));
}

RegionReport analyze_region(const Arrangement& A, const GeomRegion& R) {
    RegionReport r;
    r.region = R;
    r.order = region_order(A, R);
    r.ceilings = region_ceilings(A, R);
    r.ceiling_partition = ceiling_partition(A, r.ceilings);
    r.dof = recession_dimension(A, R);
    r.dominant = r.order.is_identity();
    return r;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<std::pair<int, int>>>;

struct Expected {
    Key key;
    SetPartition ceiling_partition;
    int dof = 0;
    bool dominant = false;
    std::string description;
};

std::vector<Expected> combinatorial_side(Kind kind, int n, const Graph& g) {
    std::vector<Expected> out;
    if (kind == Kind::cox) {
        for (const auto& pi : all_permutations(n))
            out.push_back({{pi.one_line(), {}}, SetPartition::singletons(n), n, pi.is_identity(), pi.to_string()});
    } else if (kind == Kind::shi) {
        for_each_shi(n, g, [&](const ShiCeilingDiagram& d) {
            std::vector<std::pair<int, int>> tags;
            for (auto [b, c] : d.Pi.arcs()) tags.emplace_back(d.pi(b), d.pi(c));
            std::sort(tags.begin(), tags.end());
            auto s = shi_statistics(d);
            out.push_back({{d.pi.one_line(), tags}, s.ceiling_partition, s.dof, s.dominant,
                           "(" + d.pi.to_string() + ", " + d.Pi.to_string() + ")"});
        });
    } else {
        for_each_ish(n, g, [&](const IshCeilingDiagram& d) {
            std::vector<std::pair<int, int>> tags;
            std::string eps;
            for (int i = 1; i <= n; ++i) {
                if (d.eps[i - 1] > 0) tags.emplace_back(d.eps[i - 1], d.pi(i));
                eps += std::to_string(d.eps[i - 1]);
            }
            std::sort(tags.begin(), tags.end());
            auto s = ish_statistics(d);
            out.push_back({{d.pi.one_line(), tags}, s.ceiling_partition, s.dof, s.dominant,
                           "(" + d.pi.to_string() + ", " + eps + ")"});
        });
    }
    return out;
}

}  // namespace

CrossValidation cross_validate(Kind kind, int n, const Graph& g) {
    CrossValidation cv;
    cv.arrangement = build_arrangement(kind, n, g);
    const auto& A = cv.arrangement;
    for (const auto& R : enumerate_regions(A)) {
        if (!lp::satisfies(region_constraints(A, R.signs), R.witness)) cv.witnesses_ok = false;
        cv.regions.push_back(analyze_region(A, R));
    }
    auto expected = combinatorial_side(kind, n, g);
    cv.combinatorial_count = expected.size();

    std::map<Key, std::size_t> geometric;
    for (std::size_t r = 0; r < cv.regions.size(); ++r) {
        std::vector<std::pair<int, int>> tags;
        for (std::size_t h : cv.regions[r].ceilings) tags.emplace_back(A.hyperplanes[h].i, A.hyperplanes[h].j);
        std::sort(tags.begin(), tags.end());
        if (!geometric.emplace(Key{cv.regions[r].order.one_line(), tags}, r).second && cv.first_mismatch.empty())
            cv.first_mismatch = "two geometric regions share order and ceilings";
    }

    std::vector<char> used(cv.regions.size(), 0);
    for (const auto& e : expected) {
        auto it = geometric.find(e.key);
        auto fail = [&](const std::string& why) {
            if (cv.first_mismatch.empty()) cv.first_mismatch = e.description + ": " + why;
        };
        if (it == geometric.end()) {
            fail("no geometric region with this order and ceiling set");
            continue;
        }
        const auto& r = cv.regions[it->second];
        if (used[it->second]) {
            fail("geometric region matched twice");
            continue;
        }
        used[it->second] = 1;
        if (r.dof != e.dof) {
            fail("dof " + std::to_string(e.dof) + " vs geometric " + std::to_string(r.dof));
            continue;
        }
        if (r.dominant != e.dominant) {
            fail("dominance disagrees");
            continue;
        }
        if (r.ceiling_partition != e.ceiling_partition) {
            fail("ceiling partition " + e.ceiling_partition.to_string() + " vs geometric " + r.ceiling_partition.to_string());
            continue;
        }
        ++cv.matched;
    }
    if (cv.first_mismatch.empty() && cv.regions.size() != expected.size())
        cv.first_mismatch = "region counts differ: geometric " + std::to_string(cv.regions.size()) + " vs combinatorial " +
                            std::to_string(expected.size());
    if (cv.first_mismatch.empty() && !cv.witnesses_ok) cv.first_mismatch = "a witness fails its sign vector";
    cv.ok = cv.first_mismatch.empty() && cv.matched == cv.regions.size();
    return cv;
}

}  // namespace shiish::geometry
