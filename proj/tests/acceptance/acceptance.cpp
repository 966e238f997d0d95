// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shiish/arrangement.h"
#include "shiish/bijections.h"
#include "shiish/counting.h"
#include "shiish/ish.h"
#include "shiish/parking.h"
#include "shiish/rook_words.h"
#include "shiish/shi.h"
#include "shiish/verify.h"

using namespace shiish;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> lines;  // sub-results, printed under the criterion

    void expect(bool cond, const std::string& what) {
        ok = ok && cond;
        lines.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    }
};

struct Criterion {
    int id;
    std::string title;
    std::function<void(Outcome&)> run;
};

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<Graph> graphs_up_to_4(int n) { return Graph::all_graphs(n); }

std::string eps_string(const std::vector<int>& eps) {
    std::string s;
    for (int e : eps) s += std::to_string(e);
    return s;
}

// ---------------------------------------------------------------- criteria

void region_counts(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 6; ++n) {
        Graph kn = Graph::complete(n);
        long shi = 0, ish = 0;
        for_each_shi(n, kn, [&](const ShiCeilingDiagram&) { ++shi; });
        for_each_ish(n, kn, [&](const IshCeilingDiagram&) { ++ish; });
        long want = ipow(n + 1, n - 1);
        o.expect(shi == want && ish == want, "n=" + std::to_string(n) + ": Shi " + std::to_string(shi) + ", Ish " +
                                                 std::to_string(ish) + ", (n+1)^(n-1) = " + std::to_string(want));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << "runtime " << secs << " s < 30 s";
    o.expect(secs < 30, s.str());
}

void geometric_agreement(Outcome& o) {
    for (int n : {3, 4}) {
        auto t0 = std::chrono::steady_clock::now();
        for (auto kind : {geometry::Kind::shi, geometry::Kind::ish}) {
            int graphs = 0, good = 0;
            std::size_t regions = 0;
            std::string first;
            for (const auto& g : graphs_up_to_4(n)) {
                auto cv = geometry::cross_validate(kind, n, g);
                ++graphs;
                regions += cv.regions.size();
                if (cv.ok)
                    ++good;
                else if (first.empty())
                    first = " first mismatch " + g.to_string() + ": " + cv.first_mismatch;
            }
            o.expect(good == graphs, std::string(geometry::kind_name(kind)) + " n=" + std::to_string(n) + ": " +
                                         std::to_string(good) + "/" + std::to_string(graphs) + " graphs matched (" +
                                         std::to_string(regions) + " regions; order, ceilings, dof, dominance)" + first);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (n == 4) {
            std::ostringstream s;
            s << std::fixed << std::setprecision(2) << "n=4 runtime " << secs << " s < 300 s";
            o.expect(secs < 300, s.str());
        }
    }
}

void dominant_regions(Outcome& o) {
    const int catalan[] = {0, 1, 2, 5, 14, 42};
    for (int n = 3; n <= 5; ++n) {
        Graph kn = Graph::complete(n);
        int shi = 0, ish = 0;
        for_each_shi(n, kn, [&](const ShiCeilingDiagram& d) { shi += shi_statistics(d).dominant; });
        for_each_ish(n, kn, [&](const IshCeilingDiagram& d) { ish += ish_statistics(d).dominant; });
        o.expect(shi == catalan[n] && ish == catalan[n], "n=" + std::to_string(n) + ": Shi " + std::to_string(shi) +
                                                             ", Ish " + std::to_string(ish) + ", Cat(n) = " +
                                                             std::to_string(catalan[n]));
    }
}

void ceiling_refinement(Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
        int graphs = 0, good = 0, classes = 0;
        std::string first;
        for (const auto& g : graphs_up_to_4(n)) {
            ++graphs;
            std::map<SetPartition, std::pair<long, long>> ish, shi;
            for_each_ish(n, g, [&](const IshCeilingDiagram& d) {
                auto s = ish_statistics(d);
                ++ish[s.ceiling_partition].first;
                ish[s.ceiling_partition].second += s.dominant;
            });
            for_each_shi(n, g, [&](const ShiCeilingDiagram& d) {
                auto s = shi_statistics(d);
                ++shi[s.ceiling_partition].first;
                shi[s.ceiling_partition].second += s.dominant;
            });
            bool ok = true;
            for_each_set_partition(n, [&](const SetPartition& p) {
                const int k = n - static_cast<int>(p.block_count());
                long want = g.contains_arcs(p) ? mpz_class(factorial(n) / factorial(k + 1)).get_si() : 0;
                auto a = ish.count(p) ? ish[p] : std::pair<long, long>{0, 0};
                auto b = shi.count(p) ? shi[p] : std::pair<long, long>{0, 0};
                if (want) ++classes;
                if (a.first != want || b.first != want || a.second != b.second) {
                    ok = false;
                    if (first.empty()) first = " first mismatch " + g.to_string() + " " + p.to_string();
                }
            });
            good += ok;
        }
        o.expect(good == graphs, "n=" + std::to_string(n) + ": " + std::to_string(good) + "/" + std::to_string(graphs) +
                                     " graphs, " + std::to_string(classes) + " admissible (G, partition) pairs" + first);
    }
}

void cycle_lemmas(Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
        verify::SuiteOptions opts;
        opts.n = n;
        auto r = verify::cycle_lemma(opts);
        std::string failed;
        for (const auto& c : r.checks)
            if (!c.passed) failed += " [" + c.name + "]";
        o.expect(r.passed(), "n=" + std::to_string(n) + ": " + std::to_string(r.checks.size()) + " checks over " +
                                 r.data["words"].dump() + " words" + (n >= 2 ? " and the prime orbits" : "") + failed);
    }
}

void sweep_criterion(Outcome& o, BijectionKind kind, bool dof) {
    for (int n = 1; n <= 5; ++n) {
        auto graphs = n <= 4 ? graphs_up_to_4(n) : std::vector<Graph>{Graph::complete(n)};
        std::size_t inputs = 0, bad = 0;
        std::string first;
        for (const auto& g : graphs) {
            auto s = verify::sweep_bijection(kind, n, g);
            inputs += s.domain;
            bool ok = s.bijective() && s.inverse_ok && s.ceiling_partition_changes == 0 &&
                      (dof ? s.dof_changes == 0 : s.dominance_changes == 0);
            if (!ok) {
                ++bad;
                if (first.empty()) first = " first failure " + g.to_string() + ": " + s.first_problem;
            }
        }
        o.expect(bad == 0, "n=" + std::to_string(n) + ": " + std::to_string(graphs.size()) + " graph(s), " +
                               std::to_string(inputs) + " regions; bijective, ceiling partition and " +
                               (dof ? "dof" : "dominance") + " preserved" + first);
    }
}

void dominance_theorem(Outcome& o) { sweep_criterion(o, BijectionKind::dominance, false); }

void freedom_theorem(Outcome& o) {
    sweep_criterion(o, BijectionKind::freedom, true);
    for (int n = 1; n <= 5; ++n) {
        int words = 0, bad = 0;
        for_each_parking(n, nullptr, [&](const Word& w) {
            ++words;
            bad += gamma(delta(w)) != w;
        });
        o.expect(bad == 0, "gamma . delta = id on Park_" + std::to_string(n) + " (" + std::to_string(words) + " words)");
    }
}

void worked_examples(Outcome& o) {
    auto word_eq = [&](const Word& got, const std::string& want, const std::string& label) {
        o.expect(got.to_string() == want, label + " = " + got.to_string() + (got.to_string() == want ? "" : ", expected " + want));
    };
    {
        auto d = omega(Word::parse("32371272"));
        bool ok = d.pi == Permutation::parse("52163847") && d.Pi == SetPartition(8, {{1}, {2, 4, 6}, {3, 5}, {7, 8}});
        o.expect(ok, "omega(32371272) = (" + d.pi.to_string() + ", " + d.Pi.to_string() + ")");
    }
    IshCeilingDiagram fig4{Permutation::parse("41738562"), {0, 0, 1, 2, 0, 3, 5, 0}};
    Graph k8 = Graph::complete(8);
    {
        auto p = rho_hat(fig4, k8);
        std::vector<Square> want{{1, 2}, {2, 8}, {3, 10}, {4, 1}, {5, 11}, {6, 13}, {7, 9}, {8, 5}};
        o.expect(p.rooks == want, "rho-hat of (41738562, 00120350) has rooks (1,2),(2,8),(3,10),(4,1),(5,11),(6,13),(7,9),(8,5)");
    }
    auto placement = rho(fig4, k8);
    word_eq(alpha_laser_word(placement), "18918974", "laser word v");
    word_eq(alpha(placement), "42342315", "alpha");
    {
        auto s = bijection_basic(fig4);
        bool ok = s.pi == Permutation::parse("72318564") && s.Pi == SetPartition(8, {{1}, {2, 6}, {3, 7}, {4, 8}, {5}});
        o.expect(ok, "basic image (" + s.pi.to_string() + ", " + s.Pi.to_string() + ")" +
                         (ok ? "" : ", expected (72318564, {{1},{2,6},{3,7},{4,8},{5}})"));
    }
    word_eq(lambda(rho_hat(fig4, k8)), "28818825", "lambda");
    word_eq(beta(Word::parse("28818825")), "41131147", "beta(28818825)");
    word_eq(beta(Word::parse("14425")), "41152", "beta(14425)");
    word_eq(beta_prime(Word::parse("122")), "211", "beta'(122)");
    {
        auto s = bijection_dominance(fig4, k8);
        bool ok = s.pi == Permutation::parse("23415786") && s.Pi == SetPartition(8, {{1, 2, 5, 8}, {3}, {4, 6}, {7}});
        o.expect(ok, "dominance image (" + s.pi.to_string() + ", " + s.Pi.to_string() + ")");
    }
    {
        DeltaTrace t;
        auto d = delta(Word::parse("373822712"), &t);
        bool ok = d.pi == Permutation::parse("814376592") && d.eps == std::vector<int>{0, 0, 0, 1, 2, 5, 0, 6, 0};
        o.expect(ok, "delta(373822712) = (" + d.pi.to_string() + ", " + eps_string(d.eps) + ")");
        std::vector<std::string> got{to_string(t.after_first_component)};
        for (const auto& w : t.after_component) got.push_back(to_string(w));
        got.push_back(to_string(t.after_prefix_rotation));
        got.push_back(to_string(t.after_global_rotation));
        std::vector<std::string> want{"1◇◇5◇", "124◇◇◇5◇", "1284◇◇◇5◇", "2814◇◇◇5◇", "814◇◇◇5◇2"};
        std::string joined;
        for (const auto& w : got) joined += (joined.empty() ? "" : " | ") + w;
        o.expect(got == want, "diamond words " + joined);
        GammaTrace gt;
        Word back = gamma(d, &gt);
        o.expect(back == Word::parse("373822712") && gt.cycle_index == 1 && gt.concatenation == std::vector<int>{3, 1, 2},
                 "gamma returns 373822712, cycle index " + std::to_string(gt.cycle_index) + ", order C3 C1 C2");
    }
    {
        auto f = factorize_parking(Word::parse("373822712"));
        bool ok = f.blocks == std::vector<std::vector<int>>{{8}, {1, 3, 5, 6, 9}, {2, 4, 7}} && f.primes.size() == 3 &&
                  f.primes[0] == Word::parse("1") && f.primes[1] == Word::parse("22111") && f.primes[2] == Word::parse("121");
        o.expect(ok, "factorization of 373822712: 8 / 1,3,5,6,9 / 2,4,7 with 1, 22111, 121");
    }
    {
        auto t = tail_and_dof(Word::parse("211634"));
        o.expect(t.tail == std::vector<int>{6} && t.dof == 3, "tail(211634) = {6}, dof " + std::to_string(t.dof));
    }
}

void negative_controls(Outcome& o) {
    IshCeilingDiagram fig4{Permutation::parse("41738562"), {0, 0, 1, 2, 0, 3, 5, 0}};
    auto in = ish_statistics(fig4);
    auto out = shi_statistics(bijection_basic(fig4));
    o.expect(in.ceiling_partition != out.ceiling_partition,
             "basic changes the ceiling partition: " + in.ceiling_partition.to_string() + " -> " + out.ceiling_partition.to_string());
    o.expect(in.dof == 3 && out.dof == 2, "basic changes dof " + std::to_string(in.dof) + " -> " + std::to_string(out.dof));

    Graph k3 = Graph::complete(3);
    int shi = 0, ish = 0;
    for_each_shi(3, k3, [&](const ShiCeilingDiagram& d) {
        auto s = shi_statistics(d);
        shi += s.dominant && s.relatively_bounded;
    });
    for_each_ish(3, k3, [&](const IshCeilingDiagram& d) {
        auto s = ish_statistics(d);
        ish += s.dominant && s.relatively_bounded;
    });
    o.expect(shi == 2 && ish == 3, "dominant relatively bounded at n=3: Shi " + std::to_string(shi) + ", Ish " + std::to_string(ish));

    for (int n : {3, 4}) {
        Graph kn = Graph::complete(n);
        int a = 0, b = 0;
        for_each_shi(n, kn, [&](const ShiCeilingDiagram& d) { a += shi_statistics(d).relatively_bounded; });
        for_each_ish(n, kn, [&](const IshCeilingDiagram& d) { b += ish_statistics(d).relatively_bounded; });
        long want = ipow(n - 1, n - 1);
        o.expect(a == want && b == want, "relatively bounded at n=" + std::to_string(n) + ": Shi " + std::to_string(a) +
                                             ", Ish " + std::to_string(b) + ", (n-1)^(n-1) = " + std::to_string(want));
    }
}

void formula_consistency(Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
        IntPolynomial want = IntPolynomial::linear_root(0);
        for (int i = 1; i < n; ++i) want = want * IntPolynomial::linear_root(n);
        auto chi = ish_char_poly(Graph::complete(n));
        o.expect(chi == want, "chi(K_" + std::to_string(n) + ") = " + chi.to_string());
    }
    for (int n = 1; n <= 4; ++n) {
        int graphs = 0, zas = 0, rook = 0;
        for (const auto& g : graphs_up_to_4(n)) {
            ++graphs;
            long regions = 0;
            for_each_ish(n, g, [&](const IshCeilingDiagram&) { ++regions; });
            mpz_class v = ish_char_poly(g).evaluate(-1);
            if (n % 2) v = -v;
            zas += v == regions;
            rook += rook_number(g, n - 1) == ish_region_count(g);
        }
        o.expect(zas == graphs, "n=" + std::to_string(n) + ": (-1)^n chi(-1) = enumerated count on " + std::to_string(zas) +
                                    "/" + std::to_string(graphs) + " graphs");
        o.expect(rook == graphs, "n=" + std::to_string(n) + ": r_(n-1) = region formula on " + std::to_string(rook) + "/" +
                                     std::to_string(graphs) + " graphs");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    bool verbose = false;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));
    app.add_flag("-v,--verbose", verbose, "print every sub-check");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> criteria{
        {1, "region counts (n+1)^(n-1) for n = 1..6", region_counts},
        {2, "geometric oracle agrees on all graphs at n = 3, 4", geometric_agreement},
        {3, "Catalan many dominant regions for n = 3, 4, 5", dominant_regions},
        {4, "n!/(k+1)! regions per ceiling partition, equal dominant sub-counts", ceiling_refinement},
        {5, "cycle lemmas and beta, beta' exhaustively for n <= 5", cycle_lemmas},
        {6, "dominance bijection: bijective, keeps ceiling partition and dominance", dominance_theorem},
        {7, "freedom bijection: bijective, keeps ceiling partition and dof; gamma inverts delta", freedom_theorem},
        {8, "worked examples reproduce exactly", worked_examples},
        {9, "negative controls fire", negative_controls},
        {10, "characteristic polynomial, Zaslavsky and rook-number consistency", formula_consistency},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("threw: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s)\n";
        for (const auto& line : o.lines)
            if (verbose || !o.ok) std::cout << "        " << line << '\n';
    }
    std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria passed")) << '\n';
    return failures ? 1 : 0;
}
