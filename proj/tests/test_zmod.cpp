#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gtcat/zmod.hpp"

using namespace gtcat;

namespace {

// brute-force solution set of A x = b over Z/m (cols <= 3)
std::set<std::vector<long long>> brute_solutions(const ZModMatrix& A,
                                                 const std::vector<long long>& b) {
    std::set<std::vector<long long>> out;
    std::vector<long long> x(A.cols, 0);
    while (true) {
        bool ok = true;
        for (int r = 0; r < A.rows && ok; ++r) {
            long long acc = 0;
            for (int c = 0; c < A.cols; ++c) acc += A.at(r, c) * x[c];
            ok = mod_reduce(acc - b[r], A.m) == 0;
        }
        if (ok) out.insert(x);
        int c = A.cols - 1;
        while (c >= 0 && ++x[c] == A.m) x[c--] = 0;
        if (c < 0) break;
    }
    return out;
}

// enumerate particular + span(kernel gens)
std::set<std::vector<long long>> span_solutions(const LinSolveResult& r, int cols,
                                                long long m) {
    std::set<std::vector<long long>> out;
    if (!r.solvable) return out;
    std::set<std::vector<long long>> frontier = {r.particular};
    out = frontier;
    while (!frontier.empty()) {
        std::set<std::vector<long long>> next;
        for (const auto& v : frontier)
            for (const auto& k : r.kernel_gens) {
                std::vector<long long> w(cols);
                for (int c = 0; c < cols; ++c) w[c] = mod_reduce(v[c] + k[c], m);
                if (out.insert(w).second) next.insert(std::move(w));
            }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("solve examples from the contract") {
    // A = 0, b = 0: particular 0, kernel = all of (Z/m)^n
    ZModMatrix zero(2, 2, 6);
    const auto r0 = solve_mod_m(zero, std::vector<long long>{0, 0});
    REQUIRE(r0.solvable);
    CHECK(r0.particular == std::vector<long long>({0, 0}));
    CHECK(span_solutions(r0, 2, 6).size() == 36);

    // m = 4, A = [2], b = [2]: solutions {1, 3}
    ZModMatrix A(1, 1, 4);
    A.at(0, 0) = 2;
    const auto r1 = solve_mod_m(A, std::vector<long long>{2});
    REQUIRE(r1.solvable);
    CHECK(mod_reduce(2 * r1.particular[0], 4) == 2);
    CHECK(span_solutions(r1, 1, 4) ==
          std::set<std::vector<long long>>({{1}, {3}}));

    // m = 4, A = [2], b = [1]: no solution
    const auto r2 = solve_mod_m(A, std::vector<long long>{1});
    CHECK(!r2.solvable);
}

TEST_CASE("exhaustive agreement with brute force") {
    std::mt19937 rng(123);
    for (long long m : {2, 3, 4, 6}) {
        for (int rows = 1; rows <= 3; ++rows)
            for (int cols = 1; cols <= 3; ++cols)
                for (int t = 0; t < 12; ++t) {
                    ZModMatrix A(rows, cols, m);
                    for (auto& v : A.a) v = static_cast<long long>(rng() % m);
                    std::vector<long long> b(rows);
                    for (auto& v : b) v = static_cast<long long>(rng() % m);
                    const auto res = solve_mod_m(A, b);
                    const auto brute = brute_solutions(A, b);
                    if (!res.solvable) {
                        CHECK(brute.empty());
                        continue;
                    }
                    CHECK(brute == span_solutions(res, cols, m));
                }
    }
}

TEST_CASE("kernel generators satisfy A k = 0 exactly") {
    std::mt19937 rng(5);
    ZModMatrix A(4, 5, 12);
    for (auto& v : A.a) v = static_cast<long long>(rng() % 12);
    for (const auto& k : kernel_mod_m(A))
        for (int r = 0; r < A.rows; ++r) {
            long long acc = 0;
            for (int c = 0; c < A.cols; ++c) acc += A.at(r, c) * k[c];
            CHECK(mod_reduce(acc, 12) == 0);
        }
}

TEST_CASE("quotient transversal sizes") {
    // (Z/4)^2 modulo the span of (2,0): pivots give 2 * 4 = 8 cosets
    const auto t = quotient_transversal({{2, 0}}, 2, 4);
    CHECK(t.size() == 8);
    std::set<std::vector<long long>> distinct(t.begin(), t.end());
    CHECK(distinct.size() == 8);

    // full space modulo itself
    const auto t2 = quotient_transversal({{1, 0}, {0, 1}}, 2, 4);
    CHECK(t2.size() == 1);

    // trivial span
    const auto t3 = quotient_transversal({}, 2, 2);
    CHECK(t3.size() == 4);
}

TEST_CASE("howell reduce yields canonical residues") {
    HowellBasis h(3, 8);
    h.add_row({2, 1, 0});
    h.add_row({0, 4, 2});
    h.finalize();
    std::mt19937 rng(9);
    for (int t = 0; t < 200; ++t) {
        std::vector<long long> v = {static_cast<long long>(rng() % 8),
                                    static_cast<long long>(rng() % 8),
                                    static_cast<long long>(rng() % 8)};
        const auto r1 = h.reduce(v);
        // shifting by random span elements must not change the residue
        std::vector<long long> w = v;
        for (const auto& row : h.rows()) {
            const long long c = static_cast<long long>(rng() % 8);
            for (int i = 0; i < 3; ++i) w[i] = mod_reduce(w[i] + c * row[i], 8);
        }
        CHECK(h.reduce(w) == r1);
    }
}
