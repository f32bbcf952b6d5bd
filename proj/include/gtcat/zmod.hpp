#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gtcat/errors.hpp"

namespace gtcat {

/// Dense matrix over Z/m, entries reduced to [0, m).
struct ZModMatrix {
    int rows = 0;
    int cols = 0;
    long long m = 2;
    std::vector<long long> a; // row-major

    ZModMatrix() = default;
    ZModMatrix(int r, int c, long long mod);
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct LinSolveResult {
    bool solvable = false;
    std::vector<long long> particular;              // x with A x = b
    std::vector<std::vector<long long>> kernel_gens; // generate {x : A x = 0} as Z/m-module
};

/// Solve A x = b over Z/m. Returns a particular solution and a generating
/// set of the kernel module (Howell-form based). solvable == false exactly
/// when b is not in the column span.
LinSolveResult solve_mod_m(const ZModMatrix& A, std::span<const long long> b);

/// Row-space Howell basis over Z/m with incremental insertion. After
/// finalize(), the basis is canonical for the row module: pivots divide m,
/// entries above a pivot are reduced mod the pivot, and every span element
/// with leading index >= c lies in the span of rows with leading index >= c.
class HowellBasis {
public:
    HowellBasis(int cols, long long m);

    void add_row(std::vector<long long> row);
    void finalize();

    /// Canonical residue of v modulo the row span (valid after finalize()).
    /// If comb != nullptr it receives coefficients c_i with
    /// v = residue + sum c_i * row_i.
    std::vector<long long> reduce(std::vector<long long> v,
                                  std::vector<long long>* comb = nullptr) const;

    const std::vector<std::vector<long long>>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    long long modulus() const { return m_; }
    int cols() const { return cols_; }

private:
    int leading(const std::vector<long long>& v) const;
    bool insert(std::vector<long long> row);

    int cols_;
    long long m_;
    bool finalized_ = false;
    std::vector<std::vector<long long>> rows_; // ordered by pivot column
    std::vector<int> pivot_cols_;
};

/// Generators of {x : A x = 0} over Z/m.
std::vector<std::vector<long long>> kernel_mod_m(const ZModMatrix& A);

/// Unique representatives of (Z/m)^r modulo the span of the given rows.
/// Throws DomainError if the quotient has more than max_size elements.
std::vector<std::vector<long long>> quotient_transversal(
    const std::vector<std::vector<long long>>& span_rows, int r, long long m,
    size_t max_size = 4096);

long long mod_reduce(long long v, long long m);

} // namespace gtcat
