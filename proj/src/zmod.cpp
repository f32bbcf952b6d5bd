#include "gtcat/zmod.hpp"

#include <algorithm>
#include <numeric>

namespace gtcat {

long long mod_reduce(long long v, long long m) {
    v %= m;
    return v < 0 ? v + m : v;
}

namespace {

// g = gcd(a,b) = u*a + v*b
long long xgcd(long long a, long long b, long long& u, long long& v) {
    long long u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b; a = b; b = t;
        t = u0 - q * u1; u0 = u1; u1 = t;
        t = v0 - q * v1; v0 = v1; v1 = t;
    }
    u = u0; v = v0;
    return a;
}

// unit u mod m with u*a == gcd(a,m) (mod m)
long long stabilizing_unit(long long a, long long m) {
    const long long g = std::gcd(a, m);
    const long long ap = a / g, mp = m / g;
    long long u, v;
    xgcd(ap % mp == 0 ? 0 : ap % mp, mp, u, v);
    if (mp == 1) u = 1;
    u = mod_reduce(u, m);
    for (long long t = 0; t <= g; ++t) {
        long long cand = mod_reduce(u + t * mp, m);
        if (cand != 0 && std::gcd(cand, m) == 1) return cand;
    }
    throw ConsistencyError("stabilizing unit not found");
}

} // namespace

ZModMatrix::ZModMatrix(int r, int c, long long mod) : rows(r), cols(c), m(mod) {
    require(mod >= 2, "modulus must be >= 2");
    require(r >= 0 && c >= 0, "matrix shape must be nonnegative");
    a.assign(static_cast<size_t>(r) * c, 0);
}

HowellBasis::HowellBasis(int cols, long long m) : cols_(cols), m_(m) {
    require(m >= 2, "modulus must be >= 2");
    require(cols >= 0, "column count must be nonnegative");
}

int HowellBasis::leading(const std::vector<long long>& v) const {
    for (int i = 0; i < cols_; ++i)
        if (v[i] != 0) return i;
    return cols_;
}

void HowellBasis::add_row(std::vector<long long> row) {
    require(static_cast<int>(row.size()) == cols_, "row width mismatch");
    for (auto& x : row) x = mod_reduce(x, m_);
    finalized_ = false;
    insert(std::move(row));
}

bool HowellBasis::insert(std::vector<long long> row) {
    bool changed = false;
    while (true) {
        const int l = leading(row);
        if (l == cols_) return changed;
        // locate basis row with the same pivot column
        size_t pos = 0;
        while (pos < rows_.size() && pivot_cols_[pos] < l) ++pos;
        if (pos == rows_.size() || pivot_cols_[pos] != l) {
            rows_.insert(rows_.begin() + pos, std::move(row));
            pivot_cols_.insert(pivot_cols_.begin() + pos, l);
            return true;
        }
        // combine with the existing pivot row by a unimodular transform
        auto& base = rows_[pos];
        const long long a = base[l], b = row[l];
        long long u, v;
        const long long g = xgcd(a, b, u, v);
        std::vector<long long> piv(cols_, 0), rest(cols_, 0);
        const long long s = -(b / g), t = a / g; // det [[u,v],[s,t]] = 1
        for (int i = l; i < cols_; ++i) {
            const long long x = base[i], y = row[i];
            piv[i] = mod_reduce(u * x + v * y, m_);
            rest[i] = mod_reduce(s * x + t * y, m_);
        }
        if (piv != base) { base = std::move(piv); changed = true; }
        row = std::move(rest); // leading index strictly increased
    }
}

void HowellBasis::finalize() {
    if (finalized_) return;
    // Howell closure: annihilator multiples of each pivot row stay in the span
    // representation.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rows_.size(); ++i) {
            const long long d = rows_[i][pivot_cols_[i]];
            const long long ann = m_ / std::gcd(d, m_);
            if (ann == 1) continue;
            std::vector<long long> extra(cols_, 0);
            bool nonzero = false;
            for (int c = pivot_cols_[i] + 1; c < cols_; ++c) {
                extra[c] = mod_reduce(rows_[i][c] * ann, m_);
                nonzero = nonzero || extra[c] != 0;
            }
            if (!nonzero) continue;
            changed = insert(std::move(extra)) || changed;
        }
    }
    // normalize pivots to divisors of m
    for (size_t i = 0; i < rows_.size(); ++i) {
        const long long d = rows_[i][pivot_cols_[i]];
        const long long g = std::gcd(d, m_);
        if (d != g) {
            const long long u = stabilizing_unit(d, m_);
            for (int c = pivot_cols_[i]; c < cols_; ++c)
                rows_[i][c] = mod_reduce(rows_[i][c] * u, m_);
        }
    }
    // reduce entries above each pivot
    for (size_t j = 0; j < rows_.size(); ++j) {
        const int c = pivot_cols_[j];
        const long long d = rows_[j][c];
        for (size_t i = 0; i < j; ++i) {
            const long long q = rows_[i][c] / d;
            if (q == 0) continue;
            for (int k = c; k < cols_; ++k)
                rows_[i][k] = mod_reduce(rows_[i][k] - q * rows_[j][k], m_);
        }
    }
    finalized_ = true;
}

std::vector<long long> HowellBasis::reduce(std::vector<long long> v,
                                           std::vector<long long>* comb) const {
    ensure(finalized_, "HowellBasis::reduce before finalize");
    require(static_cast<int>(v.size()) == cols_, "vector width mismatch");
    for (auto& x : v) x = mod_reduce(x, m_);
    if (comb) comb->assign(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const int c = pivot_cols_[i];
        const long long d = rows_[i][c];
        const long long q = v[c] / d;
        if (q == 0) continue;
        if (comb) (*comb)[i] = q;
        for (int k = c; k < cols_; ++k)
            v[k] = mod_reduce(v[k] - q * rows_[i][k], m_);
    }
    return v;
}

namespace {

// Howell basis of the rows of [A^T | I]; row space = {[A x | x]}.
HowellBasis transposed_augmented(const ZModMatrix& A) {
    HowellBasis h(A.rows + A.cols, A.m);
    for (int i = 0; i < A.cols; ++i) {
        std::vector<long long> row(A.rows + A.cols, 0);
        for (int r = 0; r < A.rows; ++r) row[r] = A.at(r, i);
        row[A.rows + i] = 1;
        h.add_row(std::move(row));
    }
    h.finalize();
    return h;
}

} // namespace

LinSolveResult solve_mod_m(const ZModMatrix& A, std::span<const long long> b) {
    require(static_cast<int>(b.size()) == A.rows, "rhs length mismatch");
    const HowellBasis h = transposed_augmented(A);

    LinSolveResult res;
    // kernel: rows whose first A.rows coordinates vanish
    for (const auto& row : h.rows()) {
        bool zero_head = true;
        for (int r = 0; r < A.rows && zero_head; ++r) zero_head = row[r] == 0;
        if (!zero_head) continue;
        std::vector<long long> k(row.begin() + A.rows, row.end());
        if (std::any_of(k.begin(), k.end(), [](long long x) { return x != 0; }))
            res.kernel_gens.push_back(std::move(k));
    }

    std::vector<long long> v(A.rows + A.cols, 0);
    for (int r = 0; r < A.rows; ++r) v[r] = mod_reduce(b[r], A.m);
    v = h.reduce(std::move(v));
    for (int r = 0; r < A.rows; ++r)
        if (v[r] != 0) { res.solvable = false; return res; }
    res.solvable = true;
    res.particular.resize(A.cols);
    for (int c = 0; c < A.cols; ++c)
        res.particular[c] = mod_reduce(-v[A.rows + c], A.m);
    return res;
}

std::vector<std::vector<long long>> kernel_mod_m(const ZModMatrix& A) {
    std::vector<long long> zero(A.rows, 0);
    return solve_mod_m(A, zero).kernel_gens;
}

std::vector<std::vector<long long>> quotient_transversal(
    const std::vector<std::vector<long long>>& span_rows, int r, long long m,
    size_t max_size) {
    HowellBasis h(r, m);
    for (const auto& row : span_rows) h.add_row(row);
    h.finalize();

    std::vector<long long> radix(r, m);
    for (size_t i = 0; i < h.rows().size(); ++i)
        radix[h.pivot_cols()[i]] = h.rows()[i][h.pivot_cols()[i]];

    size_t total = 1;
    for (int c = 0; c < r; ++c) {
        total *= static_cast<size_t>(radix[c]);
        require(total <= max_size, "quotient transversal too large");
    }

    std::vector<std::vector<long long>> out;
    out.reserve(total);
    std::vector<long long> cur(r, 0);
    while (true) {
        out.push_back(cur);
        int c = r - 1;
        while (c >= 0) {
            if (++cur[c] < radix[c]) break;
            cur[c] = 0;
            --c;
        }
        if (c < 0) break;
    }
    return out;
}

} // namespace gtcat
