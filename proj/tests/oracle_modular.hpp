#pragma once

// Brute-force oracle for small twisted group algebras over small finite
// fields: Jacobson radical by the quasi-regularity definition, radical
// series, simple dimensions from minimal ideals of the semisimple quotient,
// and projective indecomposable dimensions from an exhaustive primitive
// idempotent decomposition. Everything is exhaustive enumeration; nothing is
// shared with the engine under test except base field arithmetic.

#include <algorithm>
#include <functional>
#include <vector>

#include "gtcat/cochain.hpp"
#include "gtcat/fq.hpp"
#include "gtcat/group.hpp"

namespace gtcat::oracle {

using Elem = FqField::Elem;
using AVec = std::vector<Elem>;

struct SmallAlgebra {
    const FqField& F;
    GroupPtr L;
    Cochain xi; // reduced, on the whole of L
    int n;

    SmallAlgebra(const FqField& f, GroupPtr l, Cochain x)
        : F(f), L(std::move(l)), xi(std::move(x)), n(L->order()) {}

    Elem zeta_pow(long long k) const {
        return F.pow(F.zeta(xi.modulus()), mod_reduce(k, xi.modulus()));
    }

    AVec mul(const AVec& a, const AVec& b) const {
        AVec c(n, F.zero());
        for (int x = 0; x < n; ++x) {
            if (F.is_zero(a[x])) continue;
            for (int y = 0; y < n; ++y) {
                if (F.is_zero(b[y])) continue;
                const int xy = L->mul(x, y);
                c[xy] = F.add(c[xy], F.mul(zeta_pow(xi.at_local({x, y})),
                                           F.mul(a[x], b[y])));
            }
        }
        return c;
    }

    AVec unit() const {
        AVec u(n, F.zero());
        u[L->identity()] = F.one();
        return u;
    }
};

struct Echelon {
    const FqField& F;
    int amb;
    std::vector<AVec> rows;
    std::vector<int> pivots;

    Echelon(const FqField& f, int a) : F(f), amb(a) {}
    bool add(AVec v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Elem c = v[pivots[r]];
            if (F.is_zero(c)) continue;
            for (int j = 0; j < amb; ++j) v[j] = F.sub(v[j], F.mul(c, rows[r][j]));
        }
        int piv = -1;
        for (int j = 0; j < amb; ++j)
            if (!F.is_zero(v[j])) { piv = j; break; }
        if (piv < 0) return false;
        const Elem inv = F.inv(v[piv]);
        for (int j = 0; j < amb; ++j) v[j] = F.mul(v[j], inv);
        for (auto& r : rows) {
            const Elem c = r[piv];
            if (F.is_zero(c)) continue;
            for (int j = 0; j < amb; ++j) r[j] = F.sub(r[j], F.mul(c, v[j]));
        }
        size_t pos = 0;
        while (pos < rows.size() && pivots[pos] < piv) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, piv);
        return true;
    }
    bool contains(AVec v) const {
        Echelon tmp = *this;
        return !tmp.add(std::move(v));
    }
    int dim() const { return static_cast<int>(rows.size()); }
};

// enumerate every element of the span of `basis` (q^dim of them)
inline void enumerate_span(const SmallAlgebra& A, const std::vector<AVec>& basis,
                           const std::function<void(const AVec&)>& fn) {
    const long long q = A.F.q();
    std::vector<long long> coeff(basis.size(), 0);
    while (true) {
        AVec v(A.n, A.F.zero());
        for (size_t i = 0; i < basis.size(); ++i) {
            if (coeff[i] == 0) continue;
            const Elem c = A.F.decode(coeff[i]);
            for (int x = 0; x < A.n; ++x)
                v[x] = A.F.add(v[x], A.F.mul(c, basis[i][x]));
        }
        fn(v);
        size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
        if (i == coeff.size()) break;
    }
}

inline bool is_invertible(const SmallAlgebra& A, const AVec& a) {
    // left multiplication by a must have full rank
    FqMatrix M(A.n, A.n);
    for (int y = 0; y < A.n; ++y) {
        AVec ey(A.n, A.F.zero());
        ey[y] = A.F.one();
        const AVec col = A.mul(a, ey);
        for (int x = 0; x < A.n; ++x) M.at(x, y) = col[x];
    }
    return fq_rank(A.F, M) == A.n;
}

// Jacobson radical: {x : 1 + y x invertible for every y in A}
inline std::vector<AVec> radical_brute(const SmallAlgebra& A) {
    std::vector<AVec> full;
    for (int x = 0; x < A.n; ++x) {
        AVec e(A.n, A.F.zero());
        e[x] = A.F.one();
        full.push_back(e);
    }
    Echelon rad(A.F, A.n);
    enumerate_span(A, full, [&](const AVec& x) {
        bool in = true;
        enumerate_span(A, full, [&](const AVec& y) {
            if (!in) return;
            AVec t = A.mul(y, x);
            t[A.L->identity()] = A.F.add(t[A.L->identity()], A.F.one());
            if (!is_invertible(A, t)) in = false;
        });
        if (in) rad.add(x);
    });
    return rad.rows;
}

inline std::vector<int> radical_series_dims(const SmallAlgebra& A,
                                            const std::vector<AVec>& J) {
    std::vector<int> dims;
    std::vector<AVec> power = J;
    while (!power.empty()) {
        dims.push_back(static_cast<int>(power.size()));
        Echelon next(A.F, A.n);
        for (const auto& a : power)
            for (const auto& b : J) next.add(A.mul(a, b));
        power = next.rows;
    }
    return dims;
}

struct OracleReport {
    std::vector<int> radical_series;     // dims of J, J^2, ...
    std::vector<int> simple_dims;        // sorted
    std::vector<int> projective_dims;    // sorted, one per distinct simple
    std::vector<std::pair<int, int>> pairs; // (dim S, dim P) per distinct simple
};

inline OracleReport analyze(const SmallAlgebra& A) {
    OracleReport rep;
    const std::vector<AVec> J = radical_brute(A);
    rep.radical_series = radical_series_dims(A, J);

    Echelon jred(A.F, A.n);
    for (const auto& v : J) jred.add(v);

    // exhaustive primitive idempotent decomposition of 1
    std::vector<AVec> prims;
    std::function<void(const AVec&)> decompose = [&](const AVec& f) {
        // find an idempotent e in fAf with e != 0, f
        std::vector<AVec> corner;
        {
            Echelon ech(A.F, A.n);
            for (int x = 0; x < A.n; ++x) {
                AVec b(A.n, A.F.zero());
                b[x] = A.F.one();
                AVec v = A.mul(A.mul(f, b), f);
                if (ech.add(v)) corner.push_back(std::move(v));
            }
        }
        AVec found(A.n, A.F.zero());
        bool have = false;
        enumerate_span(A, corner, [&](const AVec& e) {
            if (have) return;
            bool zero = true, isf = true;
            for (int x = 0; x < A.n; ++x) {
                if (!A.F.is_zero(e[x])) zero = false;
                if (!A.F.eq(e[x], f[x])) isf = false;
            }
            if (zero || isf) return;
            if (A.mul(e, e) == e) {
                found = e;
                have = true;
            }
        });
        if (!have) {
            prims.push_back(f);
            return;
        }
        AVec rest(A.n);
        for (int x = 0; x < A.n; ++x) rest[x] = A.F.sub(f[x], found[x]);
        decompose(found);
        decompose(rest);
    };
    decompose(A.unit());

    // group the A e_k by isomorphism via the semisimple quotient pairing
    auto image_pair_nonzero = [&](const AVec& e, const AVec& fidem) {
        for (int x = 0; x < A.n; ++x) {
            AVec b(A.n, A.F.zero());
            b[x] = A.F.one();
            const AVec v = A.mul(A.mul(e, b), fidem);
            if (!jred.contains(v)) return true;
        }
        return false;
    };

    std::vector<int> owner(prims.size(), -1);
    std::vector<std::vector<size_t>> classes;
    for (size_t k = 0; k < prims.size(); ++k) {
        bool placed = false;
        for (size_t c = 0; c < classes.size() && !placed; ++c)
            if (image_pair_nonzero(prims[k], prims[classes[c].front()]) &&
                image_pair_nonzero(prims[classes[c].front()], prims[k])) {
                classes[c].push_back(k);
                placed = true;
            }
        if (!placed) classes.push_back({k});
        (void)owner;
    }

    for (const auto& cls : classes) {
        const AVec& e = prims[cls.front()];
        Echelon pe(A.F, A.n);
        for (int x = 0; x < A.n; ++x) {
            AVec b(A.n, A.F.zero());
            b[x] = A.F.one();
            pe.add(A.mul(b, e)); // A e
        }
        Echelon je(A.F, A.n);
        for (const auto& j : J) je.add(A.mul(j, e)); // J e
        const int pdim = pe.dim();
        const int sdim = pdim - je.dim(); // top of A e
        // multiplicity of this projective in the regular module = dim of top
        if (static_cast<int>(cls.size()) != sdim)
            throw std::runtime_error("oracle: multiplicity != top dimension");
        rep.pairs.emplace_back(sdim, pdim);
    }
    for (const auto& [s, p] : rep.pairs) {
        rep.simple_dims.push_back(s);
        rep.projective_dims.push_back(p);
    }
    std::sort(rep.simple_dims.begin(), rep.simple_dims.end());
    std::sort(rep.projective_dims.begin(), rep.projective_dims.end());
    std::sort(rep.pairs.begin(), rep.pairs.end());
    return rep;
}

} // namespace gtcat::oracle
