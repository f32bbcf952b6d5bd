#include <algorithm>
#include <numeric>
#include <random>

#include "gtcat/fq.hpp"
#include "gtcat/projrep.hpp"

// Finite-field side of the twisted group algebra: composition factors of the
// regular module, Jacobson radical via layered characteristic-coefficient
// kernels, and projective covers through lifted primitive idempotents.

namespace gtcat {

namespace {

using Elem = FqField::Elem;
using AVec = std::vector<Elem>; // element of the algebra in the u_x basis

struct ModAlg {
    const FqField& F;
    GroupPtr L;
    const Cochain& xi; // reduced modulus, order coprime to p
    long long m;
    int n;
    std::vector<Elem> zpows; // zeta^k, k = 0..m-1
    std::vector<int> gens;   // generating set of L

    ModAlg(const FqField& f, GroupPtr l, const Cochain& x)
        : F(f), L(std::move(l)), xi(x), m(x.modulus()), n(L->order()) {
        const Elem z = F.zeta(m);
        zpows.resize(static_cast<size_t>(m));
        zpows[0] = F.one();
        for (long long k = 1; k < m; ++k) zpows[k] = F.mul(zpows[k - 1], z);
        // greedy minimal generating set
        Subgroup cur = Subgroup::trivial(L);
        for (int x0 = 0; x0 < n && cur.size() < n; ++x0) {
            if (cur.contains(x0)) continue;
            std::vector<int> g = gens;
            g.push_back(x0);
            Subgroup next = Subgroup::closure(L, g);
            if (next.size() > cur.size()) {
                gens.push_back(x0);
                cur = std::move(next);
            }
        }
        if (gens.empty()) gens.push_back(L->identity());
    }

    const Elem& zeta_pow(long long k) const { return zpows[mod_reduce(k, m)]; }

    FqMatrix left_mul(int g) const {
        FqMatrix M(n, n);
        for (int y = 0; y < n; ++y)
            M.at(L->mul(g, y), y) = zeta_pow(xi.at_local({g, y}));
        return M;
    }

    AVec basis_elem(int x) const {
        AVec v(n, F.zero());
        v[x] = F.one();
        return v;
    }

    AVec amul(const AVec& a, const AVec& b) const {
        AVec c(n, F.zero());
        for (int x = 0; x < n; ++x) {
            if (F.is_zero(a[x])) continue;
            for (int y = 0; y < n; ++y) {
                if (F.is_zero(b[y])) continue;
                const int xy = L->mul(x, y);
                c[xy] = F.add(c[xy],
                              F.mul(zeta_pow(xi.at_local({x, y})), F.mul(a[x], b[y])));
            }
        }
        return c;
    }

    // matrix of left multiplication by an algebra element
    FqMatrix lmat(const AVec& a) const {
        FqMatrix M(n, n);
        for (int x = 0; x < n; ++x) {
            if (F.is_zero(a[x])) continue;
            for (int y = 0; y < n; ++y) {
                const int xy = L->mul(x, y);
                M.at(xy, y) =
                    F.add(M.at(xy, y), F.mul(zeta_pow(xi.at_local({x, y})), a[x]));
            }
        }
        return M;
    }

    // matrix of right multiplication: a -> a * e
    FqMatrix rmat(const AVec& e) const {
        FqMatrix M(n, n);
        for (int y = 0; y < n; ++y) {
            if (F.is_zero(e[y])) continue;
            for (int x = 0; x < n; ++x) {
                const int xy = L->mul(x, y);
                M.at(xy, x) =
                    F.add(M.at(xy, x), F.mul(zeta_pow(xi.at_local({x, y})), e[y]));
            }
        }
        return M;
    }
};

// ---------------------------------------------------------------- submodules

struct Module {
    int dim = 0;
    std::vector<FqMatrix> act; // action of ModAlg::gens, dim x dim
};

// echelon basis with membership test / insertion over F_q
struct SpinBasis {
    const FqField& F;
    int amb;
    std::vector<std::vector<Elem>> rows; // reduced echelon, pivot ascending
    std::vector<int> pivots;

    SpinBasis(const FqField& f, int ambient) : F(f), amb(ambient) {}

    // reduce v; returns true (and absorbs) if independent
    bool add(std::vector<Elem> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Elem& c = v[pivots[r]];
            if (F.is_zero(c)) continue;
            const Elem f = c;
            for (int j = 0; j < amb; ++j)
                v[j] = F.sub(v[j], F.mul(f, rows[r][j]));
        }
        int piv = -1;
        for (int j = 0; j < amb; ++j)
            if (!F.is_zero(v[j])) { piv = j; break; }
        if (piv < 0) return false;
        const Elem inv = F.inv(v[piv]);
        for (int j = 0; j < amb; ++j) v[j] = F.mul(v[j], inv);
        // keep earlier rows reduced against the new one
        for (size_t r = 0; r < rows.size(); ++r) {
            const Elem c = rows[r][piv];
            if (F.is_zero(c)) continue;
            for (int j = 0; j < amb; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(c, v[j]));
        }
        size_t pos = 0;
        while (pos < rows.size() && pivots[pos] < piv) ++pos;
        rows.insert(rows.begin() + pos, std::move(v));
        pivots.insert(pivots.begin() + pos, piv);
        return true;
    }

    int size() const { return static_cast<int>(rows.size()); }
};

std::vector<Elem> mat_vec(const FqField& F, const FqMatrix& A,
                          const std::vector<Elem>& v) {
    std::vector<Elem> out(A.rows, F.zero());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            if (F.is_zero(A.at(i, j)) || F.is_zero(v[j])) continue;
            out[i] = F.add(out[i], F.mul(A.at(i, j), v[j]));
        }
    return out;
}

// smallest invariant subspace containing v
SpinBasis spin(const FqField& F, const Module& M, const std::vector<Elem>& v) {
    SpinBasis basis(F, M.dim);
    std::vector<std::vector<Elem>> queue = {v};
    basis.add(v);
    while (!queue.empty()) {
        const std::vector<Elem> w = std::move(queue.back());
        queue.pop_back();
        for (const auto& a : M.act) {
            std::vector<Elem> u = mat_vec(F, a, w);
            if (basis.add(u)) queue.push_back(std::move(u));
        }
    }
    return basis;
}

// restrict/quotient along an invariant subspace given by its echelon basis
std::pair<Module, Module> split_along(const FqField& F, const Module& M,
                                      const SpinBasis& W) {
    const int d = M.dim, k = W.size();
    // full basis: W rows then complementary unit vectors
    std::vector<std::vector<Elem>> basis = W.rows;
    std::vector<char> used(d, 0);
    for (int p : W.pivots) used[p] = 1;
    for (int j = 0; j < d && static_cast<int>(basis.size()) < d; ++j) {
        if (used[j]) continue;
        std::vector<Elem> e(d, F.zero());
        e[j] = F.one();
        basis.push_back(std::move(e));
    }
    FqMatrix B(d, d); // columns = basis vectors
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) B.at(r, c) = basis[c][r];
    // invert B
    FqMatrix Aug(d, 2 * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) Aug.at(i, j) = B.at(i, j);
        Aug.at(i, d + i) = F.one();
    }
    // gaussian inverse
    {
        int r = 0;
        for (int c = 0; c < d; ++c) {
            int pr = -1;
            for (int i = r; i < d; ++i)
                if (!F.is_zero(Aug.at(i, c))) { pr = i; break; }
            ensure(pr >= 0, "basis completion is singular");
            for (int j = 0; j < 2 * d; ++j) std::swap(Aug.at(pr, j), Aug.at(r, j));
            const Elem inv = F.inv(Aug.at(r, c));
            for (int j = 0; j < 2 * d; ++j) Aug.at(r, j) = F.mul(Aug.at(r, j), inv);
            for (int i = 0; i < d; ++i) {
                if (i == r || F.is_zero(Aug.at(i, c))) continue;
                const Elem f = Aug.at(i, c);
                for (int j = 0; j < 2 * d; ++j)
                    Aug.at(i, j) = F.sub(Aug.at(i, j), F.mul(f, Aug.at(r, j)));
            }
            ++r;
        }
    }
    FqMatrix Binv(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) Binv.at(i, j) = Aug.at(i, d + j);

    Module sub{k, {}}, quot{d - k, {}};
    for (const auto& a : M.act) {
        const FqMatrix T = fq_mul(F, Binv, fq_mul(F, a, B));
        FqMatrix s(k, k), q(d - k, d - k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s.at(i, j) = T.at(i, j);
        // invariance: bottom-left block must vanish
        for (int i = k; i < d; ++i)
            for (int j = 0; j < k; ++j)
                ensure(F.is_zero(T.at(i, j)), "claimed subspace is not invariant");
        for (int i = k; i < d; ++i)
            for (int j = k; j < d; ++j) q.at(i - k, j - k) = T.at(i, j);
        sub.act.push_back(std::move(s));
        quot.act.push_back(std::move(q));
    }
    return {std::move(sub), std::move(quot)};
}

// MeatAxe chop with Norton's criterion on multiplicity-free factors
void chop(const FqField& F, const Module& M, std::mt19937_64& rng,
          std::vector<Module>& out) {
    if (M.dim == 0) return;
    if (M.dim == 1) { out.push_back(M); return; }

    std::uniform_int_distribution<long long> coef(0, F.q() - 1);
    std::uniform_int_distribution<size_t> pick(0, M.act.size() - 1);

    for (int attempt = 0; attempt < 64; ++attempt) {
        // random element of the acting algebra: short random words
        FqMatrix theta(M.dim, M.dim);
        const int words = 2 + static_cast<int>(pick(rng) % 3) + attempt / 8;
        for (int w = 0; w < words; ++w) {
            FqMatrix word = FqMatrix::identity(F, M.dim);
            const int len = 1 + static_cast<int>(pick(rng) % 3);
            for (int t = 0; t < len; ++t) word = fq_mul(F, word, M.act[pick(rng)]);
            theta = fq_add(F, theta, fq_scale(F, word, F.decode(coef(rng))));
        }
        const FqPoly cp = fq_charpoly(F, theta);
        const auto factors = poly_factor(F, cp, rng());
        for (const auto& [pf, mult] : factors) {
            const FqMatrix pfth = fq_poly_eval(F, pf, theta);
            const auto ker = nullspace_fq(F, pfth);
            if (ker.empty()) continue;

            // any kernel vector generating a proper submodule splits M
            bool split_found = false;
            for (size_t ki = 0; ki < ker.size() && !split_found; ++ki) {
                const SpinBasis W = spin(F, M, ker[ki]);
                if (W.size() < M.dim) {
                    auto [sub, quot] = split_along(F, M, W);
                    chop(F, sub, rng, out);
                    chop(F, quot, rng, out);
                    split_found = true;
                }
            }
            if (split_found) return;

            // Norton's criterion applies to multiplicity-free factors only
            if (mult != 1 || static_cast<int>(ker.size()) != poly_deg(F, pf))
                continue;
            // dual side: spin a kernel vector of the transposed action
            Module Mt{M.dim, {}};
            for (const auto& a : M.act) Mt.act.push_back(fq_transpose(a));
            const auto kerT = nullspace_fq(F, fq_transpose(pfth));
            ensure(!kerT.empty(), "transposed kernel empty for a singular factor");
            const SpinBasis Wt = spin(F, Mt, kerT.front());
            if (Wt.size() < M.dim) {
                // annihilator of the dual submodule is a proper submodule
                FqMatrix rowsm(Wt.size(), M.dim);
                for (int i = 0; i < Wt.size(); ++i)
                    for (int j = 0; j < M.dim; ++j) rowsm.at(i, j) = Wt.rows[i][j];
                const auto ann = nullspace_fq(F, rowsm);
                ensure(!ann.empty() && static_cast<int>(ann.size()) < M.dim,
                       "dual annihilator degenerate");
                SpinBasis U2 = spin(F, M, ann.front());
                for (const auto& v : ann) U2.add(v);
                ensure(U2.size() < M.dim, "annihilator spun to the full module");
                auto [sub, quot] = split_along(F, M, U2);
                chop(F, sub, rng, out);
                chop(F, quot, rng, out);
                return;
            }
            out.push_back(M); // Norton: irreducible
            return;
        }
    }
    throw DomainError("module chop made no progress; retry with a different seed");
}

// Hom_A(M, N): solutions X with X a_M = a_N X for every generator action
int hom_dimension(const FqField& F, const Module& M, const Module& N,
                  std::vector<FqMatrix>* homs = nullptr) {
    const int dm = M.dim, dn = N.dim;
    const int vars = dm * dn;
    FqMatrix A(static_cast<int>(M.act.size()) * dm * dn, vars);
    int r = 0;
    for (size_t g = 0; g < M.act.size(); ++g) {
        // (X a_M - a_N X)[i][j] = sum_k X[i][k] aM[k][j] - aN[i][k] X[k][j]
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j) {
                for (int k = 0; k < dm; ++k)
                    A.at(r, i * dm + k) =
                        F.add(A.at(r, i * dm + k), M.act[g].at(k, j));
                for (int k = 0; k < dn; ++k)
                    A.at(r, k * dm + j) =
                        F.sub(A.at(r, k * dm + j), N.act[g].at(i, k));
                ++r;
            }
    }
    const auto basis = nullspace_fq(F, A);
    if (homs) {
        homs->clear();
        for (const auto& v : basis) {
            FqMatrix X(dn, dm);
            for (int i = 0; i < dn; ++i)
                for (int j = 0; j < dm; ++j) X.at(i, j) = v[i * dm + j];
            homs->push_back(std::move(X));
        }
    }
    return static_cast<int>(basis.size());
}

bool modules_isomorphic(const FqField& F, const Module& M, const Module& N) {
    if (M.dim != N.dim) return false;
    return hom_dimension(F, M, N) > 0; // Schur: irreducibles, any nonzero hom is iso
}

// ---------------------------------------------------------------- radical

// kernel layers of the characteristic-coefficient maps; exactness of the
// result is certified afterwards by nilpotency plus the split semisimple
// dimension identity.
std::vector<AVec> radical_basis(const ModAlg& A) {
    const FqField& F = A.F;
    const int n = A.n;
    std::vector<AVec> basis;
    for (int x = 0; x < n; ++x) basis.push_back(A.basis_elem(x));

    int l = 0;
    {
        long long pk = A.F.p();
        while (pk <= n) { ++l; pk *= A.F.p(); }
    }
    // layers k = 0..l, coefficient index p^k
    long long pk = 1;
    for (int k = 0; k <= l && !basis.empty(); ++k, pk *= F.p()) {
        const int r = static_cast<int>(basis.size());
        std::vector<FqMatrix> lmats;
        lmats.reserve(r);
        for (const auto& b : basis) lmats.push_back(A.lmat(b));
        // G[j][i] = c_{p^k}(b_i * b_j) = coeff of t^{n - p^k} in charpoly
        FqMatrix G(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                const FqMatrix prod = fq_mul(F, lmats[i], lmats[j]);
                const FqPoly cp = fq_charpoly(F, prod);
                G.at(j, i) = (n - pk >= 0 && n - pk < static_cast<long long>(cp.size()))
                                 ? cp[n - pk]
                                 : F.zero();
            }
        const auto skernel = nullspace_fq(F, G);
        SpinBasis red(F, n);
        for (const auto& s : skernel) {
            AVec v(n, F.zero());
            for (int i = 0; i < r; ++i) {
                const Elem t = F.frobenius_inv(s[i], k);
                if (F.is_zero(t)) continue;
                for (int x = 0; x < n; ++x)
                    v[x] = F.add(v[x], F.mul(t, basis[i][x]));
            }
            red.add(v);
        }
        basis = red.rows;
    }
    return basis;
}

} // namespace

TwistedAlgebraReport modular_report(const TwistedAlgebra& alg, uint64_t seed) {
    const auto* ff = std::get_if<FiniteFieldMode>(&alg.mode());
    require(ff != nullptr, "modular_report requires finite-field mode");
    const GroupPtr& L = alg.group();
    const int n = L->order();
    require(n <= 64, "modular_report is limited to |L| <= 64");

    const Cochain xi = reduce_modulus(alg.cocycle());
    const long long m = xi.modulus();

    int e = FqField::with_root_of_unity(ff->p, m).e();
    if (ff->e > 0) {
        require(ff->e % e == 0, "requested field does not embed the cocycle values");
        e = ff->e;
    }

    for (int extension_round = 0;; ++extension_round) {
        require(e <= FqField::kMaxDeg, "field-extension cap exceeded");
        const FqField F(ff->p, e);
        const ModAlg A(F, L, xi);
        std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (extension_round + 1)));

        // chop the regular module
        Module reg{n, {}};
        for (int g : A.gens) reg.act.push_back(A.left_mul(g));
        std::vector<Module> factors;
        chop(F, reg, rng, factors);

        // dedupe into simples with multiplicities
        std::vector<Module> simples;
        std::vector<int> mult;
        for (auto& f : factors) {
            bool found = false;
            for (size_t i = 0; i < simples.size(); ++i)
                if (modules_isomorphic(F, simples[i], f)) {
                    ++mult[i];
                    found = true;
                    break;
                }
            if (!found) {
                simples.push_back(std::move(f));
                mult.push_back(1);
            }
        }
        {
            long long total = 0;
            for (size_t i = 0; i < simples.size(); ++i)
                total += static_cast<long long>(simples[i].dim) * mult[i];
            ensure(total == n, "composition factors do not fill the regular module");
        }

        // absolute irreducibility: End must be one-dimensional
        int ext = 1;
        for (const auto& s : simples)
            ext = std::max(ext, hom_dimension(F, s, s));
        if (ext > 1) {
            e *= ext;
            continue; // extend the field and rerun
        }

        // radical and the semisimple quotient
        const std::vector<AVec> jbasis = radical_basis(A);
        // certify: ideal, nilpotent, complement dimension matches
        {
            SpinBasis jred(F, n);
            for (const auto& b : jbasis) jred.add(b);
            for (int g : A.gens)
                for (const auto& b : jbasis) {
                    SpinBasis probe = jred;
                    ensure(!probe.add(A.amul(A.basis_elem(g), b)),
                           "radical candidate is not a left ideal");
                    SpinBasis probe2 = jred;
                    ensure(!probe2.add(A.amul(b, A.basis_elem(g))),
                           "radical candidate is not a right ideal");
                }
            std::vector<AVec> power = jbasis;
            int steps = 0;
            while (!power.empty()) {
                ensure(++steps <= n + 1, "radical candidate is not nilpotent");
                SpinBasis nxt(F, n);
                std::vector<AVec> np;
                for (const auto& a : power)
                    for (const auto& b : jbasis) {
                        AVec c = A.amul(a, b);
                        if (nxt.add(c)) np.push_back(std::move(c));
                    }
                power = std::move(np);
            }
            long long dimsq = 0;
            for (const auto& s : simples)
                dimsq += static_cast<long long>(s.dim) * s.dim;
            ensure(dimsq == n - static_cast<long long>(jbasis.size()),
                   "radical dimension contradicts the split semisimple quotient");
        }

        // extend generator actions to all of L (cocycle-corrected words)
        std::vector<std::vector<FqMatrix>> elem_act(simples.size());
        {
            for (size_t i = 0; i < simples.size(); ++i)
                elem_act[i].assign(n, FqMatrix());
            std::vector<int> order; // BFS over the group
            std::vector<char> done(n, 0);
            const int eid = L->identity();
            for (size_t i = 0; i < simples.size(); ++i)
                elem_act[i][eid] = FqMatrix::identity(F, simples[i].dim);
            done[eid] = 1;
            order.push_back(eid);
            for (size_t head = 0; head < order.size(); ++head) {
                const int y = order[head];
                for (size_t gi = 0; gi < A.gens.size(); ++gi) {
                    const int g = A.gens[gi];
                    const int yg = L->mul(y, g);
                    if (done[yg]) continue;
                    done[yg] = 1;
                    // u_{yg} = zeta^{-xi(y,g)} u_y u_g
                    const Elem corr = F.inv(A.zeta_pow(xi.at_local({y, g})));
                    for (size_t i = 0; i < simples.size(); ++i)
                        elem_act[i][yg] = fq_scale(
                            F, fq_mul(F, elem_act[i][y], simples[i].act[gi]), corr);
                    order.push_back(yg);
                }
            }
            for (int x = 0; x < n; ++x) ensure(done[x], "generators do not span the group");
        }

        // projective covers via lifted primitive idempotents
        std::vector<int> pdims(simples.size());
        {
            // complement coordinates for A/J
            SpinBasis jred(F, n);
            for (const auto& b : jbasis) jred.add(b);
            std::vector<int> comp; // coset representative coordinates u_x
            {
                std::vector<char> piv(n, 0);
                for (int p : jred.pivots) piv[p] = 1;
                for (int x = 0; x < n; ++x)
                    if (!piv[x]) comp.push_back(x);
            }
            const int nb = static_cast<int>(comp.size());
            int blocksum = 0;
            for (const auto& s : simples) blocksum += s.dim * s.dim;

            for (size_t i = 0; i < simples.size(); ++i) {
                // solve phi(b) = E_11 in block i, 0 elsewhere
                FqMatrix Asys(blocksum, nb);
                std::vector<Elem> rhs(blocksum, F.zero());
                int row = 0;
                for (size_t j = 0; j < simples.size(); ++j) {
                    const int dj = simples[j].dim;
                    for (int a = 0; a < dj; ++a)
                        for (int bcol = 0; bcol < dj; ++bcol) {
                            for (int c = 0; c < nb; ++c)
                                Asys.at(row, c) = elem_act[j][comp[c]].at(a, bcol);
                            if (j == i && a == 0 && bcol == 0) rhs[row] = F.one();
                            ++row;
                        }
                }
                bool ok = false;
                const auto sols = fq_solve_all(F, Asys, rhs, &ok);
                ensure(ok, "semisimple quotient does not realize the matrix unit");
                AVec e0(n, F.zero());
                for (int c = 0; c < nb; ++c) e0[comp[c]] = sols.front()[c];

                // Newton lifting: err squares each step
                AVec cur = e0;
                for (int it = 0; it < 2 * FqField::kMaxDeg + 16; ++it) {
                    const AVec sq = A.amul(cur, cur);
                    bool idem = true;
                    for (int x = 0; x < n; ++x)
                        if (!F.eq(sq[x], cur[x])) { idem = false; break; }
                    if (idem) break;
                    // cur <- 3 cur^2 - 2 cur^3
                    const AVec cub = A.amul(sq, cur);
                    for (int x = 0; x < n; ++x)
                        cur[x] = F.sub(
                            F.mul(F.from_int(3), sq[x]),
                            F.mul(F.from_int(2), cub[x]));
                }
                {
                    const AVec sq = A.amul(cur, cur);
                    for (int x = 0; x < n; ++x)
                        ensure(F.eq(sq[x], cur[x]), "idempotent lifting did not converge");
                }
                // P_i = A e, dimension = rank of right multiplication by e
                pdims[i] = fq_rank(F, A.rmat(cur));
                // the lift stays in e0 + J, so the top of P_i is S_i
                {
                    FqMatrix img(simples[i].dim, simples[i].dim);
                    for (int x = 0; x < n; ++x) {
                        if (F.is_zero(cur[x])) continue;
                        img = fq_add(F, img, fq_scale(F, elem_act[i][x], cur[x]));
                    }
                    ensure(!F.is_zero(img.at(0, 0)), "lifted idempotent lost its block");
                }
            }

            long long cartan = 0;
            for (size_t i = 0; i < simples.size(); ++i)
                cartan += static_cast<long long>(simples[i].dim) * pdims[i];
            ensure(cartan == n, "sum dim(P) dim(S) differs from |L|");
        }

        // assemble report, sorted by (dim, pcover, discovery order)
        std::vector<size_t> order(simples.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (simples[a].dim != simples[b].dim) return simples[a].dim < simples[b].dim;
            return pdims[a] < pdims[b];
        });

        TwistedAlgebraReport rep;
        rep.field_p = ff->p;
        rep.field_e = e;
        for (size_t k = 0; k < order.size(); ++k) {
            const Module& s = simples[order[k]];
            IrrepRecord rec;
            rec.dimension = s.dim;
            rec.index = static_cast<int>(k);
            rep.irreps.push_back(std::move(rec));
            rep.dims.push_back(s.dim);
            rep.pcover_dims.push_back(pdims[order[k]]);
            if (s.dim == 1 && rep.trivial_index < 0) {
                bool triv = true;
                for (const auto& a : s.act)
                    if (!F.eq(a.at(0, 0), F.one())) { triv = false; break; }
                if (triv) rep.trivial_index = static_cast<int>(k);
            }
        }
        return rep;
    }
}

} // namespace gtcat
