#include "gtcat/projrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtcat/eigensplit.hpp"

namespace gtcat {

TwistedAlgebra::TwistedAlgebra(GroupPtr L, Cochain xi, ScalarMode mode)
    : L_(std::move(L)), xi_(std::move(xi)), mode_(mode) {
    require(xi_.degree() == 2, "twisted algebra cocycle must have degree 2");
    require(xi_.domain().is_whole() && xi_.domain().parent()->order() == L_->order(),
            "cocycle must live on the whole of L");
    require(xi_.domain().parent()->table() == L_->table(),
            "cocycle group does not match L");
    require(is_cocycle(xi_).is_cocycle, "twisted algebra requires a 2-cocycle");
    if (const auto* ff = std::get_if<FiniteFieldMode>(&mode_)) {
        require(ff->p >= 2, "characteristic must be at least 2");
        require(reduce_modulus(xi_).modulus() % ff->p != 0,
                "cocycle value order divisible by the characteristic");
    }
}

int xi_regular_class_count(const GroupPtr& L, const Cochain& xi) {
    require(xi.degree() == 2 && xi.domain().parent()->order() == L->order(),
            "xi_regular_class_count: cocycle must live on L");
    const long long m = xi.modulus();
    auto regular = [&](int x) {
        for (int y = 0; y < L->order(); ++y) {
            if (L->mul(x, y) != L->mul(y, x)) continue; // y must centralize x
            if (mod_reduce(xi.at_local({x, y}) - xi.at_local({y, x}), m) != 0)
                return false;
        }
        return true;
    };
    int count = 0;
    for (const auto& cls : conjugacy_data(L)) {
        const bool r = regular(cls.rep);
        for (int x : cls.elements)
            ensure(regular(x) == r, "xi-regularity is not class-invariant");
        if (r) ++count;
    }
    return count;
}

bool is_nondegenerate(const GroupPtr& L, const Cochain& xi) {
    const bool nd = xi_regular_class_count(L, xi) == 1;
    if (nd) {
        const int n = L->order();
        const int r = static_cast<int>(std::lround(std::sqrt(double(n))));
        ensure(r * r == n, "nondegenerate cocycle on a group of non-square order");
    }
    return nd;
}

namespace {

using Cplx = std::complex<double>;

Cplx zeta_pow(long long num, long long m) {
    const double angle = 2.0 * std::numbers::pi * double(mod_reduce(num, m)) / double(m);
    return {std::cos(angle), std::sin(angle)};
}

struct RepCtx {
    const GroupPtr& L;
    const Cochain& xi;
    long long m;
    double tol;
    std::mt19937_64 rng;
    std::vector<Eigen::MatrixXcd> regular; // left multiplications, unitary

    RepCtx(const GroupPtr& l, const Cochain& x, double t, uint64_t seed)
        : L(l), xi(x), m(x.modulus()), tol(t), rng(seed) {
        const int n = L->order();
        regular.reserve(n);
        for (int g = 0; g < n; ++g) {
            Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
            for (int y = 0; y < n; ++y)
                M(L->mul(g, y), y) = zeta_pow(xi.at_local({g, y}), m);
            regular.push_back(std::move(M));
        }
    }

    Eigen::MatrixXcd random_hermitian(int d) {
        std::normal_distribution<double> N(0.0, 1.0);
        Eigen::MatrixXcd B(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) B(i, j) = Cplx(N(rng), N(rng));
        return 0.5 * (B + B.adjoint());
    }

    // Twisted average: sum_x rho(x)^dagger M rho(x) commutes with the
    // representation (the cocycle scalars cancel).
    Eigen::MatrixXcd averaged_commutant(const std::vector<Eigen::MatrixXcd>& rho,
                                        int d) {
        const Eigen::MatrixXcd M = random_hermitian(d);
        Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(d, d);
        for (const auto& r : rho) T += r.adjoint() * M * r;
        return T / double(rho.size());
    }

    // recursively split the subrepresentation spanned by isometry P
    void split(const Eigen::MatrixXcd& P, std::vector<Eigen::MatrixXcd>& out_bases,
               int depth) {
        ensure(depth < 32, "irrep splitting recursion too deep");
        const int d = static_cast<int>(P.cols());
        std::vector<Eigen::MatrixXcd> rho(regular.size());
        for (size_t i = 0; i < regular.size(); ++i) rho[i] = P.adjoint() * regular[i] * P;

        for (int attempt = 0; attempt < 16; ++attempt) {
            const Eigen::MatrixXcd T = averaged_commutant(rho, d);
            const auto clusters = eigensplit_hermitian(T, tol, 1e-6);
            if (clusters.size() > 1) {
                for (const auto& c : clusters) split(P * c.basis, out_bases, depth + 1);
                return;
            }
            // single cluster: candidate irreducible; verify by character norm
            double norm2 = 0;
            for (const auto& r : rho) norm2 += std::norm(r.trace());
            norm2 /= double(regular.size());
            if (std::abs(norm2 - 1.0) < 1e-6) {
                out_bases.push_back(P);
                return;
            }
            // reducible but the random element missed a split; redraw
        }
        throw DomainError(
            "irrep splitting made no progress; retry with a different seed or tolerance");
    }
};

} // namespace

bool satisfies_multiplication_law(const IrrepRecord& v, const GroupPtr& L,
                                  const Cochain& xi, double tol) {
    const long long m = xi.modulus();
    for (int x = 0; x < L->order(); ++x)
        for (int y = 0; y < L->order(); ++y) {
            const Eigen::MatrixXcd lhs = v.matrices[x] * v.matrices[y];
            const Eigen::MatrixXcd rhs =
                zeta_pow(xi.at_local({x, y}), m) * v.matrices[L->mul(x, y)];
            if ((lhs - rhs).cwiseAbs().maxCoeff() > tol) return false;
        }
    return true;
}

TwistedAlgebraReport irreps_char0(const TwistedAlgebra& alg, uint64_t seed) {
    const auto* cm = std::get_if<ComplexMode>(&alg.mode());
    require(cm != nullptr, "irreps_char0 requires complex mode");
    const GroupPtr& L = alg.group();
    const Cochain& xi = alg.cocycle();
    const int n = L->order();

    RepCtx ctx(L, xi, cm->tol, seed);
    std::vector<Eigen::MatrixXcd> bases;
    if (n == 1) {
        bases.push_back(Eigen::MatrixXcd::Identity(1, 1));
    } else {
        ctx.split(Eigen::MatrixXcd::Identity(n, n), bases, 0);
    }

    // collect irreducibles, dedupe by character
    TwistedAlgebraReport rep;
    long long dimsq = 0;
    for (const auto& P : bases) {
        IrrepRecord rec;
        rec.dimension = static_cast<int>(P.cols());
        rec.matrices.reserve(n);
        rec.character.reserve(n);
        for (int x = 0; x < n; ++x) {
            rec.matrices.push_back(P.adjoint() * ctx.regular[x] * P);
            rec.character.push_back(rec.matrices.back().trace());
        }
        ensure(satisfies_multiplication_law(rec, L, xi, 1e-6),
               "extracted block violates the twisted multiplication law");
        bool fresh = true;
        for (const auto& kept : rep.irreps) {
            if (kept.dimension != rec.dimension) continue;
            double diff = 0;
            for (int x = 0; x < n; ++x)
                diff = std::max(diff, std::abs(kept.character[x] - rec.character[x]));
            if (diff < 1e-6) { fresh = false; break; }
        }
        if (fresh) rep.irreps.push_back(std::move(rec));
    }

    std::sort(rep.irreps.begin(), rep.irreps.end(),
              [](const IrrepRecord& a, const IrrepRecord& b) {
                  if (a.dimension != b.dimension) return a.dimension < b.dimension;
                  for (size_t x = 0; x < a.character.size(); ++x) {
                      const double ra = std::round(a.character[x].real() * 1e6),
                                   rb = std::round(b.character[x].real() * 1e6);
                      if (ra != rb) return ra < rb;
                      const double ia = std::round(a.character[x].imag() * 1e6),
                                   ib = std::round(b.character[x].imag() * 1e6);
                      if (ia != ib) return ia < ib;
                  }
                  return false;
              });
    for (size_t i = 0; i < rep.irreps.size(); ++i) {
        rep.irreps[i].index = static_cast<int>(i);
        rep.dims.push_back(rep.irreps[i].dimension);
        dimsq += static_cast<long long>(rep.irreps[i].dimension) *
                 rep.irreps[i].dimension;
        if (rep.irreps[i].dimension == 1 && rep.trivial_index < 0) {
            bool triv = true;
            for (const auto& c : rep.irreps[i].character)
                if (std::abs(c - Cplx(1.0, 0.0)) > 1e-6) { triv = false; break; }
            if (triv) rep.trivial_index = static_cast<int>(i);
        }
    }
    rep.pcover_dims = rep.dims; // semisimple over C
    rep.regular_class_count = xi_regular_class_count(L, xi);

    ensure(dimsq == n, "sum of squared irrep dimensions differs from |L|");
    ensure(static_cast<int>(rep.irreps.size()) == rep.regular_class_count,
           "irrep count differs from the xi-regular class count");
    return rep;
}

IrrepRecord dual_irrep(const IrrepRecord& v, const Cochain& xi) {
    const Subgroup& dom = xi.domain();
    const GroupPtr L = dom.group();
    const int n = L->order();
    require(static_cast<int>(v.matrices.size()) == n, "irrep does not match cocycle group");
    const long long m = xi.modulus();

    IrrepRecord out;
    out.dimension = v.dimension;
    out.index = -1;
    out.matrices.reserve(n);
    for (int x = 0; x < n; ++x) {
        // sigma(x) = zeta^{-mu(x)} rho(x^{-1})^T with mu(x) = xi(x, x^{-1})
        const long long mu = xi.at_local({x, L->inv(x)});
        out.matrices.push_back(zeta_pow(-mu, m) * v.matrices[L->inv(x)].transpose());
        out.character.push_back(out.matrices.back().trace());
    }
    ensure(satisfies_multiplication_law(out, L, xi.inverse(), 1e-6),
           "dual irrep does not satisfy the xi^{-1} multiplication law");
    return out;
}

IrrepRecord transport_irrep(const IrrepRecord& v, const GroupPtr& L,
                            const GroupPtr& Lp, std::span<const int> iso) {
    require(L->order() == Lp->order(), "transport: size mismatch");
    const int n = L->order();
    require(static_cast<int>(iso.size()) == n, "transport: map size mismatch");
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        require(iso[x] >= 0 && iso[x] < n && !seen[iso[x]], "transport: map not bijective");
        seen[iso[x]] = 1;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            require(iso[L->mul(x, y)] == Lp->mul(iso[x], iso[y]),
                    "transport: map is not a homomorphism");
    std::vector<int> inv_iso(n);
    for (int x = 0; x < n; ++x) inv_iso[iso[x]] = x;

    IrrepRecord out;
    out.dimension = v.dimension;
    out.index = -1;
    out.matrices.reserve(n);
    for (int xp = 0; xp < n; ++xp) {
        out.matrices.push_back(v.matrices[inv_iso[xp]]);
        out.character.push_back(v.character[inv_iso[xp]]);
    }
    return out;
}

} // namespace gtcat
