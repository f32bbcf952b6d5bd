#include "gtcat/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace gtcat {

namespace {

long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

} // namespace

Cochain::Cochain(Subgroup domain, int degree, long long modulus)
    : domain_(std::move(domain)), degree_(degree), m_(modulus) {
    require(degree_ >= 1 && degree_ <= 3, "cochain degree must be 1..3");
    require(m_ >= 1, "cochain modulus must be positive");
    size_t sz = 1;
    for (int i = 0; i < degree_; ++i) sz *= static_cast<size_t>(domain_.size());
    values_.assign(sz, 0);
}

Cochain Cochain::zero(Subgroup domain, int degree, long long modulus) {
    return Cochain(std::move(domain), degree, modulus);
}

size_t Cochain::flat_index(std::span<const int> t) const {
    require(static_cast<int>(t.size()) == degree_, "tuple arity mismatch");
    size_t idx = 0;
    for (int i = 0; i < degree_; ++i) {
        require(t[i] >= 0 && t[i] < domain_.size(), "tuple index out of range");
        idx = idx * static_cast<size_t>(domain_.size()) + static_cast<size_t>(t[i]);
    }
    return idx;
}

long long Cochain::at_local(std::span<const int> t) const {
    return values_[flat_index(t)];
}

long long Cochain::at_parent(std::span<const int> t) const {
    std::vector<int> local(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        local[i] = domain_.local_index(t[i]);
        require(local[i] >= 0, "element outside the cochain domain");
    }
    return at_local(local);
}

void Cochain::set_local(std::span<const int> t, long long v) {
    const int e_local = domain_.local_index(domain_.parent()->identity());
    for (int x : t)
        if (x == e_local) {
            require(mod_reduce(v, m_) == 0, "normalized cochain must vanish on identity arguments");
            return;
        }
    values_[flat_index(t)] = mod_reduce(v, m_);
}

bool Cochain::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](long long v) { return v == 0; });
}

Cochain Cochain::lifted(long long new_m) const {
    require(new_m % m_ == 0, "lift target modulus must be a multiple");
    Cochain out(domain_, degree_, new_m);
    const long long k = new_m / m_;
    for (size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * k;
    return out;
}

Cochain Cochain::inverse() const {
    Cochain out(domain_, degree_, m_);
    for (size_t i = 0; i < values_.size(); ++i)
        out.values_[i] = mod_reduce(-values_[i], m_);
    return out;
}

Cochain reduce_modulus(const Cochain& c) {
    long long g = c.modulus();
    for (long long v : c.values()) g = std::gcd(g, v);
    if (g <= 1) return c;
    Cochain out(c.domain(), c.degree(), c.modulus() / g);
    for (size_t i = 0; i < c.values().size(); ++i)
        out.mutable_values()[i] = c.values()[i] / g;
    return out;
}

Cochain rebase(const Cochain& c) {
    Cochain out(Subgroup::whole(c.domain().group()), c.degree(), c.modulus());
    out.mutable_values() = c.values();
    return out;
}

bool cochains_equal(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree()) return false;
    if (!a.domain().same_elements(b.domain())) return false;
    const long long m = lcm_ll(a.modulus(), b.modulus());
    return a.lifted(m).values() == b.lifted(m).values();
}

Cochain cochain_sub(const Cochain& a, const Cochain& b) {
    require(a.degree() == b.degree(), "cochain degree mismatch");
    require(a.domain().same_elements(b.domain()), "cochain domain mismatch");
    const long long m = lcm_ll(a.modulus(), b.modulus());
    Cochain la = a.lifted(m), lb = b.lifted(m);
    for (size_t i = 0; i < la.values().size(); ++i)
        la.mutable_values()[i] = mod_reduce(la.values()[i] - lb.values()[i], m);
    return la;
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    return cochain_sub(a, b.inverse());
}

Cochain coboundary(const Cochain& phi) {
    require(phi.degree() <= 2, "coboundary output degree must be at most 3");
    const Subgroup& S = phi.domain();
    const GroupPtr& g = S.group();
    const int s = S.size();
    Cochain out(S, phi.degree() + 1, phi.modulus());
    const long long m = phi.modulus();
    if (phi.degree() == 1) {
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
                const long long v = phi.at_local({b}) - phi.at_local({g->mul(a, b)}) +
                                    phi.at_local({a});
                out.set_local({a, b}, mod_reduce(v, m));
            }
    } else {
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                for (int c = 0; c < s; ++c) {
                    const long long v = phi.at_local({b, c}) -
                                        phi.at_local({g->mul(a, b), c}) +
                                        phi.at_local({a, g->mul(b, c)}) -
                                        phi.at_local({a, b});
                    out.set_local({a, b, c}, mod_reduce(v, m));
                }
    }
    return out;
}

CocycleCertificate is_cocycle(const Cochain& phi) {
    const Subgroup& S = phi.domain();
    const GroupPtr& g = S.group();
    const int s = S.size();
    const int e = g->identity();
    const long long m = phi.modulus();
    std::vector<int> nz;
    for (int i = 0; i < s; ++i)
        if (i != e) nz.push_back(i);

    CocycleCertificate cert;
    // tuples containing the identity vanish automatically for normalized input
    if (phi.degree() == 1) {
        for (int a : nz)
            for (int b : nz) {
                const long long v =
                    phi.at_local({b}) - phi.at_local({g->mul(a, b)}) + phi.at_local({a});
                if (mod_reduce(v, m) != 0) {
                    cert.witness = {a, b};
                    return cert;
                }
            }
    } else if (phi.degree() == 2) {
        for (int a : nz)
            for (int b : nz)
                for (int c : nz) {
                    const long long v = phi.at_local({b, c}) -
                                        phi.at_local({g->mul(a, b), c}) +
                                        phi.at_local({a, g->mul(b, c)}) -
                                        phi.at_local({a, b});
                    if (mod_reduce(v, m) != 0) {
                        cert.witness = {a, b, c};
                        return cert;
                    }
                }
    } else {
        for (int a : nz)
            for (int b : nz) {
                const int ab = g->mul(a, b);
                for (int c : nz) {
                    const int bc = g->mul(b, c);
                    for (int d : nz) {
                        const long long v = phi.at_local({b, c, d}) -
                                            phi.at_local({ab, c, d}) +
                                            phi.at_local({a, bc, d}) -
                                            phi.at_local({a, b, g->mul(c, d)}) +
                                            phi.at_local({a, b, c});
                        if (mod_reduce(v, m) != 0) {
                            cert.witness = {a, b, c, d};
                            return cert;
                        }
                    }
                }
            }
    }
    cert.is_cocycle = true;
    return cert;
}

Cochain preset_omega_cyclic(const GroupPtr& zn, long long q) {
    const int n = zn->order();
    require(q >= 0 && q < n, "preset omega: q must satisfy 0 <= q < n");
    // sanity: the group must actually be Z/n with index = residue
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            require(zn->mul(a, b) == (a + b) % n,
                    "preset omega requires a cyclic group in residue order");
    const long long m = static_cast<long long>(n) * n;
    Cochain w(Subgroup::whole(zn), 3, m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const long long v = q * a * ((b + c) - ((b + c) % n));
                w.set_local({a, b, c}, mod_reduce(v, m));
            }
    const auto cert = is_cocycle(w);
    ensure(cert.is_cocycle, "preset omega failed the cocycle check");
    return w;
}

Cochain pullback(const Cochain& phi, const GroupHom& hom) {
    require(phi.domain().is_whole() &&
                (phi.domain().parent() == hom.target ||
                 phi.domain().parent()->table() == hom.target->table()),
            "pullback: cochain must live on the hom target");
    Cochain out(Subgroup::whole(hom.source), phi.degree(), phi.modulus());
    const int n = hom.source->order();
    std::vector<int> t(phi.degree());
    std::vector<int> img(phi.degree());
    const size_t total = out.values().size();
    for (size_t flat = 0; flat < total; ++flat) {
        size_t rest = flat;
        for (int i = phi.degree() - 1; i >= 0; --i) {
            t[i] = static_cast<int>(rest % n);
            rest /= n;
        }
        for (int i = 0; i < phi.degree(); ++i) img[i] = hom(t[i]);
        out.set_local(t, phi.at_local(img));
    }
    return out;
}

Cochain restrict_cochain(const Cochain& phi, const Subgroup& T) {
    require(T.parent() == phi.domain().parent(), "restrict: different parent group");
    for (int x : T.elements())
        require(phi.domain().contains(x), "restrict: target is not a subset of the domain");
    Cochain out(T, phi.degree(), phi.modulus());
    const int s = T.size();
    std::vector<int> t(phi.degree());
    std::vector<int> par(phi.degree());
    const size_t total = out.values().size();
    for (size_t flat = 0; flat < total; ++flat) {
        size_t rest = flat;
        for (int i = phi.degree() - 1; i >= 0; --i) {
            t[i] = static_cast<int>(rest % s);
            rest /= s;
        }
        for (int i = 0; i < phi.degree(); ++i) par[i] = T.to_parent(t[i]);
        out.set_local(t, phi.at_parent(par));
    }
    return out;
}

Cochain conj_twist(const Cochain& phi, int h) {
    const Subgroup& S = phi.domain();
    const GroupPtr& G = S.parent();
    require(h >= 0 && h < G->order(), "conj_twist: element out of range");
    // new domain h^{-1} S h
    const Subgroup T = S.conjugated(G->inv(h));
    Cochain out(T, phi.degree(), phi.modulus());
    const int s = T.size();
    std::vector<int> t(phi.degree());
    std::vector<int> par(phi.degree());
    const size_t total = out.values().size();
    for (size_t flat = 0; flat < total; ++flat) {
        size_t rest = flat;
        for (int i = phi.degree() - 1; i >= 0; --i) {
            t[i] = static_cast<int>(rest % s);
            rest /= s;
        }
        for (int i = 0; i < phi.degree(); ++i) par[i] = G->conj(h, T.to_parent(t[i]));
        out.set_local(t, phi.at_parent(par));
    }
    return out;
}

Cochain omega_g(const Cochain& omega, int g) {
    require(omega.degree() == 3 && omega.domain().is_whole(),
            "omega_g needs a 3-cochain on the whole group");
    const GroupPtr& G = omega.domain().parent();
    require(g >= 0 && g < G->order(), "omega_g: element out of range");
    Cochain out(omega.domain(), 2, omega.modulus());
    const int n = G->order();
    for (int x = 0; x < n; ++x) {
        const int cx = G->conj(g, x);
        for (int y = 0; y < n; ++y) {
            const int cy = G->conj(g, y);
            const long long v = omega.at_parent({g, x, y}) +
                                omega.at_parent({cx, cy, g}) -
                                omega.at_parent({cx, g, y});
            out.set_local({omega.domain().local_index(x), omega.domain().local_index(y)},
                          mod_reduce(v, omega.modulus()));
        }
    }
    // Lemma: the restriction to the centralizer of g is a 2-cocycle
    const Subgroup cz = centralizer_of(G, g);
    const auto cert = is_cocycle(restrict_cochain(out, cz));
    ensure(cert.is_cocycle,
           "omega_g restricted to the centralizer is not a 2-cocycle");
    return out;
}

Cochain psi_g(const Cochain& psi, const Cochain& omega, int g, const Subgroup& H) {
    require(omega.degree() == 3 && omega.domain().is_whole(),
            "psi_g needs a 3-cochain on the whole group");
    require(psi.degree() == 2 && psi.domain().same_elements(H),
            "psi_g: psi must be a 2-cochain on H");
    const GroupPtr& G = H.parent();
    require(cochains_equal(coboundary(psi), restrict_cochain(omega, H)),
            "psi_g precondition d psi = omega|_H fails");

    const long long m = lcm_ll(psi.modulus(), omega.modulus());
    const Cochain twisted = conj_twist(psi.lifted(m), g); // on g^{-1} H g
    const Cochain og = omega_g(omega.lifted(m), g);
    Cochain out = cochain_add(twisted, restrict_cochain(og, twisted.domain()));

    ensure(cochains_equal(coboundary(out), restrict_cochain(omega, out.domain())),
           "psi_g postcondition d psi_g = omega restricted fails");
    (void)G;
    return out;
}

Cochain w_g_product(const Cochain& omega, int g, const Subgroup& H,
                    const Subgroup& K, GroupPtr* product_out) {
    require(omega.degree() == 3 && omega.domain().is_whole(),
            "W_g needs a 3-cochain on the whole group");
    require(H.parent() == K.parent() && H.parent() == omega.domain().parent(),
            "W_g: mismatched groups");
    const GroupPtr prod = direct_product(H.group(), K.group(),
                                         FiniteGroup::kTableBound);
    if (product_out) *product_out = prod;
    const int nh = H.size(), nk = K.size();
    Cochain out(Subgroup::whole(prod), 2, omega.modulus());
    for (int h1 = 0; h1 < nh; ++h1)
        for (int k1 = 0; k1 < nk; ++k1)
            for (int h2 = 0; h2 < nh; ++h2)
                for (int k2 = 0; k2 < nk; ++k2) {
                    const long long v =
                        omega.at_parent({H.to_parent(h1), H.to_parent(h2), g}) +
                        omega.at_parent({g, K.to_parent(k1), K.to_parent(k2)}) -
                        omega.at_parent({H.to_parent(h1), g, K.to_parent(k2)});
                    out.set_local({h1 * nk + k1, h2 * nk + k2},
                                  mod_reduce(v, omega.modulus()));
                }
    return out;
}

Cochain xi_g(const Cochain& psi, const Cochain& eta, const Cochain& omega, int g,
             const Subgroup& H, const Subgroup& K) {
    require(omega.degree() == 3 && omega.domain().is_whole(),
            "xi_g needs a 3-cochain on the whole group");
    require(psi.degree() == 2 && psi.domain().same_elements(H),
            "xi_g: psi must live on H");
    require(eta.degree() == 2 && eta.domain().same_elements(K),
            "xi_g: eta must live on K");
    require(cochains_equal(coboundary(psi), restrict_cochain(omega, H)),
            "xi_g precondition d psi = omega|_H fails");
    require(cochains_equal(coboundary(eta), restrict_cochain(omega, K)),
            "xi_g precondition d eta = omega|_K fails");

    const GroupPtr& G = H.parent();
    const int gi = G->inv(g);
    const Subgroup L = H.intersect(K.conjugated(g));
    const long long m =
        lcm_ll(lcm_ll(psi.modulus(), eta.modulus()), omega.modulus());
    const Cochain ps = psi.lifted(m), et = eta.lifted(m), om = omega.lifted(m);

    Cochain out(L, 2, m);
    const int s = L.size();
    for (int i = 0; i < s; ++i) {
        const int l1 = L.to_parent(i);
        const int c1 = G->conj(gi, l1); // g^{-1} l1 g
        for (int j = 0; j < s; ++j) {
            const int l2 = L.to_parent(j);
            const int c2 = G->conj(gi, l2);
            const long long v = ps.at_parent({l1, l2}) - et.at_parent({c1, c2}) +
                                om.at_parent({l1, l2, g}) +
                                om.at_parent({g, c1, c2}) -
                                om.at_parent({l1, g, c2});
            out.set_local({i, j}, mod_reduce(v, m));
        }
    }
    const auto cert = is_cocycle(out);
    ensure(cert.is_cocycle, "xi_g is not a 2-cocycle");
    return out;
}

namespace {

// linear system d psi = target over Z/m in the free (non-identity) 2-cells
struct D2System {
    std::vector<int> nz;           // non-identity local indices
    std::vector<int> cell_of;      // (a*s + b) -> variable index or -1
    int vars = 0;

    D2System(const Subgroup& S) {
        const int s = S.size();
        const int e = S.group()->identity();
        cell_of.assign(static_cast<size_t>(s) * s, -1);
        for (int i = 0; i < s; ++i)
            if (i != e) nz.push_back(i);
        for (int a : nz)
            for (int b : nz) cell_of[static_cast<size_t>(a) * s + b] = vars++;
    }
};

ZModMatrix build_d2_matrix(const Subgroup& S, const D2System& sys, long long m) {
    const GroupPtr& g = S.group();
    const int s = S.size();
    const int rows = static_cast<int>(sys.nz.size() * sys.nz.size() * sys.nz.size());
    ZModMatrix A(rows, sys.vars, m);
    int r = 0;
    auto var = [&](int a, int b) { return sys.cell_of[static_cast<size_t>(a) * s + b]; };
    for (int a : sys.nz)
        for (int b : sys.nz)
            for (int c : sys.nz) {
                // psi(b,c) - psi(ab,c) + psi(a,bc) - psi(a,b)
                auto bump = [&](int x, int y, long long coef) {
                    const int v = var(x, y);
                    if (v >= 0) A.at(r, v) = mod_reduce(A.at(r, v) + coef, m);
                };
                bump(b, c, 1);
                bump(g->mul(a, b), c, -1);
                bump(a, g->mul(b, c), 1);
                bump(a, b, -1);
                ++r;
            }
    return A;
}

Cochain cochain_from_vars(const Subgroup& S, const D2System& sys,
                          std::span<const long long> x, long long m) {
    Cochain out(S, 2, m);
    const int s = S.size();
    for (int a : sys.nz)
        for (int b : sys.nz)
            out.set_local({a, b}, x[sys.cell_of[static_cast<size_t>(a) * s + b]]);
    return out;
}

std::vector<long long> vars_from_cochain(const Cochain& c, const D2System& sys) {
    const int s = c.domain().size();
    std::vector<long long> x(sys.vars, 0);
    for (int a : sys.nz)
        for (int b : sys.nz)
            x[sys.cell_of[static_cast<size_t>(a) * s + b]] = c.at_local({a, b});
    return x;
}

} // namespace

SolveD2Result solve_d2_equals(const Cochain& target) {
    require(target.degree() == 3, "solve_d2_equals expects a 3-cochain target");
    const Subgroup& S = target.domain();
    const int s = S.size();
    SolveD2Result res;

    if (s == 1) {
        res.solvable = true;
        res.modulus = std::max<long long>(target.modulus(), 2);
        res.particular = Cochain::zero(S, 2, res.modulus);
        res.h2_classes = {Cochain::zero(S, 2, res.modulus)};
        return res;
    }

    const D2System sys(S);
    const long long m0 = std::max<long long>(target.modulus(), 2);
    std::vector<long long> tries = {m0, 2 * m0, m0 * s};
    tries.erase(std::unique(tries.begin(), tries.end()), tries.end());

    long long m_solve = 0;
    for (long long mt : tries) {
        const ZModMatrix A = build_d2_matrix(S, sys, mt);
        const Cochain lt = target.lifted(mt);
        std::vector<long long> b;
        b.reserve(static_cast<size_t>(A.rows));
        for (int a : sys.nz)
            for (int bb : sys.nz)
                for (int c : sys.nz) b.push_back(lt.at_local({a, bb, c}));
        const LinSolveResult sol = solve_mod_m(A, b);
        if (sol.solvable) { m_solve = mt; break; }
    }
    if (m_solve == 0) return res; // unsolvable at every retry modulus

    // work at a modulus that sees every G_m-level H^2 class
    const long long m_work = m_solve / std::gcd(m_solve, static_cast<long long>(s)) * s;
    const ZModMatrix A = build_d2_matrix(S, sys, m_work);
    const Cochain lt = target.lifted(m_work);
    std::vector<long long> b;
    for (int a : sys.nz)
        for (int bb : sys.nz)
            for (int c : sys.nz) b.push_back(lt.at_local({a, bb, c}));
    const LinSolveResult sol = solve_mod_m(A, b);
    ensure(sol.solvable, "solvability lost after lifting the modulus");

    res.solvable = true;
    res.modulus = m_work;
    res.particular = cochain_from_vars(S, sys, sol.particular, m_work);
    ensure(cochains_equal(coboundary(*res.particular), lt),
           "particular solution fails d psi = target");
    for (const auto& k : sol.kernel_gens)
        res.kernel_gens.push_back(cochain_from_vars(S, sys, k, m_work));

    // H^2 transversal: Z^2 generators modulo coboundaries, then G_m-level dedup
    const int r = static_cast<int>(sol.kernel_gens.size());
    if (r == 0) {
        res.h2_classes = {Cochain::zero(S, 2, m_work)};
        return res;
    }
    ZModMatrix Kmat(sys.vars, r, m_work);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < sys.vars; ++i) Kmat.at(i, j) = sol.kernel_gens[j][i];

    std::vector<std::vector<long long>> u_rows = kernel_mod_m(Kmat);
    for (int x : sys.nz) {
        Cochain mu = Cochain::zero(S, 1, m_work);
        mu.set_local({x}, 1);
        const std::vector<long long> bvec = vars_from_cochain(coboundary(mu), sys);
        const LinSolveResult expr = solve_mod_m(Kmat, bvec);
        ensure(expr.solvable, "coboundary is not in the cocycle module");
        u_rows.push_back(expr.particular);
    }
    const auto reps = quotient_transversal(u_rows, r, m_work);

    std::vector<Cochain> candidates;
    for (const auto& coeffs : reps) {
        std::vector<long long> x(sys.vars, 0);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < sys.vars; ++i)
                x[i] = mod_reduce(x[i] + coeffs[j] * sol.kernel_gens[j][i], m_work);
        candidates.push_back(cochain_from_vars(S, sys, x, m_work));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Cochain& a, const Cochain& b) { return a.values() < b.values(); });
    for (auto& cand : candidates) {
        ensure(is_cocycle(cand).is_cocycle, "H^2 candidate is not a cocycle");
        bool fresh = true;
        for (const auto& kept : res.h2_classes)
            if (cohomologous(cand, kept)) { fresh = false; break; }
        if (fresh) res.h2_classes.push_back(std::move(cand));
    }
    return res;
}

std::optional<Cochain> cohomologous(const Cochain& a, const Cochain& b) {
    require(a.degree() == 2 && b.degree() == 2, "cohomologous expects 2-cochains");
    require(a.domain().same_elements(b.domain()), "cohomologous: domain mismatch");
    const Subgroup& S = a.domain();
    const int s = S.size();
    const Cochain diff = cochain_sub(a, b);
    require(is_cocycle(diff).is_cocycle,
            "cohomologous requires equal coboundaries (difference must be a cocycle)");
    if (diff.is_zero()) return Cochain::zero(S, 1, diff.modulus());

    const GroupPtr& g = S.group();
    const int e = g->identity();
    std::vector<int> nz;
    for (int i = 0; i < s; ++i)
        if (i != e) nz.push_back(i);

    const long long m0 = diff.modulus();
    std::vector<long long> tries = {m0, 2 * m0, m0 * s};
    tries.erase(std::unique(tries.begin(), tries.end()), tries.end());
    for (long long mt : tries) {
        const Cochain d = diff.lifted(mt);
        // variables mu(x) for x in nz; equations d mu (x,y) = d(x,y)
        ZModMatrix A(static_cast<int>(nz.size() * nz.size()),
                     static_cast<int>(nz.size()), mt);
        std::vector<long long> rhs;
        std::vector<int> var_of(s, -1);
        for (size_t i = 0; i < nz.size(); ++i) var_of[nz[i]] = static_cast<int>(i);
        int r = 0;
        for (int x : nz)
            for (int y : nz) {
                auto bump = [&](int t, long long c) {
                    if (var_of[t] >= 0)
                        A.at(r, var_of[t]) = mod_reduce(A.at(r, var_of[t]) + c, mt);
                };
                bump(y, 1);
                bump(g->mul(x, y), -1);
                bump(x, 1);
                rhs.push_back(d.at_local({x, y}));
                ++r;
            }
        const LinSolveResult sol = solve_mod_m(A, rhs);
        if (!sol.solvable) continue;
        Cochain mu = Cochain::zero(S, 1, mt);
        for (size_t i = 0; i < nz.size(); ++i) mu.set_local({nz[i]}, sol.particular[i]);
        ensure(cochains_equal(coboundary(mu), diff), "cohomologous witness fails d mu = a - b");
        return mu;
    }
    return std::nullopt;
}

} // namespace gtcat
