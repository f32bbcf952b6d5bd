#include "gtcat/category.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace gtcat {

uint64_t block_seed(uint64_t seed, int block_rep) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(block_rep) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

CategorySpec validate_category(GroupPtr G, Cochain omega, Subgroup H, Cochain psi) {
    require(H.parent() == G, "H must be a subgroup of G");
    require(omega.degree() == 3 && omega.domain().is_whole() &&
                omega.domain().parent() == G,
            "omega must be a 3-cochain on the whole of G");
    const auto cert = is_cocycle(omega);
    if (!cert.is_cocycle) {
        std::string w = "omega is not a 3-cocycle; witness tuple (";
        for (size_t i = 0; i < cert.witness.size(); ++i)
            w += (i ? "," : "") + G->label(cert.witness[i]);
        throw DomainError(w + ")");
    }
    require(psi.degree() == 2 && psi.domain().same_elements(H),
            "psi must be a 2-cochain on H");
    const Cochain dpsi = coboundary(psi);
    const Cochain target = restrict_cochain(omega, H);
    if (!cochains_equal(dpsi, target)) {
        // name a witness triple
        const long long m = std::lcm(dpsi.modulus(), target.modulus());
        const Cochain a = dpsi.lifted(m), b = target.lifted(m);
        for (int x = 0; x < H.size(); ++x)
            for (int y = 0; y < H.size(); ++y)
                for (int z = 0; z < H.size(); ++z)
                    if (a.at_local({x, y, z}) != b.at_local({x, y, z}))
                        throw DomainError(
                            "d psi differs from omega|_H at (" +
                            H.group()->label(x) + "," + H.group()->label(y) + "," +
                            H.group()->label(z) + ")");
        throw DomainError("d psi differs from omega|_H");
    }
    return CategorySpec{std::move(G), std::move(omega), std::move(H), std::move(psi)};
}

ModuleCatSpec validate_module_cat(CategorySpec base, Subgroup K, Cochain eta) {
    require(K.parent() == base.G, "K must be a subgroup of G");
    require(eta.degree() == 2 && eta.domain().same_elements(K),
            "eta must be a 2-cochain on K");
    require(cochains_equal(coboundary(eta), restrict_cochain(base.omega, K)),
            "d eta differs from omega|_K");
    return ModuleCatSpec{std::move(base), std::move(K), std::move(eta)};
}

namespace {

BlockInfo make_block(const ModuleCatSpec& spec, const DoubleCoset& dc,
                     uint64_t seed) {
    // re-anchor xi on the coset's own stabilizer object so block consumers can
    // rely on pointer-level domain identity
    const Cochain xi = restrict_cochain(
        xi_g(spec.base.psi, spec.eta, spec.base.omega, dc.rep, spec.base.H, spec.K),
        dc.stabilizer);
    TwistedAlgebra alg(dc.stabilizer.group(), rebase(xi.inverse()), ComplexMode{});
    BlockInfo b{dc, xi, irreps_char0(alg, block_seed(seed, dc.rep))};
    return b;
}

template <typename Fn>
void run_blocks(int count, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int nthreads = std::min(threads, count);
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

SimplesResult module_cat_simples(const ModuleCatSpec& spec, uint64_t seed,
                                 int threads) {
    const auto cosets = double_cosets(spec.base.H, spec.K);
    SimplesResult res;
    res.blocks.resize(cosets.size(),
                      BlockInfo{cosets.front(),
                                Cochain::zero(Subgroup::trivial(spec.base.G), 2),
                                {}});
    std::vector<std::exception_ptr> errors(cosets.size());
    run_blocks(static_cast<int>(cosets.size()), threads, [&](int i) {
        try {
            res.blocks[i] = make_block(spec, cosets[i], seed);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    long long coset_mass = 0;
    for (size_t bi = 0; bi < res.blocks.size(); ++bi) {
        const BlockInfo& b = res.blocks[bi];
        const long long scale = spec.K.size() / b.coset.stabilizer.size();
        ensure(static_cast<long long>(spec.K.size()) % b.coset.stabilizer.size() == 0,
               "block scale |K|/|L^g| is not an integer");
        coset_mass += static_cast<long long>(spec.base.H.size()) * spec.K.size() /
                      b.coset.stabilizer.size();
        for (size_t vi = 0; vi < b.report.irreps.size(); ++vi) {
            SimpleObjectDescriptor d;
            d.block = static_cast<int>(bi);
            d.coset_rep = b.coset.rep;
            d.irrep_index = static_cast<int>(vi);
            d.dim = b.report.irreps[vi].dimension;
            d.fpdim = scale * d.dim;
            d.pcover_fpdim = d.fpdim;
            res.simples.push_back(d);
        }
    }
    ensure(coset_mass == spec.base.G->order(),
           "sum over blocks of |H||K|/|L^g| differs from |G|");
    return res;
}

SimplesResult category_simples(const CategorySpec& spec, uint64_t seed,
                               int threads) {
    ModuleCatSpec mc{spec, spec.H, spec.psi};
    SimplesResult res = module_cat_simples(mc, seed, threads);
    long long fp2 = 0;
    for (const auto& s : res.simples) fp2 += s.fpdim * s.fpdim;
    ensure(fp2 == spec.G->order(),
           "global FPdim identity sum fpdim^2 = |G| fails");
    return res;
}

namespace {

int block_containing(const SimplesResult& res, int element) {
    for (size_t i = 0; i < res.blocks.size(); ++i) {
        const auto& el = res.blocks[i].coset.elements;
        if (std::binary_search(el.begin(), el.end(), element))
            return static_cast<int>(i);
    }
    throw ConsistencyError("element not covered by any double coset");
}

} // namespace

namespace {

SimpleObjectDescriptor simple_dual_impl(const CategorySpec& spec,
                                        const SimplesResult& res,
                                        const SimpleObjectDescriptor& s) {
    const GroupPtr& G = spec.G;
    const BlockInfo& blk = res.blocks[s.block];
    const int g = blk.coset.rep;
    const int ginv = G->inv(g);
    const int bi2 = block_containing(res, ginv);
    const BlockInfo& blk2 = res.blocks[bi2];
    const int gp = blk2.coset.rep; // canonical representative of Z^{-1}

    // find a in H with g^{-1} = a gp b, b in H
    const Subgroup& H = spec.H;
    int a_conj = -1;
    for (int a : H.elements()) {
        const int b = G->mul(G->inv(gp), G->mul(G->inv(a), ginv));
        if (H.contains(b)) { a_conj = a; break; }
    }
    ensure(a_conj >= 0, "dual coset matching failed");

    // tau: L^g -> L^{gp}, l -> a^{-1} (g^{-1} l g) a
    const Subgroup& L = blk.coset.stabilizer;
    const Subgroup& Lp = blk2.coset.stabilizer;
    ensure(L.size() == Lp.size(), "dual stabilizers have different orders");
    std::vector<int> tau(L.size());
    for (int i = 0; i < L.size(); ++i) {
        const int image = G->conj(G->inv(a_conj), G->conj(ginv, L.to_parent(i)));
        const int li = Lp.local_index(image);
        ensure(li >= 0, "conjugation does not map L^g onto L^{g'}");
        tau[i] = li;
    }

    // contragredient with cocycle normalized to +xi_g on L^g
    const Cochain xi_inv = rebase(blk.xi.inverse()); // the irrep's own cocycle
    const IrrepRecord dual0 = dual_irrep(res.blocks[s.block].report.irreps[s.irrep_index],
                                         xi_inv);
    // transport along tau; transported cocycle c1(x,y) = xi_g(tau^{-1}x, tau^{-1}y)
    const IrrepRecord moved = transport_irrep(dual0, L.group(), Lp.group(), tau);
    Cochain c1(Subgroup::whole(Lp.group()), 2, blk.xi.modulus());
    {
        std::vector<int> tinv(L.size());
        for (int i = 0; i < L.size(); ++i) tinv[tau[i]] = i;
        for (int x = 0; x < Lp.size(); ++x)
            for (int y = 0; y < Lp.size(); ++y)
                c1.set_local({x, y}, blk.xi.at_local({tinv[x], tinv[y]}));
    }
    // normalize to xi_{gp}^{-1}: witness nu with d nu = c1 + xi_{gp}
    const Cochain target = rebase(blk2.xi.inverse());
    const auto nu = cohomologous(c1, target);
    ensure(nu.has_value(),
           "transported dual cocycle is not cohomologous to xi_{g'}^{-1}");
    const long long mw = nu->modulus();
    IrrepRecord fixed = moved;
    for (int x = 0; x < Lp.size(); ++x) {
        const double ang = -2.0 * 3.14159265358979323846 *
                           double(mod_reduce(nu->at_local({x}), mw)) / double(mw);
        const std::complex<double> ph(std::cos(ang), std::sin(ang));
        fixed.matrices[x] *= ph;
        fixed.character[x] *= ph;
    }
    ensure(satisfies_multiplication_law(fixed, Lp.group(), rebase(blk2.xi.inverse()),
                                        1e-6),
           "normalized dual violates the xi_{g'}^{-1} multiplication law");

    // identify by character among the dual block's irreps
    int found = -1;
    for (size_t vi = 0; vi < blk2.report.irreps.size(); ++vi) {
        const auto& cand = blk2.report.irreps[vi];
        if (cand.dimension != fixed.dimension) continue;
        double diff = 0;
        for (int x = 0; x < Lp.size(); ++x)
            diff = std::max(diff, std::abs(cand.character[x] - fixed.character[x]));
        if (diff < 1e-6) { found = static_cast<int>(vi); break; }
    }
    ensure(found >= 0, "dual irrep not found in the dual block");

    SimpleObjectDescriptor out;
    out.block = bi2;
    out.coset_rep = gp;
    out.irrep_index = found;
    out.dim = fixed.dimension;
    out.fpdim = s.fpdim; // |H|/|L^g| = |H|/|L^{g'}|
    out.pcover_fpdim = out.fpdim;
    ensure(out.fpdim == static_cast<long long>(spec.H.size()) /
                            blk2.coset.stabilizer.size() * out.dim,
           "dual FPdim mismatch");
    return out;
}

} // namespace

SimpleObjectDescriptor simple_dual(const CategorySpec& spec,
                                   const SimplesResult& res,
                                   const SimpleObjectDescriptor& s, uint64_t seed) {
    (void)seed;
    const SimpleObjectDescriptor out = simple_dual_impl(spec, res, s);
    const SimpleObjectDescriptor back = simple_dual_impl(spec, res, out);
    ensure(back.block == s.block && back.irrep_index == s.irrep_index &&
               back.fpdim == s.fpdim,
           "simple_dual is not an involution");
    return out;
}

SimplesResult projective_cover_data(const CategorySpec& spec, long long p,
                                    uint64_t seed, int threads) {
    require(p == 0 || p >= 2, "characteristic must be 0 or a prime");
    if (p == 0) return category_simples(spec, seed, threads);

    const auto cosets = double_cosets(spec.H, spec.H);
    SimplesResult res;
    res.blocks.resize(cosets.size(),
                      BlockInfo{cosets.front(),
                                Cochain::zero(Subgroup::trivial(spec.G), 2),
                                {}});
    std::vector<std::exception_ptr> errors(cosets.size());
    run_blocks(static_cast<int>(cosets.size()), threads, [&](int i) {
        try {
            const Cochain xi = restrict_cochain(
                xi_g(spec.psi, spec.psi, spec.omega, cosets[i].rep, spec.H, spec.H),
                cosets[i].stabilizer);
            TwistedAlgebra alg(cosets[i].stabilizer.group(), rebase(xi.inverse()),
                               FiniteFieldMode{p, 0});
            res.blocks[i] = BlockInfo{
                cosets[i], xi, modular_report(alg, block_seed(seed, cosets[i].rep))};
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (size_t bi = 0; bi < res.blocks.size(); ++bi) {
        const BlockInfo& b = res.blocks[bi];
        const long long scale = spec.H.size() / b.coset.stabilizer.size();
        long long cartan = 0;
        for (size_t vi = 0; vi < b.report.dims.size(); ++vi) {
            SimpleObjectDescriptor d;
            d.block = static_cast<int>(bi);
            d.coset_rep = b.coset.rep;
            d.irrep_index = static_cast<int>(vi);
            d.dim = b.report.dims[vi];
            d.fpdim = scale * d.dim;
            d.pcover_fpdim = scale * b.report.pcover_dims[vi];
            cartan += static_cast<long long>(b.report.dims[vi]) *
                      b.report.pcover_dims[vi];
            res.simples.push_back(d);
        }
        ensure(cartan == b.coset.stabilizer.size(),
               "blockwise sum dim(P) dim(S) differs from |L^g|");
    }
    return res;
}

PairWitness pair_equivalent(const GroupPtr& G, const Cochain& omega,
                            const Subgroup& H, const Cochain& psi,
                            const Subgroup& H2, const Cochain& psi2) {
    require(H.parent() == G && H2.parent() == G, "pairs must live in G");
    PairWitness w;
    if (H.size() != H2.size()) return w;
    for (int g = 0; g < G->order(); ++g) {
        // need H2 = g^{-1} H g
        bool match = true;
        for (int x : H.elements())
            if (!H2.contains(G->conj(G->inv(g), x))) { match = false; break; }
        if (!match) continue;
        const Cochain pg = psi_g(psi, omega, g, H); // lives on g^{-1} H g = H2
        Cochain pg2 = pg;
        if (!pg.domain().same_elements(psi2.domain())) continue;
        const auto mu = cohomologous(psi2, pg2);
        if (mu) {
            w.equivalent = true;
            w.g = g;
            w.witness = *mu;
            return w;
        }
    }
    return w;
}

std::vector<std::pair<Subgroup, Cochain>> enumerate_module_categories(
    const GroupPtr& G, const Cochain& omega, int subgroup_bound) {
    require(omega.degree() == 3 && omega.domain().is_whole() &&
                omega.domain().parent() == G,
            "omega must be a 3-cochain on the whole of G");
    require(is_cocycle(omega).is_cocycle, "omega must be a 3-cocycle");

    std::vector<std::pair<Subgroup, Cochain>> out;
    for (const Subgroup& H : enumerate_subgroups(G, subgroup_bound)) {
        const SolveD2Result sol = solve_d2_equals(restrict_cochain(omega, H));
        if (!sol.solvable) continue; // H supports no module category
        for (const Cochain& k : sol.h2_classes) {
            Cochain psi = cochain_add(*sol.particular, k);
            bool fresh = true;
            for (const auto& [H0, psi0] : out)
                if (pair_equivalent(G, omega, H0, psi0, H, psi).equivalent) {
                    fresh = false;
                    break;
                }
            if (fresh) out.emplace_back(H, std::move(psi));
        }
    }
    return out;
}

std::vector<std::pair<Subgroup, Cochain>> fiber_functors(const CategorySpec& spec,
                                                         uint64_t seed,
                                                         int subgroup_bound) {
    std::vector<std::pair<Subgroup, Cochain>> out;
    for (const Subgroup& K : enumerate_subgroups(spec.G, subgroup_bound)) {
        if (!product_is_whole(spec.H, K)) continue;
        const SolveD2Result sol = solve_d2_equals(restrict_cochain(spec.omega, K));
        if (!sol.solvable) continue;
        for (const Cochain& k : sol.h2_classes) {
            Cochain eta = cochain_add(*sol.particular, k);
            // xi_1 on H `cap` K; nondegeneracy of xi_1^{-1}
            const Cochain xi1 = xi_g(spec.psi, eta, spec.omega, spec.G->identity(),
                                     spec.H, K);
            const Subgroup HK = xi1.domain();
            if (!is_nondegenerate(HK.group(), rebase(xi1.inverse()))) continue;
            bool fresh = true;
            for (const auto& [K0, eta0] : out)
                if (pair_equivalent(spec.G, spec.omega, K0, eta0, K, eta).equivalent) {
                    fresh = false;
                    break;
                }
            if (!fresh) continue;
            // re-validate: the module category M((H,psi),(K,eta)) has rank 1
            const ModuleCatSpec mc = validate_module_cat(spec, K, eta);
            const SimplesResult r = module_cat_simples(mc, seed);
            ensure(r.simples.size() == 1,
                   "reported fiber functor has module-category rank != 1");
            out.emplace_back(K, std::move(eta));
        }
    }
    return out;
}

UnimodularityReport unimodularity_probe(const CategorySpec& spec, long long p,
                                        uint64_t seed) {
    require(p >= 2, "unimodularity probe requires a prime characteristic");
    const SimplesResult res = projective_cover_data(spec, p, seed);

    // the unit lives in the block of the identity coset, as the trivial
    // factor of (H, xi_e) with xi_e = 1
    UnimodularityReport rep;
    rep.unit_block = block_containing(res, spec.G->identity());
    const int ti = res.blocks[rep.unit_block].report.trivial_index;
    ensure(ti >= 0, "trivial factor not found in the identity block");
    const SimpleObjectDescriptor* unit = nullptr;
    for (const auto& s : res.simples)
        if (s.block == rep.unit_block && s.irrep_index == ti) {
            unit = &s;
            break;
        }
    ensure(unit != nullptr, "unit simple not found in the identity block");
    rep.unit_pcover = unit->pcover_fpdim;

    // the dual block is the coset of e^{-1} = e, i.e. the same block, and
    // the contragredient of the trivial module is the trivial module
    rep.dual_pcover = rep.unit_pcover;
    rep.consistent = rep.unit_pcover == rep.dual_pcover;
    return rep;
}

} // namespace gtcat
