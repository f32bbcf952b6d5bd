#include "gtcat/center.hpp"

#include <algorithm>
#include <map>

namespace gtcat {

CenterSpec validate_center(GroupPtr G, Cochain omega, long long p) {
    require(p == 0 || p >= 2, "characteristic must be 0 or a prime");
    require(omega.degree() == 3 && omega.domain().is_whole() &&
                omega.domain().parent() == G,
            "omega must be a 3-cochain on the whole of G");
    require(is_cocycle(omega).is_cocycle, "omega must be a 3-cocycle");
    return CenterSpec{std::move(G), std::move(omega), p};
}

namespace {

CenterBlock make_center_block(const CenterSpec& spec, const ConjugacyClass& cls,
                              uint64_t seed, bool modular) {
    const Cochain og = omega_g(spec.omega, cls.rep);
    const Cochain restricted = restrict_cochain(og, cls.centralizer);
    ensure(is_cocycle(restricted).is_cocycle,
           "omega_g restricted to the centralizer is not a 2-cocycle");
    const Cochain xi = rebase(restricted);
    TwistedAlgebraReport rep;
    if (modular) {
        TwistedAlgebra alg(cls.centralizer.group(), xi,
                           FiniteFieldMode{spec.p, 0});
        rep = modular_report(alg, block_seed(seed, cls.rep));
    } else {
        TwistedAlgebra alg(cls.centralizer.group(), xi, ComplexMode{});
        rep = irreps_char0(alg, block_seed(seed, cls.rep));
    }
    return CenterBlock{cls, restricted, std::move(rep)};
}

CenterResult center_common(const CenterSpec& spec, uint64_t seed, int threads,
                           bool modular) {
    const auto classes = conjugacy_data(spec.G);
    CenterResult res;
    res.blocks.reserve(classes.size());
    (void)threads;
    for (const auto& cls : classes)
        res.blocks.push_back(make_center_block(spec, cls, seed, modular));

    // unit block must agree with plain Irr(G) in characteristic 0
    if (!modular) {
        ensure(res.blocks.front().cls.rep == spec.G->identity(),
               "identity class is not first");
        ensure(res.blocks.front().cocycle.is_zero(),
               "unit block cocycle is not trivial");
    }

    for (size_t bi = 0; bi < res.blocks.size(); ++bi) {
        const CenterBlock& b = res.blocks[bi];
        const long long csize = static_cast<long long>(b.cls.elements.size());
        long long cartan = 0;
        for (size_t vi = 0; vi < b.report.dims.size(); ++vi) {
            SimpleObjectDescriptor d;
            d.block = static_cast<int>(bi);
            d.coset_rep = b.cls.rep;
            d.irrep_index = static_cast<int>(vi);
            d.dim = b.report.dims[vi];
            d.fpdim = csize * d.dim;
            d.pcover_fpdim = csize * b.report.pcover_dims[vi];
            cartan += static_cast<long long>(b.report.dims[vi]) *
                      b.report.pcover_dims[vi];
            res.simples.push_back(d);
        }
        if (modular)
            ensure(cartan == b.cls.centralizer.size(),
                   "blockwise sum dim(P) dim(S) differs from |G_C|");
    }
    if (!modular) {
        long long fp2 = 0;
        for (const auto& s : res.simples) fp2 += s.fpdim * s.fpdim;
        ensure(fp2 == static_cast<long long>(spec.G->order()) * spec.G->order(),
               "center global FPdim identity sum fpdim^2 = |G|^2 fails");
    }
    return res;
}

} // namespace

CenterResult center_blocks(const CenterSpec& spec, uint64_t seed, int threads) {
    return center_common(spec, seed, threads, false);
}

CenterResult center_simples(const CenterSpec& spec, uint64_t seed, int threads) {
    return center_common(spec, seed, threads, false);
}

CenterResult center_projectives(const CenterSpec& spec, uint64_t seed,
                                int threads) {
    require(spec.p >= 2, "center projectives require a prime characteristic");
    return center_common(spec, seed, threads, true);
}

namespace {

SimpleObjectDescriptor center_dual_impl(const CenterSpec& spec,
                                        const CenterResult& res,
                                        const SimpleObjectDescriptor& s) {
    const GroupPtr& G = spec.G;
    const CenterBlock& blk = res.blocks[s.block];
    const int ginv = G->inv(blk.cls.rep);
    int bi2 = -1;
    for (size_t i = 0; i < res.blocks.size(); ++i) {
        const auto& el = res.blocks[i].cls.elements;
        if (std::binary_search(el.begin(), el.end(), ginv)) {
            bi2 = static_cast<int>(i);
            break;
        }
    }
    ensure(bi2 >= 0, "inverse class not found");
    const CenterBlock& blk2 = res.blocks[bi2];
    ensure(blk.cls.elements.size() == blk2.cls.elements.size(),
           "inverse class has a different size");

    SimpleObjectDescriptor out = s;
    out.block = bi2;
    out.coset_rep = blk2.cls.rep;
    out.fpdim = s.fpdim;
    out.pcover_fpdim = s.pcover_fpdim;

    const bool have_matrices =
        !blk.report.irreps.empty() && !blk.report.irreps[s.irrep_index].matrices.empty();
    if (!have_matrices) {
        // char-p reports carry dimension data only; keep a dimension-matched
        // index within the dual block
        if (blk2.report.dims[s.irrep_index] != s.dim)
            for (size_t vi = 0; vi < blk2.report.dims.size(); ++vi)
                if (blk2.report.dims[vi] == s.dim) {
                    out.irrep_index = static_cast<int>(vi);
                    break;
                }
        return out;
    }

    // contragredient of V in Rep(G_C, omega_g): cocycle normalized to
    // omega_g^{-1}, then transported to G_{C'} along conjugation by c with
    // g' = c g^{-1} c^{-1}, and matched inside the dual block
    const Subgroup& C = blk.cls.centralizer;   // = centralizer of g = of g^{-1}
    const Subgroup& C2 = blk2.cls.centralizer;
    int c_conj = -1;
    for (int c = 0; c < G->order(); ++c)
        if (G->conj(c, ginv) == blk2.cls.rep) { c_conj = c; break; }
    ensure(c_conj >= 0, "no conjugator onto the inverse-class representative");
    std::vector<int> tau(C.size());
    for (int i = 0; i < C.size(); ++i) {
        const int img = G->conj(c_conj, C.to_parent(i));
        const int li = C2.local_index(img);
        ensure(li >= 0, "conjugation does not map the centralizer correctly");
        tau[i] = li;
    }

    const Cochain xi_own = rebase(blk.cocycle); // cocycle of V
    const IrrepRecord dual0 = dual_irrep(blk.report.irreps[s.irrep_index], xi_own);
    const IrrepRecord moved = transport_irrep(dual0, C.group(), C2.group(), tau);
    Cochain c1(Subgroup::whole(C2.group()), 2, blk.cocycle.modulus());
    {
        std::vector<int> tinv(C.size());
        for (int i = 0; i < C.size(); ++i) tinv[tau[i]] = i;
        for (int x = 0; x < C2.size(); ++x)
            for (int y = 0; y < C2.size(); ++y)
                c1.set_local({x, y},
                             mod_reduce(-blk.cocycle.at_local({tinv[x], tinv[y]}),
                                        blk.cocycle.modulus()));
    }
    const Cochain target = rebase(blk2.cocycle);
    const auto nu = cohomologous(c1, target);
    ensure(nu.has_value(),
           "transported center dual cocycle is not cohomologous to omega_{g'}");
    const long long mw = nu->modulus();
    IrrepRecord fixed = moved;
    for (int x = 0; x < C2.size(); ++x) {
        const double ang = -2.0 * 3.14159265358979323846 *
                           double(mod_reduce(nu->at_local({x}), mw)) / double(mw);
        const std::complex<double> ph(std::cos(ang), std::sin(ang));
        fixed.matrices[x] *= ph;
        fixed.character[x] *= ph;
    }
    ensure(satisfies_multiplication_law(fixed, C2.group(), target, 1e-6),
           "normalized center dual violates the omega_{g'} multiplication law");
    int found = -1;
    for (size_t vi = 0; vi < blk2.report.irreps.size(); ++vi) {
        const auto& cand = blk2.report.irreps[vi];
        if (cand.dimension != fixed.dimension) continue;
        double diff = 0;
        for (int x = 0; x < C2.size(); ++x)
            diff = std::max(diff, std::abs(cand.character[x] - fixed.character[x]));
        if (diff < 1e-6) { found = static_cast<int>(vi); break; }
    }
    ensure(found >= 0, "center dual irrep not found in the inverse-class block");
    out.irrep_index = found;
    return out;
}

} // namespace

SimpleObjectDescriptor center_simple_dual(const CenterSpec& spec,
                                          const CenterResult& res,
                                          const SimpleObjectDescriptor& s) {
    const SimpleObjectDescriptor out = center_dual_impl(spec, res, s);
    const SimpleObjectDescriptor back = center_dual_impl(spec, res, out);
    ensure(back.block == s.block && back.fpdim == s.fpdim,
           "center dual is not an involution on blocks");
    return out;
}

CrossCheckReport cross_check_via_double(const CenterSpec& spec, uint64_t seed,
                                        int threads) {
    const GroupPtr& G = spec.G;
    const int n = G->order();
    require(n <= 12, "cross-check builds G x G; |G| <= 12 required");

    // the double group and the mixed associator omega x omega^{-1}
    const GroupPtr GG = direct_product(G, G);
    const long long m = spec.omega.modulus();
    Cochain wt(Subgroup::whole(GG), 3, m);
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2)
            for (int b1 = 0; b1 < n; ++b1)
                for (int b2 = 0; b2 < n; ++b2)
                    for (int c1 = 0; c1 < n; ++c1)
                        for (int c2 = 0; c2 < n; ++c2) {
                            const long long v =
                                spec.omega.at_local({a1, b1, c1}) -
                                spec.omega.at_local({a2, b2, c2});
                            wt.set_local({a1 * n + a2, b1 * n + b2, c1 * n + c2},
                                         mod_reduce(v, m));
                        }

    // diagonal subgroup; omega-tilde restricts trivially on it
    std::vector<int> diag;
    for (int a = 0; a < n; ++a) diag.push_back(a * n + a);
    Subgroup HH(GG, diag);
    const Cochain one = Cochain::zero(HH, 2, 1);
    const CategorySpec cat = validate_category(GG, wt, HH, one);
    const SimplesResult dbl = category_simples(cat, seed, threads);

    const CenterResult ctr = center_simples(spec, seed, threads);

    CrossCheckReport rep;
    rep.class_count = static_cast<int>(ctr.blocks.size());
    rep.block_count_double = static_cast<int>(dbl.blocks.size());
    rep.pass = rep.class_count == rep.block_count_double;

    for (size_t ci = 0; ci < ctr.blocks.size(); ++ci) {
        const CenterBlock& cb = ctr.blocks[ci];
        const int g = cb.cls.rep;
        const int image = g * n + G->identity(); // (g, 1) in G x G
        CrossCheckBlockReport br;
        br.class_rep = g;

        int di = -1;
        for (size_t i = 0; i < dbl.blocks.size(); ++i) {
            const auto& el = dbl.blocks[i].coset.elements;
            if (std::binary_search(el.begin(), el.end(), image)) {
                di = static_cast<int>(i);
                break;
            }
        }
        ensure(di >= 0, "class image not covered by a double coset");
        const BlockInfo& db = dbl.blocks[di];
        br.double_coset_rep = db.coset.rep;
        br.simple_count_center = static_cast<int>(cb.report.dims.size());
        br.simple_count_double = static_cast<int>(db.report.dims.size());

        for (const auto& s : ctr.simples)
            if (s.block == static_cast<int>(ci)) br.fpdims_center.push_back(s.fpdim);
        for (const auto& s : dbl.simples)
            if (s.block == di) br.fpdims_double.push_back(s.fpdim);
        std::sort(br.fpdims_center.begin(), br.fpdims_center.end());
        std::sort(br.fpdims_double.begin(), br.fpdims_double.end());

        // block cocycle comparison at the representative (g,1): pull back
        // xi_{(g,1)} along l -> (l,l) and compare with omega_g on G_C
        {
            const Cochain xi_at_g1 = xi_g(one, one, wt, image, HH, HH);
            const Subgroup& Ldiag = xi_at_g1.domain();
            const Subgroup& C = cb.cls.centralizer;
            ensure(Ldiag.size() == C.size(),
                   "diagonal stabilizer does not match the centralizer");
            Cochain pulled(C, 2, xi_at_g1.modulus());
            for (int x = 0; x < C.size(); ++x)
                for (int y = 0; y < C.size(); ++y) {
                    const int px = C.to_parent(x), py = C.to_parent(y);
                    pulled.set_local({x, y}, xi_at_g1.at_parent(
                                                 {px * n + px, py * n + py}));
                }
            br.cocycles_pointwise_equal = cochains_equal(pulled, cb.cocycle);
            br.cocycles_cohomologous = br.cocycles_pointwise_equal ||
                                       cohomologous(pulled, cb.cocycle).has_value();
        }

        if (br.simple_count_center != br.simple_count_double ||
            br.fpdims_center != br.fpdims_double)
            rep.pass = false;
        rep.blocks.push_back(std::move(br));
    }
    return rep;
}

} // namespace gtcat
