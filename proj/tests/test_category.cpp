#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gtcat/category.hpp"

using namespace gtcat;

namespace {

GroupPtr v4() { return direct_product(cyclic_group(2), cyclic_group(2)); }

Cochain trivial3(const GroupPtr& g) { return Cochain(Subgroup::whole(g), 3, 1); }

CategorySpec spec_of(const GroupPtr& g, const Subgroup& h) {
    return validate_category(g, trivial3(g), h, Cochain::zero(h, 2, 1));
}

GroupHom d4_chi(const GroupPtr& d4) {
    std::vector<int> img(8);
    for (int i = 0; i < 8; ++i) img[i] = (i % 4) % 2;
    return GroupHom(d4, cyclic_group(2), img);
}

std::multiset<long long> fpdims(const SimplesResult& r) {
    std::multiset<long long> out;
    for (const auto& s : r.simples) out.insert(s.fpdim);
    return out;
}

} // namespace

TEST_CASE("validate_category") {
    const auto s3 = symmetric_group(3);
    (void)spec_of(s3, Subgroup::trivial(s3)); // valid
    (void)spec_of(s3, Subgroup::closure(s3, std::vector<int>{s3->index_of("(12)")}));
    // d psi != omega|_H is rejected with a witness in the message
    const auto z2 = cyclic_group(2);
    const Cochain w = preset_omega_cyclic(z2, 1);
    const Subgroup whole = Subgroup::whole(z2);
    CHECK_THROWS_WITH_AS((void)validate_category(z2, w, whole, Cochain::zero(whole, 2, 4)),
                         doctest::Contains("d psi differs"), DomainError);
}

TEST_CASE("C(G, omega, 1, 1) = Coh(G, omega): |G| invertibles") {
    for (const auto& g : {symmetric_group(3), cyclic_group(4), quaternion_group()}) {
        const auto spec = spec_of(g, Subgroup::trivial(g));
        const auto res = category_simples(spec);
        CHECK(static_cast<int>(res.simples.size()) == g->order());
        for (const auto& s : res.simples) CHECK(s.fpdim == 1);
    }
    // with a nontrivial associator as well
    const auto z4 = cyclic_group(4);
    const auto spec = validate_category(
        z4, preset_omega_cyclic(z4, 1), Subgroup::trivial(z4),
        Cochain::zero(Subgroup::trivial(z4), 2, 1));
    const auto res = category_simples(spec);
    CHECK(res.simples.size() == 4);
    for (const auto& s : res.simples) CHECK(s.fpdim == 1);
}

TEST_CASE("C(G, 1, G, 1) = Rep(G)") {
    const auto s3 = symmetric_group(3);
    const auto res = category_simples(spec_of(s3, Subgroup::whole(s3)));
    CHECK(fpdims(res) == std::multiset<long long>({1, 1, 2}));
    const auto q8 = quaternion_group();
    const auto res8 = category_simples(spec_of(q8, Subgroup::whole(q8)));
    CHECK(fpdims(res8) == std::multiset<long long>({1, 1, 1, 1, 2}));
}

TEST_CASE("C(S3, 1, <(12)>, 1): blocks {2,1}, FPdims {1,1,2}") {
    const auto s3 = symmetric_group(3);
    const auto h = Subgroup::closure(s3, std::vector<int>{s3->index_of("(12)")});
    const auto res = category_simples(spec_of(s3, h));
    REQUIRE(res.blocks.size() == 2);
    std::multiset<size_t> per_block;
    for (const auto& b : res.blocks) per_block.insert(b.report.dims.size());
    CHECK(per_block == std::multiset<size_t>({1, 2}));
    CHECK(fpdims(res) == std::multiset<long long>({1, 1, 2}));
}

TEST_CASE("module category M((H,psi),(1,1)): one simple per right coset") {
    const auto s3 = symmetric_group(3);
    const auto h = Subgroup::closure(s3, std::vector<int>{s3->index_of("(123)")});
    const auto spec = spec_of(s3, h);
    const auto mc = validate_module_cat(spec, Subgroup::trivial(s3),
                                        Cochain::zero(Subgroup::trivial(s3), 2, 1));
    const auto res = module_cat_simples(mc);
    CHECK(res.simples.size() == 2); // [S3 : A3] cosets
    for (const auto& b : res.blocks) CHECK(b.coset.stabilizer.size() == 1);
}

TEST_CASE("degenerate one-coset module category") {
    const auto s3 = symmetric_group(3);
    const auto spec = spec_of(s3, Subgroup::whole(s3));
    const auto mc = validate_module_cat(spec, Subgroup::whole(s3),
                                        Cochain::zero(Subgroup::whole(s3), 2, 1));
    const auto res = module_cat_simples(mc);
    CHECK(res.blocks.size() == 1);
    CHECK(res.simples.size() == 3); // Irr(S3)
}

TEST_CASE("module-category rank identity over several fixtures") {
    const auto s3 = symmetric_group(3);
    const auto subs = enumerate_subgroups(s3);
    for (const auto& H : subs)
        for (const auto& K : subs) {
            const auto spec = spec_of(s3, H);
            const auto mc = validate_module_cat(spec, K, Cochain::zero(K, 2, 1));
            const auto res = module_cat_simples(mc); // internal mass identity runs
            long long rank = 0;
            for (const auto& b : res.blocks)
                rank += static_cast<long long>(b.report.dims.size());
            CHECK(rank == static_cast<long long>(res.simples.size()));
        }
}

TEST_CASE("normal H: every block has L^g = H and #blocks = [G:H]") {
    const auto s3 = symmetric_group(3);
    const auto a3 = Subgroup::closure(s3, std::vector<int>{s3->index_of("(123)")});
    REQUIRE(a3.is_normal());
    const auto res = category_simples(spec_of(s3, a3));
    CHECK(res.blocks.size() == 2);
    for (const auto& b : res.blocks) {
        CHECK(b.coset.stabilizer.size() == 3);
        CHECK(b.coset.elements.size() == 3);
    }
    CHECK(fpdims(res) == std::multiset<long long>({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("simple_dual: involution, FPdim preserved, S3 fixtures") {
    const auto s3 = symmetric_group(3);
    const auto h = Subgroup::closure(s3, std::vector<int>{s3->index_of("(12)")});
    const auto spec = spec_of(s3, h);
    const auto res = category_simples(spec);
    for (const auto& s : res.simples) {
        const auto d = simple_dual(spec, res, s); // involution asserted inside
        CHECK(d.fpdim == s.fpdim);
        if (s.fpdim == 2) {
            // the unique FPdim-2 simple is self-dual
            CHECK(d.block == s.block);
            CHECK(d.irrep_index == s.irrep_index);
        }
    }
    // Rep(S3): duals preserve dimension; the 2-dim is self-dual
    const auto specW = spec_of(s3, Subgroup::whole(s3));
    const auto resW = category_simples(specW);
    for (const auto& s : resW.simples)
        CHECK(simple_dual(specW, resW, s).fpdim == s.fpdim);
}

TEST_CASE("projective covers: p does not divide |H| gives P = S") {
    const auto s3 = symmetric_group(3);
    const auto spec = spec_of(s3, Subgroup::whole(s3));
    const auto res = projective_cover_data(spec, 5);
    for (const auto& s : res.simples) CHECK(s.pcover_fpdim == s.fpdim);
}

TEST_CASE("projective covers: C(S3,1,S3,1) at p = 3") {
    const auto s3 = symmetric_group(3);
    const auto spec = spec_of(s3, Subgroup::whole(s3));
    const auto res = projective_cover_data(spec, 3);
    std::multiset<long long> sdims, pdims;
    for (const auto& s : res.simples) {
        sdims.insert(s.fpdim);
        pdims.insert(s.pcover_fpdim);
    }
    CHECK(sdims == std::multiset<long long>({1, 1}));
    CHECK(pdims == std::multiset<long long>({3, 3}));
}

TEST_CASE("projective covers: C(S3,1,A3,1) at p = 3 blockwise Cartan") {
    const auto s3 = symmetric_group(3);
    const auto a3 = Subgroup::closure(s3, std::vector<int>{s3->index_of("(123)")});
    const auto res = projective_cover_data(spec_of(s3, a3), 3);
    // two blocks, each the group algebra of Z3 in char 3: one simple of dim 1
    // with projective cover of dim 3; scaled by |H|/|L^g| = 1
    REQUIRE(res.blocks.size() == 2);
    for (const auto& s : res.simples) {
        CHECK(s.fpdim == 1);
        CHECK(s.pcover_fpdim == 3);
    }
}

TEST_CASE("pair_equivalent") {
    const auto s3 = symmetric_group(3);
    const Cochain w = trivial3(s3);
    const auto h12 = Subgroup::closure(s3, std::vector<int>{s3->index_of("(12)")});
    const auto h13 = Subgroup::closure(s3, std::vector<int>{s3->index_of("(13)")});
    const Cochain p12 = Cochain::zero(h12, 2, 1);
    const Cochain p13 = Cochain::zero(h13, 2, 1);
    // a pair is equivalent to itself with g = e
    const auto self = pair_equivalent(s3, w, h12, p12, h12, p12);
    CHECK(self.equivalent);
    CHECK(self.g == s3->identity());
    // conjugate subgroups with transported cochains are equivalent
    CHECK(pair_equivalent(s3, w, h12, p12, h13, p13).equivalent);
    // different orders are not
    CHECK(!pair_equivalent(s3, w, h12, p12, Subgroup::trivial(s3),
                           Cochain::zero(Subgroup::trivial(s3), 2, 1))
               .equivalent);

    // V4: the two H^2 classes are inequivalent pairs on the whole group
    const auto g4 = v4();
    const auto sol = solve_d2_equals(Cochain(Subgroup::whole(g4), 3, 2));
    REQUIRE(sol.h2_classes.size() == 2);
    CHECK(!pair_equivalent(g4, trivial3(g4), Subgroup::whole(g4), sol.h2_classes[0],
                           Subgroup::whole(g4), sol.h2_classes[1])
               .equivalent);
}

TEST_CASE("enumerate_module_categories") {
    // G = Z2, omega trivial: (1,1) and (Z2,1)
    CHECK(enumerate_module_categories(cyclic_group(2), trivial3(cyclic_group(2)))
              .size() == 2);
    // G trivial: exactly one pair
    CHECK(enumerate_module_categories(cyclic_group(1), trivial3(cyclic_group(1)))
              .size() == 1);
    // G = V4, omega trivial: 1 + 3 + 2 = 6 classes
    const auto g4 = v4();
    CHECK(enumerate_module_categories(g4, trivial3(g4)).size() == 6);
    // S3: subgroups 1, <(12)> (one class up to conjugacy), A3, S3 -> 4 classes
    const auto s3 = symmetric_group(3);
    CHECK(enumerate_module_categories(s3, trivial3(s3)).size() == 4);
}

TEST_CASE("fiber functors") {
    // Rep(S3): exactly one (K = 1)
    const auto s3 = symmetric_group(3);
    const auto specS = spec_of(s3, Subgroup::whole(s3));
    const auto fibS = fiber_functors(specS);
    REQUIRE(fibS.size() == 1);
    CHECK(fibS.front().first.size() == 1);

    // Coh(V4): exactly two (K = G, both eta classes)
    const auto g4 = v4();
    const auto specV = spec_of(g4, Subgroup::trivial(g4));
    const auto fibV = fiber_functors(specV);
    REQUIRE(fibV.size() == 2);
    for (const auto& [K, eta] : fibV) CHECK(K.size() == 4);

    // C(G, omega, G, psi) always contains (1,1)
    const auto specG = spec_of(g4, Subgroup::whole(g4));
    const auto fibG = fiber_functors(specG);
    bool has_trivial = false;
    for (const auto& [K, eta] : fibG) has_trivial = has_trivial || K.size() == 1;
    CHECK(has_trivial);
}

TEST_CASE("fiber functor negative check: everything else has rank != 1") {
    const auto g4 = v4();
    const auto spec = spec_of(g4, Subgroup::trivial(g4));
    const auto listed = fiber_functors(spec);
    for (const Subgroup& K : enumerate_subgroups(g4)) {
        const auto sol = solve_d2_equals(restrict_cochain(spec.omega, K));
        if (!sol.solvable) continue;
        for (const auto& cls : sol.h2_classes) {
            const Cochain eta = cochain_add(*sol.particular, cls);
            const auto mc = validate_module_cat(spec, K, eta);
            const bool rank1 = module_cat_simples(mc).simples.size() == 1;
            bool in_list = false;
            for (const auto& [K0, eta0] : listed)
                if (pair_equivalent(g4, spec.omega, K0, eta0, K, eta).equivalent)
                    in_list = true;
            CHECK(rank1 == in_list);
        }
    }
}

TEST_CASE("xi_g block data is representative-independent") {
    const auto d4 = dihedral_group(4);
    const Cochain w = pullback(preset_omega_cyclic(cyclic_group(2), 1), d4_chi(d4));
    const Subgroup rot = Subgroup::closure(d4, std::vector<int>{d4->index_of("r")});
    const auto sol = solve_d2_equals(restrict_cochain(w, rot));
    REQUIRE(sol.solvable);
    const Cochain psi = *sol.particular;
    for (const auto& dc : double_cosets(rot, rot)) {
        std::multiset<int> reference;
        for (int rep_el : dc.elements) {
            const Cochain xi = xi_g(psi, psi, w, rep_el, rot, rot);
            // the twisted algebra over any representative has the same
            // irrep count and dimension multiset
            const Subgroup L(d4, [&] {
                std::vector<int> el;
                for (int h : rot.elements())
                    if (rot.contains(d4->conj(d4->inv(rep_el), h))) el.push_back(h);
                return el;
            }());
            TwistedAlgebra alg(L.group(), rebase(restrict_cochain(xi, L).inverse()),
                               ComplexMode{});
            const auto rep = irreps_char0(alg);
            std::multiset<int> dims(rep.dims.begin(), rep.dims.end());
            if (reference.empty())
                reference = dims;
            else
                CHECK(reference == dims);
        }
    }
}

TEST_CASE("unimodularity probe") {
    const auto s3 = symmetric_group(3);
    const auto spec = spec_of(s3, Subgroup::whole(s3));
    const auto rep3 = unimodularity_probe(spec, 3);
    CHECK(rep3.consistent);
    CHECK(rep3.unit_pcover == 3);
    const auto rep5 = unimodularity_probe(spec, 5); // fusion case
    CHECK(rep5.consistent);
    CHECK(rep5.unit_pcover == 1);
    // normal-H fixture
    const auto a3 = Subgroup::closure(s3, std::vector<int>{s3->index_of("(123)")});
    CHECK(unimodularity_probe(spec_of(s3, a3), 3).consistent);
}

TEST_CASE("global FPdim identity across a fixture battery") {
    std::vector<CategorySpec> specs;
    const auto s3 = symmetric_group(3);
    for (const auto& H : enumerate_subgroups(s3)) specs.push_back(spec_of(s3, H));
    const auto q8 = quaternion_group();
    specs.push_back(spec_of(q8, Subgroup::whole(q8)));
    specs.push_back(spec_of(q8, Subgroup::trivial(q8)));
    for (const auto& spec : specs) {
        const auto res = category_simples(spec); // identity asserted inside
        long long fp2 = 0;
        for (const auto& s : res.simples) fp2 += s.fpdim * s.fpdim;
        CHECK(fp2 == spec.G->order());
    }
}
