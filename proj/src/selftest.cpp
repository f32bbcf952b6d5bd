#include "gtcat/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "gtcat/category.hpp"
#include "gtcat/center.hpp"

namespace gtcat {

namespace {

void run_case(std::vector<SelfTestResult>& out, const std::string& name,
              const std::function<void()>& body) {
    SelfTestResult r{name, false, ""};
    try {
        body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    out.push_back(std::move(r));
}

void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

} // namespace

std::vector<SelfTestResult> run_selftest(bool quick, uint64_t seed, int threads) {
    std::vector<SelfTestResult> out;

    run_case(out, "group presets and class data", [&] {
        const auto s3 = symmetric_group(3);
        expect(s3->order() == 6, "S3 order");
        const auto classes = conjugacy_data(s3);
        expect(classes.size() == 3, "S3 class count");
        const auto q8 = quaternion_group();
        expect(conjugacy_data(q8).size() == 5, "Q8 class count");
        expect(enumerate_subgroups(s3).size() == 6, "S3 subgroup count");
    });

    run_case(out, "coboundary nilpotency d(d psi) = 0", [&] {
        const auto s3 = symmetric_group(3);
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 20; ++t) {
            Cochain psi(Subgroup::whole(s3), 2, 12);
            for (int a = 1; a < 6; ++a)
                for (int b = 1; b < 6; ++b)
                    psi.set_local({a, b}, static_cast<long long>(rng() % 12));
            expect(is_cocycle(coboundary(psi)).is_cocycle, "d d psi != 0");
        }
    });

    run_case(out, "preset omegas are cocycles", [&] {
        for (int n = 1; n <= 6; ++n) {
            const auto zn = cyclic_group(n);
            for (int q = 0; q < n; ++q) (void)preset_omega_cyclic(zn, q);
        }
    });

    run_case(out, "xi_g identities on the fixture matrix", [&] {
        const auto d4 = dihedral_group(4);
        const auto z2 = cyclic_group(2);
        std::vector<int> chi(8);
        for (int i = 0; i < 8; ++i) chi[i] = i % 2; // r^a s^b -> a mod 2
        const GroupHom hom(d4, z2, chi);
        const Cochain omega = pullback(preset_omega_cyclic(z2, 1), hom);
        for (const Subgroup& H : enumerate_subgroups(d4)) {
            const auto sol = solve_d2_equals(restrict_cochain(omega, H));
            if (!sol.solvable) continue;
            for (const Subgroup& K : enumerate_subgroups(d4)) {
                const auto solK = solve_d2_equals(restrict_cochain(omega, K));
                if (!solK.solvable) continue;
                const Cochain psi = *sol.particular;
                const Cochain eta = *solK.particular;
                for (const auto& dc : double_cosets(H, K))
                    (void)xi_g(psi, eta, omega, dc.rep, H, K); // checks d xi = 0
            }
        }
    });

    run_case(out, "global FPdim identities", [&] {
        const auto s3 = symmetric_group(3);
        const Cochain triv(Subgroup::whole(s3), 3, 1);
        const auto whole = Subgroup::whole(s3);
        const auto spec = validate_category(s3, triv, whole,
                                            Cochain::zero(whole, 2, 1));
        const auto res = category_simples(spec, seed, threads);
        std::vector<int> dims;
        for (const auto& s : res.simples) dims.push_back(static_cast<int>(s.fpdim));
        std::sort(dims.begin(), dims.end());
        expect(dims == std::vector<int>({1, 1, 2}), "Irr(S3) dims");
    });

    run_case(out, "modular oracle kS3", [&] {
        const auto s3 = symmetric_group(3);
        const Cochain xi = Cochain::zero(Subgroup::whole(s3), 2, 1);
        TwistedAlgebra a3(s3, xi, FiniteFieldMode{3, 0});
        const auto r3 = modular_report(a3, seed);
        expect(r3.dims == std::vector<int>({1, 1}), "kS3 char 3 simple dims");
        expect(r3.pcover_dims == std::vector<int>({3, 3}), "kS3 char 3 pcover dims");
        TwistedAlgebra a2(s3, xi, FiniteFieldMode{2, 0});
        const auto r2 = modular_report(a2, seed);
        expect(r2.dims == std::vector<int>({1, 2}), "kS3 char 2 simple dims");
        expect(r2.pcover_dims == std::vector<int>({2, 2}), "kS3 char 2 pcover dims");
    });

    run_case(out, "center of S3", [&] {
        const auto s3 = symmetric_group(3);
        const auto spec = validate_center(s3, Cochain(Subgroup::whole(s3), 3, 1));
        const auto res = center_simples(spec, seed, threads);
        std::vector<long long> fp;
        for (const auto& s : res.simples) fp.push_back(s.fpdim);
        std::sort(fp.begin(), fp.end());
        expect(fp == std::vector<long long>({1, 1, 2, 2, 2, 2, 3, 3}),
               "Z(S3) FPdims");
    });

    if (!quick) {
        run_case(out, "double cross-check (Z2, trivial)", [&] {
            const auto z2 = cyclic_group(2);
            const auto spec = validate_center(z2, Cochain(Subgroup::whole(z2), 3, 1));
            expect(cross_check_via_double(spec, seed, threads).pass, "mismatch");
        });
        run_case(out, "double cross-check (Z2, preset)", [&] {
            const auto z2 = cyclic_group(2);
            const auto spec = validate_center(z2, preset_omega_cyclic(z2, 1));
            expect(cross_check_via_double(spec, seed, threads).pass, "mismatch");
        });
        run_case(out, "double cross-check (S3, trivial)", [&] {
            const auto s3 = symmetric_group(3);
            const auto spec = validate_center(s3, Cochain(Subgroup::whole(s3), 3, 1));
            expect(cross_check_via_double(spec, seed, threads).pass, "mismatch");
        });
        run_case(out, "fiber functors of Rep(S3) and Coh(V4)", [&] {
            const auto s3 = symmetric_group(3);
            const auto whole = Subgroup::whole(s3);
            const auto spec = validate_category(s3, Cochain(whole, 3, 1), whole,
                                                Cochain::zero(whole, 2, 1));
            expect(fiber_functors(spec, seed).size() == 1, "Rep(S3) fiber functors");
            const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
            const auto triv = Subgroup::trivial(v4);
            const auto spec2 =
                validate_category(v4, Cochain(Subgroup::whole(v4), 3, 1), triv,
                                  Cochain::zero(triv, 2, 1));
            expect(fiber_functors(spec2, seed).size() == 2, "Coh(V4) fiber functors");
        });
    }
    return out;
}

} // namespace gtcat
