#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtcat/projrep.hpp"
#include "oracle_modular.hpp"

using namespace gtcat;

namespace {

TwistedAlgebraReport run_modular(const GroupPtr& g, const Cochain& xi, long long p,
                                 uint64_t seed = kDefaultSeed) {
    TwistedAlgebra alg(g, xi, FiniteFieldMode{p, 0});
    return modular_report(alg, seed);
}

oracle::OracleReport run_oracle(const GroupPtr& g, const Cochain& xi, long long p) {
    const Cochain red = reduce_modulus(xi);
    const FqField F = FqField::with_root_of_unity(p, red.modulus());
    oracle::SmallAlgebra A(F, g, red);
    return oracle::analyze(A);
}

} // namespace

TEST_CASE("group algebra of S3, characteristic 3") {
    const auto s3 = symmetric_group(3);
    const Cochain triv(Subgroup::whole(s3), 2, 1);
    const auto rep = run_modular(s3, triv, 3);
    CHECK(rep.dims == std::vector<int>({1, 1}));
    CHECK(rep.pcover_dims == std::vector<int>({3, 3}));
    CHECK(rep.trivial_index >= 0);

    const auto orc = run_oracle(s3, triv, 3);
    CHECK(orc.simple_dims == rep.dims);
    CHECK(orc.projective_dims == rep.pcover_dims);
    // radical series of kS3 at p = 3: dims 4, 2 then stops
    CHECK(orc.radical_series == std::vector<int>({4, 2}));
    long long cartan = 0;
    for (size_t i = 0; i < rep.dims.size(); ++i)
        cartan += static_cast<long long>(rep.dims[i]) * rep.pcover_dims[i];
    CHECK(cartan == 6);
}

TEST_CASE("group algebra of S3, characteristic 2") {
    const auto s3 = symmetric_group(3);
    const Cochain triv(Subgroup::whole(s3), 2, 1);
    const auto rep = run_modular(s3, triv, 2);
    CHECK(rep.dims == std::vector<int>({1, 2}));
    CHECK(rep.pcover_dims == std::vector<int>({2, 2}));

    const auto orc = run_oracle(s3, triv, 2);
    CHECK(orc.simple_dims == rep.dims);
    CHECK(orc.projective_dims == rep.pcover_dims);
    long long cartan = 0;
    for (size_t i = 0; i < rep.dims.size(); ++i)
        cartan += static_cast<long long>(rep.dims[i]) * rep.pcover_dims[i];
    CHECK(cartan == 6);
}

TEST_CASE("semisimple case matches characteristic 0 and P = S") {
    const auto s3 = symmetric_group(3);
    const Cochain triv(Subgroup::whole(s3), 2, 1);
    for (long long p : {5, 7}) {
        const auto rep = run_modular(s3, triv, p);
        CHECK(rep.dims == std::vector<int>({1, 1, 2}));
        CHECK(rep.pcover_dims == rep.dims);
    }
    // abelian examples
    const auto z4 = cyclic_group(4);
    const Cochain t4(Subgroup::whole(z4), 2, 1);
    const auto r5 = run_modular(z4, t4, 5);
    CHECK(r5.dims == std::vector<int>({1, 1, 1, 1}));
    CHECK(r5.pcover_dims == r5.dims);
}

TEST_CASE("kZ4 in characteristic 2: one simple, projective cover is everything") {
    const auto z4 = cyclic_group(4);
    const Cochain triv(Subgroup::whole(z4), 2, 1);
    const auto rep = run_modular(z4, triv, 2);
    CHECK(rep.dims == std::vector<int>({1}));
    CHECK(rep.pcover_dims == std::vector<int>({4}));
    const auto orc = run_oracle(z4, triv, 2);
    CHECK(orc.simple_dims == rep.dims);
    CHECK(orc.projective_dims == rep.pcover_dims);
    CHECK(orc.radical_series == std::vector<int>({3, 2, 1}));
}

TEST_CASE("twisted V4 over characteristic 3 is a matrix algebra") {
    const auto g = direct_product(cyclic_group(2), cyclic_group(2));
    Cochain xi(Subgroup::whole(g), 2, 2);
    for (int x = 1; x < 4; ++x)
        for (int y = 1; y < 4; ++y) xi.set_local({x, y}, (x % 2) * (y / 2));
    REQUIRE(is_cocycle(xi).is_cocycle);
    const auto rep = run_modular(g, xi, 3);
    CHECK(rep.dims == std::vector<int>({2}));
    CHECK(rep.pcover_dims == std::vector<int>({2}));
    const auto orc = run_oracle(g, xi, 3);
    CHECK(orc.simple_dims == rep.dims);
    CHECK(orc.projective_dims == rep.pcover_dims);
}

TEST_CASE("dihedral group in characteristic 2") {
    const auto d4 = dihedral_group(4);
    const Cochain triv(Subgroup::whole(d4), 2, 1);
    const auto rep = run_modular(d4, triv, 2);
    // 2-group in characteristic 2: only the trivial simple, P = regular
    CHECK(rep.dims == std::vector<int>({1}));
    CHECK(rep.pcover_dims == std::vector<int>({8}));
}

TEST_CASE("S3 in characteristic 3 with a nontrivial-modulus cocycle value check") {
    // cocycle values of even order embed in F_q only when p is odd; the
    // constructor must reject p dividing the reduced cocycle order
    const auto g = direct_product(cyclic_group(2), cyclic_group(2));
    Cochain xi(Subgroup::whole(g), 2, 2);
    for (int x = 1; x < 4; ++x)
        for (int y = 1; y < 4; ++y) xi.set_local({x, y}, (x % 2) * (y / 2));
    CHECK_THROWS_AS(
        (void)TwistedAlgebra(g, xi, FiniteFieldMode{2, 0}), DomainError);
}

TEST_CASE("determinism of the modular report") {
    const auto s3 = symmetric_group(3);
    const Cochain triv(Subgroup::whole(s3), 2, 1);
    const auto a = run_modular(s3, triv, 2, 321);
    const auto b = run_modular(s3, triv, 2, 321);
    CHECK(a.dims == b.dims);
    CHECK(a.pcover_dims == b.pcover_dims);
    CHECK(a.field_e == b.field_e);
}
