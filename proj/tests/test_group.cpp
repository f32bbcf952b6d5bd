#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "gtcat/group.hpp"

using namespace gtcat;

TEST_CASE("presets: orders, identities, labels") {
    CHECK(cyclic_group(1)->order() == 1);
    CHECK(cyclic_group(7)->order() == 7);
    CHECK(dihedral_group(4)->order() == 8);
    CHECK(symmetric_group(3)->order() == 6);
    CHECK(quaternion_group()->order() == 8);
    const auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(v4->order() == 4);
    // every non-identity element of Z2 x Z2 is an involution
    for (int x = 0; x < 4; ++x)
        if (x != v4->identity()) CHECK(v4->mul(x, x) == v4->identity());
    CHECK(symmetric_group(3)->index_of("(12)") >= 0);
    CHECK(symmetric_group(3)->index_of("e") == symmetric_group(3)->identity());
    CHECK_THROWS_AS((void)symmetric_group(7), DomainError);
    CHECK_THROWS_AS((void)cyclic_group(0), DomainError);
    CHECK_THROWS_AS((void)cyclic_group(20000), DomainError);
}

TEST_CASE("from_table rejects non-groups") {
    // non-associative magma on 3 elements (a Latin square that is not a group)
    std::vector<int> bad = {0, 1, 2, 1, 0, 0, 2, 2, 1};
    CHECK_THROWS_AS((void)FiniteGroup::from_table({"a", "b", "c"}, bad), DomainError);
    std::vector<int> not_latin = {0, 0, 0, 0};
    CHECK_THROWS_AS((void)FiniteGroup::from_table({"a", "b"}, not_latin), DomainError);
}

TEST_CASE("subgroup closure") {
    const auto s3 = symmetric_group(3);
    const int t12 = s3->index_of("(12)");
    const int r = s3->index_of("(123)");
    CHECK(Subgroup::closure(s3, std::vector<int>{}).size() == 1);
    CHECK(Subgroup::closure(s3, std::vector<int>{t12}).size() == 2);
    CHECK(Subgroup::closure(s3, std::vector<int>{t12, r}).size() == 6);
    CHECK_THROWS_AS((void)Subgroup(s3, std::vector<int>{t12}), DomainError);
}

TEST_CASE("enumerate_subgroups") {
    CHECK(enumerate_subgroups(cyclic_group(4)).size() == 3);
    CHECK(enumerate_subgroups(symmetric_group(3)).size() == 6);
    CHECK(enumerate_subgroups(cyclic_group(1)).size() == 1);
    CHECK(enumerate_subgroups(quaternion_group()).size() == 6);
    CHECK_THROWS_AS((void)enumerate_subgroups(symmetric_group(5)), DomainError);

    // output is conjugation-stable as a set, sorted by (order, elements)
    const auto s3 = symmetric_group(3);
    const auto subs = enumerate_subgroups(s3);
    std::set<std::vector<int>> all;
    for (const auto& s : subs) all.insert(s.elements());
    for (const auto& s : subs)
        for (int g = 0; g < 6; ++g) CHECK(all.count(s.conjugated(g).elements()) == 1);
    for (size_t i = 1; i < subs.size(); ++i)
        CHECK(subs[i - 1].size() <= subs[i].size());
}

TEST_CASE("double cosets: S3 with H = K = <(12)>") {
    const auto s3 = symmetric_group(3);
    const auto h = Subgroup::closure(s3, std::vector<int>{s3->index_of("(12)")});
    const auto dcs = double_cosets(h, h);
    REQUIRE(dcs.size() == 2);
    std::multiset<size_t> sizes;
    for (const auto& d : dcs) sizes.insert(d.elements.size());
    CHECK(sizes == std::multiset<size_t>({2, 4}));
    for (const auto& d : dcs) {
        if (d.elements.size() == 2) CHECK(d.stabilizer.size() == 2);
        if (d.elements.size() == 4) CHECK(d.stabilizer.size() == 1);
        CHECK(d.rep == d.elements.front());
    }
}

TEST_CASE("double cosets: degenerate choices") {
    const auto s3 = symmetric_group(3);
    const auto whole = Subgroup::whole(s3);
    const auto triv = Subgroup::trivial(s3);
    CHECK(double_cosets(whole, whole).size() == 1);
    CHECK(double_cosets(whole, whole).front().stabilizer.size() == 6);
    CHECK(double_cosets(triv, triv).size() == 6);
    const auto z4 = cyclic_group(4);
    CHECK_THROWS_AS((void)double_cosets(whole, Subgroup::whole(z4)), DomainError);
}

TEST_CASE("double cosets: orbit-stabilizer and partition on random fixtures") {
    std::mt19937 rng(42);
    for (const auto& g : {symmetric_group(4), dihedral_group(6), quaternion_group()}) {
        const auto subs = enumerate_subgroups(g);
        for (int t = 0; t < 8; ++t) {
            const auto& H = subs[rng() % subs.size()];
            const auto& K = subs[rng() % subs.size()];
            long long total = 0;
            for (const auto& d : double_cosets(H, K)) {
                CHECK(static_cast<long long>(d.elements.size()) * d.stabilizer.size() ==
                      static_cast<long long>(H.size()) * K.size());
                total += static_cast<long long>(d.elements.size());
            }
            CHECK(total == g->order());
        }
    }
}

TEST_CASE("conjugacy classes") {
    const auto z6 = cyclic_group(6);
    const auto cz6 = conjugacy_data(z6);
    CHECK(cz6.size() == 6);
    for (const auto& c : cz6) CHECK(c.centralizer.size() == 6);

    const auto s3 = symmetric_group(3);
    const auto cs3 = conjugacy_data(s3);
    REQUIRE(cs3.size() == 3);
    CHECK(cs3.front().rep == s3->identity());
    std::multiset<size_t> sizes;
    std::multiset<int> cents;
    for (const auto& c : cs3) {
        sizes.insert(c.elements.size());
        cents.insert(c.centralizer.size());
    }
    CHECK(sizes == std::multiset<size_t>({1, 2, 3}));
    CHECK(cents == std::multiset<int>({2, 3, 6}));

    std::multiset<size_t> q8sizes;
    for (const auto& c : conjugacy_data(quaternion_group()))
        q8sizes.insert(c.elements.size());
    CHECK(q8sizes == std::multiset<size_t>({1, 1, 2, 2, 2}));
}

TEST_CASE("product_is_whole") {
    const auto s3 = symmetric_group(3);
    const auto whole = Subgroup::whole(s3);
    const auto h2 = Subgroup::closure(s3, std::vector<int>{s3->index_of("(12)")});
    const auto h3 = Subgroup::closure(s3, std::vector<int>{s3->index_of("(123)")});
    CHECK(product_is_whole(whole, h2));
    CHECK(product_is_whole(h2, h3));
    CHECK(!product_is_whole(h2, h2));
}

TEST_CASE("conjugation distributes over intersection") {
    std::mt19937 rng(7);
    const auto g = dihedral_group(4);
    const auto subs = enumerate_subgroups(g);
    for (int t = 0; t < 20; ++t) {
        const auto& H = subs[rng() % subs.size()];
        const auto& K = subs[rng() % subs.size()];
        const int x = static_cast<int>(rng() % g->order());
        CHECK(H.intersect(K).conjugated(x).elements() ==
              H.conjugated(x).intersect(K.conjugated(x)).elements());
    }
}

TEST_CASE("element orders and normality") {
    const auto d4 = dihedral_group(4);
    CHECK(d4->element_order(d4->index_of("r")) == 4);
    CHECK(d4->element_order(d4->index_of("s")) == 2);
    const auto rot = Subgroup::closure(d4, std::vector<int>{d4->index_of("r")});
    CHECK(rot.is_normal());
    const auto refl = Subgroup::closure(d4, std::vector<int>{d4->index_of("s")});
    CHECK(!refl.is_normal());
}
