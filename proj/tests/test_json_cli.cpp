#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtcat/json_io.hpp"
#include "gtcat/selftest.hpp"

using namespace gtcat;

TEST_CASE("group JSON round trip") {
    const auto s3 = symmetric_group(3);
    const Json j = group_to_json(*s3);
    const auto back = group_from_json(j);
    CHECK(back->order() == 6);
    CHECK(back->labels() == s3->labels());
    CHECK(back->table() == s3->table());
    CHECK(dump_stable(group_to_json(*back)) == dump_stable(j));
}

TEST_CASE("malformed group JSON is rejected") {
    Json j;
    j["order"] = 2;
    j["labels"] = {"a", "b"};
    j["table"] = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS((void)group_from_json(j), DomainError);
}

TEST_CASE("cochain JSON round trip validates normalization") {
    const auto z4 = cyclic_group(4);
    const Cochain w = preset_omega_cyclic(z4, 1);
    const Json j = cochain_to_json(w);
    const Cochain back = cochain_from_json(Subgroup::whole(z4), j);
    CHECK(cochains_equal(w, back));

    Json bad = j;
    bad["values"][1] = 1; // value at a tuple containing the identity
    CHECK_THROWS_AS((void)cochain_from_json(Subgroup::whole(z4), bad), DomainError);
}

TEST_CASE("deterministic output: identical seeds give identical JSON bytes") {
    const auto s3 = symmetric_group(3);
    const auto spec = validate_center(s3, Cochain(Subgroup::whole(s3), 3, 1));
    const std::string a = dump_stable(center_to_json(center_simples(spec, 7), s3));
    const std::string b = dump_stable(center_to_json(center_simples(spec, 7), s3));
    CHECK(a == b);

    const auto whole = Subgroup::whole(s3);
    const auto cat = validate_category(s3, Cochain(whole, 3, 1), whole,
                                       Cochain::zero(whole, 2, 1));
    CHECK(dump_stable(simples_to_json(category_simples(cat, 11), s3)) ==
          dump_stable(simples_to_json(category_simples(cat, 11), s3)));
}

TEST_CASE("results re-load through the schemas") {
    const auto z4 = cyclic_group(4);
    const auto subs = enumerate_subgroups(z4);
    for (const auto& s : subs) {
        const Json j = subgroup_to_json(s);
        const Subgroup back = subgroup_from_json(z4, j);
        CHECK(back.elements() == s.elements());
    }
    // solver output cochains re-validate on load
    const auto sol = solve_d2_equals(Cochain(Subgroup::whole(z4), 3, 4));
    REQUIRE(sol.solvable);
    const Json j = solve_d2_to_json(sol);
    for (const auto& jc : j.at("h2_classes")) {
        const Cochain c = cochain_from_json(Subgroup::whole(z4), jc);
        CHECK(is_cocycle(c).is_cocycle);
    }
}

TEST_CASE("quick selftest is green") {
    const auto results = run_selftest(true);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
