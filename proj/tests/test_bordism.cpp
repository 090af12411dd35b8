#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"

using namespace qtoric;

TEST_CASE("verdict flags and canonical-first witnesses") {
    ChernEngine e7(lambda2_n7().polytope(), lambda2_n7());
    auto t7 = e7.all_numbers();
    auto v7 = verdict(t7);
    CHECK(v7.nonzero_unitary);
    REQUIRE(v7.unitary_witness.has_value());
    // first nonzero entry in canonical partition order
    Partition first_nonzero;
    for (const auto& [pi, val] : t7.entries)
        if (val != 0) {
            first_nonzero = pi;
            break;
        }
    CHECK(*v7.unitary_witness == first_nonzero);
    CHECK(*v7.unitary_witness == Partition({5, 2}));
    CHECK(t7.entries.at(Partition({4, 3})) == -2);

    // all-zero table: both flags false
    SimplexProduct I({1});
    Mat<ZInt> e(1, 2);
    e.at(0, 0) = 1;
    e.at(0, 1) = 1;
    CharMatrix bounding(I, Ring::Int, std::move(e));
    auto v0 = verdict(all_numbers(I, bounding));
    CHECK_FALSE(v0.nonzero_unitary);
    CHECK_FALSE(v0.unitary_witness.has_value());

    // the dimension-12 table contains the known entry whatever the witness
    ChernEngine e12(lambda2_n12().polytope(), lambda2_n12());
    auto t12 = e12.all_numbers();
    auto v12 = verdict(t12);
    CHECK(v12.nonzero_unitary);
    CHECK(t12.entries.at(Partition({6, 6})) == 64);
}

TEST_CASE("verdict requires a complete table") {
    InvariantTable t;
    t.dims = {4, 3};
    t.ring = Ring::Int;
    t.entries[Partition({4, 3})] = -2;
    CHECK_THROWS_AS(verdict(t), ShapeError);
}

TEST_CASE("verdict is monotone in the table entries") {
    ChernEngine e7(lambda2_n7().polytope(), lambda2_n7());
    auto t = e7.all_numbers();
    REQUIRE(verdict(t).nonzero_unitary);
    // turning any zero entry nonzero never clears the flag
    for (auto& [pi, val] : t.entries) {
        if (val != 0) continue;
        InvariantTable bumped = t;
        bumped.entries[pi] = 1;
        CHECK(verdict(bumped).nonzero_unitary);
    }
}

TEST_CASE("manifold_verdict fills both sides") {
    // every Chern number of the dimension-7 example is even, so its
    // conjugation small cover bounds even though the manifold itself is
    // unitarily nonzero
    auto v7 = manifold_verdict(lambda2_n7().polytope(), lambda2_n7());
    CHECK(v7.nonzero_unitary);
    CHECK_FALSE(v7.nonbounding_unoriented);

    // the type-a family has a nonbounding cover by construction
    auto va = manifold_verdict(lambda2_stong_type_a(0).polytope(), lambda2_stong_type_a(0));
    CHECK(va.nonbounding_unoriented);
    REQUIRE(va.unoriented_witness.has_value());
}

TEST_CASE("verify_main_theorem at l=0") {
    auto rep = verify_main_theorem(0);
    REQUIRE(rep.families.size() == 2);
    REQUIRE(rep.sporadic.size() == 3);
    for (const auto& f : rep.families) {
        CHECK(f.valid);
        CHECK(f.special);
        CHECK(f.mod2_matches_stong);
        CHECK(f.indecomposable);
        CHECK(f.orientable);
        REQUIRE(f.stong_sw_nonzero.has_value());  // dims 5 and 11 are under the cap
        CHECK(*f.stong_sw_nonzero);
    }
    CHECK(rep.families[0].dimension == 5);
    CHECK(rep.families[1].dimension == 11);
    for (const auto& s : rep.sporadic) CHECK(s.passed());
    CHECK(rep.all_passed());
    CHECK_THROWS_AS(verify_main_theorem(-1), ParseError);
    // type-b at l=2 is a 27-dimensional small cover, above this cap
    CHECK_THROWS_AS(verify_main_theorem(2, VerifyConfig{12, 20}), CapError);
}

TEST_CASE("search finds nothing special with nonzero Chern numbers in low dimension") {
    for (auto dims : {std::vector<int>{1, 1}, {2}}) {
        SearchConfig cfg;
        cfg.dims = dims;
        cfg.bound = 2;
        auto res = search_special(cfg);
        CHECK(res.complete);
        CHECK(res.hits.empty());
        CHECK(res.degenerate == 0);
    }
}

TEST_CASE("search is deterministic and re-verifiable") {
    SearchConfig cfg;
    cfg.dims = {4, 3};
    cfg.bound = 1;
    auto a = search_special(cfg);
    auto b = search_special(cfg);
    CHECK(a.examined == b.examined);
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i)
        CHECK(a.hits[i].matrix == b.hits[i].matrix);
    CHECK(a.complete);
    CHECK_FALSE(a.hits.empty());

    bool found_named = false;
    for (const auto& h : a.hits) {
        CHECK(is_valid(h.matrix));
        CHECK(is_special(h.matrix));
        CHECK(h.verdict.nonzero_unitary);
        if (h.matrix == lambda2_n7()) found_named = true;
    }
    CHECK(found_named);
}

TEST_CASE("search at bound 1 on the type-a polytope recovers the family matrix") {
    SearchConfig cfg;
    cfg.dims = {2, 3};
    cfg.bound = 1;
    auto res = search_special(cfg);
    REQUIRE(res.complete);
    bool found = false;
    for (const auto& h : res.hits)
        if (h.matrix == lambda2_stong_type_a(0)) {
            found = true;
            // its cover is the nonbounding RP(2,0,...,0)
            CHECK(h.verdict.nonbounding_unoriented);
        }
    CHECK(found);
}

TEST_CASE("randomized search is seed-deterministic") {
    SearchConfig cfg;
    cfg.dims = {2, 3};
    cfg.bound = 1;
    cfg.mode = SearchMode::Randomized;
    cfg.seed = 20240817;
    cfg.budget = 3000;
    auto a = search_special(cfg);
    auto b = search_special(cfg);
    CHECK(a.examined == b.examined);
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i)
        CHECK(a.hits[i].matrix == b.hits[i].matrix);
}

TEST_CASE("budget exhaustion is reported as incomplete") {
    SearchConfig cfg;
    cfg.dims = {4, 3};
    cfg.bound = 1;
    cfg.budget = 5;
    auto res = search_special(cfg);
    CHECK(res.examined == 5);
    CHECK_FALSE(res.complete);
}

TEST_CASE("checkpointed runs resume where they stopped") {
    std::string path = "search_checkpoint_test.txt";
    std::remove(path.c_str());

    SearchConfig full;
    full.dims = {2, 3};
    full.bound = 1;
    auto reference = search_special(full);
    REQUIRE(reference.complete);

    SearchConfig part = full;
    part.checkpoint_path = path;
    part.budget = reference.examined / 2 + 1;
    auto first = search_special(part);
    CHECK_FALSE(first.complete);

    SearchConfig rest = part;
    rest.budget = 1000000;
    auto second = search_special(rest);
    CHECK(second.complete);
    CHECK(first.examined + second.examined == reference.examined);

    std::remove(path.c_str());
}

TEST_CASE("search rejects bad configs") {
    SearchConfig cfg;
    cfg.dims = {1, 1};
    cfg.bound = 0;
    CHECK_THROWS_AS(search_special(cfg), ParseError);
    cfg.bound = 1;
    cfg.budget = 0;
    CHECK_THROWS_AS(search_special(cfg), ParseError);
}
