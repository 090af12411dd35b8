#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace qtoric;

TEST_CASE("named constructors reproduce the displayed matrices") {
    auto m7 = lambda2_n7();
    REQUIRE(m7.rows() == 7);
    REQUIRE(m7.cols() == 9);
    // fifth row
    std::vector<int> row5{0, 0, 0, 0, 1, 1, 0, 0, 1};
    for (int j = 0; j < 9; ++j) CHECK(m7.at(4, j) == row5[j]);
    // column 5 alternates
    std::vector<int> col5{1, -1, 1, -1, 1, 0, 0};
    for (int i = 0; i < 7; ++i) CHECK(m7.at(i, 4) == col5[i]);

    auto a0 = lambda2_stong_type_a(0);
    REQUIRE(a0.polytope().factor_dims() == std::vector<int>{2, 3});
    REQUIRE(a0.cols() == 7);
    std::vector<int> col3{1, -1, 1, 0, 0};
    for (int i = 0; i < 5; ++i) CHECK(a0.at(i, 2) == col3[i]);

    auto b0 = lambda2_stong_type_b(0);
    REQUIRE(b0.polytope().factor_dims() == std::vector<int>{4, 2, 5});
    REQUIRE(b0.rows() == 11);
    REQUIRE(b0.cols() == 14);
    CHECK(b0.at(6, 4) == 1);   // J_1 marker
    CHECK(b0.at(7, 7) == 1);   // J_2 marker
    CHECK(b0.at(4, 7) == 1);
    CHECK(b0.at(5, 7) == -1);

    auto m8 = lambda2_n8();
    std::vector<int> col10{0, 0, 0, 1, -1, 1, -1, 1};
    for (int i = 0; i < 8; ++i) CHECK(m8.at(i, 9) == col10[i]);

    auto m12 = lambda2_n12();
    REQUIRE(m12.rows() == 12);
    REQUIRE(m12.cols() == 14);
    std::vector<int> col14{0, 0, 0, 1, -1, 1, -1, 1, -1, 1, -1, 1};
    for (int i = 0; i < 12; ++i) CHECK(m12.at(i, 13) == col14[i]);
}

TEST_CASE("every named constructor validates and is special") {
    for (auto m : {lambda2_n7(), lambda2_n8(), lambda2_n12(), lambda2_stong_type_a(0),
                   lambda2_stong_type_a(2), lambda2_stong_type_b(0), lambda2_stong_type_b(1)}) {
        CHECK(validate(m).valid);
        CHECK(is_special(m));
    }
}

TEST_CASE("validate reports a failing vertex") {
    // zero column: every vertex through that facet fails
    SimplexProduct P({1, 1});
    Mat<ZInt> e(2, 4);
    e.at(0, 0) = 1;
    e.at(1, 2) = 1;
    e.at(1, 3) = 1;  // column 1 (facet F1,2) is zero
    CharMatrix m(P, Ring::Int, std::move(e));
    auto rep = validate(m);
    CHECK_FALSE(rep.valid);
    REQUIRE(rep.failing_vertex.has_value());
    REQUIRE(rep.determinant.has_value());
    CHECK(*rep.determinant == 0);
    // the reported vertex really does contain the zero column
    auto at = P.facets_at(*rep.failing_vertex);
    bool touches = false;
    for (const auto& f : at) touches |= P.facet_index(f) == 1;
    CHECK(touches);
}

TEST_CASE("identity block with unimodular completion validates") {
    // square: first facet of each factor carries the identity
    SimplexProduct P({1, 1});
    Mat<ZInt> e(2, 4);
    e.at(0, 0) = 1;
    e.at(1, 2) = 1;
    e.at(0, 1) = -1;
    e.at(1, 1) = 1;
    e.at(1, 3) = -1;
    CharMatrix m(P, Ring::Int, std::move(e));
    CHECK(validate(m).valid);
}

TEST_CASE("is_special column sums") {
    SimplexProduct I({1});
    Mat<ZInt> e(1, 2);
    e.at(0, 0) = 1;
    e.at(0, 1) = -1;
    CharMatrix m(I, Ring::Int, std::move(e));
    CHECK_FALSE(is_special(m));  // second column sums to -1

    Mat<ZInt> e2(1, 2);
    e2.at(0, 0) = 1;
    e2.at(0, 1) = 1;
    CharMatrix m2(I, Ring::Int, std::move(e2));
    CHECK(is_special(m2));

    CHECK_THROWS_AS(is_special(mod2_reduce(m2)), RingError);
}

TEST_CASE("mod2 reduction") {
    auto a0 = lambda2_stong_type_a(0);
    auto r = mod2_reduce(a0);
    CHECK(r.ring() == Ring::Mod2);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) {
            CHECK((r.at(i, j) == 0 || r.at(i, j) == 1));
            CHECK(((a0.at(i, j) - r.at(i, j)) % 2) == 0);
        }
    CHECK(validate(r).valid);  // unimodular reduces to odd determinant

    // the displayed mod-2 reduction has 1s exactly where type-a has +-1
    auto sm = stong_char_matrix(StongParams({2, 0, 0, 0}));
    CHECK(r.entries() == sm.entries());
}

TEST_CASE("validity is preserved under mod-2 reduction (random)") {
    std::mt19937_64 rng(99);
    int tried = 0;
    while (tried < 60) {
        auto m = testutil::random_canonical(rng, SimplexProduct({1, 2}), 2);
        if (!m) continue;
        ++tried;
        CHECK(validate(mod2_reduce(*m)).valid);
    }
}

TEST_CASE("equivalent_mod2 basics") {
    auto sm = stong_char_matrix(StongParams({2, 0, 0, 0}));
    CHECK(equivalent_mod2(sm, sm));
    CHECK(equivalent_mod2(mod2_reduce(lambda2_stong_type_a(0)), sm));
    std::vector<int> b1_parts{4, 2};
    b1_parts.insert(b1_parts.end(), 12, 0);  // 8l+4 zeros at l=1
    CHECK(equivalent_mod2(mod2_reduce(lambda2_stong_type_b(1)),
                          stong_char_matrix(StongParams(b1_parts))));

    // breaking a column breaks equivalence
    Mat<ZInt> e = sm.entries();
    for (int i = 0; i < e.rows(); ++i) e.at(i, 2) = 0;
    CharMatrix broken(sm.polytope(), Ring::Mod2, std::move(e));
    CHECK_FALSE(equivalent_mod2(sm, broken));

    CHECK_THROWS_AS(equivalent_mod2(sm, mod2_reduce(lambda2_n7())), ShapeError);
}

TEST_CASE("equivalent_mod2 is an equivalence relation on transformed matrices") {
    std::mt19937_64 rng(7);
    auto base = stong_char_matrix(StongParams({2, 1}));
    const int n = base.rows();
    std::optional<CharMatrix> prev;
    for (int trial = 0; trial < 20; ++trial) {
        // random invertible g over F2 via a random integer unimodular matrix
        auto g = testutil::random_unimodular(rng, n);
        Mat<ZInt> ge(n, base.cols());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < base.cols(); ++j) {
                ZInt s = 0;
                for (int k = 0; k < n; ++k) s += g.at(i, k) * base.at(k, j);
                ge.at(i, j) = ((s % 2) + 2) % 2;
            }
        CharMatrix t(base.polytope(), Ring::Mod2, std::move(ge));
        CHECK(equivalent_mod2(base, t));   // symmetric direction
        CHECK(equivalent_mod2(t, base));
        CHECK(equivalent_mod2(t, t));      // reflexive
        if (prev) CHECK(equivalent_mod2(*prev, t));  // transitive through base
        prev = t;
    }
}

TEST_CASE("text round trip") {
    auto m = lambda2_n8();
    auto text = to_text(m);
    auto back = char_matrix_from_text(text, m.polytope());
    CHECK(back == m);

    CHECK_THROWS_AS(char_matrix_from_text("bogus", m.polytope()), ParseError);
    CHECK_THROWS_AS(char_matrix_from_text("2 2 INT\n1 0\n0 1\n", m.polytope()), ShapeError);
    CHECK_THROWS_AS(char_matrix_from_text(to_text(m).substr(0, 30), m.polytope()), ParseError);
}
