// Acceptance suite: every criterion runs at its stated tolerance and prints
// one PASS/FAIL line. Exact integer equality throughout; the only
// tolerances are wall-clock budgets.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <iostream>
#include <random>

#include "helpers.hpp"

using namespace qtoric;

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, const std::string& name, bool ok) {
    std::cout << "ACCEPTANCE " << criterion << " (" << name << "): " << (ok ? "PASS" : "FAIL")
              << std::endl;
}

Poly<ZInt> zpoly(std::initializer_list<std::pair<Mono, long>> terms, int nvars) {
    Poly<ZInt> p(nvars);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

}  // namespace

TEST_CASE("criterion 1: golden Chern numbers") {
    Stopwatch sw;
    ZInt c7 = chern_number(lambda2_n7().polytope(), lambda2_n7(), Partition({4, 3}));
    ZInt c8 = chern_number(lambda2_n8().polytope(), lambda2_n8(), Partition({4, 4}));
    ZInt c12 = chern_number(lambda2_n12().polytope(), lambda2_n12(), Partition({6, 6}));
    double elapsed = sw.seconds();
    bool ok = c7 == -2 && c8 == 4 && c12 == 64 && elapsed < 10.0;
    report(1, "golden Chern numbers -2, 4, 64", ok);
    CHECK(c7 == -2);
    CHECK(c8 == 4);
    CHECK(c12 == 64);
    CHECK(elapsed < 10.0);
}

TEST_CASE("criterion 2: golden sixth Chern class") {
    auto c = total_chern_class(lambda2_n12().polytope(), lambda2_n12());
    auto expected = zpoly({{{3, 3}, 16}, {{2, 4}, -26}, {{1, 5}, 12}, {{0, 6}, -10}}, 2);
    bool ok = c[6] == expected;
    report(2, "c6 of the dimension-12 example", ok);
    CHECK(c[6] == expected);
}

TEST_CASE("criterion 3: golden presentations") {
    auto same_up_to_sign = [](const Poly<ZInt>& a, const Poly<ZInt>& b) {
        return a == b || a == -b;
    };
    auto q7 = eliminate<ZInt>(lambda2_n7().polytope(), lambda2_n7());
    auto q8 = eliminate<ZInt>(lambda2_n8().polytope(), lambda2_n8());
    auto q12 = eliminate<ZInt>(lambda2_n12().polytope(), lambda2_n12());

    bool ok7 = same_up_to_sign(q7.relations()[0], zpoly({{{5, 0}, 1}}, 2)) &&
               same_up_to_sign(q7.relations()[1], zpoly({{{0, 4}, 1}, {{1, 3}, 1}}, 2));
    // expand(y^4 (x-y)^2) and expand(y^8 (x-y)^2)
    bool ok8 = same_up_to_sign(q8.relations()[0], zpoly({{{4, 0}, 1}}, 2)) &&
               same_up_to_sign(q8.relations()[1],
                               zpoly({{{2, 4}, 1}, {{1, 5}, -2}, {{0, 6}, 1}}, 2));
    bool ok12 = same_up_to_sign(q12.relations()[0], zpoly({{{4, 0}, 1}}, 2)) &&
                same_up_to_sign(q12.relations()[1],
                                zpoly({{{2, 8}, 1}, {{1, 9}, -2}, {{0, 10}, 1}}, 2));
    bool ok = ok7 && ok8 && ok12;
    report(3, "presentations x^5,y^4+xy^3 / x^4,y^4(x-y)^2 / x^4,y^8(x-y)^2", ok);
    CHECK(ok7);
    CHECK(ok8);
    CHECK(ok12);
}

TEST_CASE("criterion 4: special condition and single-entry perturbations") {
    std::vector<CharMatrix> named{lambda2_stong_type_a(0), lambda2_stong_type_b(0), lambda2_n7(),
                                  lambda2_n8(), lambda2_n12()};
    bool all_special = true;
    bool all_flips_fail = true;
    for (const auto& m : named) {
        all_special &= is_special(m);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                Mat<ZInt> e = m.entries();
                e.at(i, j) += 1;
                CharMatrix flipped(m.polytope(), Ring::Int, std::move(e));
                all_flips_fail &= !is_special(flipped);
            }
    }
    bool ok = all_special && all_flips_fail;
    report(4, "special for all named constructors; any +1 flip breaks it", ok);
    CHECK(all_special);
    CHECK(all_flips_fail);
}

TEST_CASE("criterion 5: column sums one implies vanishing c1") {
    bool named_ok = true;
    for (auto m : {lambda2_stong_type_a(0), lambda2_stong_type_b(0), lambda2_n7(), lambda2_n8(),
                   lambda2_n12()}) {
        auto c = total_chern_class(m.polytope(), m);
        named_ok &= c[1].is_zero();
    }

    std::mt19937_64 rng(501);
    int trials = 0, specials = 0, failures = 0, converse_gaps = 0;
    for (auto dims : {std::vector<int>{1, 1}, {2}, {1, 2}}) {
        SimplexProduct P(dims);
        int done = 0;
        while (done < 170) {
            auto m = testutil::random_canonical(rng, P, 2);
            if (!m) continue;
            ++done;
            ++trials;
            bool sp = is_special(*m);
            bool c1 = first_chern_class_vanishes(P, *m);
            if (sp) {
                ++specials;
                if (!c1) ++failures;
            }
            if (c1 && !sp) ++converse_gaps;
            // non-canonical variant of the same matrix
            auto g = testutil::random_unimodular(rng, P.n());
            CharMatrix t = testutil::transform(g, *m);
            ++trials;
            bool tsp = is_special(t);
            bool tc1 = first_chern_class_vanishes(P, t);
            if (tsp && !tc1) ++failures;
            if (tc1 && !tsp) ++converse_gaps;
        }
    }
    bool ok = named_ok && trials >= 500 && failures == 0 && specials > 0;
    report(5, "c1 = 0 for named and all special random matrices (" + std::to_string(trials) +
                  " trials, converse gaps logged: " + std::to_string(converse_gaps) + ")",
           ok);
    CHECK(named_ok);
    CHECK(trials >= 500);
    CHECK(failures == 0);
    CHECK(specials > 0);
}

TEST_CASE("criterion 6: Stong criteria and Lucas parity") {
    bool ok_a = is_indecomposable(StongParams({2, 0, 0, 0})) &&
                is_orientable(StongParams({2, 0, 0, 0}));
    bool ok_b = is_indecomposable(StongParams({4, 2, 0, 0, 0, 0})) &&
                is_orientable(StongParams({4, 2, 0, 0, 0, 0}));
    bool ok_c = !is_indecomposable(StongParams({1, 1}));
    bool lucas_ok = true;
    for (unsigned a = 0; a <= 64; ++a)
        for (unsigned b = 0; b <= a; ++b)
            lucas_ok &= binomial_is_odd(a, b) == ((binomial(a, b) % 2) == 1);
    bool ok = ok_a && ok_b && ok_c && lucas_ok;
    report(6, "indecomposability/orientability and Lucas parity", ok);
    CHECK(ok_a);
    CHECK(ok_b);
    CHECK(ok_c);
    CHECK(lucas_ok);
}

TEST_CASE("criterion 7: the two SW-number engines agree") {
    Stopwatch sw;
    bool a = sw_numbers_cross_check(StongParams({1, 1}));
    bool b = sw_numbers_cross_check(StongParams({2, 1}));
    bool c = sw_numbers_cross_check(StongParams({2, 0, 0, 0}));
    double elapsed = sw.seconds();
    bool ok = a && b && c && elapsed < 30.0;
    report(7, "bundle formula vs small-cover SW tables", ok);
    CHECK(a);
    CHECK(b);
    CHECK(c);
    CHECK(elapsed < 30.0);
}

TEST_CASE("criterion 8: main verification pipeline at l_max = 1") {
    Stopwatch sw;
    auto rep = verify_main_theorem(1);
    double elapsed = sw.seconds();

    bool families_ok = rep.families.size() == 4;
    int sw_checks_run = 0;
    for (const auto& f : rep.families) {
        families_ok &= f.valid && f.special && f.mod2_matches_stong && f.indecomposable &&
                       f.orientable;
        if (f.dimension <= 12) {
            families_ok &= f.stong_sw_nonzero.has_value() && *f.stong_sw_nonzero;
            ++sw_checks_run;
        } else {
            families_ok &= !f.stong_sw_nonzero.has_value();
        }
    }
    bool sporadic_ok = rep.sporadic.size() == 3;
    for (const auto& s : rep.sporadic) sporadic_ok &= s.passed();

    bool ok = families_ok && sporadic_ok && sw_checks_run == 3 && elapsed < 120.0;
    report(8, "verify_main_theorem(1)", ok);
    CHECK(families_ok);
    CHECK(sporadic_ok);
    CHECK(sw_checks_run == 3);  // type A l=0,1 and type B l=0; type B l=1 is above the cap
    CHECK(elapsed < 120.0);
}

TEST_CASE("criterion 9: no low-dimensional special matrix is unitarily nonzero") {
    Stopwatch sw;
    bool ok = true;
    for (auto dims : {std::vector<int>{1, 1}, {2}}) {
        SearchConfig cfg;
        cfg.dims = dims;
        cfg.bound = 2;
        auto res = search_special(cfg);
        ok &= res.complete && res.hits.empty();
    }
    double elapsed = sw.seconds();
    ok &= elapsed < 60.0;
    report(9, "exhaustive bound-2 search on the square and triangle", ok);
    CHECK(ok);
    CHECK(elapsed < 60.0);
}

TEST_CASE("criterion 10: calibration constant is vertex-independent") {
    bool named_ok = true;
    for (auto m : {lambda2_stong_type_a(0), lambda2_stong_type_a(1), lambda2_stong_type_b(0),
                   lambda2_n7(), lambda2_n8(), lambda2_n12()}) {
        try {
            auto q = eliminate<ZInt>(m.polytope(), m);
            calibrate(q, m);
        } catch (const Error&) {
            named_ok = false;
        }
    }

    std::mt19937_64 rng(1001);
    int random_ok = 0, random_total = 0;
    for (auto dims : {std::vector<int>{1, 1}, {1, 2}}) {
        SimplexProduct P(dims);
        int done = 0;
        while (done < 100) {
            auto m = testutil::random_canonical(rng, P, 2);
            if (!m) continue;
            ++done;
            ++random_total;
            try {
                auto q = eliminate<ZInt>(P, *m);
                calibrate(q, *m);
                ++random_ok;
            } catch (const Error&) {
            }
        }
    }
    bool ok = named_ok && random_total == 200 && random_ok == random_total;
    report(10, "cross-vertex pairing consistency (zero tolerance)", ok);
    CHECK(named_ok);
    CHECK(random_ok == random_total);
    CHECK(random_total == 200);
}
