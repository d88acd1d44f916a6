#include "bhlink/errors.hpp"
#include "bhlink/invariants.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace bhlink;

namespace {

std::vector<Integer> repeat(long x, std::size_t n) { return std::vector<Integer>(n, Integer(x)); }
std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("Milnor number") {
    CHECK(milnor_number(WeightSystem({1, 1, 1, 1, 1}, 2)) == 1);
    CHECK(milnor_number(WeightSystem({15, 35, 14, 7, 35}, 105)) == 2184);
    CHECK(milnor_number(WeightSystem({576, 1399, 82, 256, 576}, 2880)) == 5924);
    CHECK_THROWS_WITH_AS(milnor_number(WeightSystem({2, 3, 5, 7, 11}, 29)), doctest::Contains("NonIntegralMilnor"),
                         Error);
}

TEST_CASE("Betti number") {
    CHECK(betti(WeightSystem({15, 35, 15, 9, 32}, 105)) == 24);
    CHECK(betti(WeightSystem({5, 35, 57, 64, 160}, 320)) == 36);
    CHECK(betti(WeightSystem({73, 73, 95, 45, 80}, 365)) == 0);
    CHECK(betti_by_subsets(WeightSystem({15, 35, 15, 9, 32}, 105)) == 24);
}

TEST_CASE("Orlik torsion") {
    CHECK(orlik_torsion(WeightSystem({15, 35, 14, 7, 35}, 105)).torsion == repeat(7, 26));
    CHECK(orlik_torsion(WeightSystem({576, 1399, 82, 256, 576}, 2880)).torsion == ints({90, 18, 18, 18}));
    CHECK(orlik_torsion(WeightSystem({13, 13, 125, 100, 75}, 325)).torsion == repeat(13, 24));
    CHECK(orlik_torsion(WeightSystem({52, 663, 867, 1581, 153}, 3315)).torsion == ints({3315, 51, 51, 51}));
    CHECK(orlik_torsion(WeightSystem({1, 1, 1, 1, 1}, 5)).torsion == ints({5}));

    TorsionResult r = orlik_torsion(WeightSystem({1, 1, 1, 1, 1}, 2));
    CHECK(r.torsion == ints({2}));
    CHECK(r.worksheet.c[0] == 2);
    CHECK(r.worksheet.k[0] == 1);
    CHECK(r.worksheet.r == 1);
}

TEST_CASE("homology profiles") {
    HomologyProfile p = homology_profile(WeightSystem({219, 365, 420, 200, 260}, 1460));
    CHECK(p.betti == 0);
    CHECK(p.torsion == ints({73}));
    CHECK(p.mu == 1224);
    CHECK(p.degree == 1460);

    p = homology_profile(WeightSystem({1858, 6503, 9597, 315, 1239}, 19509));
    CHECK(p.betti == 0);
    CHECK(p.torsion == ints({929}));
    CHECK(p.mu == 17632);

    p = homology_profile(WeightSystem({1, 1, 1, 1, 1}, 2));
    CHECK(p == HomologyProfile{0, ints({2}), 1, 2});
}

TEST_CASE("rational homology spheres") {
    CHECK(is_rational_homology_sphere(WeightSystem({73, 73, 95, 45, 80}, 365)));
    CHECK_FALSE(is_rational_homology_sphere(WeightSystem({15, 35, 15, 9, 32}, 105)));
    CHECK_FALSE(is_rational_homology_sphere(WeightSystem({1, 1, 1, 1, 1}, 5)));
}

TEST_CASE("alpha and beta") {
    WeightSystem a({881, 881, 465, 99, 318}, 2643);
    SplitDecomposition s = split(a);
    CHECK(alpha(s) == 1);
    CHECK(beta(s) == 1);
    CHECK(orlik_torsion(a).torsion == repeat(881, 2));

    WeightSystem b({73, 73, 95, 45, 80}, 365);
    s = split(b);
    CHECK(alpha(s) == 3);
    CHECK(beta(s) == 1);
    CHECK(orlik_torsion(b).torsion == repeat(73, 4));
}

TEST_CASE("closed form for degrees prime to every weight") {
    CHECK(closed_form_case_A(WeightSystem({1, 1, 1, 1, 1}, 2)) == HomologyProfile{0, ints({2}), 1, 2});
    HomologyProfile q = closed_form_case_A(WeightSystem({1, 1, 1, 1, 1}, 5));
    CHECK(q.betti == 204);
    CHECK(q.mu + 1 == q.degree * (q.betti + 1));
    CHECK_THROWS_WITH_AS(closed_form_case_A(WeightSystem({15, 35, 15, 9, 32}, 105)),
                         doctest::Contains("PreconditionFailed"), Error);
    // four variables: no torsion, mu - 1 = d (b - 1)
    HomologyProfile even = closed_form_case_A(WeightSystem({1, 1, 1, 1}, 3));
    CHECK(even.torsion.empty());
    CHECK(even.mu - 1 == even.degree * (even.betti - 1));
}

TEST_CASE("branched covers") {
    BranchedCover k = branched_cover_profile(WeightSystem({1, 1, 1, 1, 1}, 2), 3);
    CHECK(k.system == WeightSystem({2, 3, 3, 3, 3, 3}, 6));
    CHECK(k.label == CoverLabel::Kervaire);
    REQUIRE(k.delta_at_minus_one);
    CHECK(*k.delta_at_minus_one == 3);
    CHECK(oracle::eval(oracle::expand_delta(link_divisor(k.system)), -1) == 3);

    // six squares: Delta(t) = t - 1
    BranchedCover q = branched_cover_profile(WeightSystem({1, 1, 1, 1, 1}, 2), 2);
    CHECK(q.system == WeightSystem({1, 1, 1, 1, 1, 1}, 2));
    CHECK(q.label == CoverLabel::NotHomotopySphere);

    // z^5 + (3,2,2,2,2): Brieskorn (5,3,2,2,2,2)
    BranchedCover s = branched_cover_profile(WeightSystem({2, 3, 3, 3, 3}, 6), 5);
    oracle::Poly p = oracle::expand_delta(link_divisor(s.system));
    Integer at_one = oracle::eval(p, 1);
    if (at_one == 1 || at_one == -1) {
        Integer m = oracle::eval(p, -1) % 8;
        if (m < 0) m += 8;
        CHECK(s.label == ((m == 1 || m == 7) ? CoverLabel::Standard : CoverLabel::Kervaire));
    } else {
        CHECK(s.label == CoverLabel::NotHomotopySphere);
    }

    CHECK_THROWS_AS(branched_cover_profile(WeightSystem({1, 1, 1, 1}, 2), 3), Error);
}

TEST_CASE("spectrum oracle matches on named examples") {
    for (const auto& ws : {WeightSystem({15, 35, 15, 9, 32}, 105), WeightSystem({576, 1399, 82, 256, 576}, 2880),
                           WeightSystem({13, 13, 125, 100, 75}, 325), WeightSystem({1, 1, 1, 1, 1}, 5)}) {
        oracle::Spectrum sp = oracle::spectrum(ws);
        HomologyProfile p = homology_profile(ws);
        CHECK(sp.mu == p.mu);
        CHECK(sp.betti == p.betti);
        if (p.betti == 0) CHECK(oracle::delta_at_one(sp) == oracle::product(p.torsion));
    }
}
