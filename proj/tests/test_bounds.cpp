#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nrb/bounds.hpp"
#include "nrb/matrix.hpp"
#include "nrb/spectra.hpp"

using namespace nrb;

namespace {

// The worked 2x2 datasets used throughout the comparison remarks.
const ComplexMatrix kA1 = ComplexMatrix::from_rows({{4.0, 1.0}, {3.0, 3.0}});
const ComplexMatrix kB1 = ComplexMatrix::from_rows({{4.0, 1.0}, {-3.0, -1.0}});
const ComplexMatrix kA2 = ComplexMatrix::from_rows({{2.0, 2.0}, {-1.0, 2.0}});
const ComplexMatrix kB2 = ComplexMatrix::from_rows({{3.0, 4.0}, {4.0, 1.0}});

ComplexMatrix counterexample() {
    return ComplexMatrix::from_rows({{-3.0, 2.0, -1.0, -1.0},
                                     {-2.0, 2.0, 3.0, -1.0},
                                     {-2.0, 3.0, 3.0, -2.0},
                                     {1.0, 1.0, 0.0, -2.0}});
}

}  // namespace

TEST_CASE("pair bounds on the first comparison dataset") {
    const PairBoundReport r = pair_bounds(kA1, kB1);
    CHECK(r.lemma21 == doctest::Approx(9.566999625920827).epsilon(1e-9));
    CHECK(r.lemma22 == doctest::Approx(9.106119575812551).epsilon(1e-9));
    CHECK(r.reference == doctest::Approx(10.426011504857417).epsilon(1e-9));
    // Here the averaged-Gram variant is strictly sharper.
    CHECK(r.lemma22 < r.lemma21);
}

TEST_CASE("pair bounds on the second comparison dataset") {
    const PairBoundReport r = pair_bounds(kA2, kB2);
    CHECK(r.lemma21 == doctest::Approx(9.027757415480622).epsilon(1e-9));
    CHECK(r.lemma22 == doctest::Approx(9.27186486088993).epsilon(1e-9));
    CHECK(r.reference == doctest::Approx(9.060785943087152).epsilon(1e-9));
    // And here the norm-product variant wins: the two are incomparable.
    CHECK(r.lemma21 < r.lemma22);
}

TEST_CASE("pair bounds on the identity collapse to the exact value") {
    const ComplexMatrix id = ComplexMatrix::identity(3);
    const PairBoundReport r = pair_bounds(id, id);
    CHECK(r.lemma21 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.lemma22 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.reference == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pair bounds validate shapes") {
    CHECK_THROWS_AS(pair_bounds(ComplexMatrix(2, 3), ComplexMatrix(2, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pair_bounds(ComplexMatrix(0, 0), ComplexMatrix(2, 2)),
                    std::invalid_argument);
    // Rectangular but conforming pair is accepted.
    CHECK_NOTHROW(pair_bounds(ComplexMatrix(2, 3), ComplexMatrix(3, 2)));
}

TEST_CASE("inner sums against the worked unit vectors") {
    const double s2 = std::sqrt(2.0), s17 = std::sqrt(17.0);
    const ComplexVector x1 = ComplexVector::from_entries({-1.0 / s2, 1.0 / s2});
    const ComplexVector y1 = ComplexVector::from_entries({-4.0 / s17, -1.0 / s17});
    CHECK(inner_sum(kA1, kB1, x1, y1) == doctest::Approx(7.20294057598537).epsilon(1e-9));

    const double s10 = std::sqrt(10.0), s13 = std::sqrt(13.0);
    const ComplexVector x2 = ComplexVector::from_entries({-3.0 / s10, -1.0 / s10});
    const ComplexVector y2 = ComplexVector::from_entries({3.0 / s13, -2.0 / s13});
    CHECK(inner_sum(kA2, kB2, x2, y2) == doctest::Approx(3.4205262752974144).epsilon(1e-9));

    // Both sampled values sit below the corresponding closed-form bounds.
    CHECK(inner_sum(kA1, kB1, x1, y1) <= pair_bounds(kA1, kB1).lemma22 + 1e-12);
    CHECK(inner_sum(kA2, kB2, x2, y2) <= pair_bounds(kA2, kB2).lemma21 + 1e-12);

    // Hand value: A = B = I, x = y = e1 gives |<x,x>| twice.
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const ComplexVector e1 = ComplexVector::from_entries({1.0, 0.0});
    const ComplexVector e2 = ComplexVector::from_entries({0.0, 1.0});
    CHECK(inner_sum(id, id, e1, e1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(inner_sum(id, id, e1, e2) == doctest::Approx(0.0).epsilon(1e-14));

    CHECK_THROWS_AS(inner_sum(kA1, kB1, ComplexVector(3), y1), std::invalid_argument);
    CHECK_THROWS_AS(inner_sum(kA1, kB1, x1, ComplexVector(3)), std::invalid_argument);
}

TEST_CASE("block bounds on the four-by-four counterexample") {
    const ComplexMatrix t = counterexample();
    const BlockMatrix bm = split(t, {2, 2});
    const BlockBoundReport r = block_bounds(bm);

    CHECK(r.alpha(0, 0).real() == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(r.alpha(0, 1).real() == doctest::Approx(6.749665575395598).epsilon(1e-9));
    CHECK(r.alpha(1, 1).real() == doctest::Approx(3.192582403567252).epsilon(1e-9));
    // The comparison matrices keep the lower off-diagonal slot empty.
    CHECK(r.alpha(1, 0) == Complex(0.0, 0.0));
    CHECK(r.beta(1, 0) == Complex(0.0, 0.0));
    CHECK(r.beta(0, 1).real() == doctest::Approx(6.736172855621857).epsilon(1e-9));

    CHECK(r.abu_omar(0, 1).real() == doctest::Approx(3.2360679774997894).epsilon(1e-9));
    CHECK(r.abu_omar(1, 0).real() == doctest::Approx(3.6180339887498945).epsilon(1e-9));
    CHECK(r.hou(0, 0).real() == doctest::Approx(4.56155281280883).epsilon(1e-9));
    CHECK(r.hou(1, 1).real() == doctest::Approx(3.8106163923171468).epsilon(1e-9));

    CHECK(r.omega_alpha == doctest::Approx(6.472497407047314).epsilon(1e-9));
    CHECK(r.omega_beta == doctest::Approx(6.4657537970271335).epsilon(1e-9));
    CHECK(r.omega_abu_omar == doctest::Approx(6.524694683942323).epsilon(1e-9));
    CHECK(r.omega_hou == doctest::Approx(7.637996780461678).epsilon(1e-9));

    // Every comparison radius dominates the assembled radius.
    const double w = numerical_radius(t);
    CHECK(w == doctest::Approx(5.771503752084298).epsilon(1e-9));
    CHECK(w <= r.omega_alpha + 1e-9);
    CHECK(w <= r.omega_beta + 1e-9);
    CHECK(w <= r.omega_abu_omar + 1e-9);
    CHECK(w <= r.omega_hou + 1e-9);

    // The off-diagonal entries come from the shared pair machinery.
    const PairBoundReport pr = pair_bounds(bm.block(0, 1), bm.block(1, 0));
    CHECK(r.alpha(0, 1).real() == doctest::Approx(pr.lemma21).epsilon(1e-12));
    CHECK(r.beta(0, 1).real() == doctest::Approx(pr.lemma22).epsilon(1e-12));
}

TEST_CASE("entrywise radii do not dominate the assembled radius") {
    const ComplexMatrix t = counterexample();
    const BlockMatrix bm = split(t, {2, 2});
    ComplexMatrix entrywise(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            entrywise(i, j) = numerical_radius(bm.block(i, j));
    const double w_entry = numerical_radius(entrywise);
    CHECK(w_entry == doctest::Approx(5.752737501638382).epsilon(1e-9));
    CHECK(numerical_radius(t) > w_entry + 1e-3);
}

TEST_CASE("block bounds on a zero block matrix vanish") {
    const BlockMatrix zero = make_block_matrix(
        {1, 2}, {ComplexMatrix(1, 1), ComplexMatrix(1, 2),
                 ComplexMatrix(2, 1), ComplexMatrix(2, 2)});
    const BlockBoundReport r = block_bounds(zero);
    CHECK(r.omega_alpha == 0.0);
    CHECK(r.omega_beta == 0.0);
    CHECK(r.omega_abu_omar == 0.0);
    CHECK(r.omega_hou == 0.0);
}

TEST_CASE("two by two bounds on the first worked dataset") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{-1.0, -2.0}, {-1.0, 2.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{2.0, 1.0}, {0.0, -2.0}});
    const ComplexMatrix c = ComplexMatrix::from_rows({{-3.0, -1.0}, {-3.0, -3.0}});
    const ComplexMatrix d = ComplexMatrix::from_rows({{-2.0, 3.0}, {-3.0, 0.0}});
    const TwoByTwoBoundReport r = two_by_two_bounds(a, b, c, d);
    REQUIRE(r.hirzallah.has_value());
    CHECK(*r.hirzallah == doctest::Approx(9.032761574697677).epsilon(1e-9));
    CHECK(r.cor1 == doctest::Approx(6.505832485389095).epsilon(1e-9));
    CHECK(r.cor2 == doctest::Approx(6.621186250403836).epsilon(1e-9));
    CHECK(r.shebrawi3 == doctest::Approx(17.810577451158373).epsilon(1e-9));

    const ComplexMatrix whole = assemble(make_block_matrix({2, 2}, {a, b, c, d}));
    const double w = numerical_radius(whole);
    CHECK(w == doctest::Approx(4.527943038670264).epsilon(1e-9));
    CHECK(w <= r.cor1 + 1e-9);
    CHECK(w <= r.cor2 + 1e-9);
    CHECK(w <= *r.hirzallah + 1e-9);
    CHECK(w <= r.shebrawi3 + 1e-9);
    // On this dataset the refined bound beats the additive one decisively.
    CHECK(r.cor1 < *r.hirzallah);
}

TEST_CASE("two by two bounds on the second worked dataset") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{2.0, 1.0}, {-1.0, -3.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{-2.0, 0.0}, {-3.0, 3.0}});
    const ComplexMatrix c = ComplexMatrix::from_rows({{2.0, 1.0}, {-3.0, -3.0}});
    const ComplexMatrix d = ComplexMatrix::from_rows({{2.0, -3.0}, {3.0, -2.0}});
    const TwoByTwoBoundReport r = two_by_two_bounds(a, b, c, d);
    CHECK(r.shebrawi3 == doctest::Approx(18.427849279727393).epsilon(1e-9));
    CHECK(r.cor1 == doctest::Approx(7.412379182410356).epsilon(1e-9));
    CHECK(r.cor1 < r.shebrawi3);
}

TEST_CASE("two by two structure on diagonal scalars") {
    const ComplexMatrix two = ComplexMatrix::from_rows({{2.0}});
    const ComplexMatrix one = ComplexMatrix::from_rows({{1.0}});
    const ComplexMatrix z = ComplexMatrix(1, 1);
    const TwoByTwoBoundReport r = two_by_two_bounds(two, z, z, one);
    // With zero corners both refined bounds collapse to max(w(A), w(D)).
    CHECK(r.cor1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.cor2 == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(r.hirzallah.has_value());
    CHECK(*r.hirzallah == doctest::Approx(2.0).epsilon(1e-12));
    // 0.5*2 + 0.5*1 + 0.25*||1+4|| + 0.25*||1+1||.
    CHECK(r.shebrawi3 == doctest::Approx(3.25).epsilon(1e-12));
}

TEST_CASE("two by two bounds with rectangular corners") {
    // d1 = 1, d2 = 2: the equal-size refinement is unavailable.
    const ComplexMatrix a = ComplexMatrix::from_rows({{1.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{1.0, 2.0}});
    const ComplexMatrix c = ComplexMatrix::from_rows({{0.0}, {1.0}});
    const ComplexMatrix d = ComplexMatrix::identity(2);
    const TwoByTwoBoundReport r = two_by_two_bounds(a, b, c, d);
    CHECK_FALSE(r.hirzallah.has_value());
    CHECK(r.cor1 > 0.0);

    CHECK_THROWS_AS(two_by_two_bounds(a, b, b, d), std::invalid_argument);
    CHECK_THROWS_AS(two_by_two_bounds(b, b, c, d), std::invalid_argument);
}

TEST_CASE("row bounds on the worked dataset include the equality case") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{3.0, 2.0}, {-1.0, -3.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}});
    const RowBoundReport r = row_bounds(a, b);
    CHECK(r.sh1 == doctest::Approx(3.197741615699398).epsilon(1e-9));
    CHECK(r.sh2 == doctest::Approx(4.648932829841653).epsilon(1e-9));

    // The row operator [A B; 0 0] attains the first bound on this dataset.
    ComplexMatrix row(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            row(i, j) = a(i, j);
            row(i, j + 2) = b(i, j);
        }
    CHECK(numerical_radius(row) == doctest::Approx(r.sh1).epsilon(1e-9));

    CHECK_THROWS_AS(row_bounds(ComplexMatrix(2, 3), ComplexMatrix(2, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(row_bounds(a, ComplexMatrix(3, 2)), std::invalid_argument);
    // Rectangular B with matching row count is fine.
    CHECK_NOTHROW(row_bounds(a, ComplexMatrix(2, 5)));
}

TEST_CASE("self bounds on the worked dataset") {
    const ComplexMatrix b = ComplexMatrix::from_rows({{-4.0, 7.0}, {-4.0, -8.0}});
    const SelfBoundReport r = self_bounds(b);
    CHECK(r.c7 == doctest::Approx(9.744876503155073).epsilon(1e-9));
    CHECK(r.c8 == doctest::Approx(9.606682840043254).epsilon(1e-9));
    CHECK(r.kittaneh == doctest::Approx(9.982295648551705).epsilon(1e-9));
    CHECK(r.norm == doctest::Approx(10.639410298049851).epsilon(1e-9));

    // The averaged Gram term can only improve on the plain norm square, so
    // the chain runs omega <= c8 <= c7 <= norm on every input.
    const double w = numerical_radius(b);
    CHECK(w <= r.c8 + 1e-9);
    CHECK(r.c8 <= r.c7 + 1e-9);
    CHECK(r.c7 <= r.norm + 1e-9);
    CHECK(r.kittaneh <= r.norm + 1e-9);
}

TEST_CASE("self bounds on the nilpotent shift have closed forms") {
    const ComplexMatrix jordan = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const SelfBoundReport r = self_bounds(jordan);
    CHECK(r.c7 == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(r.c8 == doctest::Approx(std::sqrt(6.0) / 4.0).epsilon(1e-12));
    CHECK(r.kittaneh == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(self_bounds(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("spectral sum bounds, single product") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{4.0, 1.0}, {3.0, 3.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{4.0, 1.0}, {-3.0, -1.0}});
    const SpectralSumBoundReport r = spectral_sum_bounds({a}, {b});
    REQUIRE(r.gamma.rows() == 1);
    CHECK(r.gamma(0, 0).real() ==
          doctest::Approx(numerical_radius(matmul(b, a))).epsilon(1e-12));
    CHECK(r.lambda(0, 0).real() == doctest::Approx(r.gamma(0, 0).real()).epsilon(1e-12));
    CHECK(r.omega_gamma == doctest::Approx(r.gamma(0, 0).real()).epsilon(1e-12));
    CHECK(r.r_direct == doctest::Approx(spectral_radius(matmul(a, b))).epsilon(1e-12));
    CHECK(r.r_direct <= r.omega_gamma + 1e-8);
    CHECK(r.r_direct <= r.omega_lambda + 1e-8);
}

TEST_CASE("spectral sum bounds, two products with rectangular factors") {
    // A_i maps H_i into H_1; mixed sizes exercise the shape contract.
    const ComplexMatrix a1 = ComplexMatrix::from_rows({{1.0, 2.0}, {0.0, -1.0}});
    const ComplexMatrix b1 = ComplexMatrix::from_rows({{0.5, 1.0}, {-1.0, 2.0}});
    const ComplexMatrix a2 = ComplexMatrix::from_rows({{1.0, 0.0, 2.0}, {-1.0, 1.0, 0.0}});
    const ComplexMatrix b2 =
        ComplexMatrix::from_rows({{1.0, -1.0}, {2.0, 0.0}, {0.0, 1.0}});
    const SpectralSumBoundReport r = spectral_sum_bounds({a1, a2}, {b1, b2});
    REQUIRE(r.gamma.rows() == 2);

    // Off-diagonal entries agree with the pair machinery on (B1 A2, B2 A1).
    const PairBoundReport pr = pair_bounds(matmul(b1, a2), matmul(b2, a1));
    CHECK(r.gamma(0, 1).real() == doctest::Approx(pr.lemma21).epsilon(1e-12));
    CHECK(r.lambda(0, 1).real() == doctest::Approx(pr.lemma22).epsilon(1e-12));
    CHECK(r.gamma(1, 0) == Complex(0.0, 0.0));

    const ComplexMatrix sum = matmul(a1, b1) + matmul(a2, b2);
    CHECK(r.r_direct == doctest::Approx(spectral_radius(sum)).epsilon(1e-12));
    CHECK(r.r_direct <= r.omega_gamma + 1e-8);
    CHECK(r.r_direct <= r.omega_lambda + 1e-8);
}

TEST_CASE("spectral sum bounds validate their inputs") {
    const ComplexMatrix a = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(spectral_sum_bounds({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(spectral_sum_bounds({a}, {a, a}), std::invalid_argument);
    // B must map H_1 back into H_i: a 3x3 factor cannot pair with 2x2.
    CHECK_THROWS_AS(spectral_sum_bounds({a}, {ComplexMatrix::identity(3)}),
                    std::invalid_argument);
    // Second A must land in the same H_1.
    CHECK_THROWS_AS(
        spectral_sum_bounds({a, ComplexMatrix::identity(3)},
                            {a, ComplexMatrix::identity(3)}),
        std::invalid_argument);
}
