#include "test_helpers.hpp"

#include "svet/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace svet;
using namespace svet_test;

TEST_SUITE_BEGIN("svetlichny");

namespace {

MeasurementSettings all_z_settings() {
    MeasurementSettings s;
    const Vector3 z = Vector3::UnitZ();
    s.a = s.a_prime = s.b = s.b_prime = s.c = s.c_prime = s.d = s.d_prime = z;
    return s;
}

MeasurementSettings xy_settings() {
    MeasurementSettings s;
    const Vector3 x = Vector3::UnitX();
    const Vector3 y = Vector3::UnitY();
    s.a = s.b = s.c = s.d = x;
    s.a_prime = s.b_prime = s.c_prime = s.d_prime = y;
    return s;
}

}  // namespace

TEST_CASE("settings validation flags non-unit vectors") {
    MeasurementSettings s = all_z_settings();
    CHECK_NOTHROW(validate(s));
    s.b_prime = Vector3(0.0, 0.0, 0.5);
    CHECK_THROWS_AS(validate(s), NonUnitVector);
}

TEST_CASE("operator matches the explicit sixteen-term construction") {
    SplitMix64 rng(41);
    for (int k = 0; k < 25; ++k) {
        const MeasurementSettings s = random_settings(rng);
        const Matrix16c direct = svetlichny_operator(s);
        const Matrix16c reference = reference_svetlichny_operator(s);
        CHECK(max_abs_diff(direct, reference) <= 1e-13);
        CHECK((direct - direct.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
    }
}

TEST_CASE("operator spectrum never exceeds the quantum maximum") {
    SplitMix64 rng(43);
    for (int k = 0; k < 10; ++k) {
        const Matrix16c op = svetlichny_operator(random_settings(rng));
        Eigen::SelfAdjointEigenSolver<Matrix16c> solver(op);
        CHECK(solver.eigenvalues().cwiseAbs().maxCoeff() <= kMax + 1e-9);
    }
}

TEST_CASE("aligned-z settings give a diagonal operator worth -4 on the vacuum") {
    const Matrix16c op = svetlichny_operator(all_z_settings());
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            if (r != c) CHECK(std::abs(op(r, c)) <= 1e-14);
    CHECK(expectation(basis_density(0), all_z_settings()) == doctest::Approx(-4.0).epsilon(1e-13));
}

TEST_CASE("x/y settings on the GHZ state give 8") {
    CHECK(expectation(ghz_state(), xy_settings()) == doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("every expectation on the maximally mixed state vanishes") {
    SplitMix64 rng(47);
    for (int k = 0; k < 10; ++k)
        CHECK(std::abs(expectation(maximally_mixed(), random_settings(rng))) <= 1e-12);
}

TEST_CASE("expectation factorizes through the lambda pair") {
    SplitMix64 rng(53);
    for (int k = 0; k < 50; ++k) {
        const DensityOperator rho = random_density(rng);
        const MeasurementSettings s = random_settings(rng);
        const CorrelationTensor t = pauli_tensor(rho);
        const LambdaPair p = lambdas(t, s.a, s.a_prime, s.b, s.b_prime, s.d, s.d_prime);
        const double factored =
            (s.c + s.c_prime).dot(p.lambda0) + (s.c - s.c_prime).dot(p.lambda1);
        CHECK(expectation(rho, s) == doctest::Approx(factored).epsilon(1e-10));
    }
}

TEST_CASE("lambda pair of the GHZ state at x/y settings") {
    const MeasurementSettings s = xy_settings();
    const CorrelationTensor t = pauli_tensor(ghz_state());
    const LambdaPair p = lambdas(t, s.a, s.a_prime, s.b, s.b_prime, s.d, s.d_prime);
    // Direct contraction of the four +/-1 correlation blocks; the squared
    // norms sum to 32.
    CHECK(p.lambda0.squaredNorm() + p.lambda1.squaredNorm() ==
          doctest::Approx(32.0).epsilon(1e-12));
    // Consistency with the factorized expectation at these settings (= 8).
    const double factored =
        (s.c + s.c_prime).dot(p.lambda0) + (s.c - s.c_prime).dot(p.lambda1);
    CHECK(factored == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("zero tensor gives zero lambdas") {
    CorrelationTensor t{};
    t.t.fill(0.0);
    SplitMix64 rng(59);
    const LambdaPair p =
        lambdas(t, random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng),
                random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng));
    CHECK(p.lambda0.norm() == 0.0);
    CHECK(p.lambda1.norm() == 0.0);
}

TEST_CASE("degenerate settings collapse the lambda pair") {
    SplitMix64 rng(61);
    for (int k = 0; k < 20; ++k) {
        const DensityOperator rho = random_density(rng);
        const CorrelationTensor t = pauli_tensor(rho);
        const Vector3 a = random_unit_vector(rng);
        const Vector3 b = random_unit_vector(rng);
        const Vector3 d = random_unit_vector(rng);
        // With a = a', b = b', d = d' both vectors reduce to -2 T_{ab} d.
        const LambdaPair p = lambdas(t, a, a, b, b, d, d);
        Vector3 tab_d = Vector3::Zero();
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) tab_d += a(i - 1) * b(j - 1) * (t.block(i, j) * d);
        CHECK((p.lambda0 + 2.0 * tab_d).norm() <= 1e-12);
        CHECK((p.lambda1 + 2.0 * tab_d).norm() <= 1e-12);
    }
}

TEST_CASE("inner_max closed-form examples") {
    CHECK(inner_max({Vector3(1, 0, 0), Vector3(0, 1, 0)}) ==
          doctest::Approx(2.0 * kRoot2).epsilon(1e-14));
    CHECK(inner_max({Vector3(2, 0, 0), Vector3(2, 0, 0)}) ==
          doctest::Approx(4.0).epsilon(1e-14));
    CHECK(inner_max({Vector3(3, 0, 0), Vector3(4, 0, 0)}) ==
          doctest::Approx(8.0).epsilon(1e-14));
    CHECK(inner_max({Vector3::Zero(), Vector3::Zero()}) == 0.0);
}

TEST_CASE("upper_bound examples and ordering") {
    CHECK(upper_bound({Vector3(1, 0, 0), Vector3(0, 1, 0)}) ==
          doctest::Approx(2.0 * kRoot2).epsilon(1e-14));
    CHECK(upper_bound({Vector3(2, 0, 0), Vector3(2, 0, 0)}) ==
          doctest::Approx(2.0 * std::sqrt(8.0)).epsilon(1e-14));
    CHECK(upper_bound({Vector3::Zero(), Vector3::Zero()}) == 0.0);

    SplitMix64 rng(67);
    for (int k = 0; k < 200; ++k) {
        const LambdaPair p{random_unit_vector(rng) * rng.next_double(0, 3),
                           random_unit_vector(rng) * rng.next_double(0, 3)};
        const double lower = inner_max(p);
        const double upper = upper_bound(p);
        CHECK(lower <= upper + 1e-12);
        if (std::abs(p.lambda0.dot(p.lambda1)) <= 1e-14)
            CHECK(lower == doctest::Approx(upper).epsilon(1e-12));
        if (lower >= upper - 1e-12)
            CHECK(std::abs(p.lambda0.dot(p.lambda1)) <= 1e-6);
    }
}

TEST_CASE("inner_max_settings certificate achieves the closed form") {
    SplitMix64 rng(71);
    auto check_pair = [](const LambdaPair& p) {
        const InnerSolution sol = inner_max_settings(p);
        CHECK(sol.c.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sol.c_prime.norm() == doctest::Approx(1.0).epsilon(1e-12));
        const double achieved =
            (sol.c + sol.c_prime).dot(p.lambda0) + (sol.c - sol.c_prime).dot(p.lambda1);
        CHECK(achieved == doctest::Approx(inner_max(p)).epsilon(1e-12));
    };
    for (int k = 0; k < 100; ++k) {
        check_pair({random_unit_vector(rng) * rng.next_double(0, 3),
                    random_unit_vector(rng) * rng.next_double(0, 3)});
    }
    check_pair({Vector3::Zero(), Vector3(0, 0, 2)});     // first vector degenerate
    check_pair({Vector3(1, 1, 0), Vector3::Zero()});     // second vector degenerate
    check_pair({Vector3::Zero(), Vector3::Zero()});      // both degenerate
    check_pair({Vector3(1, 2, 2), Vector3(2, 4, 4)});    // collinear
    check_pair({Vector3(1, 2, 2), Vector3(-2, -4, -4)});  // anti-collinear
}

TEST_CASE("closed form on the GHZ state") {
    const SvetlichnyResult r = svetlichny_xtype(classify_xtype(ghz_state(), kXTypeTol));
    CHECK(r.value == doctest::Approx(kMax).epsilon(1e-13));
    CHECK(r.measure == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.branch == Branch::coherence);
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("closed form on a coherence-free basis state") {
    // Diagonal-only states peak at 4|N|; exhaustive maximization over all
    // settings confirms the ceiling (see the oracle suite).
    const SvetlichnyResult r = svetlichny_xtype(classify_xtype(basis_density(0), kXTypeTol));
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(r.branch == Branch::diagonal);
    CHECK(r.measure == 0.0);
}

TEST_CASE("closed form with both branches comparable") {
    XTypeState x;
    x.diag.fill(0.0);
    x.diag[0] = 0.5;
    x.diag[15] = 0.5;
    x.pair_index = 1;
    x.pair_value = Complex(0.25, 0.0);
    const SvetlichnyResult r = svetlichny_xtype(x);
    CHECK(r.value == doctest::Approx(4.0 * kRoot2).epsilon(1e-13));
    CHECK(r.branch == Branch::coherence);
}

TEST_CASE("closed form is invariant under coherence phase") {
    SplitMix64 rng(73);
    for (int k = 0; k < 20; ++k) {
        XTypeState x = random_xtype(rng);
        const double base = svetlichny_xtype(x).value;
        const double phase = rng.next_double(0, 6.283185307179586);
        x.pair_value *= Complex(std::cos(phase), std::sin(phase));
        CHECK(svetlichny_xtype(x).value == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("no settings beat the closed form") {
    SplitMix64 rng(79);
    for (int state = 0; state < 20; ++state) {
        const XTypeState x = random_xtype(rng);
        const DensityOperator rho = to_density(x);
        const double best = svetlichny_xtype(x).value;
        for (int k = 0; k < 1000; ++k) {
            CHECK(expectation(rho, random_settings(rng)) <= best + 1e-6);
        }
    }
}

TEST_CASE("nonlocality measure") {
    CHECK(nonlocality_measure(8.0) == 0.0);
    CHECK(nonlocality_measure(kMax) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(nonlocality_measure(4.0 * kRoot2) == 0.0);
    CHECK(nonlocality_measure(kMax + 5e-7) == 1.0);  // clamped overshoot
    CHECK_THROWS_AS(nonlocality_measure(kMax + 1e-3), OutOfRange);
    double previous = -1.0;
    for (double v = 0.0; v <= kMax; v += 0.1) {
        const double m = nonlocality_measure(v);
        CHECK(m >= previous - 1e-15);
        CHECK(m >= 0.0);
        CHECK(m <= 1.0);
        previous = m;
    }
}

TEST_SUITE_END();
