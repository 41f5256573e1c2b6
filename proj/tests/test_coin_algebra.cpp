#include "doctest.h"

#include <cmath>
#include <random>

#include "qorw/channel.hpp"
#include "qorw/errors.hpp"
#include "qorw/matrix.hpp"
#include "qorw/tolerances.hpp"

using namespace qorw;

namespace {

// Random density matrix via a normalized Wishart-style draw.
DensityMatrix random_density(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    CMat a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Cx(g(rng), g(rng));
    CMat rho = a * a.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix((rho + rho.adjoint()).eval() / 2.0);
}

}  // namespace

TEST_CASE("validate_cptp") {
    CHECK(validate_cptp(identity_channel()).pass);
    CHECK(validate_cptp(identity_channel()).completeness_deviation == 0.0);

    for (double g : {0.0, 0.25, 0.7, 1.0})
        CHECK(validate_cptp(amplitude_damping(g)).pass);

    KrausChannel projector{{proj_plus()}, "projector"};
    auto report = validate_cptp(projector);
    CHECK_FALSE(report.pass);
    CHECK(report.completeness_deviation == doctest::Approx(1.0));

    KrausChannel mismatch{{CMat::Identity(2, 2), CMat::Identity(3, 3)}, "bad"};
    CHECK_THROWS_AS(validate_cptp(mismatch), structural_error);
}

TEST_CASE("apply_channel basics") {
    std::mt19937_64 rng(7);
    auto rho = random_density(rng, 2);
    auto out = apply_channel(identity_channel(), rho);
    CHECK(max_abs(out.mat() - rho.mat()) < 1e-15);

    // full decay maps |+⟩⟨+| to |−⟩⟨−|
    auto decayed = apply_channel(amplitude_damping(1.0), DensityMatrix::coin_plus());
    CHECK(max_abs(decayed.mat() - DensityMatrix::coin_minus().mat()) < 1e-15);
}

TEST_CASE("mixing channel on diag(q,1-q): hand matrix product") {
    const double q = 0.3;
    auto ch = mixing_channel(rotation_unitary(M_PI / 4.0), 0.5);
    auto out = apply_channel(ch, DensityMatrix::diag2(q));
    CMat2 expected;
    expected << q / 2.0 + 0.25, (1.0 - 2.0 * q) / 4.0,
                (1.0 - 2.0 * q) / 4.0, 0.75 - q / 2.0;
    CHECK(max_abs(out.mat() - expected) < 1e-14);
}

TEST_CASE("amplitude damping action on diagonal states") {
    const double q = 0.6, g = 0.35;
    auto out = apply_channel(amplitude_damping(g), DensityMatrix::diag2(q));
    CHECK(out.mat()(0, 0).real() == doctest::Approx(q * (1.0 - g)).epsilon(1e-14));
    CHECK(out.mat()(1, 1).real() == doctest::Approx(1.0 - q * (1.0 - g)).epsilon(1e-14));
    CHECK_THROWS_AS(amplitude_damping(1.5), structural_error);
}

TEST_CASE("amplitude damping semigroup in t") {
    const double lambda = 0.8, t1 = 0.4, t2 = 0.9;
    auto composed = compose_channels(amplitude_damping_rate(lambda, t1),
                                     amplitude_damping_rate(lambda, t2));
    auto direct = amplitude_damping_rate(lambda, t1 + t2);
    CHECK(validate_cptp(composed).pass);
    // action equality on a Hermitian basis
    std::vector<CMat2> basis = {proj_plus(), proj_minus(), sigma1(), sigma2()};
    for (const auto& b : basis)
        CHECK(max_abs(composed.apply_raw(b) - direct.apply_raw(b)) < 1e-12);
}

TEST_CASE("compose_channels") {
    auto c = amplitude_damping(0.3);
    auto with_id = compose_channels(identity_channel(), c);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5; ++i) {
        auto rho = random_density(rng, 2);
        CHECK(max_abs(with_id.apply_raw(rho.mat()) - c.apply_raw(rho.mat())) < 1e-14);
    }
    // σ₁² = 1
    auto x = unitary_channel(sigma1(), "X");
    auto xx = compose_channels(x, x);
    auto rho = random_density(rng, 2);
    CHECK(max_abs(xx.apply_raw(rho.mat()) - rho.mat()) < 1e-14);
}

TEST_CASE("rotation_unitary") {
    CHECK(max_abs(rotation_unitary(0.0) - CMat2::Identity()) == 0.0);
    CMat2 expect_quarter;
    expect_quarter << 0, 1, -1, 0;
    CHECK(max_abs(rotation_unitary(M_PI / 2.0) - expect_quarter) < 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    CMat2 expect_pi4;
    expect_pi4 << r, r, -r, r;
    CHECK(max_abs(rotation_unitary(M_PI / 4.0) - expect_pi4) < 1e-15);
    // exp(iθσ₂) closed form vs matrix exponential
    for (double theta : {0.3, 1.2}) {
        CMat direct = matrix_exponential(I_UNIT * theta * CMat(sigma2()));
        CHECK(max_abs(direct - CMat(rotation_unitary(theta))) < 1e-13);
    }
}

TEST_CASE("mixing channel endpoints") {
    std::mt19937_64 rng(3);
    auto rho = random_density(rng, 2);
    const CMat2 u = rotation_unitary(0.7);
    auto p0 = mixing_channel(u, 0.0);
    CHECK(max_abs(p0.apply_raw(rho.mat()) - rho.mat()) < 1e-14);
    auto p1 = mixing_channel(u, 1.0);
    CHECK(max_abs(p1.apply_raw(rho.mat()) - CMat(u * rho.mat() * u.adjoint())) < 1e-14);
    auto half = mixing_channel(rotation_unitary(M_PI / 4.0), 0.5);
    CHECK(max_abs(half.kraus[0] - CMat(CMat2::Identity() / std::sqrt(2.0))) < 1e-15);
    CHECK(max_abs(half.kraus[1] - CMat(rotation_unitary(M_PI / 4.0) / std::sqrt(2.0))) < 1e-15);
    CMat2 not_unitary = 2.0 * CMat2::Identity();
    CHECK_THROWS_AS(mixing_channel(not_unitary, 0.5), structural_error);
}

TEST_CASE("tensor_power and partial_trace_first") {
    CHECK(max_abs(tensor_power(sigma1(), 1) - CMat(sigma1())) == 0.0);
    CHECK(std::abs(tensor_power(sigma3(), 2).trace()) < 1e-15);
    CMat s11 = tensor_power(sigma1(), 2);
    CHECK(max_abs(s11 * s11 - CMat(CMat::Identity(4, 4))) < 1e-15);
    CHECK_THROWS_AS(tensor_power(CMat::Identity(2, 2), 13), resource_error);

    CHECK(max_abs(partial_trace_first(CMat::Identity(4, 4), 2) -
                  CMat(2.0 * CMat::Identity(2, 2))) < 1e-15);
    CHECK_THROWS_AS(partial_trace_first(CMat::Identity(6, 6), 4), structural_error);

    // consistency: Tr_a(a⊗b) = (Tr a)·b
    std::mt19937_64 rng(19);
    auto a = random_density(rng, 2), b = random_density(rng, 3);
    CMat traced = partial_trace_first(kron(a.mat(), b.mat()), 2);
    CHECK(max_abs(traced - CMat(a.mat().trace() * b.mat())) < 1e-13);
}

TEST_CASE("matrix_exponential") {
    CHECK(max_abs(matrix_exponential(CMat::Zero(3, 3)) - CMat(CMat::Identity(3, 3))) < 1e-15);
    // anti-Hermitian input gives a unitary
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    CMat a(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = Cx(g(rng), g(rng));
    CMat anti = (a - a.adjoint()) / 2.0;
    CMat u = matrix_exponential(anti);
    CHECK(max_abs(u.adjoint() * u - CMat(CMat::Identity(4, 4))) < tol().exp_unitary);
}

TEST_CASE("channel application preserves density invariants (property)") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<KrausChannel> channels = {
        identity_channel(), amplitude_damping(0.4),
        mixing_channel(rotation_unitary(M_PI / 4.0), 0.5),
        unitary_channel(rotation_unitary(1.1))};
    for (int i = 0; i < 1000; ++i) {
        auto rho = random_density(rng, 2);
        const auto& ch = channels[i % channels.size()];
        auto out = apply_channel(ch, rho);  // constructor re-validates
        CHECK(std::abs(out.mat().trace() - Cx(1.0)) <= 1e-12);
        CHECK(max_abs(out.mat() - out.mat().adjoint()) <= 1e-12);
    }
}

TEST_CASE("density matrix validation rejects bad inputs") {
    CMat bad = CMat::Identity(2, 2);  // trace 2
    CHECK_THROWS_AS(DensityMatrix{bad}, structural_error);
    CMat neg = CMat::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix{neg}, structural_error);
}

TEST_CASE("matrix json round trip") {
    std::mt19937_64 rng(2);
    auto rho = random_density(rng, 3);
    CMat back = matrix_from_json(matrix_to_json(rho.mat()));
    CHECK(max_abs(back - rho.mat()) == 0.0);
}
