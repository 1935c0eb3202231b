#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gspectra/counting.hpp"
#include "gspectra/generators.hpp"
#include "gspectra/rng.hpp"
#include "gspectra/spectral.hpp"

using namespace gspectra;

namespace {

Graph gen(const std::string& spec, uint64_t seed = 0) {
    return generate(parse_generator_spec(spec, seed));
}

constexpr double kTol = 1e-9;

}  // namespace

TEST_CASE("complete graph spectrum: n-1 once, -1 with multiplicity n-1") {
    Spectrum s = eigenvalues(gen("complete:4"));
    REQUIRE(s.n() == 4);
    CHECK(s.values[0] == doctest::Approx(3.0).epsilon(kTol));
    for (int i = 1; i < 4; ++i) CHECK(s.values[i] == doctest::Approx(-1.0).epsilon(kTol));
}

TEST_CASE("C4 spectrum is (2, 0, 0, -2)") {
    Spectrum s = eigenvalues(gen("cycle:4"));
    CHECK(std::abs(s.values[0] - 2.0) < kTol);
    CHECK(std::abs(s.values[1]) < kTol);
    CHECK(std::abs(s.values[2]) < kTol);
    CHECK(std::abs(s.values[3] + 2.0) < kTol);
}

TEST_CASE("Petersen spectrum is (3, 1^5, (-2)^4)") {
    Spectrum s = eigenvalues(gen("petersen"));
    REQUIRE(s.n() == 10);
    CHECK(std::abs(s.values[0] - 3.0) < kTol);
    for (int i = 1; i <= 5; ++i) CHECK(std::abs(s.values[i] - 1.0) < kTol);
    for (int i = 6; i <= 9; ++i) CHECK(std::abs(s.values[i] + 2.0) < kTol);
}

TEST_CASE("inertia classification") {
    Inertia c4 = inertia(eigenvalues(gen("cycle:4")));
    CHECK(c4.n_plus == 1);
    CHECK(c4.n_zero == 2);
    CHECK(c4.n_minus == 1);

    Inertia k4 = inertia(eigenvalues(gen("complete:4")));
    CHECK(k4.n_plus == 1);
    CHECK(k4.n_zero == 0);
    CHECK(k4.n_minus == 3);

    Inertia e3 = inertia(eigenvalues(from_edge_list(3, {})));
    CHECK(e3.n_plus == 0);
    CHECK(e3.n_zero == 3);
    CHECK(e3.n_minus == 0);
}

TEST_CASE("square_sum and lambda_ratio") {
    Spectrum k4 = eigenvalues(gen("complete:4"));
    CHECK(square_sum(k4, 2) == doctest::Approx(10.0).epsilon(kTol));

    Spectrum c4 = eigenvalues(gen("cycle:4"));
    CHECK(square_sum(c4, 4) == doctest::Approx(8.0).epsilon(kTol));  // 2m
    CHECK(lambda_ratio(c4, 2, 4) == doctest::Approx(1.0).epsilon(kTol));

    Spectrum k3 = eigenvalues(gen("complete:3"));
    CHECK(square_sum(k3, 1) == doctest::Approx(4.0).epsilon(kTol));
    CHECK(lambda_ratio(k3, 2, 3) == doctest::Approx(5.0 / 3.0).epsilon(kTol));

    Spectrum pet = eigenvalues(gen("petersen"));
    CHECK(lambda_ratio(pet, 2, 15) == doctest::Approx(2.0 / 3.0).epsilon(kTol));

    CHECK_THROWS_AS(square_sum(k4, 0), std::out_of_range);
    CHECK_THROWS_AS(square_sum(k4, 5), std::out_of_range);
    CHECK_THROWS_AS(lambda_ratio(k4, 1, 0), std::invalid_argument);
}

TEST_CASE("power sums") {
    Spectrum k3 = eigenvalues(gen("complete:3"));
    CHECK(power_sum(k3, 3) == doctest::Approx(6.0).epsilon(1e-8));  // 6t

    Spectrum c4 = eigenvalues(gen("cycle:4"));
    CHECK(std::abs(power_sum(c4, 3)) < 1e-8);  // bipartite
    CHECK(std::abs(power_sum(c4, 1)) < 1e-8);  // trace
}

TEST_CASE("p_norm") {
    CHECK(p_norm({3, 4}, 2) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(p_norm({1, 1, 1, 1}, 1) == doctest::Approx(4.0).epsilon(1e-12));
    // independent route: (8^1.5 + 1)^(2/3)
    const double expected = std::pow(std::pow(8.0, 1.5) + 1.0, 2.0 / 3.0);
    CHECK(p_norm({8, 1}, 1.5) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(p_norm({}, 2) == 0.0);
    CHECK_THROWS_AS(p_norm({1.0}, 0.5), std::invalid_argument);
}

TEST_CASE("weak majorization basics") {
    CHECK(is_weakly_majorized({1, 1}, {2, 0}));
    CHECK_FALSE(is_weakly_majorized({3, 0}, {2, 1}));
    CHECK(is_weakly_majorized({2, 1}, {2, 1}));  // reflexive
    CHECK(is_weakly_majorized({1}, {2, 0}));     // zero padding
}

TEST_CASE("spectral conservation laws on the n=5 corpus") {
    for_each_labeled_graph(5, [](const Graph& g) {
        Spectrum s = eigenvalues(g);
        const double l1 = std::max(1.0, s.values.front());
        double sum1 = 0, sum2 = 0, sum3 = 0;
        for (double v : s.values) {
            sum1 += v;
            sum2 += v * v;
            sum3 += v * v * v;
        }
        const long long m = g.m();
        const long long t = triangles_by_intersection(g);
        CHECK(std::abs(sum1) <= 5 * 1e-8 * l1);
        CHECK(std::abs(sum2 - 2.0 * m) <= 1e-8 * std::max(1.0, 2.0 * m));
        CHECK(std::abs(sum3 - 6.0 * t) <= 1e-6 * std::max(1.0, 6.0 * t));
        // Perron bounds
        if (g.n() > 0) {
            CHECK(s.values.front() >= 2.0 * m / g.n() - 1e-9);
            CHECK(s.values.front() <= g.n() - 1 + 1e-9);
        }
        // inertia counts
        Inertia in = inertia(s);
        CHECK(in.n_plus + in.n_zero + in.n_minus == g.n());
        if (m >= 1) CHECK(in.n_plus >= 1);
    });
}

TEST_CASE("p-norm sandwich on seeded random vectors") {
    const std::pair<double, double> pq[] = {{1, 2}, {2, 3}, {1.5, 3}};
    SplitMix64 rng(20260826);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(16));
        std::vector<double> x(n);
        for (double& v : x) v = 20.0 * rng.next_double() - 10.0;
        for (auto [p, q] : pq) {
            const double np = p_norm(x, p);
            const double nq = p_norm(x, q);
            const double scale = std::pow(n, 1.0 / p - 1.0 / q);
            CHECK(nq <= np * (1 + 1e-12) + 1e-12);
            CHECK(np <= scale * nq * (1 + 1e-12) + 1e-12);
        }
    }
}

TEST_CASE("weakly majorized pairs obey the p=3/2 norm inequality") {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(10));
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = 10.0 * rng.next_double();
            y[i] = x[i] * rng.next_double();  // elementwise shrink keeps y prec_w x
        }
        std::sort(x.begin(), x.end(), std::greater<>());
        std::sort(y.begin(), y.end(), std::greater<>());
        REQUIRE(is_weakly_majorized(y, x));
        const double nx = p_norm(x, 1.5);
        const double ny = p_norm(y, 1.5);
        CHECK(ny <= nx + 1e-12);
        if (x != y) CHECK(ny < nx);
    }
}
