#include <doctest.h>

#include <cmath>

#include "graphwalk/target.hpp"

using namespace graphwalk;

TEST_CASE("exponential density") {
    Eigen::VectorXd f(2);
    f << 1.0, 2.0;
    SUBCASE("gamma 0 is uniform") {
        TargetDensity t = exponential_density(f, 0.0);
        CHECK(t.p(0) == doctest::Approx(0.5));
        CHECK(t.p(1) == doctest::Approx(0.5));
    }
    SUBCASE("K2 example") {
        TargetDensity t = exponential_density(f, 1.0);
        double e = std::exp(1.0);
        CHECK(t.p(0) == doctest::Approx(1.0 / (1.0 + e)));
        CHECK(t.p(1) == doctest::Approx(e / (1.0 + e)));
        CHECK(t.delta_f == doctest::Approx(1.0 / (1.0 + e)));
        CHECK(t.Delta_f == doctest::Approx(e / (1.0 + e)));
    }
    SUBCASE("shift invariance") {
        Eigen::VectorXd g(4);
        g << 0.3, 1.7, -2.0, 0.9;
        TargetDensity a = exponential_density(g, 0.8);
        TargetDensity b = exponential_density(g.array() + 5.0, 0.8);
        CHECK((a.p - b.p).cwiseAbs().maxCoeff() < 1e-15);
    }
    SUBCASE("stable at large gamma") {
        Eigen::VectorXd g(3);
        g << 100.0, 900.0, 500.0;
        TargetDensity t = exponential_density(g, 50.0);
        CHECK(t.p.allFinite());
        CHECK(t.p.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(exponential_density(f, -0.1), std::invalid_argument);
}

TEST_CASE("squared density") {
    Eigen::VectorXd f(2);
    f << 1.0, 2.0;
    TargetDensity t = squared_density(f);
    CHECK(t.p(0) == doctest::Approx(0.2));
    CHECK(t.p(1) == doctest::Approx(0.8));

    SUBCASE("constant function is uniform") {
        Eigen::VectorXd c = Eigen::VectorXd::Constant(5, 3.0);
        TargetDensity u = squared_density(c);
        CHECK((u.p.array() - 0.2).abs().maxCoeff() < 1e-15);
    }
    SUBCASE("scale invariance is exact") {
        Eigen::VectorXd g(3);
        g << 0.5, 1.5, 2.5;
        CHECK((squared_density(g).p - squared_density(7.0 * g).p)
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
    SUBCASE("zero or negative entries rejected") {
        Eigen::VectorXd g(3);
        g << 1.0, 0.0, 2.0;
        CHECK_THROWS_AS(squared_density(g), std::invalid_argument);
        g(1) = -1.0;
        CHECK_THROWS_AS(squared_density(g), std::invalid_argument);
    }
}

TEST_CASE("extremes straddle the uniform mass") {
    Eigen::VectorXd f(6);
    f << 0.2, 0.9, 1.4, 0.7, 2.2, 0.4;
    for (double gamma : {0.0, 0.5, 2.0}) {
        TargetDensity t = exponential_density(f, gamma);
        CHECK(t.delta_f <= 1.0 / 6 + 1e-15);
        CHECK(t.Delta_f >= 1.0 / 6 - 1e-15);
    }
    TargetDensity s = squared_density(f);
    CHECK(s.delta_f <= 1.0 / 6);
    CHECK(s.Delta_f >= 1.0 / 6);
}
