#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "exoshape/errors.hpp"
#include "exoshape/polynomial.hpp"
#include "exoshape/transfer_function.hpp"

using namespace exoshape;
using cplx = std::complex<double>;

namespace {

// log-spaced grid helper shared by the property tests
std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return w;
}

// random strictly-stable rational tf: poles/zeros in the open LHP
Tf random_stable_tf(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg_d(1, 4);
    std::uniform_real_distribution<double> re_d(-50.0, -0.5);
    std::uniform_real_distribution<double> im_d(0.5, 40.0);
    std::uniform_real_distribution<double> gain_d(0.1, 10.0);
    std::bernoulli_distribution pair_d(0.5);

    auto draw_roots = [&](int deg) {
        std::vector<cplx> roots;
        while (static_cast<int>(roots.size()) < deg) {
            if (deg - static_cast<int>(roots.size()) >= 2 && pair_d(rng)) {
                const cplx r(re_d(rng), im_d(rng));
                roots.push_back(r);
                roots.push_back(std::conj(r));
            } else {
                roots.emplace_back(re_d(rng), 0.0);
            }
        }
        return roots;
    };
    const int nd = deg_d(rng);
    std::uniform_int_distribution<int> nz_d(0, nd);
    const int nz = nz_d(rng);
    return {Polynomial::from_roots(draw_roots(nz), gain_d(rng)),
            Polynomial::from_roots(draw_roots(nd), 1.0)};
}

}  // namespace

TEST_CASE("polynomial basics") {
    Polynomial p{1.0, 2.0, 3.0};  // 3s^2 + 2s + 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(2.0) == doctest::Approx(17.0));
    CHECK(p.eval(cplx(0.0, 1.0)).real() == doctest::Approx(-2.0));
    CHECK(p.eval(cplx(0.0, 1.0)).imag() == doctest::Approx(2.0));

    Polynomial d = p.derivative();
    CHECK(d.degree() == 1);
    CHECK(d[0] == doctest::Approx(2.0));
    CHECK(d[1] == doctest::Approx(6.0));

    Polynomial prod = Polynomial{1.0, 1.0} * Polynomial{2.0, 1.0};  // (s+1)(s+2)
    CHECK(prod[0] == doctest::Approx(2.0));
    CHECK(prod[1] == doctest::Approx(3.0));
    CHECK(prod[2] == doctest::Approx(1.0));

    CHECK(Polynomial::zero().is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("from_roots reconstructs coefficients") {
    std::vector<cplx> roots{{-1.0, 0.0}, {-2.0, 3.0}, {-2.0, -3.0}};
    Polynomial p = Polynomial::from_roots(roots, 2.0);
    // 2(s+1)(s^2+4s+13) = 2s^3 + 10s^2 + 34s + 26
    CHECK(p[0] == doctest::Approx(26.0));
    CHECK(p[1] == doctest::Approx(34.0));
    CHECK(p[2] == doctest::Approx(10.0));
    CHECK(p[3] == doctest::Approx(2.0));
}

TEST_CASE("rational arithmetic examples") {
    const Tf integ{Polynomial{1.0}, Polynomial{0.0, 1.0}};  // 1/s

    SUBCASE("add(1/s, 1/s) = 2/s") {
        Tf sum = integ + integ;
        CHECK(sum.num().degree() == 0);
        CHECK(sum.num()[0] == doctest::Approx(2.0));
        CHECK(sum.den()[0] == doctest::Approx(0.0));
        CHECK(sum.den()[1] == doctest::Approx(1.0));
    }

    SUBCASE("mul sums delays") {
        Tf a{Polynomial{1.0}, Polynomial{1.0, 1.0}, 0.001};
        Tf b{Polynomial{1.0}, Polynomial{2.0, 1.0}, 0.001};
        Tf prod = a * b;
        CHECK(prod.delay() == doctest::Approx(0.002));
        CHECK(prod.den()[0] == doctest::Approx(2.0));
        CHECK(prod.den()[1] == doctest::Approx(3.0));
        CHECK(prod.den()[2] == doctest::Approx(1.0));
    }

    SUBCASE("inv identity") {
        Tf a{Polynomial{2.0, 1.0}, Polynomial{1.0, 3.0, 1.0}};
        Tf ia = inv(a);
        CHECK(ia.num().degree() == 2);
        CHECK(ia.den().degree() == 1);
        Tf ident = cancel_common_factors(a * ia);
        CHECK(ident.num().degree() == 0);
        CHECK(ident.den().degree() == 0);
        CHECK(ident.num()[0] / ident.den()[0] == doctest::Approx(1.0));
    }

    SUBCASE("delay errors") {
        Tf a{Polynomial{1.0}, Polynomial{1.0, 1.0}, 0.001};
        Tf b{Polynomial{1.0}, Polynomial{1.0, 1.0}, 0.002};
        CHECK_THROWS_AS(a + b, DelayMismatch);
        CHECK_THROWS_AS(a - b, DelayMismatch);
        CHECK_THROWS_AS(inv(a), NonInvertibleDelay);
        Tf ia = inv_for_analysis(a);
        CHECK(ia.delay() == doctest::Approx(-0.001));
    }

    SUBCASE("zero numerator errors") {
        Tf z;
        CHECK_THROWS_AS(inv(z), ZeroNumerator);
        Tf a{Polynomial{1.0}, Polynomial{1.0, 1.0}};
        CHECK_THROWS_AS(a / z, ZeroNumerator);
    }

    SUBCASE("common s factors cancel on construction") {
        // s(s+1) / s^2 -> (s+1)/s
        Tf a{Polynomial{0.0, 1.0, 1.0}, Polynomial{0.0, 0.0, 1.0}};
        CHECK(a.num().degree() == 1);
        CHECK(a.den().degree() == 1);
        CHECK(a.den()[0] == doctest::Approx(0.0));
    }
}

TEST_CASE("evaluate_at_frequency") {
    SUBCASE("integrator phase -90") {
        Tf integ{Polynomial{1.0}, Polynomial{0.0, 1.0}};
        cplx v = evaluate_at_frequency(integ, 1.0);
        CHECK(v.real() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(-1.0));
    }
    SUBCASE("pure delay phase -wT") {
        Tf d = Tf::pure_delay(0.002);
        cplx v = evaluate_at_frequency(d, 100.0);
        CHECK(std::abs(v) == doctest::Approx(1.0));
        CHECK(std::arg(v) == doctest::Approx(-0.2));
    }
    SUBCASE("direct substitution oracle") {
        Tf tf{Polynomial{250.0, 0.0, 1.0}, Polynomial{0.0, 10.0, 1.0}};
        const double w = 5.0;
        // independent complex-arithmetic evaluation
        const cplx s(0.0, w);
        const cplx expect = (s * s + 250.0) / (s * s + 10.0 * s);
        const cplx got = evaluate_at_frequency(tf, w);
        CHECK(std::abs(got - expect) < 1e-12 * std::abs(expect));
        // and the hand value
        CHECK(got.real() == doctest::Approx(-1.8));
        CHECK(got.imag() == doctest::Approx(-3.6));
    }
    SUBCASE("pole on axis") {
        Tf tf{Polynomial{1.0}, Polynomial{1.0, 0.0, 1.0}};  // 1/(s^2+1)
        CHECK_THROWS_AS(evaluate_at_frequency(tf, 1.0), PoleOnAxis);
    }
}

TEST_CASE("find_roots examples") {
    SUBCASE("perfect square") {
        auto r = find_roots(Polynomial{1.0, 2.0, 1.0});
        REQUIRE(r.size() == 2);
        CHECK(r[0].real() == doctest::Approx(-1.0));
        CHECK(r[1].real() == doctest::Approx(-1.0));
        CHECK(std::abs(r[0].imag()) < 1e-6);
    }
    SUBCASE("difference of squares") {
        auto r = find_roots(Polynomial{-1.0, 0.0, 1.0});
        REQUIRE(r.size() == 2);
        std::vector<double> re{r[0].real(), r[1].real()};
        std::sort(re.begin(), re.end());
        CHECK(re[0] == doctest::Approx(-1.0));
        CHECK(re[1] == doctest::Approx(1.0));
    }
    SUBCASE("pure imaginary pair sqrt(250)") {
        auto r = find_roots(Polynomial{250.0, 0.0, 1.0});
        REQUIRE(r.size() == 2);
        std::vector<double> im{r[0].imag(), r[1].imag()};
        std::sort(im.begin(), im.end());
        CHECK(im[0] == doctest::Approx(-15.811388300841896));
        CHECK(im[1] == doctest::Approx(15.811388300841896));
        CHECK(std::abs(r[0].real()) < 1e-9);
    }
}

TEST_CASE("find_roots reconstruction property, degrees <= 8") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> cd(-3.0, 3.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int deg = 1 + trial % 8;
        Eigen::VectorXd c(deg + 1);
        for (int k = 0; k <= deg; ++k) c[k] = cd(rng);
        if (std::abs(c[deg]) < 0.2) c[deg] = 0.7;
        Polynomial p(c);
        auto roots = find_roots(p);
        REQUIRE(static_cast<int>(roots.size()) == p.degree());
        Polynomial rebuilt = Polynomial::from_roots(roots, p.leading());
        const double scale = p.max_abs_coeff();
        for (int k = 0; k <= deg; ++k)
            CHECK(std::abs(rebuilt[k] - p[k]) <= 1e-7 * scale);
    }
}

TEST_CASE("classify_stability") {
    SUBCASE("stable first order") {
        auto info = classify_stability(Tf{Polynomial{1.0}, Polynomial{1.0, 1.0}});
        CHECK(info.cls == StabilityClass::stable);
        CHECK(info.worst_pole_real == doctest::Approx(-1.0));
        CHECK(info.minimum_phase);
    }
    SUBCASE("undamped oscillator marginal") {
        auto info = classify_stability(Tf{Polynomial{1.0}, Polynomial{1.0, 0.0, 1.0}});
        CHECK(info.cls == StabilityClass::marginal);
        CHECK(info.worst_pole_real == doctest::Approx(0.0));
    }
    SUBCASE("stable but non-minimum-phase") {
        auto info = classify_stability(Tf{Polynomial{-3.0, 1.0}, Polynomial{2.0, 3.0, 1.0}});
        CHECK(info.cls == StabilityClass::stable);
        CHECK_FALSE(info.minimum_phase);
    }
    SUBCASE("pole exactly at zero is marginal, not unstable") {
        auto info = classify_stability(Tf{Polynomial{1.0}, Polynomial{0.0, 1.0, 1.0}});
        CHECK(info.cls == StabilityClass::marginal);
    }
}

TEST_CASE("discretize_tustin") {
    SUBCASE("trapezoidal integrator") {
        auto d = discretize_tustin(Tf{Polynomial{1.0}, Polynomial{0.0, 1.0}}, 0.001);
        REQUIRE(d.num_z.size() == 2);
        CHECK(d.num_z[0] == doctest::Approx(0.0005));
        CHECK(d.num_z[1] == doctest::Approx(0.0005));
        CHECK(d.den_z[0] == doctest::Approx(1.0));
        CHECK(d.den_z[1] == doctest::Approx(-1.0));
    }
    SUBCASE("static gain") {
        auto d = discretize_tustin(Tf::gain(5.0), 0.01);
        REQUIRE(d.num_z.size() == 1);
        CHECK(d.num_z[0] == doctest::Approx(5.0));
        CHECK(d.den_z[0] == doctest::Approx(1.0));
    }
    SUBCASE("frequency-response match oracle for 1/(s+10)") {
        Tf tf{Polynomial{1.0}, Polynomial{10.0, 1.0}};
        auto d = discretize_tustin(tf, 0.001);
        const double w = 10.0;
        const cplx cont = evaluate_at_frequency(tf, w);
        const cplx disc = d.evaluate(w);
        CHECK(std::abs(disc - cont) / std::abs(cont) < 1e-3);
    }
    SUBCASE("improper rejected") {
        Tf improper{Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0, 1.0}};
        CHECK_THROWS_AS(discretize_tustin(improper, 0.001), ImproperTransferFunction);
    }
    SUBCASE("dc gain preserved") {
        Tf tf{Polynomial{3.0, 1.0}, Polynomial{7.0, 2.0, 1.0}};
        auto d = discretize_tustin(tf, 0.002);
        double num_sum = 0.0, den_sum = 0.0;
        for (double v : d.num_z) num_sum += v;
        for (double v : d.den_z) den_sum += v;
        CHECK(num_sum / den_sum == doctest::Approx(tf.dc_gain()).epsilon(1e-12));
    }
}

TEST_CASE("property: frequency response is additive") {
    std::mt19937 rng(777);
    const auto grid = log_grid(0.01, 1e4, 50);
    for (int trial = 0; trial < 20; ++trial) {
        Tf a = random_stable_tf(rng);
        Tf b = random_stable_tf(rng);
        Tf sum = a + b;
        for (double w : grid) {
            const cplx lhs = evaluate_at_frequency(sum, w);
            const cplx rhs = evaluate_at_frequency(a, w) + evaluate_at_frequency(b, w);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("property: tustin maps stable poles inside the unit circle") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        Tf a = random_stable_tf(rng);
        auto d = discretize_tustin(a, 0.001);
        // z-domain denominator: reverse the z^-1 coefficients
        Eigen::VectorXd zden(static_cast<Eigen::Index>(d.den_z.size()));
        for (std::size_t k = 0; k < d.den_z.size(); ++k)
            zden[static_cast<Eigen::Index>(k)] = d.den_z[d.den_z.size() - 1 - k];
        Polynomial pden(zden);
        if (pden.degree() < 1) continue;
        for (const auto& z : find_roots(pden)) CHECK(std::abs(z) < 1.0 + 1e-9);
    }
}

TEST_CASE("property: stable tf has bounded response over the grid") {
    std::mt19937 rng(99);
    const auto grid = log_grid(0.01, 1e4, 50);
    for (int trial = 0; trial < 10; ++trial) {
        Tf a = random_stable_tf(rng);
        REQUIRE(classify_stability(a).cls == StabilityClass::stable);
        for (double w : grid) CHECK(std::isfinite(std::abs(evaluate_at_frequency(a, w))));
    }
}

TEST_CASE("cancel_common_factors removes duplicated structural factors") {
    // (s+1)(s+5) / ((s+1)(s+2)) -> (s+5)/(s+2)
    Polynomial shared{1.0, 1.0};
    Tf a{shared * Polynomial{5.0, 1.0}, shared * Polynomial{2.0, 1.0}};
    Tf c = cancel_common_factors(a);
    CHECK(c.num().degree() == 1);
    CHECK(c.den().degree() == 1);
    CHECK(c.num()[0] == doctest::Approx(5.0));
    CHECK(c.den()[0] == doctest::Approx(2.0));

    // distinct factors survive
    Tf b{Polynomial{5.0, 1.0}, Polynomial{2.0, 1.0}};
    Tf cb = cancel_common_factors(b);
    CHECK(cb.num().degree() == 1);
    CHECK(cb.den().degree() == 1);
}
