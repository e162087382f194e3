#pragma once

#include <complex>
#include <vector>

#include "exoshape/polynomial.hpp"

namespace exoshape {

/// Ratio of real polynomials in s times a pure delay e^{-s*delay}.
/// Canonical form: monic denominator; common factors of s shared by
/// numerator and denominator (zero constant coefficients) are cancelled.
/// Delay is carried symbolically and never Pade-approximated here. A
/// negative delay can only arise through inv_for_analysis(); such objects
/// are bookkeeping identities meant for pointwise frequency evaluation.
class RationalTransferFunction {
public:
    RationalTransferFunction() : num_(Polynomial::constant(0.0)), den_(Polynomial::constant(1.0)) {}
    RationalTransferFunction(Polynomial num, Polynomial den, double delay = 0.0);

    static RationalTransferFunction gain(double k) {
        return {Polynomial::constant(k), Polynomial::constant(1.0)};
    }
    static RationalTransferFunction pure_delay(double T) {
        return {Polynomial::constant(1.0), Polynomial::constant(1.0), T};
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    double delay() const { return delay_; }
    bool is_zero() const { return num_.is_zero(); }
    /// deg(num) <= deg(den)
    bool is_proper() const { return num_.degree() <= den_.degree(); }
    int relative_degree() const { return den_.degree() - num_.degree(); }

    /// num(0)/den(0); throws PoleOnAxis if den(0) is (numerically) zero.
    double dc_gain() const;

private:
    void canonicalize();
    Polynomial num_, den_;
    double delay_ = 0.0;
};

using Tf = RationalTransferFunction;

Tf operator+(const Tf& a, const Tf& b);  // throws DelayMismatch
Tf operator-(const Tf& a, const Tf& b);  // throws DelayMismatch
Tf operator*(const Tf& a, const Tf& b);  // delays add
Tf operator/(const Tf& a, const Tf& b);  // b must have zero delay
Tf operator*(double c, const Tf& a);
inline Tf operator*(const Tf& a, double c) { return c * a; }
Tf operator-(const Tf& a);

/// Reciprocal. Throws ZeroNumerator for the zero function and
/// NonInvertibleDelay when a nonzero delay would need negating.
Tf inv(const Tf& a);

/// Reciprocal that negates the delay instead of throwing. The result is an
/// analysis-only object (see class comment).
Tf inv_for_analysis(const Tf& a);

/// num(jw)/den(jw) * exp(-jw*delay), delay exact. Throws PoleOnAxis when
/// |den(jw)| < 1e-300.
std::complex<double> evaluate_at_frequency(const Tf& tf, double omega);

/// Root-matching pole/zero cancellation: factors shared (within tol) by
/// numerator and denominator are removed and the polynomials rebuilt from
/// the surviving roots. Exact zeros at the origin are handled separately and
/// never lose precision. Intended for the structurally duplicated factors
/// produced by interconnection algebra.
Tf cancel_common_factors(const Tf& a, double tol = 1e-8);

enum class StabilityClass { stable, marginal, unstable };

struct StabilityInfo {
    StabilityClass cls;
    double worst_pole_real;  // -inf when the rational part has no poles
    bool minimum_phase;      // all numerator roots in the closed left half-plane
};

/// Pole classification of the rational part (delay ignored), with
/// eps_stab = 1e-9 on the axis test.
StabilityInfo classify_stability(const Tf& tf);

/// Discrete-time transfer function in powers of z^-1, monic denominator.
struct DiscreteTransferFunction {
    std::vector<double> num_z;  // ascending powers of z^-1
    std::vector<double> den_z;  // den_z[0] == 1
    double sample_period = 0.0;
    int delay_steps = 0;

    std::complex<double> evaluate(double omega) const;  // z = exp(j*omega*Ts)
};

/// Bilinear (Tustin) discretization s <- (2/dt)(1-z^-1)/(1+z^-1).
/// Throws ImproperTransferFunction if deg(num) > deg(den).
DiscreteTransferFunction discretize_tustin(const Tf& tf, double dt);

}  // namespace exoshape
