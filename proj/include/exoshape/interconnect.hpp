#pragma once

#include <complex>
#include <string>

#include "exoshape/transfer_function.hpp"

namespace exoshape {

/// A "system": external compliance (position per external torque) paired
/// with motor compliance (position per motor torque). Both share the same
/// output position signal.
struct CompliancePair {
    Tf external;
    Tf motor;
    std::string label;
};

/// Reflected plant constants. All stiffness/inertia/damping strictly
/// positive; T is the control loop delay in seconds.
struct PlantParams {
    double J_m = 1.0;   // reflected motor inertia, kg m^2
    double B_m = 6.0;   // reflected motor damping, N m s/rad
    double K_s = 500.0; // actuator spring, N m/rad
    double J_j = 0.15;  // joint inertia, kg m^2
    double K_c = 300.0; // cuff spring, N m/rad
    double T = 0.002;   // control delay, s

    void validate() const;  // throws ValidationError
};

/// Parallel interconnection with a compliance c2:
/// external = (C1^-1 + C2^-1)^-1, motor = external * C1^-1 * H1.
CompliancePair parallel_interconnect(const CompliancePair& s1, const Tf& c2);

/// Series interconnection with a compliance c2:
/// external = C1 + C2, motor unchanged.
CompliancePair series_interconnect(const CompliancePair& s1, const Tf& c2);

/// Equivalent parallel compliance of the position feedback g:
/// C' = -C1 / (H1 g). When H1 carries a delay the result carries the
/// negated delay and must only be used pointwise in frequency.
Tf virtual_parallel(const CompliancePair& s1, const Tf& g);

/// Equivalent series compliance of the force feedback g: C' = g * H1.
Tf virtual_series(const CompliancePair& s1, const Tf& g);

struct VirtualMotor {
    double J_hat = 2.0;
    double B_hat = 20.0;
};

/// The seven-level interconnection chain plus the virtual motor target.
struct SystemChain {
    CompliancePair s1, s2, s3, s4, s5, s6, s7;
    CompliancePair s5_hat;

    const Tf& C4() const { return s4.external; }
    const Tf& C5() const { return s5.external; }
    const Tf& H5() const { return s5.motor; }
    const Tf& C6() const { return s6.external; }
    const Tf& C7() const { return s7.external; }
};

/// Builds the nominal chain by rational algebra with the loop delay dropped
/// (the closed loop over a delay is not a single-delay rational; realized
/// behavior is evaluated pointwise by FrequencyChain instead). Feedbacks are
/// torque-normalized: g_s multiplies tau_s, g_c multiplies tau_c, and g_c is
/// expected to already include the virtual-motor input filter. Improper
/// gains are accepted; they are analysis objects.
SystemChain build_system_chain(const PlantParams& p, const Tf& g_theta, const Tf& g_s,
                               const Tf& g_c, const VirtualMotor& vm);

/// Pointwise frequency-domain evaluation of the same chain with the loop
/// delay kept exactly (no Pade). Gains may be the realized (filtered,
/// proper) feedbacks or the nominal improper ones.
class FrequencyChain {
public:
    FrequencyChain(PlantParams p, Tf g_theta, Tf g_s, Tf g_c, double delay);

    struct Point {
        std::complex<double> C1, H1, C2, H2, C3, C4, C5, H5, C6, C7;
    };
    Point at(double omega) const;

    enum class Signal { C4, C5, C6, C7, ratio };  // ratio = C6/C5
    std::complex<double> at(double omega, Signal which) const;

    const PlantParams& plant() const { return p_; }
    double delay() const { return delay_; }

private:
    PlantParams p_;
    Tf g_theta_, g_s_, g_c_;
    double delay_;
};

}  // namespace exoshape
