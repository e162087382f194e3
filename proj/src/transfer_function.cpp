#include "exoshape/transfer_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exoshape/errors.hpp"

namespace exoshape {

RationalTransferFunction::RationalTransferFunction(Polynomial num, Polynomial den, double delay)
    : num_(std::move(num)), den_(std::move(den)), delay_(delay) {
    if (den_.is_zero()) throw Error("transfer function: zero denominator");
    canonicalize();
}

void RationalTransferFunction::canonicalize() {
    num_ = num_.snapped();
    den_ = den_.snapped();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1.0);
        delay_ = 0.0;
        return;
    }
    // cancel shared roots at exactly s = 0
    const int k = std::min(num_.trailing_zero_count(), den_.trailing_zero_count());
    if (k > 0) {
        num_ = num_.shift_down(k);
        den_ = den_.shift_down(k);
    }
    const double lead = den_.leading();
    num_ = (1.0 / lead) * num_;
    den_ = (1.0 / lead) * den_;
}

double RationalTransferFunction::dc_gain() const {
    const double d0 = den_.eval(0.0);
    if (std::abs(d0) < 1e-300) throw PoleOnAxis("dc_gain: pole at s = 0");
    return num_.eval(0.0) / d0;
}

Tf operator+(const Tf& a, const Tf& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.delay() != b.delay())
        throw DelayMismatch("add: delays differ (" + std::to_string(a.delay()) + " vs " +
                            std::to_string(b.delay()) + ")");
    return {a.num() * b.den() + b.num() * a.den(), a.den() * b.den(), a.delay()};
}

Tf operator-(const Tf& a, const Tf& b) { return a + (-b); }

Tf operator-(const Tf& a) {
    if (a.is_zero()) return a;
    return {-a.num(), a.den(), a.delay()};
}

Tf operator*(const Tf& a, const Tf& b) {
    if (a.is_zero() || b.is_zero()) return Tf{};
    return {a.num() * b.num(), a.den() * b.den(), a.delay() + b.delay()};
}

Tf operator*(double c, const Tf& a) {
    if (c == 0.0 || a.is_zero()) return Tf{};
    return {c * a.num(), a.den(), a.delay()};
}

Tf inv(const Tf& a) {
    if (a.is_zero()) throw ZeroNumerator("inv: numerator identically zero");
    if (a.delay() != 0.0)
        throw NonInvertibleDelay("inv: cannot invert nonzero delay " + std::to_string(a.delay()));
    return {a.den(), a.num(), 0.0};
}

Tf inv_for_analysis(const Tf& a) {
    if (a.is_zero()) throw ZeroNumerator("inv_for_analysis: numerator identically zero");
    return {a.den(), a.num(), -a.delay()};
}

Tf operator/(const Tf& a, const Tf& b) { return a * inv(b); }

std::complex<double> evaluate_at_frequency(const Tf& tf, double omega) {
    const std::complex<double> s(0.0, omega);
    const std::complex<double> d = tf.den().eval(s);
    if (std::abs(d) < 1e-300) throw PoleOnAxis("evaluate: pole at jw, w = " + std::to_string(omega));
    std::complex<double> v = tf.num().eval(s) / d;
    if (tf.delay() != 0.0) v *= std::exp(std::complex<double>(0.0, -omega * tf.delay()));
    return v;
}

Tf cancel_common_factors(const Tf& a, double tol) {
    if (a.is_zero()) return a;
    if (a.num().degree() == 0 || a.den().degree() == 0) return a;

    // origin roots are already shared-cancelled by canonicalization; keep the
    // remainder exact by factoring them out before root matching
    const int zn = a.num().trailing_zero_count();
    const int zd = a.den().trailing_zero_count();
    const Polynomial pn = a.num().shift_down(zn);
    const Polynomial pd = a.den().shift_down(zd);

    if (pn.degree() == 0 || pd.degree() == 0) return a;
    std::vector<std::complex<double>> rn = find_roots(pn);
    std::vector<std::complex<double>> rd = find_roots(pd);

    std::vector<bool> num_keep(rn.size(), true), den_keep(rd.size(), true);
    bool cancelled = false;
    for (std::size_t i = 0; i < rn.size(); ++i) {
        std::size_t best = rd.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < rd.size(); ++j) {
            if (!den_keep[j]) continue;
            const double d = std::abs(rn[i] - rd[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best < rd.size() && best_d <= tol * (1.0 + std::abs(rd[best]))) {
            num_keep[i] = false;
            den_keep[best] = false;
            cancelled = true;
        }
    }
    if (!cancelled) return a;

    std::vector<std::complex<double>> kn, kd;
    for (std::size_t i = 0; i < rn.size(); ++i)
        if (num_keep[i]) kn.push_back(rn[i]);
    for (std::size_t j = 0; j < rd.size(); ++j)
        if (den_keep[j]) kd.push_back(rd[j]);
    Polynomial new_num = Polynomial::monomial(1.0, zn) * Polynomial::from_roots(kn, pn.leading());
    Polynomial new_den = Polynomial::monomial(1.0, zd) * Polynomial::from_roots(kd, pd.leading());
    return {std::move(new_num), std::move(new_den), a.delay()};
}

StabilityInfo classify_stability(const Tf& tf) {
    constexpr double eps_stab = 1e-9;
    StabilityInfo info{StabilityClass::stable, -std::numeric_limits<double>::infinity(), true};

    if (tf.den().degree() >= 1) {
        const auto poles = find_roots(tf.den());
        bool any_axis = false, any_right = false;
        for (const auto& p : poles) {
            info.worst_pole_real = std::max(info.worst_pole_real, p.real());
            if (p.real() > eps_stab)
                any_right = true;
            else if (p.real() >= -eps_stab)
                any_axis = true;
        }
        if (any_right)
            info.cls = StabilityClass::unstable;
        else if (any_axis)
            info.cls = StabilityClass::marginal;
    }
    if (!tf.is_zero() && tf.num().degree() >= 1) {
        for (const auto& z : find_roots(tf.num()))
            if (z.real() > eps_stab) info.minimum_phase = false;
    }
    return info;
}

std::complex<double> DiscreteTransferFunction::evaluate(double omega) const {
    const std::complex<double> zinv = std::exp(std::complex<double>(0.0, -omega * sample_period));
    std::complex<double> n = 0.0, d = 0.0;
    for (std::size_t k = num_z.size(); k-- > 0;) n = n * zinv + num_z[k];
    for (std::size_t k = den_z.size(); k-- > 0;) d = d * zinv + den_z[k];
    std::complex<double> v = n / d;
    if (delay_steps > 0) v *= std::pow(zinv, delay_steps);
    return v;
}

DiscreteTransferFunction discretize_tustin(const Tf& tf, double dt) {
    if (dt <= 0.0) throw Error("discretize_tustin: dt must be positive");
    if (!tf.is_proper())
        throw ImproperTransferFunction("discretize_tustin: deg(num) > deg(den)");

    const int n = tf.den().degree();
    const double c = 2.0 / dt;

    // multiply num and den by (1+w)^n, w = z^-1, and substitute
    // s^k -> c^k (1-w)^k (1+w)^(n-k)
    const Polynomial one_minus{1.0, -1.0};
    const Polynomial one_plus{1.0, 1.0};
    std::vector<Polynomial> basis(n + 1);
    for (int k = 0; k <= n; ++k) {
        Polynomial b = Polynomial::constant(std::pow(c, k));
        for (int i = 0; i < k; ++i) b = b * one_minus;
        for (int i = 0; i < n - k; ++i) b = b * one_plus;
        basis[k] = b;
    }
    Polynomial num_w = Polynomial::zero();
    Polynomial den_w = Polynomial::zero();
    for (int k = 0; k <= tf.num().degree(); ++k) num_w = num_w + tf.num()[k] * basis[k];
    for (int k = 0; k <= n; ++k) den_w = den_w + tf.den()[k] * basis[k];

    const double d0 = den_w[0];
    if (d0 == 0.0) throw Error("discretize_tustin: singular leading discrete coefficient");

    DiscreteTransferFunction out;
    out.sample_period = dt;
    out.delay_steps = static_cast<int>(std::lround(tf.delay() / dt));
    out.num_z.resize(n + 1, 0.0);
    out.den_z.resize(n + 1, 0.0);
    for (int k = 0; k <= num_w.degree() && k <= n; ++k) out.num_z[k] = num_w[k] / d0;
    for (int k = 0; k <= den_w.degree() && k <= n; ++k) out.den_z[k] = den_w[k] / d0;
    return out;
}

}  // namespace exoshape
