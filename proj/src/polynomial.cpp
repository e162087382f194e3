#include "exoshape/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exoshape/errors.hpp"

namespace exoshape {

namespace {
constexpr double kTrimTol = 1e-14;  // leading-coefficient trim, relative
}

Polynomial::Polynomial(Eigen::VectorXd coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) coeffs_ = Eigen::VectorXd::Zero(1);
    trim();
}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(Eigen::Map<const Eigen::VectorXd>(coeffs.begin(),
                                                static_cast<Eigen::Index>(coeffs.size()))) {
    if (coeffs_.size() == 0) coeffs_ = Eigen::VectorXd::Zero(1);
    trim();
}

Polynomial Polynomial::monomial(double c, int k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<std::complex<double>>& roots,
                                  double leading) {
    std::vector<std::complex<double>> c(roots.size() + 1, 0.0);
    c[0] = leading;
    std::size_t deg = 0;
    for (const auto& r : roots) {
        ++deg;
        for (std::size_t k = deg; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    // c holds ascending coefficients of leading * prod(s - r_i)
    Eigen::VectorXd out(static_cast<Eigen::Index>(deg + 1));
    double scale = 0.0;
    for (std::size_t k = 0; k <= deg; ++k) scale = std::max(scale, std::abs(c[k]));
    for (std::size_t k = 0; k <= deg; ++k) {
        const auto& v = c[k];
        out[static_cast<Eigen::Index>(k)] = v.real();
        if (std::abs(v.imag()) > 1e-9 * std::max(1.0, scale))
            throw Error("from_roots: roots are not conjugate-symmetric");
    }
    return Polynomial(std::move(out));
}

bool Polynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == 0.0;
}

void Polynomial::trim() {
    const double scale = coeffs_.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        coeffs_ = Eigen::VectorXd::Zero(1);
        return;
    }
    Eigen::Index last = coeffs_.size() - 1;
    while (last > 0 && std::abs(coeffs_[last]) <= kTrimTol * scale) --last;
    if (std::abs(coeffs_[last]) <= kTrimTol * scale) {
        coeffs_ = Eigen::VectorXd::Zero(1);
        return;
    }
    coeffs_.conservativeResize(last + 1);
}

std::complex<double> Polynomial::eval(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) acc = acc * s + coeffs_[k];
    return acc;
}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) acc = acc * s + coeffs_[k];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return zero();
    Eigen::VectorXd d(coeffs_.size() - 1);
    for (Eigen::Index k = 1; k < coeffs_.size(); ++k) d[k - 1] = k * coeffs_[k];
    return Polynomial(std::move(d));
}

int Polynomial::trailing_zero_count() const {
    if (is_zero()) return 0;
    const double scale = max_abs_coeff();
    int n = 0;
    while (n < degree() && std::abs(coeffs_[n]) <= 1e-12 * scale) ++n;
    return n;
}

Polynomial Polynomial::shift_down(int k) const {
    if (k == 0) return *this;
    if (k > degree()) throw Error("shift_down: k exceeds degree");
    return Polynomial(coeffs_.tail(coeffs_.size() - k).eval());
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const Eigen::Index n = std::max(a.coeffs_.size(), b.coeffs_.size());
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    c.head(a.coeffs_.size()) = a.coeffs_;
    c.head(b.coeffs_.size()) += b.coeffs_;
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    const Eigen::Index n = std::max(a.coeffs_.size(), b.coeffs_.size());
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    c.head(a.coeffs_.size()) = a.coeffs_;
    c.head(b.coeffs_.size()) -= b.coeffs_;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    Eigen::VectorXd c = Eigen::VectorXd::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i)
        for (Eigen::Index j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double c, const Polynomial& p) {
    return Polynomial((c * p.coeffs_).eval());
}

Polynomial Polynomial::snapped(double tol_rel) const {
    if (is_zero()) return *this;
    const double scale = max_abs_coeff();
    Eigen::VectorXd c = coeffs_;
    for (Eigen::Index k = 0; k < c.size(); ++k)
        if (std::abs(c[k]) < tol_rel * scale) c[k] = 0.0;
    return Polynomial(std::move(c));
}

namespace {

// One Aberth-Ehrlich pass; returns the largest correction step taken.
double aberth_step(const Polynomial& p, const Polynomial& dp,
                   std::vector<std::complex<double>>& z) {
    const std::size_t n = z.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> pi = p.eval(z[i]);
        const std::complex<double> dpi = dp.eval(z[i]);
        std::complex<double> w;
        if (dpi == 0.0) {
            w = pi == 0.0 ? std::complex<double>(0.0) : std::complex<double>(1e-8, 1e-8);
        } else {
            w = pi / dpi;
        }
        std::complex<double> sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const std::complex<double> d = z[i] - z[j];
            if (d != 0.0) sum += 1.0 / d;
        }
        const std::complex<double> denom = 1.0 - w * sum;
        const std::complex<double> corr = denom == 0.0 ? w : w / denom;
        z[i] -= corr;
        worst = std::max(worst, std::abs(corr));
    }
    return worst;
}

// Backward-error style residual: |p(r)| relative to sum_k |a_k||r|^k.
double scaled_residual(const Polynomial& p, std::complex<double> r) {
    const double ar = std::abs(r);
    double norm = 0.0;
    double pw = 1.0;
    for (Eigen::Index k = 0; k < p.coeffs().size(); ++k) {
        norm += std::abs(p.coeffs()[k]) * pw;
        pw *= ar;
    }
    if (norm == 0.0) return 0.0;
    return std::abs(p.eval(r)) / norm;
}

void enforce_conjugate_pairs(std::vector<std::complex<double>>& roots) {
    const double tol = 1e-8;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        auto& zi = roots[i];
        if (std::abs(zi.imag()) <= tol * (1.0 + std::abs(zi))) {
            zi = {zi.real(), 0.0};
            used[i] = true;
            continue;
        }
        // find the closest unused conjugate partner
        std::size_t best = i;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i || used[j]) continue;
            const double d = std::abs(roots[j] - std::conj(zi));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best != i && best_d <= 1e-6 * (1.0 + std::abs(zi))) {
            const std::complex<double> avg = 0.5 * (zi + std::conj(roots[best]));
            zi = avg;
            roots[best] = std::conj(avg);
            used[i] = used[best] = true;
        } else {
            used[i] = true;  // leave as found; residual check guards correctness
        }
    }
}

}  // namespace

std::vector<std::complex<double>> find_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error("find_roots: zero polynomial");
    if (p.degree() < 1) return {};

    // factor out exact roots at the origin first
    const int nz = p.trailing_zero_count();
    Polynomial q = p.shift_down(nz).snapped();
    std::vector<std::complex<double>> roots(nz, 0.0);
    const int n = q.degree();
    if (n == 0) return roots;
    if (n == 1) {
        roots.emplace_back(-q[0] / q[1], 0.0);
        return roots;
    }
    if (n == 2) {
        // quadratic formula, numerically stable variant
        const double a = q[2], b = q[1], c = q[0];
        const double disc = b * b - 4.0 * a * c;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            const double q0 = -0.5 * (b + (b >= 0.0 ? sq : -sq));
            double r1 = q0 / a;
            double r2 = (q0 != 0.0) ? c / q0 : -b / a - r1;
            roots.emplace_back(r1, 0.0);
            roots.emplace_back(r2, 0.0);
        } else {
            const double re = -b / (2.0 * a);
            const double im = std::sqrt(-disc) / (2.0 * a);
            roots.emplace_back(re, im);
            roots.emplace_back(re, -im);
        }
        return roots;
    }

    // Aberth-Ehrlich: initial guesses on a perturbed circle
    const double an = std::abs(q.leading());
    double ratio = 0.0;
    for (int k = 0; k < n; ++k) ratio = std::max(ratio, std::abs(q[k]) / an);
    const double radius = 1.0 + ratio;
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; ++i) {
        const double angle =
            2.0 * std::numbers::pi * (i + 0.25) / n + 0.43;  // fixed perturbation
        z[i] = std::polar(radius * (1.0 + 1e-3 * i), angle);
    }
    const Polynomial dq = q.derivative();
    const int max_iter = 500;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        const double step = aberth_step(q, dq, z);
        if (step < 1e-12 * radius) {
            converged = true;
            break;
        }
    }
    (void)converged;  // residual check below is the real gate
    for (const auto& r : z)
        if (scaled_residual(q, r) > 1e-8)
            throw NoConvergence("find_roots: residual above 1e-8 after iteration cap");

    enforce_conjugate_pairs(z);
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace exoshape
