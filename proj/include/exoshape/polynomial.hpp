#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace exoshape {

/// Real polynomial in the Laplace variable s, coefficients ascending:
/// coeffs[k] multiplies s^k. The zero polynomial is represented by a single
/// zero coefficient. Nonzero polynomials keep a nonzero leading coefficient
/// (enforced by trim()).
class Polynomial {
public:
    Polynomial() : coeffs_(Eigen::VectorXd::Zero(1)) {}
    explicit Polynomial(Eigen::VectorXd coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(double c) { return Polynomial{{c}}; }
    /// Monomial c * s^k.
    static Polynomial monomial(double c, int k);
    /// Monic polynomial with the given roots (complex roots must come in
    /// conjugate pairs; imaginary residue below tol is dropped).
    static Polynomial from_roots(const std::vector<std::complex<double>>& roots,
                                 double leading = 1.0);

    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;
    double leading() const { return coeffs_[coeffs_.size() - 1]; }
    double operator[](int k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
    double max_abs_coeff() const { return coeffs_.cwiseAbs().maxCoeff(); }

    std::complex<double> eval(std::complex<double> s) const;
    double eval(double s) const;

    Polynomial derivative() const;
    /// Number of roots at exactly s = 0, detected as leading-relative-zero
    /// low-order coefficients.
    int trailing_zero_count() const;
    /// Divide by s^k (requires trailing_zero_count() >= k).
    Polynomial shift_down(int k) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, double c) { return c * p; }
    Polynomial operator-() const { return -1.0 * *this; }

    /// Coefficients with |c| < tol_rel * max|c| are snapped to zero and the
    /// representation is re-trimmed. Used by canonicalization.
    Polynomial snapped(double tol_rel = 1e-12) const;

private:
    void trim();
    Eigen::VectorXd coeffs_;
};

/// All complex roots with multiplicity by Aberth-Ehrlich simultaneous
/// iteration. Conjugate symmetry is enforced on the result. Throws
/// NoConvergence if the scaled residual of any root exceeds 1e-8 after the
/// iteration cap.
std::vector<std::complex<double>> find_roots(const Polynomial& p);

}  // namespace exoshape
