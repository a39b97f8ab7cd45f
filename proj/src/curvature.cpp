#include "rigidity/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "rigidity/error.hpp"
#include "rigidity/inequalities.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity {

AlgCurvTensor::AlgCurvTensor(int n) : n_(n), t_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

double AlgCurvTensor::norm_sq() const { return inner(*this); }

double AlgCurvTensor::inner(const AlgCurvTensor& other) const {
    if (other.n_ != n_) fail(ErrorCode::DimensionMismatch, "tensor inner product dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < t_.size(); ++i) s += t_[i] * other.t_[i];
    return s;
}

double AlgCurvTensor::max_abs() const {
    double m = 0.0;
    for (double v : t_) m = std::max(m, std::abs(v));
    return m;
}

double AlgCurvTensor::symmetry_residual() const {
    const auto& t = *this;
    double r = 0.0;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < n_; ++d) {
                    const double v = t(a, b, c, d);
                    r = std::max({r, std::abs(v + t(b, a, c, d)), std::abs(v + t(a, b, d, c)),
                                  std::abs(v - t(c, d, a, b))});
                }
    return r;
}

double AlgCurvTensor::bianchi_residual() const {
    const auto& t = *this;
    double r = 0.0;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                for (int d = 0; d < n_; ++d) r = std::max(r, std::abs(t(a, b, c, d) + t(b, c, a, d) + t(c, a, b, d)));
    return r;
}

double AlgCurvTensor::trace_residual() const {
    double r = 0.0;
    for (int b = 0; b < n_; ++b)
        for (int d = 0; d < n_; ++d) {
            double s = 0.0;
            for (int a = 0; a < n_; ++a) s += (*this)(a, b, a, d);
            r = std::max(r, std::abs(s));
        }
    return r;
}

AlgCurvTensor& AlgCurvTensor::operator+=(const AlgCurvTensor& rhs) {
    if (rhs.n_ != n_) fail(ErrorCode::DimensionMismatch, "tensor sum dimension mismatch");
    for (std::size_t i = 0; i < t_.size(); ++i) t_[i] += rhs.t_[i];
    return *this;
}

AlgCurvTensor& AlgCurvTensor::operator*=(double s) {
    for (double& v : t_) v *= s;
    return *this;
}

AlgCurvTensor kulkarni_nomizu(const SymBilinear& s, const SymBilinear& t) {
    if (s.dim() != t.dim()) fail(ErrorCode::DimensionMismatch, "Kulkarni-Nomizu factors differ in dimension");
    const int n = s.dim();
    AlgCurvTensor out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    out(a, b, c, d) = s(a, c) * t(b, d) + s(b, d) * t(a, c) - s(a, d) * t(b, c) - s(b, c) * t(a, d);
    return out;
}

Fialkow fialkow_tensor(const SymMatrix& traceless, const Tolerances& tol) {
    const int n = traceless.dim();
    if (n < 4) fail(ErrorCode::BadDimension, "Fialkow tensor needs n >= 4");
    require_trace_free(traceless, tol);
    const double g = traceless.frobenius_sq() / (2.0 * (n - 1));
    SymMatrix f = traceless.square();
    for (int i = 0; i < n; ++i) f.set(i, i, f(i, i) - g);
    f *= 1.0 / (n - 2);
    return {std::move(f), g};
}

AlgCurvTensor weyl_from_gauss_codazzi(const SymMatrix& traceless, const Tolerances& tol) {
    const Fialkow f = fialkow_tensor(traceless, tol);
    AlgCurvTensor w = kulkarni_nomizu(traceless, traceless);
    w *= 0.5;
    w += kulkarni_nomizu(f.tensor, SymMatrix::identity(traceless.dim()));
    return w;
}

double weyl_norm_closed_form(double norm_sq, double square_norm_sq, int n) {
    if (n < 4) fail(ErrorCode::BadDimension, "Weyl closed form needs n >= 4");
    const double dn = n;
    return 2.0 * (dn * dn - 3.0 * dn + 3.0) / ((dn - 1.0) * (dn - 2.0)) * norm_sq * norm_sq -
           2.0 * dn / (dn - 2.0) * square_norm_sq;
}

KnIdentityResiduals kn_identity_suite(const SymMatrix& traceless, const Tolerances& tol) {
    const int n = traceless.dim();
    const Fialkow f = fialkow_tensor(traceless, tol);
    const MatrixNorms nm = norms(traceless);
    const AlgCurvTensor aa = kulkarni_nomizu(traceless, traceless);
    const AlgCurvTensor fg = kulkarni_nomizu(f.tensor, SymMatrix::identity(n));
    const double a2f = frobenius_inner(traceless.square(), f.tensor);
    const double norm4 = nm.norm_sq * nm.norm_sq;
    const double dn = n;

    KnIdentityResiduals out;
    out.residuals[0] = aa.norm_sq() - (8.0 * norm4 - 8.0 * nm.square_norm_sq);
    out.residuals[1] = aa.inner(fg) + 8.0 * a2f;
    out.residuals[2] = fg.norm_sq() - 4.0 * a2f;
    out.residuals[3] = a2f - (nm.square_norm_sq / (dn - 2.0) - norm4 / (2.0 * (dn - 1.0) * (dn - 2.0)));
    out.scale = std::max(1.0, norm4);
    return out;
}

}  // namespace rigidity
