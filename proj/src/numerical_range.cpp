#include "minkprod/numerical_range.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace minkprod {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
    Eigen::MatrixXcd m(a.n, a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) m(i, j) = a.at(i, j);
    return m;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int n_, std::vector<Complex> e) : n(n_), entries(std::move(e)) {
    if (n <= 0) throw InvalidInput("ComplexMatrix: dimension must be positive");
    if (entries.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw InvalidInput("ComplexMatrix: entry count does not match dimension");
    for (Complex z : entries)
        if (!is_finite(z)) throw InvalidInput("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
    const int n = static_cast<int>(diag.size());
    std::vector<Complex> e(static_cast<size_t>(n) * n, Complex(0.0));
    ComplexMatrix m(n, std::move(e));
    for (int i = 0; i < n; ++i) m.at(i, i) = diag[static_cast<size_t>(i)];
    return m;
}

double numerical_range_support(const ComplexMatrix& a, double theta) {
    const Eigen::MatrixXcd m = std::polar(1.0, -theta) * to_eigen(a);
    const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalFailure("numerical_range_support: eigensolver failed");
    return solver.eigenvalues()(a.n - 1);
}

ConvexPolygon numerical_range_boundary(const ComplexMatrix& a, int angles) {
    if (angles < 3) throw InvalidInput("numerical_range_boundary: need >= 3 angles");
    const Eigen::MatrixXcd ae = to_eigen(a);
    const double scale = std::max(1.0, ae.cwiseAbs().maxCoeff());

    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(2 * angles));
    for (int k = 0; k < angles; ++k) {
        const double theta = 2.0 * M_PI * k / angles;
        const Complex rot = std::polar(1.0, -theta);
        const Eigen::MatrixXcd m = rot * ae;
        const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
        if (solver.info() != Eigen::Success)
            throw NumericalFailure("numerical_range_boundary: eigensolver failed");
        const auto& evals = solver.eigenvalues();
        const double top = evals(a.n - 1);

        // collect the top eigenspace (degenerate within 1e-10 of the top)
        int first = a.n - 1;
        while (first > 0 && top - evals(first - 1) <= 1e-10 * scale) --first;
        const int dim = a.n - first;

        if (dim == 1) {
            const Eigen::VectorXcd x = solver.eigenvectors().col(a.n - 1);
            const Complex w = (x.adjoint() * ae * x)(0, 0);
            pts.push_back(w);
            continue;
        }
        // flat face: recover both extreme points by extremizing
        // Im(e^{-i theta} x* A x) over the top eigenspace
        const Eigen::MatrixXcd v = solver.eigenvectors().rightCols(dim);
        const Eigen::MatrixXcd sub = v.adjoint() * (rot * ae) * v;
        const Eigen::MatrixXcd g = (sub - sub.adjoint()) / Complex(0.0, 2.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> gsolver(g);
        if (gsolver.info() != Eigen::Success)
            throw NumericalFailure("numerical_range_boundary: face solver failed");
        for (int which : {0, dim - 1}) {
            const Eigen::VectorXcd x = v * gsolver.eigenvectors().col(which);
            pts.push_back((x.adjoint() * ae * x)(0, 0) / x.squaredNorm());
        }
    }
    return convex_hull(pts);
}

ProductRangeHandle product_numerical_range(const ComplexMatrix& a, const ComplexMatrix& b,
                                           int angles) {
    ProductRangeHandle out;
    out.w1 = numerical_range_boundary(a, angles);
    out.w2 = numerical_range_boundary(b, angles);
    return out;
}

}  // namespace minkprod
