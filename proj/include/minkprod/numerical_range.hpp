#pragma once

#include "minkprod/geometry.hpp"

namespace minkprod {

/// Dense square complex matrix, row-major.
struct ComplexMatrix {
    int n = 0;
    std::vector<Complex> entries;

    ComplexMatrix() = default;
    ComplexMatrix(int n_, std::vector<Complex> e);
    static ComplexMatrix diagonal(const std::vector<Complex>& diag);

    Complex& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
    Complex at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

/// Polygonal approximation of the numerical range W(A) = {x* A x : |x| = 1}:
/// for each angle the boundary point comes from a top eigenvector of the
/// Hermitian part of e^{-i theta} A; degenerate top eigenvalues (flat faces)
/// contribute both face endpoints.
ConvexPolygon numerical_range_boundary(const ComplexMatrix& a, int angles);

/// Support value max Re(e^{-i theta} W(A)) = lambda_max(Herm(e^{-i theta} A)).
double numerical_range_support(const ComplexMatrix& a, double theta);

/// The two factor ranges of W(A) W(B) plus product-ready bodies for the
/// membership and star-center machinery.
struct ProductRangeHandle {
    ConvexPolygon w1;
    ConvexPolygon w2;

    ConvexBody body1() const { return ConvexBody(w1); }
    ConvexBody body2() const { return ConvexBody(w2); }
};

ProductRangeHandle product_numerical_range(const ComplexMatrix& a, const ComplexMatrix& b,
                                           int angles);

}  // namespace minkprod
