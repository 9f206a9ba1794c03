#pragma once

#include "minkprod/canonical.hpp"
#include "minkprod/polygon_product.hpp"

namespace minkprod {

/// Configuration of a segment times compact-convex-set product after frame
/// normalization: the shortcuts, then the five interval orderings of the
/// segment span [a, b] against the cone anchors [c, d].
enum class SegConvexConfig {
    ZeroShortcut,         // 0 in a factor: star center 0
    PositiveRay,          // a factor maps onto the positive reals: convex
    SimilarityContained,  // xi * segment fits inside the other factor
    A,                    // a <= b <= c <= d
    B,                    // a <= c <= b <= d
    C,                    // a <= c <  d <= b
    D,                    // c <= a <= d <= b
    E,                    // c <= d <= a <= b
};

struct SegConvexClassification {
    SegConvexConfig config = SegConvexConfig::ZeroShortcut;
    Complex xi1 = 1.0;          // frame map for the segment (configs A..E)
    Complex xi2 = 1.0;          // frame map for the convex factor
    double a = 0, b = 0;        // xi1 * segment = K(1 + ia, 1 + ib)
    double c = 0, d = 0;        // cone anchors of xi2 * K at 1 + ic, 1 + id
    Complex similarity_xi = 0;  // witness for SimilarityContained
};

/// Classify a segment times convex-body product. Throws ConeUndefined when
/// the angular support cone of K from 0 is not a proper cone (callers fall
/// back to candidate search).
SegConvexClassification classify_seg_convex(const Segment& s, const ConvexBody& k,
                                            double tol = kDefaultTol);

/// Verified star center of segment * convex body. Every returned center has
/// passed the sampled boundary-segment check; a failed verification raises
/// InternalInconsistency with the failing sample.
StarReport star_center_seg_convex(const Segment& s, const ConvexBody& k, double tol = 1e-7);

/// The two triangle lemmas behind the case analysis. L01 takes
/// K(1+ia, 1+id) * K(1+ic, 1+id, p) with a <= c <= d and returns
/// (1+ic)(1+id); L02 takes K(1+ia, 1+ib) * K(1+ic, 1+id, p) with
/// a < b <= c < d (no similarity containment) and returns (1+ib)(1+ic).
/// The asserted center is verified via exact membership along the one
/// nontrivial segment before being returned.
enum class TriangleLemma { L01, L02 };

Complex star_center_triangle_lemma(TriangleLemma which, double a, double b, double c,
                                   double d, Complex p, double tol = 1e-7);

}  // namespace minkprod
