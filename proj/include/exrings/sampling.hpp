#pragma once

// Random elements for property tests and randomized checkers.

#include "exrings/matrix.hpp"
#include "exrings/rng.hpp"

namespace exrings {

inline constexpr int kDefaultSampleDegree = 4;

/// Uniform polynomial of degree <= max_degree (possibly zero).
Poly random_poly(Rng& rng, int max_degree = kDefaultSampleDegree);
Poly random_nonzero_poly(Rng& rng, int max_degree = kDefaultSampleDegree);

/// Uniform scalar at a level. Poly2 entries have degree <= max_degree;
/// Rat2 values are ratios of such polynomials with a nonzero denominator.
Scalar random_scalar(Rng& rng, FieldTag tag, int max_degree = kDefaultSampleDegree);
Scalar random_nonzero_scalar(Rng& rng, FieldTag tag, int max_degree = kDefaultSampleDegree);

/// Random element of R for the context (entries in t*GF(2)[t] under the
/// augmentation restriction).
Matrix random_matrix(Rng& rng, const RingContext& ctx, int max_degree = kDefaultSampleDegree);
/// Random element with trace zero.
Matrix random_trace_zero(Rng& rng, const RingContext& ctx, int max_degree = kDefaultSampleDegree);
/// Random noncentral element; trace_zero selects the class.
Matrix random_noncentral(Rng& rng, const RingContext& ctx, bool trace_zero, int max_degree = kDefaultSampleDegree);

}  // namespace exrings
