#pragma once

#include "bsc/rational.hpp"

namespace bsc {

/// S(n,k), the number of partitions of an n-set into k nonempty blocks.
/// Computed by the triangular recurrence S(n+1,k) = k S(n,k) + S(n,k-1)
/// with a memoized table; exact for any n.
BigInt stirling2(int n, int k);

/// Same quantity through the alternating-sum formula
/// (1/k!) sum_j (-1)^j C(k,j) (k-j)^n, an independent route used for
/// cross-checks. 0^0 counts as 1.
BigInt stirling2_explicit(int n, int k);

}  // namespace bsc
