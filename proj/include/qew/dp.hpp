#pragma once

#include "qew/halfqpoly.hpp"
#include "qew/rational.hpp"
#include "qew/stepset.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qew {

/// Row n of the dynamic program: height m -> area enumerator of walks of
/// length n ending at height m that never go below the axis.
struct DPRow {
    int n = 0;
    std::map<int, HalfQPoly> cells;
};

/// Row 0: only the empty walk at height 0.
DPRow dp_base_row();

/// One transition of the recurrence: each step (1, s) from height m-s to m
/// contributes weight q^((2m-s)/2). A nonnegative height_cap drops cells
/// above it (valid when only lengths up to a known horizon matter).
DPRow dp_step(const DPRow& prev, const StepSet& steps, int height_cap = -1);

/// Area enumerators of closed walks: entry n is A_{0,n}(q) for n = 0..max_n.
/// Streams two rows; with prune, heights that cannot return to 0 within the
/// remaining steps are dropped.
std::vector<HalfQPoly> area_enumerators_upto(const StepSet& steps, int max_n, bool prune = false);

/// Exhaustive oracle: area -> number of closed nonnegative walks of length n
/// with that area. Closed-walk areas are integers. Guarded by |S|^n <= 1e7.
std::map<int64_t, BigInt> brute_force_area_multiset(const StepSet& steps, int n);

/// k-th derivative of p at q = 1: sum of c * m(m-1)...(m-k+1) over terms
/// c*q^m. Requires integer exponents.
BigRational factorial_moment_from_poly(const HalfQPoly& p, unsigned k);

/// Streaming q-derivative sums for closed walks: entry [n][j] is
/// d^j/dq^j A_{0,n}(q) at q = 1, exact, for j = 0..max_k. Only two rows of
/// per-height derivative vectors are held at a time.
std::vector<std::vector<BigInt>> q_derivatives_at_one(const StepSet& steps, int max_n, unsigned max_k,
                                                      bool prune = true);

}  // namespace qew
