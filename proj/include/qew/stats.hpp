#pragma once

#include "qew/dp.hpp"
#include "qew/series.hpp"
#include "qew/solver.hpp"
#include "qew/stepset.hpp"

#include <vector>

namespace qew {

/// Triangular table of Stirling numbers of the second kind.
class StirlingTable {
public:
    explicit StirlingTable(unsigned max_p);
    const BigInt& s(unsigned p, unsigned j) const;
    unsigned max_p() const { return static_cast<unsigned>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigInt>> rows_;  // rows_[p][j], 0 <= j <= p
};

/// [S(p,1), ..., S(p,p)]: the weights turning factorial moments into the
/// p-th power sum. p must be >= 1 (use F[0] directly for counts).
std::vector<BigInt> power_sum_coefficients(unsigned p);

/// Maclaurin series of sum_j S(p,j) F[j]: the enumerator of the sum of p-th
/// powers of areas. The result must contain derivatives up to order p.
Series moment_series(const DerivationResult& result, unsigned p, int order);

/// Power sums straight from the dynamic program (works for any step set):
/// entry n is the sum of area^p over closed walks of length n.
std::vector<BigRational> power_sum_sequence(const StepSet& steps, unsigned p, int max_n);

struct StatsRow {
    int n = 0;
    BigInt a0;         // walk count
    BigRational a1;    // total area
    BigRational a2;    // total squared area
    bool defined = false;  // false when a0 = 0
    BigRational mean;
    BigRational variance;
};

/// Exact mean/variance sequences for n = 0..max_n via the streaming
/// derivative DP; rows with no walks carry defined = false.
std::vector<StatsRow> stats_sequences(const StepSet& steps, int max_n);

/// Richardson-accelerated estimate of lim v(n+1)/v(n): with r_n the ratio
/// sequence, returns the last value of r_n + n (r_n - r_{n-1}). A heuristic
/// numeric; this is the module's only floating-point output.
double growth_estimate(const std::vector<BigRational>& values);

}  // namespace qew
