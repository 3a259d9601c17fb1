#include "qew/stats.hpp"

#include <stdexcept>

namespace qew {

StirlingTable::StirlingTable(unsigned max_p) {
    rows_.resize(max_p + 1);
    rows_[0] = {BigInt(1)};
    for (unsigned p = 1; p <= max_p; ++p) {
        rows_[p].assign(p + 1, BigInt(0));
        for (unsigned j = 1; j <= p; ++j) {
            // S(p, j) = j S(p-1, j) + S(p-1, j-1)
            BigInt up = (j < p) ? rows_[p - 1][j] : BigInt(0);
            rows_[p][j] = BigInt(j) * up + rows_[p - 1][j - 1];
        }
    }
}

const BigInt& StirlingTable::s(unsigned p, unsigned j) const {
    if (p >= rows_.size() || j >= rows_[p].size()) throw std::out_of_range("Stirling index");
    return rows_[p][j];
}

std::vector<BigInt> power_sum_coefficients(unsigned p) {
    if (p == 0) throw std::invalid_argument("power must be >= 1 (use F[0] directly for counts)");
    StirlingTable table(p);
    std::vector<BigInt> out;
    out.reserve(p);
    for (unsigned j = 1; j <= p; ++j) out.push_back(table.s(p, j));
    return out;
}

Series moment_series(const DerivationResult& result, unsigned p, int order) {
    if (result.F.size() <= p)
        throw std::invalid_argument("result holds derivatives up to order " +
                                    std::to_string(result.F.size() - 1) + "; power " +
                                    std::to_string(p) + " requires order " + std::to_string(p));
    std::vector<BigInt> weights = power_sum_coefficients(p);
    QuadElem acc = QuadElem::zero(result.delta);
    for (unsigned j = 1; j <= p; ++j) acc = acc + result.F[j].scaled(BigRational(weights[j - 1]));
    return acc.to_series(order);
}

std::vector<BigRational> power_sum_sequence(const StepSet& steps, unsigned p, int max_n) {
    if (p == 0) throw std::invalid_argument("power must be >= 1 (use the walk counts directly)");
    std::vector<BigInt> weights = power_sum_coefficients(p);
    auto derivs = q_derivatives_at_one(steps, max_n, p);
    std::vector<BigRational> out;
    out.reserve(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        BigInt acc = 0;
        // d^j/dq^j at q=1 is the j-th factorial moment of the area
        for (unsigned j = 1; j <= p; ++j) acc += weights[j - 1] * derivs[n][j];
        out.emplace_back(acc);
    }
    return out;
}

std::vector<StatsRow> stats_sequences(const StepSet& steps, int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    auto derivs = q_derivatives_at_one(steps, max_n, 2);
    std::vector<StatsRow> out;
    out.reserve(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        StatsRow row;
        row.n = n;
        row.a0 = derivs[n][0];
        row.a1 = BigRational(derivs[n][1]);
        // sum of area^2 = second factorial moment + first
        row.a2 = BigRational(derivs[n][2] + derivs[n][1]);
        if (row.a0 != 0) {
            row.defined = true;
            BigRational count(row.a0);
            row.mean = row.a1 / count;
            row.variance = row.a2 / count - row.mean * row.mean;
        }
        out.push_back(std::move(row));
    }
    return out;
}

double growth_estimate(const std::vector<BigRational>& values) {
    if (values.size() < 10) throw std::invalid_argument("growth estimate requires at least 10 terms");
    for (const auto& v : values)
        if (sgn(v) <= 0) throw std::invalid_argument("growth estimate requires positive values");
    std::vector<double> ratio(values.size());
    for (size_t i = 1; i < values.size(); ++i) {
        BigRational r = values[i] / values[i - 1];
        ratio[i] = mpq_get_d(r.get_mpq_t());
    }
    size_t last = values.size() - 1;
    return ratio[last] + static_cast<double>(last) * (ratio[last] - ratio[last - 1]);
}

}  // namespace qew
