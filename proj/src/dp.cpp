#include "qew/dp.hpp"

#include <cmath>
#include <stdexcept>

namespace qew {

DPRow dp_base_row() {
    DPRow row;
    row.n = 0;
    row.cells.emplace(0, HalfQPoly::one());
    return row;
}

DPRow dp_step(const DPRow& prev, const StepSet& steps, int height_cap) {
    DPRow row;
    row.n = prev.n + 1;
    for (const auto& [m_prev, poly] : prev.cells) {
        for (int s : steps.steps()) {
            int m = m_prev + s;
            if (m < 0) continue;
            if (height_cap >= 0 && m > height_cap) continue;
            // trapezoid area of the step: m_prev + s/2, counted in halves
            int64_t halves = 2 * static_cast<int64_t>(m_prev) + s;
            row.cells[m].add_shifted(poly, halves);
        }
    }
    return row;
}

std::vector<HalfQPoly> area_enumerators_upto(const StepSet& steps, int max_n, bool prune) {
    std::vector<HalfQPoly> out;
    out.reserve(max_n + 1);
    DPRow row = dp_base_row();
    out.push_back(row.cells.at(0));
    for (int n = 1; n <= max_n; ++n) {
        int cap = -1;
        if (prune) cap = (max_n - n) * steps.max_descent();
        row = dp_step(row, steps, cap);
        auto it = row.cells.find(0);
        HalfQPoly a0 = (it == row.cells.end()) ? HalfQPoly() : it->second;
        if (!a0.integer_exponents_only())
            throw std::logic_error("closed-walk enumerator has a half-integer exponent");
        out.push_back(std::move(a0));
    }
    return out;
}

std::map<int64_t, BigInt> brute_force_area_multiset(const StepSet& steps, int n) {
    if (n > 0 && static_cast<double>(n) * std::log(static_cast<double>(steps.size())) > std::log(1e7))
        throw std::invalid_argument(
            "brute force guard exceeded (|S|^n > 1e7); use the dynamic program instead");

    std::map<int64_t, BigInt> out;
    // depth-first over step sequences, tracking height and area in halves
    struct Frame {
        int height;
        int64_t area_halves;
    };
    std::vector<size_t> choice(n, 0);
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    int depth = 0;
    const auto& ss = steps.steps();
    while (depth >= 0) {
        if (depth == n) {
            if (stack[depth].height == 0) {
                int64_t halves = stack[depth].area_halves;
                out[halves / 2] += 1;  // closed walks have even half-counts
            }
            --depth;
            continue;
        }
        size_t& c = choice[depth];
        if (c == ss.size()) {
            c = 0;
            --depth;
            continue;
        }
        int s = ss[c++];
        int h = stack[depth].height;
        if (h + s < 0) continue;
        Frame next{h + s, stack[depth].area_halves + 2 * h + s};
        if (static_cast<int>(stack.size()) == depth + 1)
            stack.push_back(next);
        else
            stack[depth + 1] = next;
        ++depth;
    }
    return out;
}

BigRational factorial_moment_from_poly(const HalfQPoly& p, unsigned k) {
    BigInt acc = 0;
    for (const auto& [h, c] : p.terms()) {
        if (h % 2 != 0)
            throw std::domain_error("half-integer exponent present; factorial moments need integer exponents");
        acc += c * falling_factorial(BigInt(h / 2), k);
    }
    return BigRational(acc);
}

std::vector<std::vector<BigInt>> q_derivatives_at_one(const StepSet& steps, int max_n, unsigned max_k,
                                                      bool prune) {
    // Cell vectors hold 2^j * (d^j/dq^j A_{m,n})(1): multiplying by q^(h/2)
    // maps entry j to sum_i C(j,i) * w_i(h) * entry_{j-i} with
    // w_i(h) = h (h-2) (h-4) ... (h-2i+2), which keeps everything integral.
    const unsigned K = max_k;
    std::vector<std::vector<BigInt>> binom(K + 1, std::vector<BigInt>(K + 1, 0));
    for (unsigned j = 0; j <= K; ++j)
        for (unsigned i = 0; i <= j; ++i) binom[j][i] = binomial(j, i);

    using Cell = std::vector<BigInt>;
    std::map<int, Cell> row;
    row.emplace(0, Cell(K + 1, 0));
    row.at(0)[0] = 1;

    std::vector<std::vector<BigInt>> out;
    out.reserve(max_n + 1);
    auto emit = [&](const std::map<int, Cell>& r) {
        std::vector<BigInt> d(K + 1, 0);
        auto it = r.find(0);
        if (it != r.end()) {
            for (unsigned j = 0; j <= K; ++j) {
                BigInt v = it->second[j];
                if (!mpz_divisible_2exp_p(v.get_mpz_t(), j))
                    throw std::logic_error("closed-walk derivative not integral");
                mpz_tdiv_q_2exp(d[j].get_mpz_t(), v.get_mpz_t(), j);
            }
        }
        out.push_back(std::move(d));
    };
    emit(row);

    std::vector<BigInt> w(K + 1);
    for (int n = 1; n <= max_n; ++n) {
        int cap = prune ? (max_n - n) * steps.max_descent() : -1;
        std::map<int, Cell> next;
        for (const auto& [m_prev, cell] : row) {
            for (int s : steps.steps()) {
                int m = m_prev + s;
                if (m < 0) continue;
                if (cap >= 0 && m > cap) continue;
                int64_t h = 2 * static_cast<int64_t>(m_prev) + s;
                w[0] = 1;
                for (unsigned i = 1; i <= K; ++i) w[i] = w[i - 1] * (h - 2 * static_cast<int64_t>(i - 1));
                auto [it, inserted] = next.try_emplace(m, Cell(K + 1, 0));
                Cell& acc = it->second;
                for (unsigned j = 0; j <= K; ++j)
                    for (unsigned i = 0; i <= j; ++i) acc[j] += binom[j][i] * w[i] * cell[j - i];
            }
        }
        row = std::move(next);
        emit(row);
    }
    return out;
}

}  // namespace qew
