#include "qew/solver.hpp"

#include "qew/series.hpp"

#include <stdexcept>

namespace qew {

namespace {

constexpr int kBranchProbeOrder = 10;

void check_contraction(const UniPoly& Q1, const UniPoly& R1) {
    if ((!Q1.is_zero() && Q1.valuation() < 1) || (!R1.is_zero() && R1.valuation() < 1))
        throw std::domain_error(
            "functional equation needs ord_x Q(x,1) >= 1 and ord_x R(x,1) >= 1");
}

}  // namespace

Q1Branch solve_q1_branch(const BiPoly& P, const BiPoly& Q, const BiPoly& R) {
    UniPoly P1 = P.eval_q1();
    UniPoly Q1 = Q.eval_q1();
    UniPoly R1 = R.eval_q1();
    check_contraction(Q1, R1);
    UniPoly one_minus_q1 = UniPoly::one() - Q1;

    if (R1.is_zero()) {
        // linear case: f = P1 / (1 - Q1), no square root needed
        QuadElem f0 = QuadElem::rational(RatFunc(P1, one_minus_q1), UniPoly::one());
        return {UniPoly::one(), f0, 1, one_minus_q1, UniPoly::one(), false};
    }

    UniPoly delta_raw = one_minus_q1 * one_minus_q1 - (P1 * R1).scaled(BigRational(4));
    if (delta_raw.is_zero())
        throw std::domain_error("degenerate functional equation: zero discriminant");
    auto [s, sf] = squarefree_decompose(delta_raw);
    if (!(s * s * sf == delta_raw))
        throw std::domain_error("no analytic branch: discriminant negative at lowest order");
    if (!sf.is_constant()) {
        BigRational d0 = sf.coeff(0);
        if (d0 == 0 || !rational_square_root(d0, nullptr))
            throw std::domain_error(
                "no analytic branch: delta(0) is not the square of a nonzero rational");
    }

    Series target = series_fixed_point_solve(P1, Q1, R1, kBranchProbeOrder);
    UniPoly twice_r1 = R1.scaled(BigRational(2));
    RatFunc a(one_minus_q1, twice_r1);
    for (int sigma : {+1, -1}) {
        RatFunc b_raw(UniPoly::constant(-sigma), twice_r1);
        QuadElem cand = QuadElem::normalized(a, b_raw, delta_raw);
        try {
            if (cand.to_series(kBranchProbeOrder) == target)
                return {cand.delta(), cand, sigma, s, delta_raw, true};
        } catch (const std::domain_error&) {
            // this sign has a pole at x = 0; try the other one
        }
    }
    throw std::domain_error("no analytic branch");
}

QuadElem jet_of_shifted_arg(const std::vector<QuadElem>& F, int m) {
    if (static_cast<int>(F.size()) <= m)
        throw std::invalid_argument("jet_of_shifted_arg needs entries 0..m");
    const UniPoly& delta = F[0].delta();
    QuadElem acc = QuadElem::zero(delta);
    for (int k = 0; k <= m; ++k) {
        int j = m - k;
        QuadElem d = F[k];
        for (int t = 0; t < j; ++t) d = d.derivative_x();
        BigRational w = make_rational(BigInt(1), factorial(k) * factorial(j));
        acc = acc + d.scaled(RatFunc(UniPoly::monomial(w, j), UniPoly::one()));
    }
    return acc;
}

namespace {

// eps^m coefficient of P + Q*g + R*(g conv h), with g the eps-jet of the
// solution and h the eps-jet of the shifted-argument factor f(qx, q).
QuadElem rhs_eps_coeff(const std::vector<UniPoly>& pj, const std::vector<UniPoly>& qj,
                       const std::vector<UniPoly>& rj, const EpsJet& g, const EpsJet& h, int m,
                       const UniPoly& delta) {
    QuadElem acc = QuadElem::rational(RatFunc::from_poly(pj[m]), delta);
    for (int i = 0; i <= m; ++i) {
        if (qj[i].is_zero()) continue;
        acc = acc + g.coeffs[m - i].scaled(RatFunc::from_poly(qj[i]));
    }
    for (int i = 0; i <= m; ++i) {
        if (rj[i].is_zero()) continue;
        QuadElem conv = QuadElem::zero(delta);
        for (int k = 0; k + i <= m; ++k) conv = conv + g.coeffs[k] * h.coeffs[m - i - k];
        acc = acc + conv.scaled(RatFunc::from_poly(rj[i]));
    }
    return acc;
}

}  // namespace

DerivationResult derk(const BiPoly& P, const BiPoly& Q, const BiPoly& R, int K) {
    Q1Branch branch = solve_q1_branch(P, Q, R);
    const UniPoly& delta = branch.delta;

    std::vector<UniPoly> pj = P.eps_expand(K);
    std::vector<UniPoly> qj = Q.eps_expand(K);
    std::vector<UniPoly> rj = R.eps_expand(K);

    // divisor of every linear solve: 1 - Q1 - 2 R1 F0, which equals
    // sigma * sqrt(delta_raw) in the quadratic case and 1 - Q1 in the linear one
    QuadElem two_r1f0 = branch.F0.scaled(RatFunc::from_poly(rj[0].scaled(BigRational(2))));
    QuadElem divisor =
        QuadElem::rational(RatFunc::from_poly(UniPoly::one() - qj[0]), delta) - two_r1f0;
    QuadElem expected =
        branch.quadratic
            ? QuadElem::normalized(RatFunc(), RatFunc::constant(branch.sign), branch.delta_raw)
            : QuadElem::rational(RatFunc::from_poly(branch.root_scale), delta);
    if (!(divisor == expected))
        throw std::logic_error("linear-solve divisor is not the branch square root");
    QuadElem divisor_inv = divisor.inverse();

    std::vector<QuadElem> F{branch.F0};  // unnormalized derivatives f^(k)(x,1)
    EpsJet g{{branch.F0}};               // Taylor coefficients F[k]/k!
    EpsJet h{{branch.F0}};               // eps-jet of f(qx, q)
    for (int m = 1; m <= K; ++m) {
        // with F[m] set to zero, the eps^m coefficient of the right-hand side
        // collects every known term; the unknown enters linearly via divisor
        F.push_back(QuadElem::zero(delta));
        g.coeffs.push_back(QuadElem::zero(delta));
        h.coeffs.push_back(jet_of_shifted_arg(F, m));
        QuadElem rhs = rhs_eps_coeff(pj, qj, rj, g, h, m, delta);
        QuadElem gm = rhs * divisor_inv;
        g.coeffs[m] = gm;
        h.coeffs[m] = h.coeffs[m] + gm;  // the k=m, j=0 term of the shifted jet is F[m]/m!
        F[m] = gm.scaled(BigRational(factorial(m)));
    }
    return {delta, std::move(F), P, Q, R, branch.sign};
}

bool residual_check(const DerivationResult& result) {
    int K = static_cast<int>(result.F.size()) - 1;
    if (K < 0) return false;
    const UniPoly& delta = result.delta;
    std::vector<UniPoly> pj = result.P.eps_expand(K);
    std::vector<UniPoly> qj = result.Q.eps_expand(K);
    std::vector<UniPoly> rj = result.R.eps_expand(K);

    EpsJet g, h;
    g.coeffs.reserve(K + 1);
    h.coeffs.reserve(K + 1);
    for (int k = 0; k <= K; ++k) {
        g.coeffs.push_back(result.F[k].scaled(make_rational(BigInt(1), factorial(k))));
        h.coeffs.push_back(jet_of_shifted_arg(result.F, k));
    }
    for (int m = 0; m <= K; ++m) {
        QuadElem rhs = rhs_eps_coeff(pj, qj, rj, g, h, m, delta);
        if (!(g.coeffs[m] - rhs).is_zero()) return false;
    }
    return true;
}

}  // namespace qew
