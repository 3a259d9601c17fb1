#pragma once

#include "qew/bipoly.hpp"
#include "qew/quadfield.hpp"
#include "qew/unipoly.hpp"

#include <vector>

namespace qew {

/// Truncated Taylor jet in eps = q - 1 with field-element coefficients;
/// entry m is the coefficient of eps^m. All entries share one delta.
struct EpsJet {
    std::vector<QuadElem> coeffs;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Output of derk: F[k] is the k-th q-derivative of the solution at q = 1 as
/// an element of Q(x)[sqrt(delta)], together with the inputs and the chosen
/// square-root sign.
struct DerivationResult {
    UniPoly delta;
    std::vector<QuadElem> F;
    BiPoly P, Q, R;
    int branch_sign = 1;
};

struct Q1Branch {
    UniPoly delta;       // squarefree part of delta_raw (1 after constant folding)
    QuadElem F0;
    int sign;            // sigma: F0 = (1 - Q1 - sigma * sqrt(delta_raw)) / (2 R1)
    UniPoly root_scale;  // s from delta_raw = s^2 * delta; 1 - Q1 in the linear case
    UniPoly delta_raw;   // (1 - Q1)^2 - 4 P1 R1
    bool quadratic;      // false when R(x,1) = 0 and the equation is linear
};

/// Solve the q = 1 instance f = P1 + Q1 f + R1 f^2 for the branch analytic at
/// x = 0 (identified against the fixed-point series). R1 = 0 falls back to
/// the linear solve with delta = 1.
Q1Branch solve_q1_branch(const BiPoly& P, const BiPoly& Q, const BiPoly& R);

/// Coefficient of eps^m in f(qx, q) given F[k] = f^(k)(x,1):
/// sum over k+j=m of (1/k!) (x^j/j!) d^j/dx^j F[k].
QuadElem jet_of_shifted_arg(const std::vector<QuadElem>& F, int m);

/// The perturbation expansion: closed forms F[k] = f^(k)(x,1) for k = 0..K,
/// solved order by order from the eps-expansion of
/// f = P + Q f + R f(x,q) f(qx,q).
DerivationResult derk(const BiPoly& P, const BiPoly& Q, const BiPoly& R, int K);

/// Rebuild both sides of the functional equation as eps-jets from the
/// computed F and check that every coefficient of the difference vanishes.
bool residual_check(const DerivationResult& result);

}  // namespace qew
