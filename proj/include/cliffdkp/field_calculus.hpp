#pragma once

#include <string>
#include <vector>

#include "cliffdkp/core_algebra.hpp"
#include "cliffdkp/field_poly.hpp"
#include "cliffdkp/rational_matrix.hpp"

namespace cliffdkp {

/// Algebra element with polynomial coefficients, e.g. Psi_(p) or nabla F.
using PolyElement = Element<FieldPoly>;

// Conventions for this module: the Latin metric is Euclidean, so y_I and y^I
// coincide, and every multi-index sum runs over canonical (increasing) I
// only. The 1/p! normalisations that accompany sums over unrestricted index
// tuples are therefore already absorbed.

/// nabla F = sum_I (P_I) dF/dy^I + sum_{a,I} (^aP_I) dF/dpi^a_I.
/// F may contain only y and pi symbols of rank p (KindError / RankError).
PolyElement nabla(const FieldPoly& F, int p, int n);

/// nabla^dag G = sum_I (^IP) dG/dy^I + sum_{a,I} (^IP_a) dG/dpi^a_I, i.e. the
/// Euclidean adjoint of nabla placed on E(I,[]) and E(I,[a]).
PolyElement nabla_adjoint(const FieldPoly& G, int p, int n);

/// p^mu_I -> Lambda^mu_c pi^c_I
FieldPoly to_pi(const FieldPoly& f, const FrameMap& lambda);
/// pi^c_I -> (Lambda^{-1})^c_nu p^nu_I
FieldPoly to_p(const FieldPoly& f, const FrameMap& lambda);

/// D_mu Psi_(p) = sum_I Dy[mu][I] (P_I) + sum_{a,I} Dpi[mu][a][I] (^aP_I)
PolyElement psi_derivative(int mu, int p, int n);

struct DwhEquation {
    std::string label;
    FieldPoly lhs;
    FieldPoly rhs;

    friend bool operator==(const DwhEquation&, const DwhEquation&) = default;
    std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

struct DwhEquationSet {
    int n = 0;
    int p = 0;
    /// One equation per Z_(p) basis key, labelled by the key:
    /// the coefficient of beta^mu D_mu Psi equated with that of nabla H.
    std::vector<DwhEquation> raw;
    /// The DWH pair families in polymomentum form:
    ///   "dp[I]":      sum_mu Dp[mu][mu][I] = -dH/dy^I
    ///   "dy[mu][I]":  Dy[mu][I] = dH/dp^mu_I
    std::vector<DwhEquation> normalized;
};

/// Derives the field equations beta^mu D_mu Psi_(p) = nabla H by coefficient
/// matching. H may contain y, pi and p symbols of rank p; p symbols are
/// rewritten as Lambda pi before differentiating.
DwhEquationSet dwh_derive(const FieldPoly& H, int p, const FrameMap& lambda);

/// The normalized families written down directly from derivatives of H with
/// respect to y and p (independent of the algebra).
std::vector<DwhEquation> dwh_closed_form(const FieldPoly& H, int p, const FrameMap& lambda);

/// {G, F}_mu from the algebra: C_(p)[(nabla^dag G) beta_mu (nabla F)] read off
/// as the coefficient of (P), with beta_mu = (Lambda^{-1})^a_mu b_{e_a}.
/// Because nabla and nabla^dag sum over canonical I only, no 1/p! factor
/// is applied. G and F are given in y/p symbols (pi is also accepted) and
/// the result is expressed in y/p symbols.
FieldPoly bracket(const FieldPoly& G, const FieldPoly& F, int mu, int p, const FrameMap& lambda);

/// sum_I dG/dy^I dF/dp^mu_I - dF/dy^I dG/dp^mu_I over canonical I.
FieldPoly bracket_closed_form(const FieldPoly& G, const FieldPoly& F, int mu, int p, const FrameMap& lambda);

/// 1/2 ({{G,F}_mu,K}_nu + {{G,F}_nu,K}_mu) + cyclic(G,F,K)
FieldPoly check_jacobi_sym(const FieldPoly& G, const FieldPoly& F, const FieldPoly& K, int mu, int nu, int p,
                           const FrameMap& lambda);

/// {GF, K}_mu - F{G,K}_mu - G{F,K}_mu
FieldPoly check_leibniz(const FieldPoly& G, const FieldPoly& F, const FieldPoly& K, int mu, int p,
                        const FrameMap& lambda);

}  // namespace cliffdkp
