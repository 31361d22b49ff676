#pragma once

#include "hyperverify/hypergeometric.hpp"
#include "hyperverify/quadrature.hpp"

// Integrands of the identity chain, each with its constant prefactor folded in.
// F below is 2F1(1, d; 2-d; .).
namespace hyperverify::integrands {

// 2F1 at an argument known together with its complement; picks the accurate side.
double eval_at(const Gauss2F1& f, double z, double zc);

// Main double integral in Duffy coordinates (s, t) on the unit square, Jacobian included:
// the two triangles (1-x, 1-y) = (s, st) and (st, s) are summed. Integrable for d < 0.8.
Integrand2D main_duffy(double d);

// Coefficient c of the leading corner term c s^(3-5d) t^(1-2d) (1+t)^-d of main_duffy,
// c = 2 (Gamma(2-d) Gamma(2d-1) / Gamma(d))^2.
double main_corner_coefficient(double d);

// main_duffy minus its leading corner term, with the subtraction done analytically near
// s = 0 so that nothing cancels. Integrable for 1/2 < d < 1.
Integrand2D main_subtracted(double d);

// The three below take their point as (y, x), so the F(y) factor is constant along a row.

// x^(2-2d) (1-x)^(1-2d) y^(1-d) (1-xy)^-d F(y), times Gamma(2-d)Gamma(2d-1)/(Gamma(d)(d-1)^2).
Integrand2D i2a_2d(double d);
// x^(2-2d) y^(1-d) (1-xy)^(1-3d) 2F1(d,2d-1;2d;(1-x)/(1-xy)) F(y), times Gamma(1-2d)/(Gamma(2-2d)(d-1)).
Integrand2D i2b_2d(double d);
// x^(3-3d) y^(1-d) (1-xy)^-2d (1-y)^(1-d) F(y) F(x(1-y)/(1-xy)) / (1-d)^2.
Integrand2D j2_2d(double d);

// w^(2-3d) 2F1(d,1-d;2-d;w) F(w) / ((1-d)^2 (4-5d)); integrates to J1 = J1a - J1b.
Integrand1D j1_1d(double d);

// Monte Carlo integrands on the unit cube; coordinates in order (z2, z3, z4, z5).
IntegrandND quad4d(double d);
// Coordinates (z2, z3, z5).
IntegrandND j1_3d(double d);
IntegrandND j2_3d(double d);
// Coordinates (z2, z3, z4).
IntegrandND i1_3d(double d);

}  // namespace hyperverify::integrands
