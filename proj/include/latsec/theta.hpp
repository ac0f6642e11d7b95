// Jacobi theta functions on the positive imaginary axis (nome q = e^{-pi
// tau}) and theta series of Construction A lattices, plus a brute-force
// lattice-sum oracle for cross-checking the closed forms.
#ifndef LATSEC_THETA_HPP
#define LATSEC_THETA_HPP

#include "latsec/gf2code.hpp"

namespace latsec {

/// Below this the nome is too close to 1 for direct summation; callers are
/// expected to use the reflection Xi(tau) = Xi(1/tau) instead.
inline constexpr double kMinTau = 1e-3;

/// theta2(i tau) = sum_m q^{(m+1/2)^2}
double theta2(double tau);
/// theta3(i tau) = 1 + 2 sum_{m>=1} q^{m^2}
double theta3(double tau);
/// theta4(i tau) = 1 + 2 sum_{m>=1} (-1)^m q^{m^2}
double theta4(double tau);

/// Theta series of the scaled integer lattice nu Z^n: theta3(nu^2 tau)^n.
double theta_zn(double tau, int n, double nu);

/// Theta series of the Construction A lattice of a code with enumerator
/// `we`: W_C(theta3(2 tau), theta2(2 tau)).
double theta_construction_a(const WeightEnumerator& we, double tau);

/// Same series through the formally-self-dual closed form
/// 2^{-n/2} W_C(sqrt(t3^2 + t4^2), sqrt(t3^2 - t4^2)) at argument tau.
/// Only meaningful for enumerators of formally self-dual codes.
double theta_construction_a_fsd(const WeightEnumerator& we, double tau);

/// Smallest cutoff radius whose discarded tail is provably below 1e-12,
/// via a union bound over integer shells.
double direct_lattice_default_radius(int n, double tau);

/// Ground-truth oracle: sums exp(-pi tau |lambda|^2) pointwise over all
/// lattice points lambda = (c + 2u)/sqrt(2) with |lambda| <= radius
/// (radius <= 0 selects direct_lattice_default_radius). Cost grows like
/// |C| * radius^n; limited to n <= 10.
double direct_lattice_theta(const BinaryCode& code, double tau,
                            double radius = 0.0);

}  // namespace latsec

#endif
