// Secrecy function and gain of Construction A lattices, the t-substitution
// that reduces gain maximization to minimizing f_C(t) on (0,1), and
// numerical checks of the symmetry properties.
#ifndef LATSEC_SECRECY_HPP
#define LATSEC_SECRECY_HPP

#include "latsec/gf2code.hpp"

namespace latsec {

/// f_C(t) = W_C(sqrt(1+t), sqrt(1-t)) = sum_w A_w (1+t)^{(n-w)/2} (1-t)^{w/2}
double f_c(const WeightEnumerator& we, double t);

/// Term-wise analytic derivative of f_C.
double f_c_prime(const WeightEnumerator& we, double t);

/// t(tau) = theta4^2(i tau) / theta3^2(i tau), strictly increasing, in (0,1).
double t_of_tau(double tau);

/// Inverse of t_of_tau by bisection on [1e-3, 1e3]. Exact up to the
/// resolution a binary64 t can carry (the plateau {tau : t(tau) rounds to
/// the given t} is returned by its midpoint); for large tau that resolution
/// is ulp(t)/t'(tau), which dominates any bisection error.
double tau_of_t(double t);

/// Xi(tau) = Theta_{nu Z^n}(i tau) / Theta_{Lambda_A(C)}(i tau) with
/// nu = 2^{(n-2k)/(2n)} from vol(Lambda_A) = 2^{(n-2k)/2}.
double secrecy_function(const WeightEnumerator& we, int k, double tau);

/// How the reported maximum was verified: numeric grid plus golden section,
/// the exact positivity certificate available for even inputs, or an
/// external closed-form derivative analysis.
enum class GainMethod { grid_golden, gleason_condition, analytic_example };

std::string to_string(GainMethod m);

struct SecrecyReport {
    int n = 0;
    double xi = 0.0;         ///< strong secrecy gain 2^{n/2}/f_C(t*)
    double weak_gain = 0.0;  ///< Xi(1) = 2^{n/2}/f_C(1/sqrt 2)
    double t_star = 0.0;     ///< argmin of f_C on (0,1)
    double tau_star = 0.0;   ///< tau with t(tau) = t*
    bool conjecture_verified = false;
    GainMethod method = GainMethod::grid_golden;
};

/// Minimizes f_C over (0,1) by a 1024-point grid plus golden-section
/// refinement to interval width 1e-10. Requires a formally self-dual
/// enumerator (k = n/2, MacWilliams fixed point). conjecture_verified means
/// |t* - 1/sqrt 2| <= 1e-6 and f_C' changes sign exactly once on the grid.
SecrecyReport secrecy_gain(const WeightEnumerator& we);

/// Max deviation over a log grid tau in [0.1, 10] of the symmetry
/// identities: |Xi(tau) - Xi(1/tau)| when the input is formally self-dual,
/// and always |Xi_Lambda(tau) - Xi_Lambda*(1/tau)| with the dual side
/// obtained through the MacWilliams transform.
double verify_symmetry(const WeightEnumerator& we, int k);

}  // namespace latsec

#endif
