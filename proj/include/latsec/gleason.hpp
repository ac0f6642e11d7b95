// Exact-rational Gleason decomposition of even formally self-dual weight
// enumerators, W = sum_r a_r g1^{n/2-4r} g2^r with g1 = x^2+y^2 and
// g2 = x^8+14x^4y^4+y^8, and the positivity condition that certifies the
// secrecy-gain maximum at tau = 1.
#ifndef LATSEC_GLEASON_HPP
#define LATSEC_GLEASON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "latsec/gf2code.hpp"

namespace latsec {

using Rational = boost::multiprecision::cpp_rational;

struct GleasonDecomposition {
    int n = 0;
    std::vector<Rational> coeffs;  // a_0 .. a_{floor(n/8)}
};

/// Solves the exact linear system relating A_w to the a_r: the row for
/// weight w reads A_w = sum_r a_r sum_{2j+8h+4l=w} 7^l (-48)^h
/// C(n/2-4r, j) C(r,h) C(2r-2h, l). The first floor(n/8)+1 independent
/// even-weight rows determine the solution; every remaining row is then
/// verified. Throws unless the input is an even formally self-dual
/// enumerator (the decomposition exists iff Gleason's theorem applies).
GleasonDecomposition gleason_coefficients(const WeightEnumerator& we);

/// Expands the polynomial combination back to an enumerator, exactly.
WeightEnumerator reconstruct(const GleasonDecomposition& dec);

/// f_C(t) = 2^{n/2} sum_r a_r (t^4 - t^2 + 1)^r.
double f_c_from_gleason(const GleasonDecomposition& dec, double t);

/// Exact value of sum_{r>=1} r a_r (3/4)^{r-1}; a positive value certifies
/// that the secrecy gain is attained at tau = 1.
Rational symmetry_minimum_condition(const GleasonDecomposition& dec);

}  // namespace latsec

#endif
