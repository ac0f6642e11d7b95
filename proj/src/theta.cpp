#include "latsec/theta.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace latsec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRelCut = 1e-17;  // series truncation, relative

void check_tau(double tau) {
    if (!(tau > 0.0)) throw std::domain_error("tau must be positive");
    if (tau < kMinTau)
        throw std::domain_error(
            "tau below series range; use the modular reflection (tau -> 1/tau)");
}

// W_C(x, y) with double arguments.
double eval_enumerator(const WeightEnumerator& we, double x, double y) {
    const int n = we.n;
    std::vector<double> xp(n + 1), yp(n + 1);
    xp[0] = yp[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    double sum = 0.0;
    for (int w = 0; w <= n; ++w)
        if (we.coeffs[w] != 0)
            sum += we.coeffs[w].convert_to<double>() * xp[n - w] * yp[w];
    return sum;
}

}  // namespace

double theta2(double tau) {
    check_tau(tau);
    double sum = 0.0;
    for (int m = 0;; ++m) {
        const double half = m + 0.5;
        const double term = std::exp(-kPi * tau * half * half);
        sum += term;
        if (term < kRelCut * sum || term == 0.0) break;
    }
    return 2.0 * sum;
}

double theta3(double tau) {
    check_tau(tau);
    double sum = 1.0;
    for (int m = 1;; ++m) {
        const double term =
            2.0 * std::exp(-kPi * tau * static_cast<double>(m) * m);
        sum += term;
        if (term < kRelCut * sum || term == 0.0) break;
    }
    return sum;
}

double theta4(double tau) {
    check_tau(tau);
    double sum = 1.0;
    for (int m = 1;; ++m) {
        const double term =
            2.0 * std::exp(-kPi * tau * static_cast<double>(m) * m);
        sum += (m % 2 == 0) ? term : -term;
        if (term < kRelCut * std::abs(sum) || term == 0.0) break;
    }
    return sum;
}

double theta_zn(double tau, int n, double nu) {
    if (n < 1) throw std::domain_error("dimension must be positive");
    return std::pow(theta3(nu * nu * tau), n);
}

double theta_construction_a(const WeightEnumerator& we, double tau) {
    return eval_enumerator(we, theta3(2.0 * tau), theta2(2.0 * tau));
}

double theta_construction_a_fsd(const WeightEnumerator& we, double tau) {
    const double t3 = theta3(tau);
    const double t4 = theta4(tau);
    const double s_plus = t3 * t3 + t4 * t4;
    const double s_minus = t3 * t3 - t4 * t4;
    if (s_minus < 0.0)
        throw std::logic_error("theta3^2 < theta4^2: theta series bug");
    return eval_enumerator(we, std::sqrt(s_plus), std::sqrt(s_minus)) /
           std::pow(2.0, 0.5 * we.n);
}

double direct_lattice_default_radius(int n, double tau) {
    // All lattice points lie in (1/sqrt 2) Z^n, so points with norm above R
    // have integer square norm s = |v|^2 > 2 R^2 in v = sqrt(2) lambda
    // coordinates. Union bound: at most (2 sqrt(s) + 1)^n vectors per shell.
    for (int s0 = 2;; ++s0) {
        double tail = 0.0;
        for (int s = s0;; ++s) {
            const double term =
                std::pow(2.0 * std::sqrt(double(s)) + 1.0, n) *
                std::exp(-0.5 * kPi * tau * s);
            tail += term;
            if (term < 1e-16 * tail || term < 1e-300) break;
            if (s > s0 + 2000000)
                throw std::domain_error("tail bound does not converge");
        }
        if (tail < 1e-12) return std::sqrt(0.5 * s0);
    }
}

namespace {

// Recursive sum over v in (c + 2 Z)^n with |v|^2 <= s_max of
// exp(-pi tau |v|^2 / 2).
double coset_sum(const std::vector<int>& cw, int pos, double norm_acc,
                 double s_max, double tau) {
    if (pos == static_cast<int>(cw.size()))
        return std::exp(-0.5 * kPi * tau * norm_acc);
    const double budget = s_max - norm_acc;
    double total = 0.0;
    const int c = cw[pos];
    // v = c + 2u, |v| <= sqrt(budget)
    const double vmax = std::sqrt(budget);
    const int u_lo = static_cast<int>(std::ceil((-vmax - c) / 2.0 - 1e-12));
    const int u_hi = static_cast<int>(std::floor((vmax - c) / 2.0 + 1e-12));
    for (int u = u_lo; u <= u_hi; ++u) {
        const double v = c + 2.0 * u;
        if (norm_acc + v * v > s_max + 1e-9) continue;
        total += coset_sum(cw, pos + 1, norm_acc + v * v, s_max, tau);
    }
    return total;
}

}  // namespace

double direct_lattice_theta(const BinaryCode& code, double tau,
                            double radius) {
    check_tau(tau);
    const int n = code.length();
    const int k = code.dimension();
    if (n > 10)
        throw std::invalid_argument(
            "direct lattice sum limited to n <= 10 (cost ~ radius^n)");
    if (radius <= 0.0) radius = direct_lattice_default_radius(n, tau);
    const double s_max = 2.0 * radius * radius;  // |v|^2 budget, v = c + 2u

    double total = 0.0;
    std::vector<int> cw(n, 0);
    std::uint64_t word = 0;
    total += coset_sum(cw, 0, 0.0, s_max, tau);
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t msg = 1; msg < count; ++msg) {
        word ^= code.rows()[std::countr_zero(msg)];
        for (int j = 0; j < n; ++j) cw[j] = (word >> j) & 1;
        total += coset_sum(cw, 0, 0.0, s_max, tau);
    }
    return total;
}

}  // namespace latsec
