#include "latsec/secrecy.hpp"

#include <cmath>
#include <vector>

#include "latsec/gleason.hpp"
#include "latsec/theta.hpp"

namespace latsec {

namespace {

void check_t(double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("t must lie in the open interval (0,1)");
}

constexpr int kGridPoints = 1024;
constexpr double kGoldenTol = 1e-10;
constexpr double kConjectureTol = 1e-6;

bool is_fsd(const WeightEnumerator& we) {
    if (we.n % 2 != 0) return false;
    try {
        return macwilliams(we, we.n / 2) == we;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

std::string to_string(GainMethod m) {
    switch (m) {
        case GainMethod::grid_golden: return "grid_golden";
        case GainMethod::gleason_condition: return "gleason_condition";
        case GainMethod::analytic_example: return "analytic_example";
    }
    return "grid_golden";
}

double f_c(const WeightEnumerator& we, double t) {
    check_t(t);
    const int n = we.n;
    double sum = 0.0;
    for (int w = 0; w <= n; ++w) {
        if (we.coeffs[w] == 0) continue;
        sum += we.coeffs[w].convert_to<double>() *
               std::pow(1.0 + t, 0.5 * (n - w)) * std::pow(1.0 - t, 0.5 * w);
    }
    return sum;
}

double f_c_prime(const WeightEnumerator& we, double t) {
    check_t(t);
    const int n = we.n;
    double sum = 0.0;
    for (int w = 0; w <= n; ++w) {
        if (we.coeffs[w] == 0) continue;
        const double a = we.coeffs[w].convert_to<double>();
        double d = 0.0;
        if (w < n)  // d/dt of the (1+t) factor; vanishes identically at w = n
            d += 0.5 * (n - w) * std::pow(1.0 + t, 0.5 * (n - w) - 1.0) *
                 std::pow(1.0 - t, 0.5 * w);
        if (w > 0)
            d -= 0.5 * w * std::pow(1.0 + t, 0.5 * (n - w)) *
                 std::pow(1.0 - t, 0.5 * w - 1.0);
        sum += a * d;
    }
    return sum;
}

double t_of_tau(double tau) {
    const double r = theta4(tau) / theta3(tau);
    return r * r;
}

double tau_of_t(double t) {
    check_t(t);
    constexpr double lo0 = kMinTau, hi0 = 1e3;
    if (t <= t_of_tau(lo0) || t >= t_of_tau(hi0))
        throw std::domain_error("t outside the invertible range");
    // Left edge of {tau : t(tau) >= t} and right edge of {tau : t(tau) <= t};
    // their midpoint centers the representation plateau around the exact
    // preimage.
    double lo = lo0, hi = hi0;
    while (hi - lo > 1e-14 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (t_of_tau(mid) < t) lo = mid; else hi = mid;
    }
    const double left = 0.5 * (lo + hi);
    lo = lo0; hi = hi0;
    while (hi - lo > 1e-14 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (t_of_tau(mid) <= t) lo = mid; else hi = mid;
    }
    const double right = 0.5 * (lo + hi);
    if (right < left)
        throw std::logic_error("bisection lost the bracket: t(tau) not monotone");
    return 0.5 * (left + right);
}

double secrecy_function(const WeightEnumerator& we, int k, double tau) {
    const int n = we.n;
    const double nu = std::pow(2.0, (n - 2.0 * k) / (2.0 * n));
    return theta_zn(tau, n, nu) / theta_construction_a(we, tau);
}

SecrecyReport secrecy_gain(const WeightEnumerator& we) {
    if (!is_fsd(we))
        throw std::invalid_argument(
            "secrecy-gain reduction requires a formally self-dual enumerator");
    const int n = we.n;
    const double two_half_n = std::pow(2.0, 0.5 * n);

    // coarse grid guards against a second local minimum
    int best = 1;
    double best_f = 0.0;
    std::vector<double> fprime(kGridPoints);
    for (int i = 1; i < kGridPoints; ++i) {
        const double t = static_cast<double>(i) / kGridPoints;
        const double v = f_c(we, t);
        fprime[i] = f_c_prime(we, t);
        if (i == 1 || v < best_f) { best = i; best_f = v; }
    }

    // golden-section refinement inside the bracketing grid cells
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = (best - 1.0) / kGridPoints;
    double b = (best + 1.0) / kGridPoints;
    a = std::max(a, 1e-12);
    b = std::min(b, 1.0 - 1e-12);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc_ = f_c(we, c), fd = f_c(we, d);
    while (b - a > kGoldenTol) {
        if (fc_ < fd) {
            b = d; d = c; fd = fc_;
            c = b - gr * (b - a);
            fc_ = f_c(we, c);
        } else {
            a = c; c = d; fc_ = fd;
            d = a + gr * (b - a);
            fd = f_c(we, d);
        }
    }
    const double t_star = 0.5 * (a + b);
    const double f_star = f_c(we, t_star);

    // sign changes of f' over the grid, with a noise floor so that a flat
    // derivative (constant f) counts as zero crossings
    int changes = 0;
    int prev = 0;
    for (int i = 1; i < kGridPoints; ++i) {
        const double scale = std::max(1.0, std::abs(best_f));
        const int sign = (std::abs(fprime[i]) <= 1e-9 * scale)
                             ? 0
                             : (fprime[i] > 0 ? 1 : -1);
        if (sign != 0) {
            if (prev != 0 && sign != prev) ++changes;
            prev = sign;
        }
    }

    SecrecyReport rep;
    rep.n = n;
    rep.xi = two_half_n / f_star;
    rep.weak_gain = two_half_n / f_c(we, 1.0 / std::sqrt(2.0));
    rep.t_star = t_star;
    rep.tau_star = tau_of_t(t_star);
    rep.conjecture_verified =
        std::abs(t_star - 1.0 / std::sqrt(2.0)) <= kConjectureTol &&
        changes == 1;
    rep.method = GainMethod::grid_golden;
    // even inputs admitting a positive condition value carry an exact
    // certificate for the maximum at tau = 1
    if (rep.conjecture_verified && we.even_weights_only()) {
        try {
            if (symmetry_minimum_condition(gleason_coefficients(we)) > 0)
                rep.method = GainMethod::gleason_condition;
        } catch (const std::invalid_argument&) {
        }
    }
    return rep;
}

double verify_symmetry(const WeightEnumerator& we, int k) {
    const int n = we.n;
    const bool fsd = (2 * k == n) && is_fsd(we);
    const WeightEnumerator dual = macwilliams(we, k);
    const double nu = std::pow(2.0, (n - 2.0 * k) / (2.0 * n));
    const double nu_m2 = 1.0 / (nu * nu);

    double dev = 0.0;
    constexpr int kPoints = 101;
    for (int i = 0; i < kPoints; ++i) {
        const double tau =
            std::pow(10.0, -1.0 + 2.0 * i / (kPoints - 1));  // [0.1, 10]
        if (fsd) {
            const double lhs = secrecy_function(we, k, nu_m2 * tau);
            const double rhs = secrecy_function(we, k, nu_m2 / tau);
            dev = std::max(dev, std::abs(lhs - rhs));
        }
        const double lhs = secrecy_function(we, k, tau);
        const double rhs = secrecy_function(dual, n - k, 1.0 / tau);
        dev = std::max(dev, std::abs(lhs - rhs));
    }
    return dev;
}

}  // namespace latsec
