#include "latsec/gleason.hpp"

#include <cmath>
#include <vector>

namespace latsec {

namespace {

std::vector<std::vector<BigInt>> binomials(int n) {
    std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : BigInt(0));
    }
    return c;
}

// System coefficient of a_r in the row for weight w.
BigInt system_coeff(int n, int r, int w, const std::vector<std::vector<BigInt>>& bin) {
    BigInt s = 0;
    for (int h = 0; h <= r; ++h) {
        for (int l = 0; l <= 2 * r - 2 * h; ++l) {
            const int rem = w - 8 * h - 4 * l;
            if (rem < 0 || rem % 2 != 0) continue;
            const int j = rem / 2;
            if (j > n / 2 - 4 * r) continue;  // C(p,q) = 0 for p < q
            BigInt term = bin[n / 2 - 4 * r][j] * bin[r][h] * bin[2 * r - 2 * h][l];
            for (int i = 0; i < l; ++i) term *= 7;
            for (int i = 0; i < h; ++i) term *= -48;
            s += term;
        }
    }
    return s;
}

const char* kNotEvenFsd = "enumerator is not even formally self-dual";

}  // namespace

GleasonDecomposition gleason_coefficients(const WeightEnumerator& we) {
    const int n = we.n;
    if (n < 2 || n % 2 != 0) throw std::invalid_argument(kNotEvenFsd);
    if (!we.even_weights_only() || we.coeffs[0] != 1)
        throw std::invalid_argument(kNotEvenFsd);
    for (int w = 0; w <= n; ++w)
        if (we.coeffs[w] != we.coeffs[n - w])
            throw std::invalid_argument(kNotEvenFsd);

    const int R = n / 8;          // a_0 .. a_R
    const auto bin = binomials(n);

    // Rows for w = 0, 2, ..., n/2 (the upper half is the mirror image since
    // g1, g2 are symmetric in x and y). Eliminate walking down the rows
    // until full rank, then verify the rest.
    std::vector<std::vector<Rational>> m;  // augmented, reduced rows
    std::vector<int> pivot_of_row;
    auto rank = 0;
    std::vector<std::vector<Rational>> all_rows;
    for (int w = 0; w <= n / 2; w += 2) {
        std::vector<Rational> row(R + 2);
        for (int r = 0; r <= R; ++r) row[r] = Rational(system_coeff(n, r, w, bin));
        row[R + 1] = Rational(we.coeffs[w]);
        all_rows.push_back(row);
        if (rank == R + 1) continue;
        // reduce against what we have
        auto red = row;
        for (int i = 0; i < rank; ++i) {
            const Rational factor = red[pivot_of_row[i]];
            if (factor == 0) continue;
            for (int c = 0; c <= R + 1; ++c) red[c] -= factor * m[i][c];
        }
        int piv = -1;
        for (int c = 0; c <= R; ++c)
            if (red[c] != 0) { piv = c; break; }
        if (piv < 0) continue;  // dependent row; consistency checked later
        const Rational inv = red[piv];
        for (int c = 0; c <= R + 1; ++c) red[c] /= inv;
        for (int i = 0; i < rank; ++i) {
            const Rational factor = m[i][piv];
            if (factor == 0) continue;
            for (int c = 0; c <= R + 1; ++c) m[i][c] -= factor * red[c];
        }
        m.push_back(red);
        pivot_of_row.push_back(piv);
        ++rank;
    }
    if (rank != R + 1) throw std::invalid_argument(kNotEvenFsd);

    GleasonDecomposition dec;
    dec.n = n;
    dec.coeffs.assign(R + 1, Rational(0));
    for (int i = 0; i < rank; ++i) dec.coeffs[pivot_of_row[i]] = m[i][R + 1];

    // every remaining equation must hold exactly
    for (const auto& row : all_rows) {
        Rational lhs = 0;
        for (int r = 0; r <= R; ++r) lhs += row[r] * dec.coeffs[r];
        if (lhs != row[R + 1]) throw std::invalid_argument(kNotEvenFsd);
    }
    return dec;
}

WeightEnumerator reconstruct(const GleasonDecomposition& dec) {
    const int n = dec.n;
    // dense polynomials in the y-degree; x-degree is implied by homogeneity
    auto mul = [](const std::vector<Rational>& p, const std::vector<Rational>& q) {
        std::vector<Rational> out(p.size() + q.size() - 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            for (std::size_t j = 0; j < q.size(); ++j)
                if (q[j] != 0) out[i + j] += p[i] * q[j];
        }
        return out;
    };
    const std::vector<Rational> g1 = {1, 0, 1};                       // x^2 + y^2
    const std::vector<Rational> g2 = {1, 0, 0, 0, 14, 0, 0, 0, 1};    // deg 8
    std::vector<Rational> total(n + 1);
    for (std::size_t r = 0; r < dec.coeffs.size(); ++r) {
        if (dec.coeffs[r] == 0) continue;
        std::vector<Rational> term = {1};
        for (int i = 0; i < n / 2 - 4 * static_cast<int>(r); ++i) term = mul(term, g1);
        for (std::size_t i = 0; i < r; ++i) term = mul(term, g2);
        for (int w = 0; w <= n; ++w)
            if (w < static_cast<int>(term.size()))
                total[w] += dec.coeffs[r] * term[w];
    }
    WeightEnumerator we(n);
    for (int w = 0; w <= n; ++w) {
        if (denominator(total[w]) != 1)
            throw std::logic_error(
                "Gleason reconstruction produced a non-integer coefficient");
        we.coeffs[w] = numerator(total[w]);
        if (we.coeffs[w] < 0)
            throw std::invalid_argument(
                "decomposition does not reconstruct a nonnegative enumerator");
    }
    return we;
}

double f_c_from_gleason(const GleasonDecomposition& dec, double t) {
    if (!(t > 0.0 && t < 1.0))
        throw std::domain_error("t must lie in the open interval (0,1)");
    const double h = ((t * t) * (t * t)) - t * t + 1.0;
    double sum = 0.0;
    double hp = 1.0;
    for (std::size_t r = 0; r < dec.coeffs.size(); ++r) {
        sum += dec.coeffs[r].convert_to<double>() * hp;
        hp *= h;
    }
    return std::pow(2.0, 0.5 * dec.n) * sum;
}

Rational symmetry_minimum_condition(const GleasonDecomposition& dec) {
    Rational cond = 0;
    Rational pw = 1;  // (3/4)^{r-1}
    for (std::size_t r = 1; r < dec.coeffs.size(); ++r) {
        cond += Rational(r) * dec.coeffs[r] * pw;
        pw *= Rational(3, 4);
    }
    return cond;
}

}  // namespace latsec
