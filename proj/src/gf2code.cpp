#include "latsec/gf2code.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace latsec {

namespace {

// Binomial table C(0..n, 0..n) in exact integers.
std::vector<std::vector<BigInt>> binomials(int n) {
    std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : BigInt(0));
    }
    return c;
}

}  // namespace

BinaryCode::BinaryCode(int n, int k, std::vector<std::uint64_t> rows)
    : n_(n), k_(k), rows_(std::move(rows)) {
    if (n < 1 || n > kMaxCodeLength)
        throw std::invalid_argument("code length must be in [1, " +
                                    std::to_string(kMaxCodeLength) + "]");
    if (k < 0 || k > n)
        throw std::invalid_argument("dimension must satisfy 0 <= k <= n");
    if (static_cast<int>(rows_.size()) != k)
        throw std::invalid_argument("generator must have exactly k rows");
    const std::uint64_t mask =
        n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (auto r : rows_)
        if (r & ~mask)
            throw std::invalid_argument("generator row exceeds code length");
    if (gf2_rank(rows_, n) != k)
        throw std::invalid_argument("not a valid generator matrix");
}

BigInt WeightEnumerator::total() const {
    BigInt s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

bool WeightEnumerator::even_weights_only() const {
    for (int w = 1; w <= n; w += 2)
        if (coeffs[w] != 0) return false;
    return true;
}

std::string to_string(DualityClass c) {
    switch (c) {
        case DualityClass::self_dual: return "self_dual";
        case DualityClass::formally_self_dual_even:
            return "formally_self_dual_even";
        case DualityClass::formally_self_dual_odd:
            return "formally_self_dual_odd";
        case DualityClass::none: return "none";
    }
    return "none";
}

int gf2_rref(std::vector<std::uint64_t>& rows, int n) {
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (rows[i] & bit) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

int gf2_rank(std::vector<std::uint64_t> rows, int n) {
    return gf2_rref(rows, n);
}

BinaryCode dual_code(const BinaryCode& code) {
    const int n = code.length();
    const int k = code.dimension();
    std::vector<std::uint64_t> g = code.rows();
    gf2_rref(g, n);
    // pivot column of each RREF row
    std::vector<int> pivot_col(k);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < k; ++i) {
        pivot_col[i] = std::countr_zero(g[i]);
        is_pivot[pivot_col[i]] = true;
    }
    // one dual row per free column: identity there, RREF entries on pivots
    std::vector<std::uint64_t> h;
    h.reserve(n - k);
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::uint64_t row = std::uint64_t{1} << c;
        for (int i = 0; i < k; ++i)
            if (g[i] & (std::uint64_t{1} << c))
                row |= std::uint64_t{1} << pivot_col[i];
        h.push_back(row);
    }
    return BinaryCode(n, n - k, std::move(h));
}

WeightEnumerator weight_enumerator(const BinaryCode& code) {
    const int k = code.dimension();
    if (k > kMaxEnumerationDim)
        throw std::invalid_argument(
            "dimension " + std::to_string(k) + " exceeds the exhaustive limit " +
            std::to_string(kMaxEnumerationDim) +
            "; use the tailbiting trellis enumerator or the catalog");
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    std::uint64_t word = 0;
    counts[0] = 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        // Gray code: exactly one generator toggles per step
        word ^= code.rows()[std::countr_zero(msg)];
        ++counts[std::popcount(word)];
    }
    WeightEnumerator we(code.length());
    for (int w = 0; w <= code.length(); ++w) we.coeffs[w] = counts[w];
    return we;
}

WeightEnumerator macwilliams(const WeightEnumerator& we, int k) {
    const int n = we.n;
    if (k < 0 || k > n)
        throw std::invalid_argument("input is not a valid [n,k] enumerator");
    const auto bin = binomials(n);
    const BigInt denom = BigInt(1) << k;
    WeightEnumerator dual(n);
    for (int j = 0; j <= n; ++j) {
        BigInt s = 0;
        for (int w = 0; w <= n; ++w) {
            if (we.coeffs[w] == 0) continue;
            // Krawtchouk K_j(w;n) = sum_i (-1)^i C(w,i) C(n-w, j-i)
            BigInt kr = 0;
            for (int i = std::max(0, j - (n - w)); i <= std::min(w, j); ++i) {
                const BigInt term = bin[w][i] * bin[n - w][j - i];
                kr += (i % 2 == 0) ? term : -term;
            }
            s += we.coeffs[w] * kr;
        }
        if (s % denom != 0 || s < 0)
            throw std::invalid_argument("input is not a valid [n,k] enumerator");
        dual.coeffs[j] = s / denom;
    }
    return dual;
}

DualityClass classify_enumerator(const WeightEnumerator& we, int k) {
    if (2 * k == we.n && macwilliams(we, k) == we)
        return we.even_weights_only() ? DualityClass::formally_self_dual_even
                                      : DualityClass::formally_self_dual_odd;
    return DualityClass::none;
}

DualityClass classify(const BinaryCode& code) {
    const int n = code.length();
    const int k = code.dimension();
    if (2 * k == n) {
        std::vector<std::uint64_t> g = code.rows();
        std::vector<std::uint64_t> h = dual_code(code).rows();
        gf2_rref(g, n);
        gf2_rref(h, n);
        if (g == h) return DualityClass::self_dual;
    }
    return classify_enumerator(weight_enumerator(code), k);
}

std::optional<int> min_distance(const WeightEnumerator& we) {
    for (int w = 1; w <= we.n; ++w)
        if (we.coeffs[w] > 0) return w;
    return std::nullopt;
}

BinaryCode read_code(std::istream& in) {
    int n = 0, k = 0;
    if (!(in >> n >> k)) throw ParseError("expected header line \"n k\"");
    if (n < 1 || n > kMaxCodeLength)
        throw ParseError("code length " + std::to_string(n) +
                         " outside supported range [1, " +
                         std::to_string(kMaxCodeLength) + "]");
    if (k < 0 || k > n) throw ParseError("dimension outside [0, n]");
    std::vector<std::uint64_t> rows;
    rows.reserve(k);
    for (int i = 0; i < k; ++i) {
        std::string line;
        if (!(in >> line)) throw ParseError("missing generator row");
        if (static_cast<int>(line.size()) != n)
            throw ParseError("generator row has wrong length");
        std::uint64_t row = 0;
        for (int j = 0; j < n; ++j) {
            if (line[j] == '1') row |= std::uint64_t{1} << j;
            else if (line[j] != '0')
                throw ParseError("generator rows must be over {0,1}");
        }
        rows.push_back(row);
    }
    try {
        return BinaryCode(n, k, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

WeightEnumerator read_enumerator(std::istream& in, int length) {
    std::vector<std::pair<int, BigInt>> terms;
    std::string w_str, a_str;
    int max_w = 0;
    while (in >> w_str >> a_str) {
        int w;
        try {
            w = std::stoi(w_str);
        } catch (...) {
            throw ParseError("bad weight field: " + w_str);
        }
        if (w < 0) throw ParseError("negative weight");
        BigInt a;
        try {
            a = BigInt(a_str);
        } catch (...) {
            throw ParseError("bad coefficient field: " + a_str);
        }
        if (a < 0) throw ParseError("negative coefficient");
        if (!terms.empty() && w <= terms.back().first)
            throw ParseError("weights must be strictly ascending");
        terms.emplace_back(w, std::move(a));
        max_w = std::max(max_w, w);
    }
    if (terms.empty()) throw ParseError("empty enumerator file");
    if (length >= 0 && max_w > length)
        throw ParseError("weight exceeds the stated length");
    WeightEnumerator we(length >= 0 ? length : max_w);
    for (auto& [w, a] : terms) we.coeffs[w] = std::move(a);
    if (we.coeffs[0] != 1)
        throw ParseError("A_0 must be 1 for a linear code enumerator");
    return we;
}

void write_enumerator(std::ostream& out, const WeightEnumerator& we) {
    for (int w = 0; w <= we.n; ++w)
        if (we.coeffs[w] != 0) out << w << ' ' << we.coeffs[w] << '\n';
}

}  // namespace latsec
