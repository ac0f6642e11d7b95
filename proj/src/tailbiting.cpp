#include "latsec/tailbiting.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace latsec {

namespace {

std::vector<int> octal_taps(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty octal tap string");
    unsigned long long v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '7')
            throw std::invalid_argument("octal tap string must use digits 0-7");
        v = v * 8 + static_cast<unsigned>(ch - '0');
    }
    if (v == 0) throw std::invalid_argument("tap polynomial must be nonzero");
    // MSB of the octal value is the constant term g_0
    std::vector<int> taps;
    int bits = 0;
    for (unsigned long long t = v; t; t >>= 1) ++bits;
    for (int i = bits - 1; i >= 0; --i) taps.push_back((v >> i) & 1);
    return taps;
}

std::uint32_t taps_as_poly(const std::vector<int>& taps) {
    std::uint32_t p = 0;
    for (std::size_t j = 0; j < taps.size(); ++j)
        if (taps[j]) p |= std::uint32_t{1} << j;
    return p;
}

int poly_degree(std::uint32_t p) { return 31 - std::countl_zero(p); }

std::uint32_t poly_gcd(std::uint32_t a, std::uint32_t b) {
    while (b != 0) {
        while (a != 0 && poly_degree(a) >= poly_degree(b))
            a ^= b << (poly_degree(a) - poly_degree(b));
        std::swap(a, b);
    }
    return a;
}

void check_k(const ConvolutionalSpec& spec, int k) {
    spec.validate();
    if (k < spec.memory() + 1)
        throw std::invalid_argument("tailbiting requires k >= m+1");
}

BinaryCode rows_to_code(std::vector<std::uint64_t> rows, int k) {
    return BinaryCode(2 * k, k, std::move(rows));
}

}  // namespace

ConvolutionalSpec ConvolutionalSpec::from_octal(const std::string& g1_octal,
                                                const std::string& g2_octal) {
    ConvolutionalSpec spec;
    spec.g1 = octal_taps(g1_octal);
    spec.g2 = octal_taps(g2_octal);
    const std::size_t m1 = std::max(spec.g1.size(), spec.g2.size());
    spec.g1.resize(m1, 0);
    spec.g2.resize(m1, 0);
    spec.validate();
    return spec;
}

void ConvolutionalSpec::validate() const {
    const int m = memory();
    if (m < 0 || g2.size() != g1.size())
        throw std::invalid_argument("tap vectors must share a common memory");
    if (m > kMaxMemory)
        throw std::invalid_argument("memory exceeds the supported maximum " +
                                    std::to_string(kMaxMemory));
    for (int b : g1)
        if (b != 0 && b != 1)
            throw std::invalid_argument("taps must be bits");
    for (int b : g2)
        if (b != 0 && b != 1)
            throw std::invalid_argument("taps must be bits");
    if (g1[0] != 1 || g2[0] != 1)
        throw std::invalid_argument("constant taps g_{1,0}, g_{2,0} must be 1");
    if (m > 0 && g1[m] == 0 && g2[m] == 0)
        throw std::invalid_argument("at least one degree-m tap must be 1");
    // a common factor makes the encoder non-minimal and drops the
    // tailbiting rank below k
    if (poly_gcd(taps_as_poly(g1), taps_as_poly(g2)) != 1)
        throw std::invalid_argument(
            "generator polynomials must be coprime (minimal encoder)");
}

BinaryCode tailbiting_generator(const ConvolutionalSpec& spec, int k) {
    check_k(spec, k);
    if (2 * k > kMaxCodeLength)
        throw std::invalid_argument("2k exceeds the 64-column limit");
    const int m = spec.memory();
    const int n = 2 * k;
    std::vector<std::uint64_t> rows(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m; ++j) {
            const int col = (2 * (i + j)) % n;
            if (spec.g1[j]) rows[i] ^= std::uint64_t{1} << col;
            if (spec.g2[j]) rows[i] ^= std::uint64_t{1} << (col + 1);
        }
    return rows_to_code(std::move(rows), k);
}

BinaryCode tailbiting_parity(const ConvolutionalSpec& spec, int k) {
    check_k(spec, k);
    if (2 * k > kMaxCodeLength)
        throw std::invalid_argument("2k exceeds the 64-column limit");
    const int m = spec.memory();
    const int n = 2 * k;
    std::vector<std::uint64_t> rows(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= m; ++j) {
            // pairs run through the taps backwards with components swapped
            const int col = (2 * (i - m + j) % n + n) % n;
            if (spec.g2[m - j]) rows[i] ^= std::uint64_t{1} << col;
            if (spec.g1[m - j]) rows[i] ^= std::uint64_t{1} << (col + 1);
        }
    return rows_to_code(std::move(rows), k);
}

WeightEnumerator trellis_enumerator(const ConvolutionalSpec& spec, int k,
                                    TrellisStats* stats) {
    check_k(spec, k);
    const int m = spec.memory();
    const int n = 2 * k;
    const int states = 1 << m;

    // branch tables: output pair weight and successor per (state, input)
    std::vector<std::array<int, 2>> weight(states), next(states);
    for (int s = 0; s < states; ++s) {
        for (int b = 0; b < 2; ++b) {
            int o1 = b & spec.g1[0];
            int o2 = b & spec.g2[0];
            for (int j = 1; j <= m; ++j) {
                const int bit = (s >> (j - 1)) & 1;  // input from j steps ago
                o1 ^= bit & spec.g1[j];
                o2 ^= bit & spec.g2[j];
            }
            weight[s][b] = o1 + o2;
            next[s][b] = ((s << 1) | b) & (states - 1);
        }
    }

    WeightEnumerator we(n);
    std::uint64_t updates = 0;
    // one table pair reused across start states
    std::vector<std::vector<BigInt>> cur(states), nxt(states);
    for (int s = 0; s < states; ++s) {
        cur[s].assign(n + 1, BigInt(0));
        nxt[s].assign(n + 1, BigInt(0));
    }
    for (int s0 = 0; s0 < states; ++s0) {
        for (int s = 0; s < states; ++s)
            std::fill(cur[s].begin(), cur[s].end(), BigInt(0));
        cur[s0][0] = 1;
        for (int step = 0; step < k; ++step) {
            for (int s = 0; s < states; ++s)
                std::fill(nxt[s].begin(), nxt[s].end(), BigInt(0));
            const int wmax = 2 * (step + 1);
            for (int s = 0; s < states; ++s) {
                const auto& poly = cur[s];
                bool active = false;
                for (int w = 0; w <= std::min(n, 2 * step); ++w)
                    if (poly[w] != 0) { active = true; break; }
                if (!active) continue;
                for (int b = 0; b < 2; ++b) {
                    ++updates;
                    auto& target = nxt[next[s][b]];
                    const int dw = weight[s][b];
                    for (int w = std::min(n - dw, wmax - dw); w >= 0; --w)
                        if (poly[w] != 0) target[w + dw] += poly[w];
                }
            }
            cur.swap(nxt);
        }
        // tailbiting: keep only the paths returning to the start state
        for (int w = 0; w <= n; ++w) we.coeffs[w] += cur[s0][w];
    }
    if (stats) stats->branch_updates = updates;
    if (we.total() != BigInt(1) << k)
        throw std::logic_error("trellis path count does not equal 2^k");
    return we;
}

bool isodual_check(const ConvolutionalSpec& spec, int k) {
    const BinaryCode gen = tailbiting_generator(spec, k);
    const BinaryCode par = tailbiting_parity(spec, k);
    const int n = 2 * k;

    // coordinate reversal of the generator code
    std::vector<std::uint64_t> rev;
    rev.reserve(k);
    for (auto row : gen.rows()) {
        std::uint64_t r = 0;
        for (int j = 0; j < n; ++j)
            if (row & (std::uint64_t{1} << j))
                r |= std::uint64_t{1} << (n - 1 - j);
        rev.push_back(r);
    }
    std::vector<std::uint64_t> h = par.rows();
    gf2_rref(rev, n);
    gf2_rref(h, n);
    if (rev != h) return false;
    return weight_enumerator(gen) == weight_enumerator(par);
}

}  // namespace latsec
