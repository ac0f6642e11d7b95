// Binary linear codes over GF(2): representation, duals, exhaustive weight
// enumeration, the MacWilliams transform, and duality-class tests.
#ifndef LATSEC_GF2CODE_HPP
#define LATSEC_GF2CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latsec {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown on malformed input files; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hard limit of the bit-packed representation: one 64-bit word per row.
inline constexpr int kMaxCodeLength = 64;
/// Exhaustive enumeration walks all 2^k messages; refuse beyond this.
inline constexpr int kMaxEnumerationDim = 28;

/// An [n,k] binary linear code given by a full-rank generator matrix.
/// Row bit j (LSB = column 0) is the entry in column j.
class BinaryCode {
  public:
    BinaryCode(int n, int k, std::vector<std::uint64_t> rows);

    int length() const { return n_; }
    int dimension() const { return k_; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

  private:
    int n_;
    int k_;
    std::vector<std::uint64_t> rows_;
};

/// Coefficients A_0..A_n of W_C(x,y); exact integers (catalog entries
/// reach ~2.8e15 and MacWilliams intermediates exceed 64 bits).
struct WeightEnumerator {
    int n = 0;
    std::vector<BigInt> coeffs;  // size n+1

    WeightEnumerator() = default;
    explicit WeightEnumerator(int length) : n(length), coeffs(length + 1) {}

    BigInt total() const;
    /// True when every supported weight is even.
    bool even_weights_only() const;
    bool operator==(const WeightEnumerator&) const = default;
};

enum class DualityClass {
    self_dual,
    formally_self_dual_even,
    formally_self_dual_odd,
    none,
};

std::string to_string(DualityClass c);

/// Rank over GF(2) of bit-packed rows with n columns.
int gf2_rank(std::vector<std::uint64_t> rows, int n);

/// Reduced row echelon form; canonical for a row space. Returns the rank and
/// shrinks `rows` to that many pivot rows.
int gf2_rref(std::vector<std::uint64_t>& rows, int n);

/// The [n, n-k] dual code: every row orthogonal (mod 2) to the input rows.
BinaryCode dual_code(const BinaryCode& code);

/// Exact A_w by Gray-code iteration over all 2^k messages. Requires
/// k <= kMaxEnumerationDim.
WeightEnumerator weight_enumerator(const BinaryCode& code);

/// Dual enumerator via the MacWilliams identity, exact arithmetic: given the
/// enumerator of an [n,k] code, returns 2^-k W(x+y, x-y). Throws if the
/// division is not exact or a coefficient turns negative (the input was not
/// a valid [n,k] enumerator).
WeightEnumerator macwilliams(const WeightEnumerator& we, int k);

/// Most specific duality class of the code. Self-duality is decided by row
/// spaces, formal self-duality by enumerator equality with the MacWilliams
/// dual, even/odd by weight parity.
DualityClass classify(const BinaryCode& code);

/// Class decidable from the enumerator alone (self_dual is not; formally
/// self-dual codes are reported as fsd even/odd).
DualityClass classify_enumerator(const WeightEnumerator& we, int k);

/// Smallest w >= 1 with A_w > 0; nullopt for the zero code.
std::optional<int> min_distance(const WeightEnumerator& we);

// Text formats. Code file: first line "n k", then k rows of n chars in
// {0,1}. Enumerator file: lines "w A_w" for nonzero coefficients,
// ascending w. The file does not carry n, so callers must pass it whenever
// A_n may be zero (odd fsd codes routinely have A_n = 0); length -1 falls
// back to the largest listed weight.
BinaryCode read_code(std::istream& in);
WeightEnumerator read_enumerator(std::istream& in, int length = -1);
void write_enumerator(std::ostream& out, const WeightEnumerator& we);

}  // namespace latsec

#endif
