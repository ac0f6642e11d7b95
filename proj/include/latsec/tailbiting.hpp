// Isodual [2k,k] block codes obtained by tailbiting rate-1/2 binary
// convolutional codes, and their exact weight enumerators by a state-indexed
// trellis dynamic program (cost O(k * 2^{2m}) overall).
#ifndef LATSEC_TAILBITING_HPP
#define LATSEC_TAILBITING_HPP

#include <cstdint>
#include <string>

#include "latsec/gf2code.hpp"

namespace latsec {

/// Trellis state count is 2^m; beyond this the quadratic state cost wins
/// nothing over the catalog.
inline constexpr int kMaxMemory = 12;

/// Rate-1/2 convolutional code given by tap coefficients g_{i,0}..g_{i,m}.
/// Both constant terms must be 1, at least one degree-m tap must be 1, and
/// the two polynomials must be coprime (a minimal encoder; otherwise the
/// tailbiting generator drops below rank k).
struct ConvolutionalSpec {
    std::vector<int> g1;
    std::vector<int> g2;

    int memory() const { return static_cast<int>(g1.size()) - 1; }

    /// Standard octal shorthand, taps written constant-term first: "7,5"
    /// means g1 = 1+D+D^2, g2 = 1+D^2. The shorter polynomial is padded
    /// with trailing zeros to the common memory.
    static ConvolutionalSpec from_octal(const std::string& g1_octal,
                                        const std::string& g2_octal);

    void validate() const;
};

/// Generator matrix of the [2k,k] tailbiting code: row i carries the
/// interleaved pairs (g1_j, g2_j) starting at column 2i, wrapping modulo 2k.
/// Requires k >= m+1 and 2k <= 64.
BinaryCode tailbiting_generator(const ConvolutionalSpec& spec, int k);

/// Parity-check matrix of the same code (pairs reversed and swapped,
/// wrapped); satisfies G H^T = 0 over GF(2).
BinaryCode tailbiting_parity(const ConvolutionalSpec& spec, int k);

struct TrellisStats {
    std::uint64_t branch_updates = 0;  ///< processed (state, input) branches
};

/// Exact weight enumerator of the tailbiting code: for each of the 2^m
/// start states, propagate per-state weight polynomials through k trellis
/// steps and collect the paths that return to the start state. Works for
/// any k (never materializes the generator matrix).
WeightEnumerator trellis_enumerator(const ConvolutionalSpec& spec, int k,
                                    TrellisStats* stats = nullptr);

/// Isodual witness: the parity-check code equals the coordinate reversal of
/// the generator code (row-space equality) and both weight enumerators
/// agree. Requires 2k <= 64 and k within the exhaustive enumeration limit.
bool isodual_check(const ConvolutionalSpec& spec, int k);

}  // namespace latsec

#endif
