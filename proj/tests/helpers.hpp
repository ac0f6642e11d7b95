// Shared fixtures: reference codes with known enumerators and a
// deterministic random-code source.
#ifndef LATSEC_TESTS_HELPERS_HPP
#define LATSEC_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "latsec/gf2code.hpp"

namespace latsec::testing {

// [8,4] extended Hamming, generator [I | J-I]; W = x^8 + 14 x^4 y^4 + y^8.
inline BinaryCode e8_code() {
    return BinaryCode(8, 4,
                      {0b01110001, 0b10110010, 0b11010100, 0b11101000});
}

// [6,3,3] odd formally self-dual; W = x^6 + 4 x^3 y^3 + 3 x^2 y^4.
inline BinaryCode example1_code() {
    return BinaryCode(6, 3, {0b000111, 0b011001, 0b101010});
}

inline BinaryCode repetition_code(int n) {
    const std::uint64_t all =
        n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return BinaryCode(n, 1, {all});
}

inline BinaryCode zero_code(int n) { return BinaryCode(n, 0, {}); }

// Uniform random [n,k] code (full-rank generator by rejection).
inline BinaryCode random_code(std::mt19937_64& rng, int n, int k) {
    const std::uint64_t mask =
        n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (;;) {
        std::vector<std::uint64_t> rows(k);
        for (auto& r : rows) r = rng() & mask;
        if (gf2_rank(rows, n) == k) return BinaryCode(n, k, std::move(rows));
    }
}

}  // namespace latsec::testing

#endif
