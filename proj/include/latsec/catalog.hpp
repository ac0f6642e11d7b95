// Embedded dataset of the reference code enumerators spanning n = 6..108,
// with the gain value each entry is expected to reproduce.
#ifndef LATSEC_CATALOG_HPP
#define LATSEC_CATALOG_HPP

#include <string>
#include <string_view>

#include "latsec/gf2code.hpp"

namespace latsec {

enum class CodeKind { sd, efsd, ofsd };

std::string to_string(CodeKind k);

struct CatalogEntry {
    std::string name;     ///< "n{n}_{kind}_d{d}" plus a disambiguating suffix
    int n = 0;
    int k = 0;
    int d = 0;
    CodeKind kind = CodeKind::sd;
    bool tb = false;      ///< constructed by tailbiting a convolutional code
    std::string source;   ///< where the code comes from
    std::string printed_gain;  ///< expected gain, verbatim at source precision
    WeightEnumerator we;

    double expected_gain() const;
};

/// All embedded entries, ordered by n then kind.
const std::vector<CatalogEntry>& load_catalog();

/// Entry by name, or nullptr.
const CatalogEntry* find_entry(std::string_view name);

struct CatalogValidation {
    struct Row {
        std::string name;
        bool sum_ok = false;   ///< coefficients total 2^k
        bool fsd_ok = false;   ///< exact MacWilliams fixed point
        bool dist_ok = false;  ///< min_distance equals d
        bool kind_ok = false;  ///< weight parity consistent with the kind
        bool ok() const { return sum_ok && fsd_ok && dist_ok && kind_ok; }
    };
    std::vector<Row> rows;
    bool all_ok() const;
};

/// Re-derives the per-entry invariants; failures are reported, not thrown.
CatalogValidation validate_catalog();

/// True when `value` rounds to the decimal string `printed` at its own
/// precision. Accepts round-half-away-from-zero directly or through one
/// extra digit (source tables round through intermediate precision).
bool matches_printed(double value, const std::string& printed);

}  // namespace latsec

#endif
