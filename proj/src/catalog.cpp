#include "latsec/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "catalog_raw.hpp"

namespace latsec {

std::string to_string(CodeKind k) {
    switch (k) {
        case CodeKind::sd: return "sd";
        case CodeKind::efsd: return "efsd";
        case CodeKind::ofsd: return "ofsd";
    }
    return "sd";
}

double CatalogEntry::expected_gain() const {
    return std::strtod(printed_gain.c_str(), nullptr);
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    entries.reserve(detail::kRawEntryCount);
    for (int i = 0; i < detail::kRawEntryCount; ++i) {
        const auto& raw = detail::kRawEntries[i];
        CatalogEntry e;
        e.name = raw.name;
        e.n = raw.n;
        e.k = raw.k;
        e.d = raw.d;
        e.kind = raw.kind;
        e.tb = raw.tb;
        e.source = raw.source;
        e.printed_gain = raw.gain;
        e.we = WeightEnumerator(raw.n);
        std::istringstream in(raw.weights);
        std::string pair;
        while (in >> pair) {
            const auto colon = pair.find(':');
            const int w = std::stoi(pair.substr(0, colon));
            e.we.coeffs[w] = BigInt(pair.substr(colon + 1));
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry* find_entry(std::string_view name) {
    for (const auto& e : load_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

bool CatalogValidation::all_ok() const {
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return true;
}

CatalogValidation validate_catalog() {
    CatalogValidation report;
    for (const auto& e : load_catalog()) {
        CatalogValidation::Row row;
        row.name = e.name;
        row.sum_ok = e.we.total() == BigInt(1) << e.k;
        try {
            row.fsd_ok = macwilliams(e.we, e.k) == e.we;
        } catch (const std::invalid_argument&) {
            row.fsd_ok = false;
        }
        row.dist_ok = min_distance(e.we) == std::optional<int>(e.d);
        const bool even = e.we.even_weights_only();
        row.kind_ok = (e.kind == CodeKind::ofsd) ? !even : even;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool matches_printed(double value, const std::string& printed) {
    const auto dot = printed.find('.');
    const int decimals =
        dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
    const double target = std::strtod(printed.c_str(), nullptr);
    const double scale = std::pow(10.0, decimals);
    auto half_away = [](double x) {
        return x >= 0 ? std::floor(x + 0.5) : std::ceil(x - 0.5);
    };
    const double direct = half_away(value * scale) / scale;
    if (std::abs(direct - target) < 0.25 / scale) return true;
    const double inter = half_away(value * scale * 10.0) / (scale * 10.0);
    const double twice = half_away(inter * scale) / scale;
    return std::abs(twice - target) < 0.25 / scale;
}

}  // namespace latsec
