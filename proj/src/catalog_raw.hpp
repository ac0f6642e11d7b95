// Internal layout of the embedded catalog table (catalog_entries.cpp).
#ifndef LATSEC_CATALOG_RAW_HPP
#define LATSEC_CATALOG_RAW_HPP

#include "latsec/catalog.hpp"

namespace latsec::detail {

struct RawEntry {
    const char* name;
    int n, k, d;
    CodeKind kind;
    bool tb;
    const char* source;
    const char* gain;
    const char* weights;  // "w:A_w" pairs, space separated, ascending w
};

extern const RawEntry kRawEntries[];
extern const int kRawEntryCount;

}  // namespace latsec::detail

#endif
