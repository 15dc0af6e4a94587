#pragma once

#include <cstdint>

#include "symfix/graph.hpp"

namespace symfix {

/// Resource ceilings for the expensive operations. The CLI mirrors
/// aut_enum_cap as --aut-cap (env SYMFIX_AUT_CAP) and subset_cap as
/// --subset-cap; hitting a ceiling raises CapError, never a silent
/// approximation.
struct Caps {
    std::uint64_t aut_enum_cap = 10'000'000;  // group element streaming
    int subset_cap = 20;                      // max n for 2^n subset machinery
    int search_cap = Graph::max_vertices;     // max n for the automorphism search
};

}  // namespace symfix
