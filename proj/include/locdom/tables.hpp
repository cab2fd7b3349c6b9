#pragma once

#include <string>
#include <vector>

#include "locdom/families.hpp"

namespace locdom {

struct TableRow {
    std::string table;  // "small" or "general"
    FamilyDescriptor family;
    int order = 0;
    FormulaTriple expected;
    int lambda = 0;             // exact, on G
    int lambda_complement = 0;  // exact, on complement(G)
    int lambda_global = 0;      // exact, on G
    int lambda_global_of_complement = 0;  // exact, on complement(G)
    bool agrees = false;
};

/// Small-order rows for every column of the small table; general rows for
///   P_n, C_n   7 <= n <= 13
///   W_n        8 <= n <= 12
///   K_n        2 <= n <= 10
///   stars      4 <= n <= 10
///   K_{r,s} and bi-stars with 2 <= r <= s and order <= 10.
std::vector<TableRow> reproduce_tables();

}  // namespace locdom
