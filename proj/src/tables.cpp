#include "locdom/tables.hpp"

#include "locdom/solver.hpp"

namespace locdom {

namespace {

TableRow solve_row(std::string table, const FamilyDescriptor& d, FormulaTriple expected) {
    TableRow row;
    row.table = std::move(table);
    row.family = d;
    const Graph g = build(d);
    const Graph c = complement(g);
    row.order = g.order();
    row.expected = expected;
    row.lambda = lambda(g).value;
    row.lambda_complement = lambda(c).value;
    row.lambda_global = lambda_g(g).value;
    row.lambda_global_of_complement = lambda_g(c).value;
    row.agrees = expected == FormulaTriple{row.lambda, row.lambda_complement, row.lambda_global} &&
                 row.lambda_global == row.lambda_global_of_complement;
    return row;
}

}  // namespace

std::vector<TableRow> reproduce_tables() {
    std::vector<TableRow> rows;
    for (const SmallOrderEntry& e : small_order_table())
        rows.push_back(solve_row("small", e.family, {e.lambda, e.lambda_complement, e.lambda_global}));

    std::vector<FamilyDescriptor> general;
    for (int n = 7; n <= 13; ++n) general.push_back(family::path(n));
    for (int n = 7; n <= 13; ++n) general.push_back(family::cycle(n));
    for (int n = 8; n <= 12; ++n) general.push_back(family::wheel(n));
    for (int n = 2; n <= 10; ++n) general.push_back(family::complete(n));
    for (int n = 4; n <= 10; ++n) general.push_back(family::star(n));
    for (int n = 4; n <= 10; ++n)
        for (int r = 2; r <= n - r; ++r) general.push_back(family::complete_bipartite(r, n - r));
    for (int n = 6; n <= 10; ++n)
        for (int r = 2; r <= n - 2 - r; ++r) general.push_back(family::bi_star(r, n - 2 - r));
    for (const FamilyDescriptor& d : general) rows.push_back(solve_row("general", d, formula(d)));
    return rows;
}

}  // namespace locdom
