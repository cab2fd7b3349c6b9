#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class FamilyTag {
    Path,
    Cycle,
    Wheel,
    Complete,
    Star,
    CompleteBipartite,
    BiStar,
    Paw,
    Bull,
    Banner,
    BannerComplement,
    Butterfly,
    Corner,
    Fig8A,
    Fig8B,
    Fig8C,
    Fig8D,
    Fig6D,
    Fig6E,
};

/// A named graph family instance.
///
/// `params` by tag:
///   Path, Cycle, Wheel, Complete, Star   {n}      (order n)
///   CompleteBipartite                    {r, s}
///   BiStar                               {r, s}   (order r + s + 2)
///   Fig8A, Fig8B, Fig8C                  {r}
///   Fig8D, Fig6E                         {r_1, ..., r_t}  (clique sizes)
///   Paw, Bull, Banner, BannerComplement, Butterfly, Corner, Fig6D   {}
/// `corners` is t' for Fig6E and zero for everything else.
///
/// Vertex numbering of build():
///   Path        0-1-...-(n-1)
///   Cycle       0-1-...-(n-1)-0
///   Wheel       rim cycle 0..n-2, hub n-1
///   Complete    0..n-1
///   Star        leaves 0..n-2, centre n-1
///   CompleteBipartite  sides 0..r-1 and r..r+s-1
///   BiStar      centres 0 and 1; leaves of 0 are 2..r+1, leaves of 1 are r+2..r+s+1
///   Paw         triangle 0,1,2; pendant 3 on 2
///   Bull        triangle 0,1,2; pendants 3 on 0 and 4 on 1
///   Banner      4-cycle 0-1-2-3; pendant 4 on 0
///   BannerComplement  complement of Banner, same labels (edges 02 13 14 24 34)
///   Butterfly   triangles {0,1,4} and {2,3,4}
///   Corner      4-cycle 0-1-2-3 with pendants 4 on 1 and 5 on 3; 0 and 2 have degree 2
///   Fig8A       K1 v (K1 + K_r): lone vertex 0, clique 1..r, apex r+1
///   Fig8B       K_{r+1} on 0..r; path r-(r+1)-(r+2) hanging off vertex r
///   Fig8C       K_{r+1}
///   Fig8D       K1 v (K_r1 + ... + K_rt): cliques packed from 0 upward, apex n-1
///   Fig6D       Corner on 0..5; path 0-6-7
///   Fig6E       cliques packed from 0, then one (corner minus attach vertex)
///               per copy, five labels each in Corner order 1..5; apex u = n-1
///               takes the role of Corner vertex 0 in every copy
struct FamilyDescriptor {
    FamilyTag tag = FamilyTag::Path;
    std::vector<int> params;
    int corners = 0;

    bool operator==(const FamilyDescriptor&) const = default;
};

namespace family {
FamilyDescriptor path(int n);
FamilyDescriptor cycle(int n);
FamilyDescriptor wheel(int n);
FamilyDescriptor complete(int n);
FamilyDescriptor star(int n);
FamilyDescriptor complete_bipartite(int r, int s);
FamilyDescriptor bi_star(int r, int s);
FamilyDescriptor paw();
FamilyDescriptor bull();
FamilyDescriptor banner();
FamilyDescriptor banner_complement();
FamilyDescriptor butterfly();
FamilyDescriptor corner();
FamilyDescriptor fig8a(int r);
FamilyDescriptor fig8b(int r);
FamilyDescriptor fig8c(int r);
FamilyDescriptor fig8d(std::vector<int> cliques);
FamilyDescriptor fig6d();
FamilyDescriptor fig6e(std::vector<int> cliques, int corners);
}  // namespace family

std::string_view to_string(FamilyTag tag);

/// Throws PreconditionError for parameters outside the family's range.
void validate(const FamilyDescriptor& d);

/// Order of build(d), computed without building.
int family_order(const FamilyDescriptor& d);

Graph build(const FamilyDescriptor& d);

/// Closed-form (lambda, lambda of complement, lambda_g).
struct FormulaTriple {
    std::optional<int> lambda;
    std::optional<int> lambda_complement;
    std::optional<int> lambda_global;

    bool operator==(const FormulaTriple&) const = default;
};

/// Known values for paths (n >= 1), cycles (n >= 4), wheels (n >= 5),
/// complete graphs (n >= 2), stars (n >= 4), K_{r,s} and bi-stars
/// (2 <= r, s). Orders below the general formulas come from the small-order
/// table. Throws UnsupportedError for anything else.
FormulaTriple formula(const FamilyDescriptor& d);

/// One column of the small-order table.
struct SmallOrderEntry {
    FamilyDescriptor family;
    int lambda;
    int lambda_complement;
    int lambda_global;
};

const std::vector<SmallOrderEntry>& small_order_table();

/// (lambda(complement P_n), lambda(complement C_n), lambda(P_{n-1})) from the
/// formulas; the three agree. Requires n >= 7, else UnsupportedError.
std::tuple<int, int, int> lambda_complement_path_cycle_identity(int n);

}  // namespace locdom
