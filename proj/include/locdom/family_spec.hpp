#pragma once

#include <string>
#include <string_view>

#include "locdom/families.hpp"

namespace locdom {

// Family spec strings, as accepted by the CLI:
//
//   spec    := tag [ ":" args ]
//   P:n  C:n  W:n  K:n  S:n           path, cycle, wheel, complete, star (order n)
//   Kb:r,s                            complete bipartite K_{r,s}
//   B2:r,s                            bi-star K_2(r,s), order r+s+2
//   F8a:r  F8b:r  F8c:r               the single-clique constructions
//   F8d:r1,r2,...                     K1 v (K_r1 + ... + K_rt); "F8d:r=2,2" also accepted
//   F6e:t=T,r=r1,...;tp=T'            T cliques of the listed sizes plus T' corners;
//                                     "r=" may be dropped when T is 0, "t=" is implied by r
//   paw bull banner cobanner butterfly corner F6d      fixed graphs, no args
//
// Integers are decimal. Parse errors name the offending token.

/// Throws ParseError (offset into the string) or PreconditionError (well-formed
/// but out of the family's range).
FamilyDescriptor parse_family_spec(std::string_view text);

/// Inverse of parse_family_spec.
std::string format_family_spec(const FamilyDescriptor& d);

/// True when text is plainly meant as a family spec (has ':' or is a bare tag).
bool looks_like_family_spec(std::string_view text);

}  // namespace locdom
