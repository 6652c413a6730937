#pragma once

#include <cstdint>
#include <vector>

#include "ncnat/term.hpp"

namespace ncnat::bitcode {

// Packed preorder code of a term of magnitude n: the 2n-1 bits of its
// TermCode, first bit most significant. For a fixed magnitude, numeric order
// on Code equals lexicographic order on the bit strings. This is the working
// representation for whole-stratum computations.
using Code = std::uint64_t;

constexpr int length(int magnitude) { return 2 * magnitude - 1; }

// magnitude(t) must be <= kMaxMagnitude.
Code pack(const Term& t);
Term unpack(Code code, int magnitude);
std::string to_bit_string(Code code, int magnitude);

// All codes of magnitude n in ascending order, generated directly in order.
std::vector<Code> enumerate_codes(int magnitude);

// Preorder bit positions (0-based from the root bit) of all rewrite sites.
void collect_sites(Code code, int len, std::vector<int>& out);

// Length of the subtree starting at preorder position pos.
int subtree_length(Code code, int len, int pos);

// Apply the elementary rewrite at site position pos (must be a valid site).
Code apply_site(Code code, int len, int pos);

// Convert a site bit position into the public L/R path form.
RewriteSite site_path(Code code, int len, int pos);

} // namespace ncnat::bitcode
