#pragma once

#include <backedge/digraph.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace backedge {

/// Canonical labelling: position -> original vertex. The relabelled arc
/// matrix, read column by column over the upper triangle
/// ((0,1), (0,2), (1,2), (0,3), ...), is lexicographically minimal among
///   - all n! relabellings when n <= 8;
///   - all relabellings that list vertices by colour-refinement class
///     (out-degree, then out-neighbour class counts, iterated) when n > 8.
/// Both regimes are isomorphism invariant. Requires n <= 64.
std::vector<int> canonical_labelling(const Tournament & t);

/// Byte string: one byte holding n, then the canonical bits, packed most
/// significant bit first. Equal codes iff isomorphic.
std::string canonical_code(const Tournament & t);

Tournament canonical_form(const Tournament & t);

bool isomorphic(const Tournament & a, const Tournament & b);

/// Lowercase hex rendering of a code, for CSV and logs.
std::string code_hex(const std::string & code);

/// Number of automorphisms, by backtracking over colour-preserving maps.
std::uint64_t automorphism_count(const Tournament & t);

/// Stable colour classes of the refinement used for n > 8, as a colour per
/// vertex; colours are numbered in an isomorphism-invariant order.
std::vector<int> refined_colours(const Tournament & t);

} // namespace backedge
