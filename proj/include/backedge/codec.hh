#pragma once

#include <backedge/digraph.hh>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace backedge {

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string & message, int line, int offset);
    int line() const { return line_; }
    int offset() const { return offset_; }

private:
    int line_;
    int offset_;
};

/// Tournament file: line 1 holds n, line 2 holds C(n,2) characters, one per
/// pair (i, j) with i < j in row-major order; '1' means i -> j.
std::string serialize_trn(const Tournament & t);
Tournament parse_trn(std::string_view text);

/// Digraph file: line 1 holds n, then n rows of n characters (full matrix,
/// zero diagonal, no anti-parallel pair).
std::string serialize_dgr(const Digraph & d);
Digraph parse_dgr(std::string_view text);

/// Picks the format from the content: a tournament file has exactly two
/// non-empty lines (or one when n = 1).
std::variant<Tournament, Digraph> parse_any(std::string_view text);

std::string read_file(const std::string & path);
void write_file(const std::string & path, std::string_view content);

/// DOT rendering. With an ordering, vertices are ranked left to right and
/// backward arcs are drawn in red.
std::string to_dot(const Digraph & d, const Ordering * ord = nullptr);
std::string to_dot(const Graph & g, const Ordering * ord = nullptr);

} // namespace backedge
