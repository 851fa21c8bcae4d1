#pragma once

#include <backedge/digraph.hh>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace backedge {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace node {
struct Transitive { int k; };
struct Triangle {};
/// Cyclic composition: first => second => third => first.
struct Delta { ExprPtr first, second, third; };
/// Every vertex of `left` beats every vertex of `right`.
struct Arrow { ExprPtr left, right; };
/// Each vertex of `base` replaced by the tournament of its expression.
struct Subst { ExprPtr base; std::map<int, ExprPtr> parts; };
struct Reverse { ExprPtr inner; };
/// Transitive tournament with its Hamiltonian path reversed.
struct PathReversed { int n; };
/// S(1) = TT(1), S(n) = Delta(1, S(n-1), S(n-1)).
struct SFamily { int n; };
/// STilde(1) = TT(1), STilde(n) = Delta(STilde(n-1), STilde(n-1), STilde(n-1)).
struct STildeFamily { int n; };
/// i -> j iff (j - i) mod n lies in `offsets`.
struct Rotational { int n; std::vector<int> offsets; };
struct Raw { Tournament tournament; };
} // namespace node

struct Expr
{
    std::variant<node::Transitive, node::Triangle, node::Delta, node::Arrow, node::Subst, node::Reverse,
        node::PathReversed, node::SFamily, node::STildeFamily, node::Rotational, node::Raw>
        node;
};

class ConstructionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DslError : public std::runtime_error
{
public:
    DslError(const std::string & message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace expr {
ExprPtr tt(int k);
ExprPtr c3();
ExprPtr delta(ExprPtr a, ExprPtr b, ExprPtr c);
ExprPtr arrow(ExprPtr a, ExprPtr b);
ExprPtr subst(ExprPtr base, std::map<int, ExprPtr> parts);
ExprPtr reverse(ExprPtr e);
ExprPtr tp(int n);
ExprPtr s(int n);
ExprPtr s_tilde(int n);
ExprPtr rotational(int n, std::vector<int> offsets);
ExprPtr raw(Tournament t);
} // namespace expr

/// Evaluates an expression. Parts of Delta, Arrow and Subst are laid out
/// left to right in argument order; TT(k) in topological order; TP(n) as
/// v1..vn along the reversed path.
Tournament build(const Expr & e);
inline Tournament build(const ExprPtr & e) { return build(*e); }

/// Text form, e.g. `Delta(TT(1),C3,C3)`, `Rot(7;1,2,4)`, `Subst(C3; v0=TT(2), v1=C3, v2=TT(1))`.
/// Inside Delta/Arrow a bare integer k abbreviates TT(k).
ExprPtr parse_expr(std::string_view text);
std::string to_string(const Expr & e);

} // namespace backedge
