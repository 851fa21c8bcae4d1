#include <backedge/construct.hh>
#include <backedge/codec.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace backedge {

DslError::DslError(const std::string & message, std::size_t position) :
    std::runtime_error(message + " at position " + std::to_string(position)),
    position_(position)
{
}

namespace {

constexpr long max_built_vertices = 4096;

template <typename... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};

ExprPtr make(auto n) { return std::make_shared<const Expr>(Expr{std::move(n)}); }

void require_child(const ExprPtr & e)
{
    if (!e)
        throw ConstructionError("null subexpression");
}

/// Substitutes parts[i] for vertex i of base, laying parts out in base order.
Tournament compose(const Tournament & base, const std::vector<Tournament> & parts)
{
    std::vector<int> owner, local;
    for (int i = 0; i < base.size(); ++i)
        for (int v = 0; v < parts[i].size(); ++v) {
            owner.push_back(i);
            local.push_back(v);
        }
    if (static_cast<long>(owner.size()) > max_built_vertices)
        throw ConstructionError("construction exceeds " + std::to_string(max_built_vertices) + " vertices");
    return Tournament::from_pairs(static_cast<int>(owner.size()), [&](int a, int b) {
        if (owner[a] == owner[b])
            return parts[owner[a]].has_arc(local[a], local[b]);
        return base.has_arc(owner[a], owner[b]);
    });
}

Tournament cyclic_triangle()
{
    return Tournament::from_pairs(3, [](int i, int j) { return !(i == 0 && j == 2); });
}

void check_size(int n, const char * what)
{
    if (n < 1)
        throw ConstructionError(std::string(what) + " needs a positive size");
}

Tournament build_family(int n, bool tilde)
{
    Tournament current = Tournament::transitive(1);
    Tournament one = current;
    Tournament c3 = cyclic_triangle();
    for (int level = 2; level <= n; ++level) {
        if (tilde)
            current = compose(c3, {current, current, current});
        else
            current = compose(c3, {one, current, current});
    }
    return current;
}

} // namespace

namespace expr {
ExprPtr tt(int k) { return make(node::Transitive{k}); }
ExprPtr c3() { return make(node::Triangle{}); }
ExprPtr delta(ExprPtr a, ExprPtr b, ExprPtr c) { return make(node::Delta{std::move(a), std::move(b), std::move(c)}); }
ExprPtr arrow(ExprPtr a, ExprPtr b) { return make(node::Arrow{std::move(a), std::move(b)}); }
ExprPtr subst(ExprPtr base, std::map<int, ExprPtr> parts) { return make(node::Subst{std::move(base), std::move(parts)}); }
ExprPtr reverse(ExprPtr e) { return make(node::Reverse{std::move(e)}); }
ExprPtr tp(int n) { return make(node::PathReversed{n}); }
ExprPtr s(int n) { return make(node::SFamily{n}); }
ExprPtr s_tilde(int n) { return make(node::STildeFamily{n}); }
ExprPtr rotational(int n, std::vector<int> offsets) { return make(node::Rotational{n, std::move(offsets)}); }
ExprPtr raw(Tournament t) { return make(node::Raw{std::move(t)}); }
} // namespace expr

Tournament build(const Expr & e)
{
    return std::visit(
        overloaded{
            [](const node::Transitive & n) {
                check_size(n.k, "TT");
                if (n.k > max_built_vertices)
                    throw ConstructionError("TT size too large");
                return Tournament::transitive(n.k);
            },
            [](const node::Triangle &) { return cyclic_triangle(); },
            [](const node::Delta & n) {
                require_child(n.first);
                require_child(n.second);
                require_child(n.third);
                return compose(cyclic_triangle(), {build(*n.first), build(*n.second), build(*n.third)});
            },
            [](const node::Arrow & n) {
                require_child(n.left);
                require_child(n.right);
                return compose(Tournament::transitive(2), {build(*n.left), build(*n.right)});
            },
            [](const node::Subst & n) {
                require_child(n.base);
                Tournament base = build(*n.base);
                std::vector<Tournament> parts;
                for (int v = 0; v < base.size(); ++v) {
                    auto it = n.parts.find(v);
                    if (it == n.parts.end())
                        throw ConstructionError("substitution leaves base vertex v" + std::to_string(v) + " unmapped");
                    require_child(it->second);
                    parts.push_back(build(*it->second));
                }
                for (auto & [v, _] : n.parts)
                    if (v < 0 || v >= base.size())
                        throw ConstructionError("substitution maps v" + std::to_string(v) + " which the base lacks");
                return compose(base, parts);
            },
            [](const node::Reverse & n) {
                require_child(n.inner);
                return build(*n.inner).reversed();
            },
            [](const node::PathReversed & n) {
                check_size(n.n, "TP");
                if (n.n > max_built_vertices)
                    throw ConstructionError("TP size too large");
                return Tournament::from_pairs(n.n, [](int i, int j) { return j != i + 1; });
            },
            [](const node::SFamily & n) {
                check_size(n.n, "S");
                if (n.n > 12)
                    throw ConstructionError("S(n) limited to n <= 12");
                return build_family(n.n, false);
            },
            [](const node::STildeFamily & n) {
                check_size(n.n, "STilde");
                if (n.n > 8)
                    throw ConstructionError("STilde(n) limited to n <= 8");
                return build_family(n.n, true);
            },
            [](const node::Rotational & n) {
                check_size(n.n, "Rot");
                if (n.n > max_built_vertices)
                    throw ConstructionError("Rot size too large");
                std::set<int> offs;
                for (int d : n.offsets) {
                    if (d < 1 || d >= n.n)
                        throw ConstructionError("rotational offset " + std::to_string(d) + " outside 1.." + std::to_string(n.n - 1));
                    offs.insert(d);
                }
                for (int d = 1; d < n.n; ++d)
                    if (offs.count(d) == offs.count(n.n - d))
                        throw ConstructionError("rotational offsets must contain exactly one of d and n-d for d = " + std::to_string(d));
                return Tournament::from_pairs(n.n, [&](int i, int j) { return offs.count(j - i) > 0; });
            },
            [](const node::Raw & n) { return n.tournament; },
        },
        e.node);
}

std::string to_string(const Expr & e)
{
    auto sub = [](const ExprPtr & p) { return p ? to_string(*p) : std::string("?"); };
    return std::visit(
        overloaded{
            [](const node::Transitive & n) { return "TT(" + std::to_string(n.k) + ")"; },
            [](const node::Triangle &) { return std::string("C3"); },
            [&](const node::Delta & n) { return "Delta(" + sub(n.first) + "," + sub(n.second) + "," + sub(n.third) + ")"; },
            [&](const node::Arrow & n) { return "Arrow(" + sub(n.left) + "," + sub(n.right) + ")"; },
            [&](const node::Subst & n) {
                std::string out = "Subst(" + sub(n.base) + ";";
                bool first = true;
                for (auto & [v, p] : n.parts) {
                    out += (first ? " v" : ", v") + std::to_string(v) + "=" + sub(p);
                    first = false;
                }
                return out + ")";
            },
            [&](const node::Reverse & n) { return "Reverse(" + sub(n.inner) + ")"; },
            [](const node::PathReversed & n) { return "TP(" + std::to_string(n.n) + ")"; },
            [](const node::SFamily & n) { return "S(" + std::to_string(n.n) + ")"; },
            [](const node::STildeFamily & n) { return "STilde(" + std::to_string(n.n) + ")"; },
            [](const node::Rotational & n) {
                std::string out = "Rot(" + std::to_string(n.n) + ";";
                for (std::size_t i = 0; i < n.offsets.size(); ++i)
                    out += (i ? "," : "") + std::to_string(n.offsets[i]);
                return out + ")";
            },
            [](const node::Raw & n) {
                auto text = serialize_trn(n.tournament);
                auto nl = text.find('\n');
                std::string bits = text.substr(nl + 1);
                if (!bits.empty() && bits.back() == '\n')
                    bits.pop_back();
                return "Raw(" + std::to_string(n.tournament.size()) + ";" + bits + ")";
            },
        },
        e.node);
}

namespace {

/// Recursive-descent parser for the construction language.
///
///   expr   := name [ '(' args ')' ] | integer          (integer only inside Delta/Arrow)
///   Subst  := 'Subst(' expr ';' 'v' int '=' expr { ',' 'v' int '=' expr } ')'
///   Rot    := 'Rot(' int ';' int { ',' int } ')'
///   Raw    := 'Raw(' int ';' bits ')'
class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse_all()
    {
        auto e = parse(false);
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string & message) const { throw DslError(message, pos_); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c)
    {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer()
    {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == text_.data() + pos_)
            fail("expected integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    std::string identifier()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected construction name");
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprPtr parse(bool allow_integer)
    {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (!allow_integer)
                fail("bare integer is only allowed inside Delta or Arrow");
            return expr::tt(integer());
        }
        std::size_t start = pos_;
        std::string name = identifier();
        if (name == "C3")
            return expr::c3();
        if (name == "TT" || name == "TP" || name == "S" || name == "STilde") {
            expect('(');
            int k = integer();
            expect(')');
            if (name == "TT")
                return expr::tt(k);
            if (name == "TP")
                return expr::tp(k);
            if (name == "S")
                return expr::s(k);
            return expr::s_tilde(k);
        }
        if (name == "Delta") {
            expect('(');
            auto a = parse(true);
            expect(',');
            auto b = parse(true);
            expect(',');
            auto c = parse(true);
            expect(')');
            return expr::delta(a, b, c);
        }
        if (name == "Arrow") {
            expect('(');
            auto a = parse(true);
            expect(',');
            auto b = parse(true);
            expect(')');
            return expr::arrow(a, b);
        }
        if (name == "Reverse") {
            expect('(');
            auto a = parse(false);
            expect(')');
            return expr::reverse(a);
        }
        if (name == "Rot") {
            expect('(');
            int n = integer();
            std::vector<int> offsets;
            expect(';');
            offsets.push_back(integer());
            while (peek(',')) {
                ++pos_;
                offsets.push_back(integer());
            }
            expect(')');
            return expr::rotational(n, std::move(offsets));
        }
        if (name == "Subst") {
            expect('(');
            auto base = parse(false);
            expect(';');
            std::map<int, ExprPtr> parts;
            do {
                skip_space();
                if (pos_ >= text_.size() || text_[pos_] != 'v')
                    fail("expected vertex name v<index>");
                ++pos_;
                std::size_t at = pos_;
                int v = integer();
                expect('=');
                auto part = parse(false);
                if (!parts.emplace(v, part).second) {
                    pos_ = at;
                    fail("vertex v" + std::to_string(v) + " substituted twice");
                }
            } while (peek(',') && (++pos_, true));
            expect(')');
            return expr::subst(base, std::move(parts));
        }
        if (name == "Raw") {
            expect('(');
            int n = integer();
            expect(';');
            skip_space();
            std::size_t start_bits = pos_;
            while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
                ++pos_;
            std::string file = std::to_string(n) + "\n" + std::string(text_.substr(start_bits, pos_ - start_bits)) + "\n";
            expect(')');
            try {
                return expr::raw(parse_trn(file));
            }
            catch (const std::exception & ex) {
                pos_ = start_bits;
                fail(std::string("bad Raw tournament: ") + ex.what());
            }
        }
        pos_ = start;
        fail("unknown construction '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse_all(); }

} // namespace backedge
