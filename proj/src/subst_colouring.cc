#include <backedge/structure.hh>

#include <algorithm>
#include <array>

namespace backedge {

namespace {

template <typename... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};

struct Palette
{
    std::vector<int> colour; ///< in build() layout
    int k = 0;
};

/// Parts placed side by side; classes given by `group[i]` share a palette.
Palette combine(const std::vector<Palette> & parts, const std::vector<int> & group, int groups)
{
    std::vector<int> width(groups, 0), offset(groups, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        width[group[i]] = std::max(width[group[i]], parts[i].k);
    Palette out;
    for (int g = 0; g < groups; ++g) {
        offset[g] = out.k;
        out.k += width[g];
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int c : parts[i].colour)
            out.colour.push_back(offset[group[i]] + c);
    return out;
}

Palette colour_expr(const Expr & e);

Palette colour_delta(const std::array<Palette, 3> & parts)
{
    // Each cyclically adjacent pair is a one-way cut, so any two parts may
    // share; pick the pair that needs fewest colours.
    Palette best;
    bool first = true;
    for (int fresh = 0; fresh < 3; ++fresh) {
        std::vector<int> group(3, 0);
        group[fresh] = 1;
        auto p = combine({parts[0], parts[1], parts[2]}, group, 2);
        if (first || p.k < best.k) {
            best = std::move(p);
            first = false;
        }
    }
    return best;
}

Palette family(int n, bool tilde)
{
    Palette one{{0}, 1};
    Palette current = one;
    for (int level = 2; level <= n; ++level)
        current = colour_delta({tilde ? current : one, current, current});
    return current;
}

Palette colour_expr(const Expr & e)
{
    return std::visit(
        overloaded{
            [](const node::Transitive & n) -> Palette {
                if (n.k == 1)
                    return {{0}, 1};
                if (n.k == 2)
                    return {{0, 0}, 1};
                throw ConstructionError("substitution colouring accepts TT(1), TT(2) and C3 leaves only");
            },
            [](const node::Triangle &) -> Palette { return {{0, 0, 1}, 2}; },
            [](const node::Delta & n) {
                return colour_delta({colour_expr(*n.first), colour_expr(*n.second), colour_expr(*n.third)});
            },
            [](const node::Arrow & n) { return combine({colour_expr(*n.left), colour_expr(*n.right)}, {0, 0}, 1); },
            [](const node::Subst & n) {
                auto base = colour_expr(*n.base);
                std::vector<Palette> parts;
                for (int v = 0; v < static_cast<int>(base.colour.size()); ++v) {
                    auto it = n.parts.find(v);
                    if (it == n.parts.end() || !it->second)
                        throw ConstructionError("substitution leaves base vertex v" + std::to_string(v) + " unmapped");
                    parts.push_back(colour_expr(*it->second));
                }
                return combine(parts, base.colour, base.k);
            },
            // Reversal keeps every class acyclic.
            [](const node::Reverse & n) { return colour_expr(*n.inner); },
            [](const node::SFamily & n) {
                if (n.n < 1)
                    throw ConstructionError("S needs a positive size");
                return family(n.n, false);
            },
            [](const node::STildeFamily & n) {
                if (n.n < 1)
                    throw ConstructionError("STilde needs a positive size");
                return family(n.n, true);
            },
            [](const node::PathReversed &) -> Palette {
                throw ConstructionError("substitution colouring does not accept TP leaves");
            },
            [](const node::Rotational &) -> Palette {
                throw ConstructionError("substitution colouring does not accept Rot leaves");
            },
            [](const node::Raw &) -> Palette {
                throw ConstructionError("substitution colouring does not accept Raw leaves");
            },
        },
        e.node);
}

ExprPtr random_expr(Rng & rng, int budget)
{
    // Leaves when the budget is small, otherwise one of the composition rules.
    int choice = static_cast<int>(uniform_below(rng, budget >= 3 ? 6 : 2));
    switch (choice) {
    case 0:
        return expr::tt(1);
    case 1:
        return budget >= 2 ? expr::tt(2) : expr::tt(1);
    case 2:
        return expr::c3();
    case 3: {
        int a = 1 + static_cast<int>(uniform_below(rng, budget - 1));
        return expr::arrow(random_expr(rng, a), random_expr(rng, budget - a));
    }
    case 4: {
        int a = 1 + static_cast<int>(uniform_below(rng, budget - 2));
        int b = 1 + static_cast<int>(uniform_below(rng, budget - a - 1));
        return expr::delta(random_expr(rng, a), random_expr(rng, b), random_expr(rng, budget - a - b));
    }
    default: {
        // Base of at most three vertices, each replaced by an expression.
        ExprPtr base = uniform_below(rng, 2) == 0 ? expr::c3() : expr::tt(2);
        int m = build(base).size();
        std::map<int, ExprPtr> parts;
        int left = budget;
        for (int v = 0; v < m; ++v) {
            int share = v + 1 == m ? left : 1 + static_cast<int>(uniform_below(rng, left - (m - v - 1)));
            share = std::max(1, std::min(share, left - (m - v - 1)));
            parts[v] = random_expr(rng, share);
            left -= share;
        }
        return expr::subst(base, std::move(parts));
    }
    }
}

} // namespace

Dicolouring substitution_dicolouring(const Expr & e)
{
    auto p = colour_expr(e);
    return Dicolouring{p.colour, p.k};
}

ExprPtr random_base_expr(Rng & rng, int max_vertices)
{
    if (max_vertices < 1)
        throw std::invalid_argument("random_base_expr needs at least one vertex");
    return random_expr(rng, max_vertices);
}

} // namespace backedge
