#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace backedge {

/// Vertex subset of a graph with at most 64 vertices. All exact solvers work
/// on this representation.
using VertexSet = std::uint64_t;

inline constexpr int max_solver_vertices = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n)
{
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

template <typename F>
void for_each_vertex(VertexSet s, F && f)
{
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

inline void require_solver_size(int n, const char * what)
{
    if (n > max_solver_vertices)
        throw std::invalid_argument(std::string(what) + ": at most 64 vertices supported, got " + std::to_string(n));
}

/// Square bit matrix stored as rows of 64-bit blocks.
class BitMatrix
{
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), data_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }

    bool test(int r, int c) const { return (data_[index(r, c)] >> (c & 63)) & 1U; }
    void set(int r, int c) { data_[index(r, c)] |= std::uint64_t{1} << (c & 63); }
    void reset(int r, int c) { data_[index(r, c)] &= ~(std::uint64_t{1} << (c & 63)); }

    std::span<const std::uint64_t> row(int r) const
    {
        return {data_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
    }

    /// Fast path, requires size() <= 64.
    VertexSet row_set(int r) const { return words_ == 0 ? 0 : data_[static_cast<std::size_t>(r) * words_]; }

    int row_count(int r) const
    {
        int total = 0;
        for (auto w : row(r))
            total += std::popcount(w);
        return total;
    }

    bool operator==(const BitMatrix &) const = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * words_ + (c >> 6); }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> data_;
};

} // namespace backedge
