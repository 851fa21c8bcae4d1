#include <backedge/canon.hh>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace backedge {

std::vector<int> refined_colours(const Tournament & t)
{
    int n = t.size();
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v)
        colour[v] = t.out_degree(v);
    int classes = -1;
    while (true) {
        int current = *std::max_element(colour.begin(), colour.end()) + 1;
        std::vector<std::vector<int>> signature(n);
        for (int v = 0; v < n; ++v) {
            signature[v].assign(current + 1, 0);
            signature[v][0] = colour[v];
            for (int w = 0; w < n; ++w)
                if (t.has_arc(v, w))
                    ++signature[v][colour[w] + 1];
        }
        std::map<std::vector<int>, int> rank;
        for (auto & s : signature)
            rank.emplace(s, 0);
        int next = 0;
        for (auto & [s, r] : rank)
            r = next++;
        for (int v = 0; v < n; ++v)
            colour[v] = rank[signature[v]];
        if (next == classes)
            break;
        classes = next;
    }
    return colour;
}

namespace {

class CanonSearch
{
public:
    explicit CanonSearch(const Tournament & t) : n_(t.size()), perm_(n_), best_(n_, unset), best_perm_(n_)
    {
        require_solver_size(n_, "canonical_labelling");
        for (int v = 0; v < n_; ++v) {
            out_.push_back(t.out_set(v));
        }
        if (n_ > 8) {
            auto colour = refined_colours(t);
            std::vector<int> sorted(n_);
            std::iota(sorted.begin(), sorted.end(), 0);
            std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) { return colour[a] < colour[b]; });
            allowed_.assign(n_, 0);
            for (int p = 0; p < n_; ++p)
                for (int v = 0; v < n_; ++v)
                    if (colour[v] == colour[sorted[p]])
                        allowed_[p] |= singleton(v);
        }
        else
            allowed_.assign(n_, all_vertices(n_));
    }

    std::vector<int> run()
    {
        dfs(0, 0);
        return best_perm_;
    }

private:
    static constexpr std::uint64_t unset = std::numeric_limits<std::uint64_t>::max();

    void dfs(int k, VertexSet used)
    {
        if (k == n_) {
            best_perm_ = perm_;
            return;
        }
        VertexSet candidates = allowed_[k] & ~used;
        for_each_vertex(candidates, [&](int v) {
            std::uint64_t column = 0;
            for (int i = 0; i < k; ++i)
                column = (column << 1) | static_cast<std::uint64_t>(contains(out_[perm_[i]], v));
            if (column > best_[k])
                return;
            if (column < best_[k]) {
                best_[k] = column;
                std::fill(best_.begin() + k + 1, best_.end(), unset);
            }
            perm_[k] = v;
            dfs(k + 1, used | singleton(v));
        });
    }


    int n_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> allowed_;
    std::vector<int> perm_;
    std::vector<std::uint64_t> best_;
    std::vector<int> best_perm_;
};

} // namespace

std::vector<int> canonical_labelling(const Tournament & t) { return CanonSearch(t).run(); }

Tournament canonical_form(const Tournament & t)
{
    auto labelling = canonical_labelling(t);
    return t.induced(std::span<const int>(labelling));
}

std::string canonical_code(const Tournament & t)
{
    Tournament c = canonical_form(t);
    int n = c.size();
    std::string code(1, static_cast<char>(n));
    unsigned char acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = static_cast<unsigned char>((acc << 1) | (c.has_arc(i, j) ? 1 : 0));
            if (++filled == 8) {
                code.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    if (filled)
        code.push_back(static_cast<char>(acc << (8 - filled)));
    return code;
}

bool isomorphic(const Tournament & a, const Tournament & b)
{
    return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::string code_hex(const std::string & code)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char c : code) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

std::uint64_t automorphism_count(const Tournament & t)
{
    int n = t.size();
    require_solver_size(n, "automorphism_count");
    auto colour = refined_colours(t);
    std::vector<int> image(n, -1);
    std::uint64_t count = 0;
    auto extend = [&](auto & self, int v, VertexSet used) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (contains(used, w) || colour[w] != colour[v])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = t.has_arc(u, v) == t.has_arc(image[u], w);
            if (!ok)
                continue;
            image[v] = w;
            self(self, v + 1, used | singleton(w));
        }
    };
    extend(extend, 0, 0);
    return count;
}

} // namespace backedge
