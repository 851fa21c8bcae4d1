#include <backedge/codec.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace backedge {

ParseError::ParseError(const std::string & message, int line, int offset) :
    std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + message),
    line_(line),
    offset_(offset)
{
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        auto line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    return lines;
}

int parse_header(const std::vector<std::string_view> & lines)
{
    if (lines.empty())
        throw ParseError("missing vertex count", 1, 0);
    auto header = lines[0];
    int n = 0;
    auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
    if (ec != std::errc{} || ptr != header.data() + header.size() || header.empty())
        throw ParseError("header must be a decimal vertex count", 1, static_cast<int>(ptr - header.data()));
    if (n < 1)
        throw ParseError("vertex count must be positive", 1, 0);
    return n;
}

} // namespace

std::string serialize_trn(const Tournament & t)
{
    std::string out = std::to_string(t.size()) + "\n";
    for (int i = 0; i < t.size(); ++i)
        for (int j = i + 1; j < t.size(); ++j)
            out += t.has_arc(i, j) ? '1' : '0';
    out += '\n';
    return out;
}

Tournament parse_trn(std::string_view text)
{
    auto lines = split_lines(text);
    int n = parse_header(lines);
    std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string_view bits = lines.size() > 1 ? lines[1] : std::string_view{};
    for (std::size_t extra = 2; extra < lines.size(); ++extra)
        if (!lines[extra].empty())
            throw ParseError("unexpected content after the arc line", static_cast<int>(extra) + 1, 0);
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k] != '0' && bits[k] != '1')
            throw ParseError("arc bits must be '0' or '1'", 2, static_cast<int>(k));
    if (bits.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " arc bits, found " + std::to_string(bits.size()), 2,
            static_cast<int>(std::min(bits.size(), expected)));
    return Tournament::from_pairs(n, [&](int i, int j) {
        std::size_t k = static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
        return bits[k] == '1';
    });
}

std::string serialize_dgr(const Digraph & d)
{
    std::string out = std::to_string(d.size()) + "\n";
    for (int u = 0; u < d.size(); ++u) {
        for (int v = 0; v < d.size(); ++v)
            out += d.has_arc(u, v) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Digraph parse_dgr(std::string_view text)
{
    auto lines = split_lines(text);
    int n = parse_header(lines);
    if (static_cast<int>(lines.size()) < n + 1)
        throw ParseError("expected " + std::to_string(n) + " matrix rows", static_cast<int>(lines.size()) + 1, 0);
    for (std::size_t extra = n + 1; extra < lines.size(); ++extra)
        if (!lines[extra].empty())
            throw ParseError("unexpected content after the matrix", static_cast<int>(extra) + 1, 0);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        auto row = lines[u + 1];
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row must have " + std::to_string(n) + " characters", u + 2, static_cast<int>(row.size()));
        for (int v = 0; v < n; ++v) {
            char c = row[v];
            if (c != '0' && c != '1')
                throw ParseError("matrix entries must be '0' or '1'", u + 2, v);
            if (c == '1') {
                if (u == v)
                    throw ParseError("nonzero diagonal entry", u + 2, v);
                if (v < u && lines[v + 1][u] == '1')
                    throw ParseError("anti-parallel arcs between " + std::to_string(v) + " and " + std::to_string(u), u + 2, v);
                arcs.emplace_back(u, v);
            }
        }
    }
    return Digraph::from_arcs(n, arcs);
}

std::variant<Tournament, Digraph> parse_any(std::string_view text)
{
    auto lines = split_lines(text);
    int nonempty = 0;
    for (auto l : lines)
        nonempty += !l.empty();
    int n = parse_header(lines);
    bool tournament_file = n == 1 ? nonempty == 1 : nonempty <= 2;
    if (tournament_file)
        return parse_trn(text);
    return parse_dgr(text);
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string & path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

namespace {

void emit_rank_chain(std::ostringstream & out, const Ordering & ord)
{
    out << "  { rank=same;";
    for (int p = 0; p < ord.size(); ++p)
        out << " " << ord.at(p) << ";";
    out << " }\n";
    for (int p = 0; p + 1 < ord.size(); ++p)
        out << "  " << ord.at(p) << " -> " << ord.at(p + 1) << " [style=invis];\n";
}

} // namespace

std::string to_dot(const Digraph & d, const Ordering * ord)
{
    std::ostringstream out;
    out << "digraph T {\n  rankdir=LR;\n";
    for (int v = 0; v < d.size(); ++v)
        out << "  " << v << ";\n";
    if (ord)
        emit_rank_chain(out, *ord);
    for (auto [u, v] : d.arcs()) {
        out << "  " << u << " -> " << v;
        if (ord) {
            if (ord->before(v, u))
                out << " [color=red, constraint=false]";
            else
                out << " [color=gray]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const Graph & g, const Ordering * ord)
{
    std::ostringstream out;
    if (ord) {
        out << "digraph G {\n  rankdir=LR;\n";
        for (int v = 0; v < g.size(); ++v)
            out << "  " << v << ";\n";
        emit_rank_chain(out, *ord);
        for (auto [u, v] : g.edges())
            out << "  " << u << " -> " << v << " [dir=none, color=red, constraint=false];\n";
    }
    else {
        out << "graph G {\n";
        for (int v = 0; v < g.size(); ++v)
            out << "  " << v << ";\n";
        for (auto [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace backedge
