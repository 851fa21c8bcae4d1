#include <backedge/canon.hh>
#include <backedge/graph_invariants.hh>
#include <backedge/invariants.hh>
#include <backedge/scan.hh>
#include <backedge/search.hh>
#include <backedge/structure.hh>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

namespace backedge {

PredicateError::PredicateError(const std::string & message, std::size_t position) :
    std::runtime_error(message + " at offset " + std::to_string(position)), position_(position)
{
}

struct Predicate::Node
{
    enum class Kind
    {
        number,
        name,
        negate,
        logical_not,
        logical_and,
        logical_or,
        add,
        subtract,
        multiply,
        compare
    };
    Kind kind;
    long number = 0;
    std::string name;
    std::vector<std::shared_ptr<const Node>> args;
    std::vector<std::string> ops; ///< compare only, between consecutive args
};

namespace {

using NodePtr = std::shared_ptr<const Predicate::Node>;
using Kind = Predicate::Node::Kind;

const std::set<std::string> known_names = {
    "n", "dom", "omega", "chi", "trans", "alpha", "omega_sc", "comps", "strong", "hero", "forest", "common", "true", "false"};

class Parser
{
public:
    explicit Parser(const std::string & text) : s_(text) {}

    NodePtr parse()
    {
        auto e = parse_or();
        skip();
        if (pos_ != s_.size())
            throw PredicateError("unexpected input", pos_);
        return e;
    }

    std::vector<std::string> names;

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(const std::string & token)
    {
        skip();
        if (s_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    static NodePtr make(Kind kind, std::vector<NodePtr> args)
    {
        auto n = std::make_shared<Predicate::Node>();
        n->kind = kind;
        n->args = std::move(args);
        return n;
    }

    NodePtr parse_or()
    {
        auto left = parse_and();
        while (accept("||"))
            left = make(Kind::logical_or, {left, parse_and()});
        return left;
    }

    NodePtr parse_and()
    {
        auto left = parse_not();
        while (accept("&&"))
            left = make(Kind::logical_and, {left, parse_not()});
        return left;
    }

    NodePtr parse_not()
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '!' && (pos_ + 1 >= s_.size() || s_[pos_ + 1] != '=')) {
            ++pos_;
            return make(Kind::logical_not, {parse_not()});
        }
        return parse_compare();
    }

    std::string compare_op()
    {
        for (const char * op : {"<=", ">=", "==", "!=", "<", ">"})
            if (accept(op))
                return op;
        return {};
    }

    NodePtr parse_compare()
    {
        auto first = parse_sum();
        std::vector<NodePtr> args{first};
        std::vector<std::string> ops;
        while (true) {
            auto op = compare_op();
            if (op.empty())
                break;
            ops.push_back(op);
            args.push_back(parse_sum());
        }
        if (ops.empty())
            return first;
        auto n = std::make_shared<Predicate::Node>();
        n->kind = Kind::compare;
        n->args = std::move(args);
        n->ops = std::move(ops);
        return n;
    }

    NodePtr parse_sum()
    {
        auto left = parse_product();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '+') {
                ++pos_;
                left = make(Kind::add, {left, parse_product()});
            }
            else if (pos_ < s_.size() && s_[pos_] == '-') {
                ++pos_;
                left = make(Kind::subtract, {left, parse_product()});
            }
            else
                return left;
        }
    }

    NodePtr parse_product()
    {
        auto left = parse_unary();
        while (accept("*"))
            left = make(Kind::multiply, {left, parse_unary()});
        return left;
    }

    NodePtr parse_unary()
    {
        skip();
        if (pos_ >= s_.size())
            throw PredicateError("unexpected end of predicate", pos_);
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return make(Kind::negate, {parse_unary()});
        }
        if (c == '(') {
            ++pos_;
            auto e = parse_or();
            if (!accept(")"))
                throw PredicateError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            auto n = std::make_shared<Predicate::Node>();
            n->kind = Kind::number;
            n->number = std::stol(s_.substr(start, pos_ - start));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (!known_names.count(name))
                throw PredicateError("unknown name '" + name + "'", start);
            auto n = std::make_shared<Predicate::Node>();
            if (name == "true" || name == "false") {
                n->kind = Kind::number;
                n->number = name == "true";
                return n;
            }
            n->kind = Kind::name;
            n->name = name;
            if (std::find(names.begin(), names.end(), name) == names.end())
                names.push_back(name);
            return n;
        }
        throw PredicateError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string & s_;
    std::size_t pos_ = 0;
};

bool compare(long a, const std::string & op, long b)
{
    if (op == "<")
        return a < b;
    if (op == "<=")
        return a <= b;
    if (op == "==")
        return a == b;
    if (op == "!=")
        return a != b;
    if (op == ">=")
        return a >= b;
    return a > b;
}

} // namespace

Predicate Predicate::parse(const std::string & text)
{
    Parser parser(text);
    Predicate p;
    p.text_ = text;
    p.root_ = parser.parse();
    p.names_ = parser.names;
    return p;
}

Evaluation::Evaluation(const Tournament & t, const SolverOptions & options) : t_(t), options_(options) {}

long Evaluation::value(const std::string & name)
{
    if (auto it = cache_.find(name); it != cache_.end())
        return it->second;
    auto record = [&](const InvariantResult & r) {
        exact_ = exact_ && r.exact();
        witness_[name] = to_json(r.certificate);
        return static_cast<long>(r.value);
    };
    long v = 0;
    if (name == "n")
        v = t_.size();
    else if (name == "dom")
        v = record(domination_number(t_, options_));
    else if (name == "omega")
        v = record(clique_number(t_, options_));
    else if (name == "chi")
        v = record(dichromatic_number(t_, options_));
    else if (name == "trans")
        v = record(max_transitive(t_, options_));
    else if (name == "alpha")
        v = independence_number(t_);
    else if (name == "omega_sc") {
        // Components solved one at a time, each without decomposition.
        SolverOptions whole = options_;
        whole.use_components = false;
        for (auto & part : strong_components(t_)) {
            auto r = clique_number(t_.induced(std::span<const int>(part)), whole);
            exact_ = exact_ && r.exact();
            v = std::max<long>(v, r.value);
        }
    }
    else if (name == "comps")
        v = static_cast<long>(strong_components(t_).size());
    else if (name == "strong")
        v = is_strongly_connected(t_);
    else if (name == "hero") {
        auto h = is_hero(t_);
        v = h.hero;
    }
    else if (name == "forest" || name == "common") {
        auto r = name == "forest" ? ordering_search(t_, OrderingPredicate::forest(), options_)
                                  : common_optimal_ordering(t_, options_);
        exact_ = exact_ && r.outcome != OrderingSearchResult::Outcome::timeout;
        v = r.outcome == OrderingSearchResult::Outcome::found;
        if (r.ordering) {
            auto o = r.ordering->vertices();
            witness_[name] = std::vector<int>(o.begin(), o.end());
        }
    }
    else
        throw PredicateError("unknown name '" + name + "'", 0);
    cache_.emplace(name, v);
    return v;
}

long Evaluation::evaluate(const Predicate & p) { return eval(*p.root_); }

long Evaluation::eval(const Predicate::Node & node)
{
    switch (node.kind) {
    case Kind::number:
        return node.number;
    case Kind::name:
        return value(node.name);
    case Kind::negate:
        return -eval(*node.args[0]);
    case Kind::logical_not:
        return !eval(*node.args[0]);
    case Kind::logical_and:
        return eval(*node.args[0]) && eval(*node.args[1]);
    case Kind::logical_or:
        return eval(*node.args[0]) || eval(*node.args[1]);
    case Kind::add:
        return eval(*node.args[0]) + eval(*node.args[1]);
    case Kind::subtract:
        return eval(*node.args[0]) - eval(*node.args[1]);
    case Kind::multiply:
        return eval(*node.args[0]) * eval(*node.args[1]);
    case Kind::compare: {
        long left = eval(*node.args[0]);
        for (std::size_t i = 0; i < node.ops.size(); ++i) {
            long right = eval(*node.args[i + 1]);
            if (!compare(left, node.ops[i], right))
                return 0;
            left = right;
        }
        return 1;
    }
    }
    return 0;
}

std::string csv_quote(const std::string & field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

struct Row
{
    std::string line;
    bool holds = false;
    bool exact = true;
    std::string code;
};

Row evaluate_row(const Predicate & p, const Tournament & t, const SolverOptions & options)
{
    Evaluation ev(t, options);
    Row row;
    row.holds = ev.evaluate(p) != 0;
    row.code = code_hex(canonical_code(t));
    std::string line = row.code + "," + std::to_string(t.size());
    // Every named column is filled, including ones short-circuited away.
    for (auto & name : p.names())
        line += "," + std::to_string(ev.value(name));
    row.exact = ev.exact();
    line += std::string(",") + (row.holds ? "1" : "0");
    line += "," + csv_quote(ev.witness().dump());
    row.line = line;
    return row;
}

struct Checkpoint
{
    std::uint64_t done = 0;
    ScanReport report;
};

nlohmann::json checkpoint_json(const Predicate & p, const ScanConfig & c, const Checkpoint & cp)
{
    return {{"version", 1}, {"predicate", p.text()}, {"n_min", c.n_min}, {"n_max", c.n_max}, {"done", cp.done},
        {"holds", cp.report.holds}, {"fails", cp.report.fails}, {"inexact", cp.report.inexact},
        {"failing", cp.report.failing_codes}};
}

Checkpoint load_checkpoint(const Predicate & p, const ScanConfig & c)
{
    Checkpoint cp;
    std::ifstream in(c.checkpoint);
    if (!in)
        return cp;
    auto j = nlohmann::json::parse(in);
    if (j.at("predicate") != p.text() || j.at("n_min") != c.n_min || j.at("n_max") != c.n_max)
        throw std::runtime_error("checkpoint " + c.checkpoint + " belongs to a different scan");
    cp.done = j.at("done");
    cp.report.holds = j.at("holds");
    cp.report.fails = j.at("fails");
    cp.report.inexact = j.at("inexact");
    cp.report.failing_codes = j.at("failing").get<std::vector<std::string>>();
    cp.report.scanned = cp.done;
    return cp;
}

void save_checkpoint(const Predicate & p, const ScanConfig & c, const Checkpoint & cp)
{
    std::string tmp = c.checkpoint + ".tmp";
    {
        std::ofstream out(tmp);
        out << checkpoint_json(p, c, cp).dump() << "\n";
    }
    std::rename(tmp.c_str(), c.checkpoint.c_str());
}

} // namespace

ScanReport predicate_scan(const Predicate & p, const ScanConfig & config, std::ostream * csv)
{
    Checkpoint cp;
    if (!config.checkpoint.empty())
        cp = load_checkpoint(p, config);
    if (csv && cp.done == 0) {
        *csv << "canonical_code,n";
        for (auto & name : p.names())
            *csv << "," << name;
        *csv << ",holds,witness\n";
    }
    std::uint64_t index = 0, evaluated = 0;
    constexpr std::size_t chunk = 64;
    for (int n = config.n_min; n <= config.n_max; ++n) {
        auto all = enumerate_tournaments(n);
        std::size_t start = 0;
        if (index + all.size() <= cp.done) {
            index += all.size();
            continue;
        }
        if (index < cp.done)
            start = cp.done - index;
        index += start;
        for (std::size_t i = start; i < all.size(); i += chunk) {
            std::size_t end = std::min(all.size(), i + chunk);
            if (config.budget)
                end = std::min<std::size_t>(end, i + (*config.budget - std::min(*config.budget, evaluated)));
            if (end <= i) {
                cp.report.partial = true;
                break;
            }
            std::vector<Row> rows(end - i);
            int workers = std::max(1, std::min<int>(config.threads, static_cast<int>(rows.size())));
            if (workers == 1)
                for (std::size_t r = 0; r < rows.size(); ++r)
                    rows[r] = evaluate_row(p, all[i + r], config.solver);
            else {
                std::vector<std::jthread> pool;
                for (int w = 0; w < workers; ++w)
                    pool.emplace_back([&, w] {
                        for (std::size_t r = w; r < rows.size(); r += workers)
                            rows[r] = evaluate_row(p, all[i + r], config.solver);
                    });
            }
            for (auto & row : rows) {
                if (csv)
                    *csv << row.line << "\n";
                ++cp.done;
                ++evaluated;
                (row.holds ? cp.report.holds : cp.report.fails)++;
                if (!row.exact)
                    ++cp.report.inexact;
                if (!row.holds && cp.report.failing_codes.size() < 20)
                    cp.report.failing_codes.push_back(row.code);
            }
            index += rows.size();
            if (csv)
                csv->flush();
            if (!config.checkpoint.empty())
                save_checkpoint(p, config, cp);
            if (end < std::min(all.size(), i + chunk)) {
                cp.report.partial = true;
                break;
            }
        }
        if (cp.report.partial)
            break;
    }
    cp.report.scanned = cp.done;
    if (cp.report.inexact)
        cp.report.partial = true;
    return cp.report;
}

void bst_probe_csv(int n, int samples, std::uint64_t seed, std::ostream & csv)
{
    csv << "canonical_code,n,best_bst_clique,omega,gap,insertions,exhaustive\n";
    for (const auto & t : enumerate_tournaments(n)) {
        auto probe = bst_omega_probe(t, samples, seed);
        csv << code_hex(canonical_code(t)) << "," << n << "," << probe.best_bst_clique << "," << probe.omega << ","
            << probe.best_bst_clique - probe.omega << "," << probe.insertions << "," << (probe.exhaustive ? 1 : 0)
            << "\n";
    }
}

} // namespace backedge
