#pragma once

#include <backedge/digraph.hh>
#include <backedge/result.hh>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace backedge {

class PredicateError : public std::runtime_error
{
public:
    PredicateError(const std::string & message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Integer expressions over tournament invariants.
///
///   expr    := or
///   or      := and ('||' and)*
///   and     := not ('&&' not)*
///   not     := '!' not | compare
///   compare := sum (('<' | '<=' | '==' | '!=' | '>=' | '>') sum)*   chained as a <= b <= c
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | number | name | '(' expr ')'
///
/// Names: n, dom, omega, chi, trans, alpha, omega_sc (largest omega over
/// strong components), comps (number of strong components), strong,
/// hero, forest (some ordering has a forest backedge graph), common (some
/// ordering is optimal for omega and chi at once), true, false.
/// Booleans are 0 and 1.
class Predicate
{
public:
    static Predicate parse(const std::string & text);

    const std::string & text() const { return text_; }
    /// Invariant names in order of first appearance.
    const std::vector<std::string> & names() const { return names_; }

    struct Node;

private:
    std::string text_;
    std::vector<std::string> names_;
    std::shared_ptr<const Node> root_;

    friend class Evaluation;
};

/// Lazily computed invariants of one tournament.
class Evaluation
{
public:
    Evaluation(const Tournament & t, const SolverOptions & options);

    long value(const std::string & name);
    long evaluate(const Predicate & p);

    bool exact() const { return exact_; }
    /// Certificates of the solver calls made so far, keyed by name.
    nlohmann::json witness() const { return witness_; }

private:
    long eval(const Predicate::Node & node);

    const Tournament & t_;
    SolverOptions options_;
    std::map<std::string, long> cache_;
    nlohmann::json witness_ = nlohmann::json::object();
    bool exact_ = true;
};

struct ScanConfig
{
    int n_min = 1;
    int n_max = 5;
    std::optional<std::uint64_t> budget; ///< tournaments to evaluate before stopping
    SolverOptions solver;                ///< per tournament; threads here fan out across tournaments
    int threads = 1;
    std::string checkpoint;              ///< path; empty for none
};

struct ScanReport
{
    std::uint64_t scanned = 0;
    std::uint64_t holds = 0;
    std::uint64_t fails = 0;
    std::uint64_t inexact = 0;
    bool partial = false;
    std::vector<std::string> failing_codes; ///< hex, first 20
};

/// CSV header: canonical_code,n,<names...>,holds,witness. Rows follow the
/// enumeration order and are identical for every thread count. With a
/// checkpoint file, a rerun skips the tournaments already recorded there and
/// appends only new rows (the caller opens `csv` for appending).
ScanReport predicate_scan(const Predicate & p, const ScanConfig & config, std::ostream * csv);

std::string csv_quote(const std::string & field);

/// CSV of BST probes over all tournaments on n vertices:
/// canonical_code,n,best_bst_clique,omega,gap,insertions,exhaustive.
void bst_probe_csv(int n, int samples, std::uint64_t seed, std::ostream & csv);

} // namespace backedge
