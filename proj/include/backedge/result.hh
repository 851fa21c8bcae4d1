#pragma once

#include <backedge/digraph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace backedge {

struct SolverOptions
{
    std::optional<std::chrono::milliseconds> time_limit;
    /// Worker count for the solvers that split top-level branches; values
    /// never depend on it, certificates only in single-worker mode.
    int threads = 1;
    /// Clique number only: solve strong components separately.
    bool use_components = true;
};

/// Wall-clock budget shared by a solver run.
class Deadline
{
public:
    Deadline() = default;
    explicit Deadline(std::optional<std::chrono::milliseconds> limit);

    bool expired() const { return limited_ && std::chrono::steady_clock::now() >= end_; }

    /// Cheap periodic check: consults the clock every 1024 calls.
    bool poll()
    {
        if (!limited_)
            return false;
        if ((++ticks_ & 1023U) == 0)
            hit_ = hit_ || expired();
        return hit_;
    }

    bool hit() const { return hit_; }

private:
    bool limited_ = false;
    bool hit_ = false;
    std::uint32_t ticks_ = 0;
    std::chrono::steady_clock::time_point end_{};
};

struct CliqueCertificate
{
    std::vector<int> vertices;
};

struct ColouringCertificate
{
    std::vector<int> colour;
    int k = 0;
};

/// Partition into acyclic classes: colour[v] in 0..k-1.
struct Dicolouring
{
    std::vector<int> colour;
    int k = 0;
};

struct OrderingCertificate
{
    Ordering ordering;
    std::vector<int> clique; ///< a maximum clique of the backedge graph
};

struct DominatingCertificate
{
    std::vector<int> vertices;
};

/// Vertices of an acyclic induced subdigraph, in topological order.
struct TransitiveCertificate
{
    std::vector<int> vertices;
};

using Certificate = std::variant<std::monostate, CliqueCertificate, ColouringCertificate, Dicolouring,
    OrderingCertificate, DominatingCertificate, TransitiveCertificate>;

enum class Status
{
    exact,
    bounds
};

struct InvariantResult
{
    std::string invariant;
    int value = 0; ///< exact value, or best (upper for minimisation, lower for maximisation) when bounded
    Status status = Status::exact;
    int lower = 0;
    int upper = 0;
    Certificate certificate;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0;

    bool exact() const { return status == Status::exact; }
};

inline constexpr int result_schema_version = 1;

nlohmann::json to_json(const InvariantResult & r, bool with_timing = true);
nlohmann::json to_json(const Certificate & c);

/// Measures elapsed time of a solver call into `r`.
class Stopwatch
{
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace backedge
