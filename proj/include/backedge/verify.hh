#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace backedge {

enum class ClaimStatus
{
    pass,
    fail,
    skipped
};

struct ClaimResult
{
    std::string id;
    std::string anchor; ///< plain statement of what is checked
    ClaimStatus status = ClaimStatus::skipped;
    nlohmann::json measured = nlohmann::json::object();
    double elapsed_ms = 0;
};

struct VerifyConfig
{
    std::uint64_t seed = 20240611;
    std::string filter; ///< claim id; empty runs every claim
    int threads = 1;
};

struct VerifySuiteResult
{
    std::uint64_t seed = 0;
    std::vector<ClaimResult> claims;

    bool passed() const;
    nlohmann::json to_json(bool with_timings) const;
};

struct ClaimInfo
{
    std::string id;
    std::string anchor;
};

/// Claim ids and anchors in suite order.
std::vector<ClaimInfo> verify_claims();

/// Throws std::invalid_argument for an unknown filter id.
VerifySuiteResult verify_paper(const VerifyConfig & config);

inline constexpr int verify_schema_version = 1;

} // namespace backedge
