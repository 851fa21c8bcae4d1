#include <backedge/result.hh>

namespace backedge {

Deadline::Deadline(std::optional<std::chrono::milliseconds> limit)
{
    if (limit) {
        limited_ = true;
        end_ = std::chrono::steady_clock::now() + *limit;
    }
}

namespace {
template <typename... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
} // namespace

nlohmann::json to_json(const Certificate & c)
{
    using nlohmann::json;
    return std::visit(
        overloaded{
            [](const std::monostate &) { return json(nullptr); },
            [](const CliqueCertificate & x) { return json{{"type", "clique"}, {"vertices", x.vertices}}; },
            [](const ColouringCertificate & x) { return json{{"type", "colouring"}, {"colour", x.colour}, {"k", x.k}}; },
            [](const Dicolouring & x) { return json{{"type", "dicolouring"}, {"colour", x.colour}, {"k", x.k}}; },
            [](const OrderingCertificate & x) {
                std::vector<int> order(x.ordering.vertices().begin(), x.ordering.vertices().end());
                return json{{"type", "ordering"}, {"ordering", order}, {"clique", x.clique}};
            },
            [](const DominatingCertificate & x) { return json{{"type", "dominating_set"}, {"vertices", x.vertices}}; },
            [](const TransitiveCertificate & x) { return json{{"type", "transitive_set"}, {"vertices", x.vertices}}; },
        },
        c);
}

nlohmann::json to_json(const InvariantResult & r, bool with_timing)
{
    nlohmann::json j;
    j["schema"] = result_schema_version;
    j["invariant"] = r.invariant;
    j["value"] = r.value;
    j["status"] = r.exact() ? "exact" : "bounds";
    if (!r.exact())
        j["bounds"] = {r.lower, r.upper};
    j["certificate"] = to_json(r.certificate);
    j["nodes"] = r.nodes;
    if (with_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace backedge
