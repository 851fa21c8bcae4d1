// One line per acceptance criterion. Criteria 1-15 are the claim suite in
// order; 16 reruns it and compares the JSON bytes.

#include "cli.hh"

#include <backedge/verify.hh>

#include <iostream>
#include <sstream>

using namespace backedge;

int main()
{
    VerifyConfig config;
    auto first = verify_paper(config);
    auto claims = verify_claims();
    bool all = true;
    if (first.claims.size() != 15 || claims.size() != 15) {
        std::cout << "expected 15 claims, found " << first.claims.size() << "\n";
        return 1;
    }
    for (std::size_t i = 0; i < first.claims.size(); ++i) {
        const auto & c = first.claims[i];
        bool ok = c.status == ClaimStatus::pass && c.id == claims[i].id;
        all = all && ok;
        std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << c.id << "  "
                  << c.measured.dump() << "  (" << static_cast<long>(c.elapsed_ms) << " ms)\n";
    }

    auto second = verify_paper(config);
    std::string a = first.to_json(false).dump(2), b = second.to_json(false).dump(2);
    std::ostringstream out1, out2, err;
    int code1 = cli::run({"verify-paper", "--json"}, out1, err);
    int code2 = cli::run({"verify-paper", "--json"}, out2, err);
    bool same = a == b && out1.str() == out2.str() && out1.str() == a + "\n" && code1 == code2;
    all = all && same;
    std::cout << "criterion 16: " << (same ? "PASS" : "FAIL") << "  determinism  {\"json_bytes\":" << a.size()
              << ",\"library_reruns_equal\":" << (a == b) << ",\"cli_reruns_equal\":" << (out1.str() == out2.str())
              << "}\n";
    return all ? 0 : 1;
}
