#pragma once

#include <string>
#include <vector>

namespace umbral {

// Outcome of one machine-checked identity. A pass of a series-based check
// always records the truncation window it proves.
struct VerificationReport {
    enum class Status { Pass, Fail, Skip };

    std::string id;      // e.g. "thm4.1a"
    std::string params;  // e.g. "Q=fwd N=2 k=3"
    Status status = Status::Pass;
    std::string witness;  // first mismatch on failure, or a skip reason
    std::string window;   // "exact" or the proven truncation window

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }
};

VerificationReport make_pass(std::string id, std::string params, std::string window = "exact");
VerificationReport make_fail(std::string id, std::string params, std::string witness,
                             std::string window = "exact");
VerificationReport make_skip(std::string id, std::string params, std::string reason);

std::string to_line(const VerificationReport& r);
std::string to_json_line(const VerificationReport& r);

struct Summary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    int total() const { return passed + failed + skipped; }
};

Summary summarize(const std::vector<VerificationReport>& rs);

}  // namespace umbral
