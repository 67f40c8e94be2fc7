#include "umbral/report.hpp"

#include <json.hpp>

namespace umbral {

VerificationReport make_pass(std::string id, std::string params, std::string window) {
    return {std::move(id), std::move(params), VerificationReport::Status::Pass, "", std::move(window)};
}

VerificationReport make_fail(std::string id, std::string params, std::string witness,
                             std::string window) {
    return {std::move(id), std::move(params), VerificationReport::Status::Fail, std::move(witness),
            std::move(window)};
}

VerificationReport make_skip(std::string id, std::string params, std::string reason) {
    return {std::move(id), std::move(params), VerificationReport::Status::Skip, std::move(reason), ""};
}

namespace {
const char* status_name(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::Pass: return "pass";
        case VerificationReport::Status::Fail: return "FAIL";
        case VerificationReport::Status::Skip: return "skip";
    }
    return "?";
}
}  // namespace

std::string to_line(const VerificationReport& r) {
    std::string s = "[" + std::string(status_name(r.status)) + "] " + r.id;
    if (!r.params.empty()) s += " {" + r.params + "}";
    if (!r.window.empty()) s += " window=" + r.window;
    if (!r.witness.empty()) s += " :: " + r.witness;
    return s;
}

std::string to_json_line(const VerificationReport& r) {
    nlohmann::json j{{"id", r.id},
                     {"params", r.params},
                     {"status", status_name(r.status)},
                     {"witness", r.witness},
                     {"window", r.window}};
    return j.dump();
}

Summary summarize(const std::vector<VerificationReport>& rs) {
    Summary s;
    for (const auto& r : rs) {
        switch (r.status) {
            case VerificationReport::Status::Pass: ++s.passed; break;
            case VerificationReport::Status::Fail: ++s.failed; break;
            case VerificationReport::Status::Skip: ++s.skipped; break;
        }
    }
    return s;
}

}  // namespace umbral
