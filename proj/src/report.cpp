#include "qthook/report.hpp"

namespace qthook {

void VerificationReport::absorb(const VerificationReport& sub) {
    cases += sub.cases > 0 ? sub.cases : 1;
    if (!sub.pass && pass) {
        pass = false;
        mismatch = sub.mismatch;
        if (!mismatch) mismatch = Mismatch{};
        if (note.empty()) note = sub.check + (sub.params.empty() ? "" : " " + sub.params.dump());
        if (!sub.note.empty()) note += (note.empty() ? "" : ": ") + sub.note;
    }
}

void VerificationReport::fail(Mismatch m) {
    if (pass) {
        pass = false;
        mismatch = std::move(m);
    }
}

nlohmann::json VerificationReport::toJson(bool withTiming) const {
    nlohmann::json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["check"] = check;
    j["family"] = family;
    j["params"] = params;
    j["D"] = degree;
    j["mode"] = modeName(mode);
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : points) pts.push_back({p.q0.get_str(), p.t0.get_str()});
    j["points"] = pts;
    j["result"] = pass ? "pass" : "fail";
    if (mismatch)
        j["mismatch"] = {{"monomial", mismatch->monomial}, {"lhs", mismatch->lhs}, {"rhs", mismatch->rhs}};
    else
        j["mismatch"] = nullptr;
    j["cases"] = cases;
    if (!note.empty()) j["note"] = note;
    if (withTiming) j["elapsedMs"] = elapsedMs;
    return j;
}

}  // namespace qthook
