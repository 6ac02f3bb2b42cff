#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qthook/qt.hpp"

namespace qthook {

inline constexpr int kReportSchemaVersion = 1;

struct Mismatch {
    std::string monomial;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string check;
    std::string family;
    nlohmann::json params = nlohmann::json::object();
    int degree = -1;
    Mode mode = Mode::Exact;
    std::vector<EvalPoint> points;
    bool pass = true;
    std::optional<Mismatch> mismatch;
    long cases = 0;
    std::string note;
    double elapsedMs = 0;

    // Folds a sub-check into this report; the first failure is kept.
    void absorb(const VerificationReport& sub);
    void fail(Mismatch m);

    nlohmann::json toJson(bool withTiming = true) const;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qthook
