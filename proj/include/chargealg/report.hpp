#pragma once

#include <map>
#include <optional>
#include <string>

#include "chargealg/algebra.hpp"
#include "chargealg/flow.hpp"

namespace chargealg {

inline constexpr const char *kReportSchema = "chargealg.report/1";

enum class ExitStatus { Ok = 0, Rejected = 1, Inconsistent = 2 };

struct ErrorInfo {
    std::string kind; ///< parse, regularity, unsupported, not_a_symmetry, not_closed, ...
    std::string message;
    std::map<std::string, std::string> details;
};

struct NumericSettings {
    NumericConfig config;
    std::size_t samples = 20;
};

struct Report {
    std::string system;
    std::string source;
    ExitStatus status = ExitStatus::Ok;
    std::optional<AlgebraReport> algebra;
    std::optional<NumericSettings> settings;
    std::optional<NumericReport> numeric;
    std::optional<ErrorInfo> error;
};

/// Runs the symbolic pipeline, and the numeric suite when `numeric` is
/// set, catching every library error into the report.
Report build_report(const std::string &text, const std::string &source,
                    const std::optional<NumericSettings> &numeric);

/// Classifies an exception into exit status and error details.
std::pair<ExitStatus, ErrorInfo> classify(const std::exception &e);

std::string report_json(const Report &report);
std::string report_text(const Report &report);

} // namespace chargealg
