#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conifold/cluster.hpp"
#include "conifold/config.hpp"
#include "conifold/dubrovin.hpp"
#include "conifold/pl_stokes.hpp"

namespace conifold {

inline constexpr const char* kToolName = "conifold";
inline constexpr const char* kToolVersion = "0.1.0";

struct InvariantCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Named pass/fail entries collected while building a report.
class InvariantLog {
public:
    void record(std::string name, bool pass, std::string detail = {});
    bool all_pass() const;
    const std::vector<InvariantCheck>& checks() const { return checks_; }
    std::vector<std::string> failures() const;
    nlohmann::json to_json() const;

private:
    std::vector<InvariantCheck> checks_;
};

struct ReportResult {
    nlohmann::json doc;
    InvariantLog log;
    bool resource_exceeded = false;

    /// 0 pass, 1 invariant failure, 3 resource limit.
    int exit_code() const;
};

struct AnalyzeOptions {
    std::size_t max_len = 3;
    std::size_t cap = kDefaultGroupCap;
};

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const QVector& v);
nlohmann::json to_json(const QMatrix& m);
nlohmann::json to_json(std::complex<double> c);
nlohmann::json to_json(const Matrix4c& m);

/// Exact operator identities on one configuration, appended to `log`.
void check_operator_identities(const CycleConfig& config, InvariantLog& log, const std::string& prefix = {});

ReportResult analyze(const DegenerationConfig& config, const AnalyzeOptions& options = {});

nlohmann::json monodromy_json(const MonodromyResult& result);
/// Integrates the loop and records the unipotency / rank checks.
ReportResult monodromy(const std::optional<DegenerationConfig>& config, const LoopOptions& loop);

ReportResult braid(const DegenerationConfig& config, std::size_t i, std::size_t j);

ReportResult mutate(const DegenerationConfig& config, std::size_t i, std::size_t j, bool inverse = false);

/// Identities on the config (if any) plus `samples` random configs from `seed`.
ReportResult property_report(const std::optional<DegenerationConfig>& config, std::uint64_t seed,
                             std::size_t samples);

/// Human-readable rendering of any report produced above.
std::string render_text(const nlohmann::json& report);

/// Report JSON as written by the CLI: two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

} // namespace conifold
