#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "coneterm/oracle.hpp"
#include "coneterm/termination.hpp"

namespace coneterm {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolName = "coneterm";
inline constexpr const char* kToolVersion = "0.1.0";

struct OracleReport {
    size_t word_bound = 0;
    bool no_witness_definitive = false;
    std::optional<QVector> not_salient_witness;
    std::optional<bool> witness_survives;  // orbit simulation of the decision witness
    bool consistent = true;                // definitive oracle vs. pipeline decision
};

struct Timings {
    long total_ms = 0;
    long decide_ms = 0;
    long oracle_ms = 0;
};

/*
 * Machine-checkable decision report. Embeds the instance echo, the full
 * recursion trace with every certificate, the effective configuration and
 * timings, so a verifier needs nothing but this document.
 */
nlohmann::json report_to_json(const LoopSystem& sys, const SearchConfig& cfg, const Decision& decision,
                              const Timings& timings, const std::optional<OracleReport>& oracle);

/// Re-validates an emitted report: instance well-formed, every certificate
/// re-verifies, trace levels satisfy the exact invariants (kernel of the
/// quotient, conjugation identities, dimension decrease), and the recorded
/// decision follows from the trace. Appends human-readable problems to
/// `errors`. Never calls the search procedures.
bool verify_report(const nlohmann::json& report, std::string& errors);

std::string decision_answer_name(DecisionAnswer a);
std::string level_kind_name(LevelKind k);

}  // namespace coneterm
