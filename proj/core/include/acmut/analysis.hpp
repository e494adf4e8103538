#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "acmut/diagnostics.hpp"
#include "acmut/mutation.hpp"
#include "acmut/policy.hpp"
#include "acmut/system.hpp"
#include "acmut/testgen.hpp"

namespace acmut {

// ── Micro-evolutions ─────────────────────────────────────────────────────────

enum class MicroKind { AddPermission, RemoveProhibition, AddProhibition, RemovePermission };

std::string to_string(MicroKind kind);

// True for the relaxing class (add permission / remove prohibition); the
// restricting class adds a prohibition or removes a permission.
bool relaxes(MicroKind kind);

struct MicroEvolution {
    MicroKind kind = MicroKind::AddPermission;
    std::string rule_id;  // removals name the rule; additions receive an id on application
    std::string role;     // additions only
    std::string action;
    std::string context;
};

std::string describe(const MicroEvolution& delta);

// First unused "R<n>" id, n counted from 1.
std::string next_rule_id(const Policy& policy);

// Single-change policy edit. Errors: UnknownEntityError, DuplicateRuleError
// for additions; NoSuchRuleError, ModalityMismatchError for removals.
Policy apply_micro_evolution(const Policy& policy, const MicroEvolution& delta);

// Left fold: the first delta applies first. The first failing delta aborts
// with an EvolutionError carrying its index.
Policy compose_evolutions(const Policy& policy, const std::vector<MicroEvolution>& deltas);

// ── Hidden-mechanism detection ───────────────────────────────────────────────

enum class FindingClass { HiddenExplicit, Implicit };

std::string to_string(FindingClass cls);

struct HiddenFinding {
    Request request;
    Modality expected = Modality::Permission;
    SystemOutcome observed;
    FindingClass classification = FindingClass::HiddenExplicit;
    std::string source;  // the system-spec line implementing the hidden mechanism
};

struct Ratio {
    std::int64_t num = 1;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string exact() const;  // "3/4"
};

struct DetectionReport {
    std::vector<HiddenFinding> findings;  // sorted by request, one per request
    std::size_t visible_rules = 0;
    std::size_t hidden_sources = 0;  // distinct hidden rules + capability gaps found
    Ratio flexibility{1, 1};
};

// Mutates the visible policy with PPR and PRP, disables the visible layer,
// and runs every permission-expected test of each mutant's combined suite
// against what remains. Denials reveal hidden mechanisms: DeniedByHidden is
// a hidden explicit rule, NotExecutable an implicit capability gap.
// flexibility = visible rules / (visible + distinct hidden sources found).
DetectionReport detect_hidden(const SimulatedSystem& system);

// ── Evolution workflow ───────────────────────────────────────────────────────

enum class DeltaStatus { Clean, Blocked };

std::string to_string(DeltaStatus status);

struct EvolutionRecord {
    MicroEvolution delta;
    Policy mutant_policy;
    std::size_t suite_size = 0;  // footprint tests generated for the delta
    std::vector<HiddenFinding> findings;
    DeltaStatus status = DeltaStatus::Clean;
    std::string note;
    std::string assigned_rule_id;  // additions only
};

struct EvolutionReport {
    std::vector<EvolutionRecord> records;
    Policy final_policy;            // only Clean deltas applied, in order
    std::vector<std::string> log;   // documentation of each applied delta
};

// Per delta, in order: build the single-change mutant, generate combined
// tests restricted to the requests whose decision the delta flips, execute
// the permission-expected ones against the system with its visible layer
// disabled, and apply the delta only when nothing hidden intercepts it.
// Restricting deltas have a prohibition-only footprint, which a disabled
// system cannot refute; they apply directly with a note.
EvolutionReport evolve_policy(const SimulatedSystem& system,
                              const std::vector<MicroEvolution>& deltas);

// ── Deltas file ──────────────────────────────────────────────────────────────

// One micro-evolution per line:
//   add <permission|prohibition> <role> <action> <context>
//   remove <rule-id>
// Removal classes resolve against the policy the delta applies to.
struct DeltaLine {
    bool is_add = false;
    Modality modality = Modality::Permission;
    std::string role;
    std::string action;
    std::string context;
    std::string rule_id;
    SourceSpan span{};
};

struct DeltasParseResult {
    std::vector<DeltaLine> deltas;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

DeltasParseResult parse_deltas(std::string_view text);

// Throws NoSuchRuleError when a removal names an absent rule.
MicroEvolution resolve_delta(const Policy& policy, const DeltaLine& line);

EvolutionReport evolve_policy(const SimulatedSystem& system, const std::vector<DeltaLine>& deltas);

// ── Reports ──────────────────────────────────────────────────────────────────

nlohmann::json detection_to_json(const DetectionReport& report);
std::string detection_to_text(const DetectionReport& report);
nlohmann::json evolution_to_json(const EvolutionReport& report);
std::string evolution_to_text(const EvolutionReport& report);

}  // namespace acmut
