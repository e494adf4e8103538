#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "acmut/diagnostics.hpp"
#include "acmut/pdp.hpp"
#include "acmut/policy.hpp"

namespace acmut {

// A hardcoded access check with no traceability link to the visible policy.
struct HiddenRule {
    Modality modality = Modality::Prohibition;
    std::string role;
    std::string action;
    std::string context;
    SourceSpan span{};

    bool operator==(const HiddenRule& other) const {
        return modality == other.modality && role == other.role && action == other.action &&
               context == other.context;
    }
};

// A (role, leaf action) pair the system simply cannot execute: an access
// restriction living in the architecture rather than in any rule.
struct MissingCapability {
    std::string role;
    std::string action;
    SourceSpan span{};

    bool operator==(const MissingCapability& other) const {
        return role == other.role && action == other.action;
    }
};

struct SystemSpec {
    std::string name;
    std::string policy_path;
    std::vector<HiddenRule> hidden_rules;
    std::vector<MissingCapability> missing_capabilities;
};

struct Allowed {
    bool operator==(const Allowed&) const = default;
};
struct DeniedByVisible {
    std::optional<std::string> rule_id;  // empty: the default decision
    bool operator==(const DeniedByVisible&) const = default;
};
struct DeniedByHidden {
    std::size_t hidden_index = 0;
    bool operator==(const DeniedByHidden&) const = default;
};
struct NotExecutable {
    std::string role;
    std::string action;
    bool operator==(const NotExecutable&) const = default;
};

using SystemOutcome = std::variant<Allowed, DeniedByVisible, DeniedByHidden, NotExecutable>;

std::string to_string(const SystemOutcome& outcome);

// Allowed reads as permission, every other outcome as prohibition.
Modality outcome_modality(const SystemOutcome& outcome);

struct SimulatedSystem {
    SystemSpec spec;
    Policy visible_policy;
    bool visible_enabled = true;
};

struct BuildSystemResult {
    std::optional<SimulatedSystem> system;
    std::vector<ParseError> errors;

    bool ok() const { return system.has_value(); }
};

// Cross-checks hidden rules and capability entries against the visible
// policy's declarations; missing-capability actions must be leaves.
BuildSystemResult build_system(SystemSpec spec, Policy visible_policy);

// Evaluation order: capability gaps, then hidden rules (a mini PDP over the
// hidden set with no default), then the visible PDP. With the visible layer
// disabled, anything that survives the first two stages is allowed.
SystemOutcome handle_request(const SimulatedSystem& system, const Request& request);

// Functional update; the input system is unchanged.
SimulatedSystem set_visible_enabled(SimulatedSystem system, bool enabled);

}  // namespace acmut
