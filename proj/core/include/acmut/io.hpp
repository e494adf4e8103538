#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acmut/diagnostics.hpp"
#include "acmut/policy.hpp"
#include "acmut/system.hpp"

namespace acmut {

struct ParseResult {
    std::optional<Policy> policy;
    std::vector<ParseError> errors;  // non-empty exactly when no policy is returned

    bool ok() const { return policy.has_value(); }
};

// Line-oriented policy grammar, '#' comments, declarations before use:
//   policy <name> default <permission|prohibition>
//   role <name> [extends <name>]
//   action <name> [extends <name>]
//   context <name>
//   rule <id> <permission|prohibition> <role> <action> <context>
ParseResult parse_policy(std::string_view text);

// Canonical text form; parse_policy(serialize_policy(p)) reconstructs p.
// Throws InvalidPolicyError when the policy fails validation.
std::string serialize_policy(const Policy& policy);

// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string policy_hash(const Policy& policy);

struct SystemSpecParseResult {
    std::optional<SystemSpec> spec;
    std::vector<ParseError> errors;

    bool ok() const { return spec.has_value(); }
};

// System spec grammar, one directive per mechanism class:
//   system <name>
//   policy <path>
//   hidden <permission|prohibition> <role> <action> <context>
//   missing_capability <role> <action>
// Entity references are checked later, by build_system, once the visible
// policy is available.
SystemSpecParseResult parse_system_spec(std::string_view text);

ParseResult load_policy_file(const std::filesystem::path& path);

struct LoadSystemResult {
    std::optional<SimulatedSystem> system;
    std::vector<ParseError> errors;
    std::filesystem::path policy_file;

    bool ok() const { return system.has_value(); }
};

// Reads a .acsys file, loads the referenced policy (relative paths resolve
// against the spec file's directory) and builds the simulated system.
LoadSystemResult load_system_file(const std::filesystem::path& path);

}  // namespace acmut
