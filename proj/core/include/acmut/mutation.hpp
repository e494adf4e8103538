#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "acmut/pdp.hpp"
#include "acmut/policy.hpp"

namespace acmut {

// The seven mutation operators. The basic six rewrite exactly one field of
// one rule; the advanced ANR adds a rule that overrides the default decision
// on at least one request.
enum class OperatorKind { PPR, PRP, RRD, CRD, RPD, APD, ANR };

inline constexpr std::array<OperatorKind, 7> all_operators = {
    OperatorKind::PPR, OperatorKind::PRP, OperatorKind::RRD, OperatorKind::CRD,
    OperatorKind::RPD, OperatorKind::APD, OperatorKind::ANR,
};

inline constexpr std::array<OperatorKind, 6> basic_operators = {
    OperatorKind::PPR, OperatorKind::PRP, OperatorKind::RRD,
    OperatorKind::CRD, OperatorKind::RPD, OperatorKind::APD,
};

std::string to_string(OperatorKind op);
std::optional<OperatorKind> parse_operator(std::string_view token);

// A policy differing from its original by one elementary change, plus the
// provenance of that change.
struct Mutant {
    Policy policy;
    OperatorKind op = OperatorKind::PPR;
    std::string target;        // rule id, or "new-rule" for ANR
    std::string substitution;  // e.g. "role: user -> student"
};

// Exhaustive deterministic enumeration for one operator, ordered by
// (rule id, replacement identifier). Candidates whose policy would violate
// an invariant (duplicate rule tuple) are skipped.
std::vector<Mutant> apply_operator(const Policy& policy, OperatorKind op);

// Concatenation of apply_operator in the fixed order PPR, PRP, RRD, CRD,
// RPD, APD, ANR, restricted to `ops`. RRD intentionally overlaps RPD when a
// replacement role happens to be a descendant; both mutants are kept since
// their operator provenance differs.
std::vector<Mutant> generate_all_mutants(const Policy& policy, const std::set<OperatorKind>& ops);

// Seeded uniform sample of `count` mutants, enumeration order preserved.
std::vector<Mutant> sample_mutants(const std::vector<Mutant>& mutants, std::size_t count,
                                   std::uint64_t seed);

// True when no request in the shared universe distinguishes mutant from
// original. Throws UniverseMismatchError when entity declarations differ.
bool is_equivalent(const Policy& original, const Mutant& mutant);

struct MutationScore {
    std::int64_t killed = 0;
    std::int64_t total = 1;

    double value() const { return static_cast<double>(killed) / static_cast<double>(total); }
    std::string exact() const;  // "m/M"
};

// Throws EmptyMutantSetError when no verdicts are given.
MutationScore mutation_score(const std::vector<bool>& killed_flags);

std::string mutant_filename(std::size_t index, const Mutant& mutant);

// Manifest for an exported mutant set: per mutant the operator, target,
// substitution, file name and equivalence flag.
nlohmann::json mutant_manifest(const Policy& original, const std::vector<Mutant>& mutants);

}  // namespace acmut
