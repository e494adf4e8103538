#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "acmut/pdp.hpp"
#include "acmut/policy.hpp"
#include "acmut/system.hpp"

namespace acmut {

enum class Criterion { AllPrimary, AllConcrete, AllDefault, Combined };

std::string to_string(Criterion criterion);
std::optional<Criterion> parse_criterion(std::string_view token);

struct TestCase {
    std::string intention;
    Request request;
    Modality expect = Modality::Prohibition;
    std::optional<std::string> provenance_rule;  // empty: default-decision test

    bool is_default_test() const { return !provenance_rule.has_value(); }
};

struct TestSuite {
    Criterion criterion = Criterion::Combined;
    std::vector<TestCase> cases;
    std::string source_policy;
    std::string source_policy_hash;
};

// One test per primary rule, at the lexicographically smallest concrete
// request the rule derives; deduplicated by request.
TestSuite gen_all_primary(const Policy& policy);

// One test per concrete rule, deduplicated by request. Oracles come from
// decide, so an overriding more-specific rule wins over the concrete rule's
// own modality.
TestSuite gen_all_concrete(const Policy& policy);

// One test per universe request whose decision equals the default decision,
// labelled as a default-decision test.
TestSuite gen_all_default(const Policy& policy);

// AllConcrete cases followed by AllDefault cases. The two parts never share
// a (request, provenance class) pair; together they cover the universe.
TestSuite gen_combined(const Policy& policy);

TestSuite generate_suite(const Policy& policy, Criterion criterion);

struct Verdict {
    TestCase test;
    Modality observed = Modality::Prohibition;
    bool passed = false;
};

// Outcome comparison only; recorded provenance is informational. Throws
// UniverseMismatchError when the target does not declare the suite's
// entities.
std::vector<Verdict> execute_suite(const TestSuite& suite, const Policy& target);
std::vector<Verdict> execute_suite(const TestSuite& suite, const SimulatedSystem& target);

// A suite kills a mutant when any verdict fails.
bool suite_kills(const std::vector<Verdict>& verdicts);

// JSON array of {expect, intention, provenance, request, source_policy_hash}.
nlohmann::json suite_to_json(const TestSuite& suite);

// Throws Error on malformed documents or inconsistent per-case hashes.
TestSuite suite_from_json(const nlohmann::json& doc);

}  // namespace acmut
