#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acmut/policy.hpp"

namespace acmut {

struct MatchedRule {
    std::string rule_id;
    int role_distance = 0;  // hierarchy edges from the request role up to the rule role
    int action_distance = 0;

    bool operator==(const MatchedRule&) const = default;
};

struct Decision {
    Modality outcome = Modality::Prohibition;
    std::optional<MatchedRule> matched;  // empty: the default decision applied

    bool by_default() const { return !matched.has_value(); }
};

struct ApplicableRule {
    Rule rule;
    int role_distance = 0;
    int action_distance = 0;

    int specificity() const { return role_distance + action_distance; }
};

// A primary rule expanded to one (role, leaf action) instance.
struct ConcreteRule {
    std::string origin;  // id of the primary rule
    Modality modality = Modality::Permission;
    std::string role;
    std::string action;
    std::string context;

    auto operator<=>(const ConcreteRule&) const = default;
};

using DecisionTable = std::map<Request, Modality>;

// Throws UnknownEntityError when the request names undeclared entities or a
// non-leaf action.
void ensure_valid_request(const Policy& policy, const Request& request);

// Rules matching the request: role and action are ancestors-or-self of the
// request's, context is equal. Ordered most specific first (ascending
// distance sum, prohibitions before permissions on ties, then rule id).
std::vector<ApplicableRule> applicable_rules(const Policy& policy, const Request& request);

// Most specific applicable rule, or the policy default when none applies.
Decision decide(const Policy& policy, const Request& request);

// Every primary rule expanded over the descendants of its role and the leaf
// descendants of its action. Sorted by (origin, role, action, context).
std::vector<ConcreteRule> derive_concrete_rules(const Policy& policy);

// All (role, leaf action, context) triples, ordered lexicographically.
std::vector<Request> request_universe(const Policy& policy);

// Brute-force outcome of decide over the whole universe; the oracle used for
// mutant equivalence.
DecisionTable decision_table(const Policy& policy);

}  // namespace acmut
