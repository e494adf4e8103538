#include "acmut/pdp.hpp"

#include <algorithm>
#include <tuple>

#include "acmut/errors.hpp"

namespace acmut {

void ensure_valid_request(const Policy& policy, const Request& request) {
    if (!find_entity(policy, EntityKind::Role, request.role)) {
        throw UnknownEntityError("unknown role '" + request.role + "'");
    }
    if (!find_entity(policy, EntityKind::Action, request.action)) {
        throw UnknownEntityError("unknown action '" + request.action + "'");
    }
    if (!is_leaf(policy, EntityKind::Action, request.action)) {
        throw UnknownEntityError("action '" + request.action +
                                 "' is not a leaf action; only leaf actions are executable");
    }
    if (!find_entity(policy, EntityKind::Context, request.context)) {
        throw UnknownEntityError("unknown context '" + request.context + "'");
    }
}

namespace {

// Edge count from `name` up to `ancestor`, or -1 when `ancestor` is not on
// the parent chain.
int distance_up(const Policy& policy, EntityKind kind, const std::string& name,
                const std::string& ancestor) {
    const auto chain = ancestors_or_self(policy, kind, name);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i] == ancestor) return static_cast<int>(i);
    }
    return -1;
}

bool more_specific(const ApplicableRule& a, const ApplicableRule& b) {
    // Most specific first; prohibitions shade permissions on ties; rule id
    // settles the rest.
    return std::tuple(a.specificity(), a.rule.modality == Modality::Permission, a.rule.id) <
           std::tuple(b.specificity(), b.rule.modality == Modality::Permission, b.rule.id);
}

}  // namespace

std::vector<ApplicableRule> applicable_rules(const Policy& policy, const Request& request) {
    ensure_valid_request(policy, request);
    std::vector<ApplicableRule> matches;
    for (const auto& rule : policy.rules) {
        if (rule.context != request.context) continue;
        const int role_distance = distance_up(policy, EntityKind::Role, request.role, rule.role);
        if (role_distance < 0) continue;
        const int action_distance =
            distance_up(policy, EntityKind::Action, request.action, rule.action);
        if (action_distance < 0) continue;
        matches.push_back({rule, role_distance, action_distance});
    }
    std::sort(matches.begin(), matches.end(), more_specific);
    return matches;
}

Decision decide(const Policy& policy, const Request& request) {
    const auto matches = applicable_rules(policy, request);
    if (matches.empty()) {
        return {policy.default_decision, std::nullopt};
    }
    const auto& winner = matches.front();
    return {winner.rule.modality,
            MatchedRule{winner.rule.id, winner.role_distance, winner.action_distance}};
}

std::vector<ConcreteRule> derive_concrete_rules(const Policy& policy) {
    std::vector<ConcreteRule> concrete;
    for (const auto& rule : policy.rules) {
        for (const auto& role : descendants_or_self(policy, EntityKind::Role, rule.role)) {
            for (const auto& action : leaf_descendants(policy, EntityKind::Action, rule.action)) {
                concrete.push_back({rule.id, rule.modality, role, action, rule.context});
            }
        }
    }
    std::sort(concrete.begin(), concrete.end());
    return concrete;
}

std::vector<Request> request_universe(const Policy& policy) {
    std::vector<std::string> leaf_actions;
    for (const auto& action : sorted_names(policy, EntityKind::Action)) {
        if (is_leaf(policy, EntityKind::Action, action)) leaf_actions.push_back(action);
    }
    std::vector<Request> universe;
    for (const auto& role : sorted_names(policy, EntityKind::Role)) {
        for (const auto& action : leaf_actions) {
            for (const auto& context : sorted_names(policy, EntityKind::Context)) {
                universe.push_back({role, action, context});
            }
        }
    }
    return universe;
}

DecisionTable decision_table(const Policy& policy) {
    DecisionTable table;
    for (const auto& request : request_universe(policy)) {
        table.emplace(request, decide(policy, request).outcome);
    }
    return table;
}

}  // namespace acmut
