#include "acmut/policy.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "acmut/errors.hpp"

namespace acmut {

std::string to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::Role: return "role";
        case EntityKind::Action: return "action";
        case EntityKind::Context: return "context";
    }
    return "unknown";
}

std::string to_string(Modality modality) {
    return modality == Modality::Permission ? "permission" : "prohibition";
}

std::optional<Modality> parse_modality(std::string_view token) {
    if (token == "permission") return Modality::Permission;
    if (token == "prohibition") return Modality::Prohibition;
    return std::nullopt;
}

Modality flipped(Modality modality) {
    return modality == Modality::Permission ? Modality::Prohibition : Modality::Permission;
}

std::string to_string(const Request& request) {
    return "(" + request.role + ", " + request.action + ", " + request.context + ")";
}

const Entity* find_entity(const Policy& policy, EntityKind kind, std::string_view name) {
    for (const auto& entity : policy.entities) {
        if (entity.kind == kind && entity.name == name) return &entity;
    }
    return nullptr;
}

const Rule* find_rule(const Policy& policy, std::string_view id) {
    for (const auto& rule : policy.rules) {
        if (rule.id == id) return &rule;
    }
    return nullptr;
}

bool is_leaf(const Policy& policy, EntityKind kind, std::string_view name) {
    for (const auto& entity : policy.entities) {
        if (entity.kind == kind && entity.parent && *entity.parent == name) return false;
    }
    return true;
}

std::vector<std::string> ancestors_or_self(const Policy& policy, EntityKind kind,
                                           const std::string& name) {
    const Entity* entity = find_entity(policy, kind, name);
    if (!entity) {
        throw UnknownEntityError("unknown " + to_string(kind) + " '" + name + "'");
    }
    std::vector<std::string> chain;
    std::unordered_set<std::string> seen;
    while (entity) {
        if (!seen.insert(entity->name).second) {
            throw InvalidPolicyError("hierarchy cycle at " + to_string(kind) + " '" +
                                     entity->name + "'");
        }
        chain.push_back(entity->name);
        entity = entity->parent ? find_entity(policy, kind, *entity->parent) : nullptr;
    }
    return chain;
}

std::vector<std::string> descendants_or_self(const Policy& policy, EntityKind kind,
                                             const std::string& name) {
    if (!find_entity(policy, kind, name)) {
        throw UnknownEntityError("unknown " + to_string(kind) + " '" + name + "'");
    }
    std::set<std::string> closure{name};
    // Children declare their parent, so grow the closure to a fixed point.
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& entity : policy.entities) {
            if (entity.kind != kind || !entity.parent) continue;
            if (closure.contains(*entity.parent) && closure.insert(entity.name).second) {
                grew = true;
            }
        }
    }
    return {closure.begin(), closure.end()};
}

std::vector<std::string> leaf_descendants(const Policy& policy, EntityKind kind,
                                          const std::string& name) {
    std::vector<std::string> leaves;
    for (const auto& candidate : descendants_or_self(policy, kind, name)) {
        if (is_leaf(policy, kind, candidate)) leaves.push_back(candidate);
    }
    return leaves;
}

std::vector<std::string> sorted_names(const Policy& policy, EntityKind kind) {
    std::vector<std::string> names;
    for (const auto& entity : policy.entities) {
        if (entity.kind == kind) names.push_back(entity.name);
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::size_t count_entities(const Policy& policy, EntityKind kind) {
    std::size_t count = 0;
    for (const auto& entity : policy.entities) {
        if (entity.kind == kind) ++count;
    }
    return count;
}

namespace {

// Cycle-safe parent walk for validation: returns false when the chain loops.
bool parent_chain_is_acyclic(const Policy& policy, const Entity& start) {
    std::unordered_set<std::string> seen{start.name};
    const Entity* entity = &start;
    while (entity->parent) {
        const Entity* parent = find_entity(policy, entity->kind, *entity->parent);
        if (!parent) return true;  // broken link is reported separately
        if (!seen.insert(parent->name).second) return false;
        entity = parent;
    }
    return true;
}

}  // namespace

ValidationReport validate_policy(const Policy& policy) {
    ValidationReport report;
    auto violate = [&report](std::string subject, std::string reason) {
        report.violations.push_back({std::move(subject), std::move(reason)});
    };

    std::set<std::pair<EntityKind, std::string>> declared;
    for (const auto& entity : policy.entities) {
        if (!declared.insert({entity.kind, entity.name}).second) {
            violate(entity.name, to_string(entity.kind) + " '" + entity.name +
                                     "' declared more than once");
        }
    }

    for (const auto& entity : policy.entities) {
        if (!entity.parent) continue;
        if (entity.kind == EntityKind::Context) {
            violate(entity.name, "context '" + entity.name + "' must be flat, found parent '" +
                                     *entity.parent + "'");
            continue;
        }
        if (!declared.contains({entity.kind, *entity.parent})) {
            violate(entity.name, to_string(entity.kind) + " '" + entity.name +
                                     "' extends undeclared '" + *entity.parent + "'");
        } else if (!parent_chain_is_acyclic(policy, entity)) {
            violate(entity.name, "hierarchy cycle through " + to_string(entity.kind) + " '" +
                                     entity.name + "'");
        }
    }

    std::set<std::string> rule_ids;
    std::set<std::tuple<Modality, std::string, std::string, std::string>> rule_tuples;
    for (const auto& rule : policy.rules) {
        if (!rule_ids.insert(rule.id).second) {
            violate(rule.id, "rule id '" + rule.id + "' used more than once");
        }
        if (!declared.contains({EntityKind::Role, rule.role})) {
            violate(rule.id, "rule '" + rule.id + "' names undeclared role '" + rule.role + "'");
        }
        if (!declared.contains({EntityKind::Action, rule.action})) {
            violate(rule.id,
                    "rule '" + rule.id + "' names undeclared action '" + rule.action + "'");
        }
        if (!declared.contains({EntityKind::Context, rule.context})) {
            violate(rule.id,
                    "rule '" + rule.id + "' names undeclared context '" + rule.context + "'");
        }
        if (!rule_tuples.insert({rule.modality, rule.role, rule.action, rule.context}).second) {
            violate(rule.id, "rule '" + rule.id + "' duplicates another rule's " +
                                 to_string(rule.modality) + "(" + rule.role + ", " + rule.action +
                                 ", " + rule.context + ")");
        }
    }

    if (count_entities(policy, EntityKind::Role) == 0) {
        violate(policy.name, "policy declares no role");
    }
    if (count_entities(policy, EntityKind::Context) == 0) {
        violate(policy.name, "policy declares no context");
    }
    bool has_leaf_action = false;
    for (const auto& entity : policy.entities) {
        if (entity.kind == EntityKind::Action && is_leaf(policy, EntityKind::Action, entity.name)) {
            has_leaf_action = true;
            break;
        }
    }
    if (!has_leaf_action) {
        violate(policy.name, "policy declares no leaf action");
    }

    return report;
}

namespace {

std::vector<Entity> sorted_entities(const Policy& policy) {
    std::vector<Entity> entities = policy.entities;
    std::sort(entities.begin(), entities.end(), [](const Entity& a, const Entity& b) {
        return std::tie(a.kind, a.name) < std::tie(b.kind, b.name);
    });
    return entities;
}

}  // namespace

bool structurally_equal(const Policy& a, const Policy& b) {
    return a.name == b.name && a.default_decision == b.default_decision &&
           sorted_entities(a) == sorted_entities(b) && a.rules == b.rules;
}

bool same_entities(const Policy& a, const Policy& b) {
    return sorted_entities(a) == sorted_entities(b);
}

}  // namespace acmut
