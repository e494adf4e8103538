#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace acmut {

enum class EntityKind { Role, Action, Context };
enum class Modality { Permission, Prohibition };

std::string to_string(EntityKind kind);
std::string to_string(Modality modality);
std::optional<Modality> parse_modality(std::string_view token);
Modality flipped(Modality modality);

// An entity declaration. Names are lowercase snake_case identifiers, unique
// per kind. Roles and actions may extend a parent of the same kind; contexts
// form a flat set.
struct Entity {
    std::string name;
    EntityKind kind = EntityKind::Role;
    std::optional<std::string> parent;

    bool operator==(const Entity&) const = default;
};

// One security statement: permit or deny an action to a role under a context.
// Role and action may be inner hierarchy nodes; their concrete instances are
// derived from descendants.
struct Rule {
    std::string id;
    Modality modality = Modality::Permission;
    std::string role;
    std::string action;
    std::string context;

    bool operator==(const Rule&) const = default;

    // The rule without its id, for duplicate detection.
    std::tuple<Modality, std::string_view, std::string_view, std::string_view> tuple() const {
        return {modality, role, action, context};
    }
};

struct Policy {
    std::string name;
    std::vector<Entity> entities;  // declaration order, parents before children
    std::vector<Rule> rules;       // declaration order
    Modality default_decision = Modality::Prohibition;
};

// A single access request. The action must be a leaf: only concrete actions
// are executable.
struct Request {
    std::string role;
    std::string action;
    std::string context;

    auto operator<=>(const Request&) const = default;
};

std::string to_string(const Request& request);

struct Violation {
    std::string subject;  // entity name or rule id
    std::string reason;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// Checks every structural invariant: declared references, per-kind name
// uniqueness, forest-shaped hierarchies, flat contexts, unique rule ids and
// rule tuples, and the presence of at least one role, leaf action and
// context. Total: malformed input yields violations, never an exception.
ValidationReport validate_policy(const Policy& policy);

const Entity* find_entity(const Policy& policy, EntityKind kind, std::string_view name);
const Rule* find_rule(const Policy& policy, std::string_view id);
bool is_leaf(const Policy& policy, EntityKind kind, std::string_view name);

// Parent chain starting at the entity itself, root last. Throws
// UnknownEntityError for undeclared names.
std::vector<std::string> ancestors_or_self(const Policy& policy, EntityKind kind,
                                           const std::string& name);

// Every entity reachable downward from `name`, itself included, sorted.
std::vector<std::string> descendants_or_self(const Policy& policy, EntityKind kind,
                                             const std::string& name);

// Leaf members of descendants_or_self, sorted.
std::vector<std::string> leaf_descendants(const Policy& policy, EntityKind kind,
                                          const std::string& name);

// All declared names of one kind, sorted.
std::vector<std::string> sorted_names(const Policy& policy, EntityKind kind);
std::size_t count_entities(const Policy& policy, EntityKind kind);

// Structural equality: name, default decision, entity sets (order-free) and
// rule lists (ids included, order-sensitive).
bool structurally_equal(const Policy& a, const Policy& b);

// True when both policies declare the same entity set.
bool same_entities(const Policy& a, const Policy& b);

}  // namespace acmut
