#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oos/bilmap.hpp"
#include "oos/linmap.hpp"

namespace oos {

/// A distinguished element of a space, e.g. the unit demanded by TD-algebra
/// checks.
struct Element {
    Space space;
    std::vector<Poly> coords;
};

/// Role bindings for one claim: role name -> space/map/element/scalar.
/// Role vocabularies are per claim kind; see claim_roles().
struct Binding {
    RingPtr ring;
    std::map<std::string, Space> spaces;
    std::map<std::string, LinMap> linear;
    std::map<std::string, BilMap> bilinear;
    std::map<std::string, Element> elements;
    std::map<std::string, Poly> scalars;

    const Space& space(const std::string& role) const;
    const LinMap& lin(const std::string& role) const;
    const BilMap& bil(const std::string& role) const;
    const Element& element(const std::string& role) const;
    const Poly& scalar(const std::string& role) const;
    bool has_lin(const std::string& role) const { return linear.count(role) != 0; }
    bool has_bil(const std::string& role) const { return bilinear.count(role) != 0; }
};

enum class RoleType { SpaceRef, Linear, Bilinear, ElementRef, Scalar };

struct RoleSpec {
    std::string name;
    RoleType type;
    bool optional = false;
};

/// Role table for a claim kind; throws on unknown kind. The same table drives
/// bundle validation, claim dispatch, and the search module's unknown-role
/// shapes.
const std::vector<RoleSpec>& claim_roles(const std::string& kind);
bool known_claim_kind(const std::string& kind);
std::vector<std::string> claim_kinds();

} // namespace oos
