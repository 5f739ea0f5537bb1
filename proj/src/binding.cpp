#include "oos/binding.hpp"

#include <map>

namespace oos {

const Space& Binding::space(const std::string& role) const {
    auto it = spaces.find(role);
    require(it != spaces.end(), "incomplete binding: missing space role \"" + role + "\"");
    return it->second;
}

const LinMap& Binding::lin(const std::string& role) const {
    auto it = linear.find(role);
    require(it != linear.end(), "incomplete binding: missing linear role \"" + role + "\"");
    return it->second;
}

const BilMap& Binding::bil(const std::string& role) const {
    auto it = bilinear.find(role);
    require(it != bilinear.end(), "incomplete binding: missing bilinear role \"" + role + "\"");
    return it->second;
}

const Element& Binding::element(const std::string& role) const {
    auto it = elements.find(role);
    require(it != elements.end(), "incomplete binding: missing element role \"" + role + "\"");
    return it->second;
}

const Poly& Binding::scalar(const std::string& role) const {
    auto it = scalars.find(role);
    require(it != scalars.end(), "incomplete binding: missing scalar role \"" + role + "\"");
    return it->second;
}

namespace {

using Roles = std::vector<RoleSpec>;

const std::map<std::string, Roles>& role_table() {
    static const std::map<std::string, Roles> table = {
        {"assoc", {{"mu", RoleType::Bilinear}}},
        {"pre_lie", {{"circ", RoleType::Bilinear}}},
        {"bimodule",
         {{"mu", RoleType::Bilinear}, {"rhd", RoleType::Bilinear}, {"lhd", RoleType::Bilinear}}},
        {"curved_oos",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega", RoleType::Bilinear}}},
        {"o_operator_system",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega", RoleType::Bilinear, true}}},
        {"extended_bimodule_algebra",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"circ", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear}}},
        {"bimodule_algebra",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"circ", RoleType::Bilinear}}},
        {"dendriform_system",
         {{"prec", RoleType::Bilinear},
          {"succ", RoleType::Bilinear},
          {"lessdot", RoleType::Bilinear},
          {"gtrdot", RoleType::Bilinear}}},
        {"tridendriform_system",
         {{"prec", RoleType::Bilinear},
          {"succ", RoleType::Bilinear},
          {"lessdot", RoleType::Bilinear},
          {"gtrdot", RoleType::Bilinear},
          {"dot", RoleType::Bilinear}}},
        {"compatible_pair", {{"mu", RoleType::Bilinear}, {"nu", RoleType::Bilinear}}},
        {"generalized_rb",
         {{"mu", RoleType::Bilinear}, {"nu", RoleType::Bilinear}, {"R", RoleType::Linear}}},
        {"double_curved_rbs",
         {{"mu", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega1", RoleType::Bilinear},
          {"omega2", RoleType::Bilinear}}},
        {"pseudotwistor",
         {{"mu", RoleType::Bilinear},
          {"T", RoleType::Linear},
          {"TT", RoleType::Linear},
          {"omega1", RoleType::Bilinear},
          {"omega2", RoleType::Bilinear}}},
        {"cor3.12",
         {{"mu", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega1", RoleType::Bilinear},
          {"omega2", RoleType::Bilinear}}},
        {"rota_baxter",
         {{"mu", RoleType::Bilinear}, {"R", RoleType::Linear}, {"lambda", RoleType::Scalar}}},
        {"o_operator_weight",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"circ", RoleType::Bilinear},
          {"lambda", RoleType::Scalar}}},
        {"curved_rb_system",
         {{"mu", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega", RoleType::Bilinear}}},
        {"reynolds", {{"mu", RoleType::Bilinear}, {"R", RoleType::Linear}}},
        {"td_algebra",
         {{"mu", RoleType::Bilinear}, {"R", RoleType::Linear}, {"unit", RoleType::ElementRef}}},
        {"nijenhuis", {{"mu", RoleType::Bilinear}, {"R", RoleType::Linear}}},
        {"eq2.22",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"circ", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear}}},
        {"eq2.24",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"circ", RoleType::Bilinear},
          {"R", RoleType::Linear}}},
        {"eq2.26",
         {{"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear}}},
        {"eq2.28",
         {{"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega", RoleType::Bilinear}}},
        {"eq2.30",
         {{"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"circ", RoleType::Bilinear},
          {"lambda", RoleType::Scalar}}},
        {"eq3.7",
         {{"mu", RoleType::Bilinear},
          {"omega1", RoleType::Bilinear},
          {"omega2", RoleType::Bilinear}}},
        {"morphism",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega", RoleType::Bilinear},
          {"mu2", RoleType::Bilinear},
          {"rhd2", RoleType::Bilinear},
          {"lhd2", RoleType::Bilinear},
          {"P", RoleType::Linear},
          {"T", RoleType::Linear},
          {"nu", RoleType::Bilinear},
          {"f", RoleType::Linear},
          {"g", RoleType::Linear}}},
        {"morphism_verbatim",
         {{"mu", RoleType::Bilinear},
          {"rhd", RoleType::Bilinear},
          {"lhd", RoleType::Bilinear},
          {"R", RoleType::Linear},
          {"S", RoleType::Linear},
          {"omega", RoleType::Bilinear},
          {"mu2", RoleType::Bilinear},
          {"rhd2", RoleType::Bilinear},
          {"lhd2", RoleType::Bilinear},
          {"P", RoleType::Linear},
          {"T", RoleType::Linear},
          {"nu", RoleType::Bilinear},
          {"f", RoleType::Linear},
          {"g", RoleType::Linear}}},
    };
    return table;
}

} // namespace

const std::vector<RoleSpec>& claim_roles(const std::string& kind) {
    auto it = role_table().find(kind);
    require(it != role_table().end(), "unknown claim kind: " + kind);
    return it->second;
}

bool known_claim_kind(const std::string& kind) { return role_table().count(kind) != 0; }

std::vector<std::string> claim_kinds() {
    std::vector<std::string> out;
    for (const auto& [k, v] : role_table()) out.push_back(k);
    return out;
}

} // namespace oos
