#pragma once

#include <string>

#include <json.hpp>

#include "gtcat/category.hpp"
#include "gtcat/center.hpp"
#include "gtcat/cochain.hpp"
#include "gtcat/group.hpp"

namespace gtcat {

using Json = nlohmann::ordered_json;

// Group JSON: {"order": n, "labels": [...], "table": [[...]]}
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

// Subgroups are sorted index arrays.
Json subgroup_to_json(const Subgroup& s);
Subgroup subgroup_from_json(const GroupPtr& g, const Json& j);

// Cochain JSON: {"degree": n, "modulus": m, "values": flat lexicographic}.
// Normalization is validated on load.
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Subgroup& domain, const Json& j);

Json certificate_to_json(const GroupPtr& g, const CocycleCertificate& c);

Json simples_to_json(const SimplesResult& r, const GroupPtr& g);
Json module_cats_to_json(const std::vector<std::pair<Subgroup, Cochain>>& pairs);
Json center_to_json(const CenterResult& r, const GroupPtr& g);
Json cross_check_to_json(const CrossCheckReport& r, const GroupPtr& g);
Json double_cosets_to_json(const std::vector<DoubleCoset>& cosets,
                           const GroupPtr& g);
Json classes_to_json(const std::vector<ConjugacyClass>& classes, const GroupPtr& g);
Json solve_d2_to_json(const SolveD2Result& r);

std::string dump_stable(const Json& j);

} // namespace gtcat
