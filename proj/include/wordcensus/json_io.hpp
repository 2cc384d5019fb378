#pragma once

#include <string>

#include "json.hpp"

#include "wordcensus/bounds.hpp"
#include "wordcensus/census.hpp"
#include "wordcensus/chartable.hpp"
#include "wordcensus/group.hpp"
#include "wordcensus/surface.hpp"

namespace wordcensus {

// All exports use insertion-ordered JSON so identical inputs render
// byte-identically.
using ordered_json = nlohmann::ordered_json;

ordered_json group_to_json(const Group& g);
Group group_from_json(const ordered_json& j, const GroupOptions& opts = {});
Group group_from_json_file(const std::string& path, const GroupOptions& opts = {});

ordered_json group_info_json(const std::string& name, const Group& g);
ordered_json census_to_json(const WordCensus& c, const Group& g, const std::string& group_name,
                            const std::string& method);
ordered_json bound_to_json(const BoundReport& r);
ordered_json chartable_to_json(const CharacterTable& t, const ConjugacyData& cd);
ordered_json surface_to_json(const SurfaceReport& r, const Word& w);

}  // namespace wordcensus
