#include "wordcensus/json_io.hpp"

#include <fstream>

#include "wordcensus/error.hpp"

namespace wordcensus {

ordered_json group_to_json(const Group& g) {
  ordered_json j;
  j["order"] = g.order();
  ordered_json table = ordered_json::array();
  for (uint32_t a = 0; a < g.order(); ++a) {
    ordered_json row = ordered_json::array();
    for (uint32_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  j["labels"] = g.labels();
  return j;
}

Group group_from_json(const ordered_json& j, const GroupOptions& opts) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw Error(Errc::ParseError, "group file needs 'order' and 'table'");
  uint64_t order;
  try {
    order = j.at("order").get<uint64_t>();
  } catch (const ordered_json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad 'order': ") + e.what());
  }
  std::vector<std::vector<uint32_t>> table;
  try {
    table = j.at("table").get<std::vector<std::vector<uint32_t>>>();
  } catch (const ordered_json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad 'table': ") + e.what());
  }
  if (table.size() != order)
    throw Error(Errc::ParseError, "'order' is " + std::to_string(order) + " but 'table' has " +
                                      std::to_string(table.size()) + " rows");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    try {
      labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const ordered_json::exception& e) {
      throw Error(Errc::ParseError, std::string("bad 'labels': ") + e.what());
    }
  }
  return Group::from_table(table, std::move(labels), opts);
}

Group group_from_json_file(const std::string& path, const GroupOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open group file '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const ordered_json::exception& e) {
    throw Error(Errc::ParseError, "group file '" + path + "': " + e.what());
  }
  return group_from_json(j, opts);
}

ordered_json group_info_json(const std::string& name, const Group& g) {
  ConjugacyData cd = conjugacy(g);
  uint32_t commutator = commutator_subgroup_order(g);
  ordered_json j;
  j["group"] = name;
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["exponent"] = group_exponent(g);
  j["num_classes"] = cd.num_classes();
  j["class_sizes"] = cd.class_sizes;
  ordered_json reps = ordered_json::array();
  for (const auto& cls : cd.classes) reps.push_back(g.label(cls[0]));
  j["class_representatives"] = std::move(reps);
  j["commutator_order"] = commutator;
  j["abelianization_order"] = g.order() / commutator;
  return j;
}

ordered_json census_to_json(const WordCensus& c, const Group& g, const std::string& group_name,
                            const std::string& method) {
  ordered_json j;
  j["word"] = c.word.to_string();
  j["group"] = group_name;
  j["method"] = method;
  j["num_vars"] = c.word.num_vars();
  j["group_order"] = c.group_order;
  j["total_tuples"] = c.total_tuples.str();
  j["gamma"] = c.gamma.str();
  j["probability"] = fraction_string(c.probability);
  ordered_json counts = ordered_json::object();
  for (uint32_t x = 0; x < c.group_order; ++x) counts[g.label(x)] = c.counts[x].str();
  j["counts"] = std::move(counts);
  return j;
}

ordered_json bound_to_json(const BoundReport& r) {
  ordered_json j;
  j["kind"] = r.kind;
  if (!r.sigma.empty()) j["sigma"] = r.sigma;
  j["genus_k"] = r.genus_k;
  j["probability"] = fraction_string(r.probability);
  if (r.bound_value)
    j["bound"] = fraction_string(*r.bound_value);
  else
    j["bound"] = nullptr;
  j["applicable"] = r.applicable;
  j["satisfied"] = r.satisfied;
  j["commuting_probability"] = fraction_string(r.c_over_G);
  j["one_dim_fraction"] = fraction_string(r.one_dim_fraction);
  j["commutator_order"] = r.commutator_order;
  return j;
}

ordered_json chartable_to_json(const CharacterTable& t, const ConjugacyData& cd) {
  ordered_json j;
  j["group_order"] = t.group_order;
  j["exponent"] = t.exponent;
  j["modulus"] = t.modulus;
  j["class_sizes"] = cd.class_sizes;
  j["dims"] = t.dims;
  // Residues mod 'modulus', not complex character values.
  j["values_mod_p"] = t.values;
  return j;
}

ordered_json surface_to_json(const SurfaceReport& r, const Word& w) {
  ordered_json j;
  j["word"] = w.to_string();
  j["num_vars"] = w.num_vars();
  j["is_surface"] = r.is_surface;
  j["orientable"] = r.orientable;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["faces"] = r.faces;
  j["euler_characteristic"] = r.euler_characteristic;
  j["genus"] = r.genus;
  return j;
}

}  // namespace wordcensus
