#include <filesystem>
#include <iostream>
#include <utility>

#include "CLI11.hpp"

#include "wordcensus/bounds.hpp"
#include "wordcensus/catalog.hpp"
#include "wordcensus/census.hpp"
#include "wordcensus/chartable.hpp"
#include "wordcensus/error.hpp"
#include "wordcensus/json_io.hpp"
#include "wordcensus/suite.hpp"
#include "wordcensus/surface.hpp"

namespace wc = wordcensus;

namespace {

// 0 success, 2 bad input, 3 budget/cap, 4 oracle mismatch, 1 internal.
int exit_code_for(wc::Errc c) {
  switch (c) {
    case wc::Errc::BudgetExceeded:
    case wc::Errc::DepthCapExceeded:
      return 3;
    case wc::Errc::OracleMismatch:
      return 4;
    case wc::Errc::SplitFailure:
    case wc::Errc::NoSuitablePrime:
    case wc::Errc::InsufficientModuli:
    case wc::Errc::Inconsistent:
      return 1;
    default:
      return 2;
  }
}

struct GlobalConfig {
  std::string format = "json";
  uint64_t seed = 0;
  uint64_t budget = 100'000'000;
  std::string kernel = "auto";
  uint32_t threads = 0;
};

wc::CensusOptions census_options(const GlobalConfig& cfg) {
  wc::CensusOptions o;
  o.budget = cfg.budget;
  o.threads = cfg.threads;
  o.kernel = wc::parse_kernel_name(cfg.kernel);
  o.seed = cfg.seed;
  return o;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void flatten(const wc::ordered_json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) flatten(v, path + "[" + std::to_string(i++) + "]", rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const wc::ordered_json& j, const GlobalConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  for (const auto& [k, v] : rows) {
    if (cfg.format == "csv")
      std::cout << csv_escape(k) << "," << csv_escape(v) << "\n";
    else
      std::cout << k << " = " << v << "\n";
  }
}

std::vector<wc::Permutation> parse_generator_list(const std::string& text, uint32_t degree) {
  std::vector<wc::Permutation> out;
  std::string cur;
  auto take = [&] {
    if (cur.find_first_not_of(" \t") != std::string::npos)
      out.push_back(wc::parse_permutation(cur, degree));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ';')
      take();
    else
      cur += ch;
  }
  take();
  return out;
}

std::pair<std::string, wc::Group> resolve_group(const std::string& spec, const std::string& gens,
                                                uint32_t degree) {
  if (!gens.empty()) {
    if (degree == 0)
      throw wc::Error(wc::Errc::InvalidParameter, "--gens needs --degree");
    return {"<degree " + std::to_string(degree) + ": " + gens + ">",
            wc::Group::from_generators(degree, parse_generator_list(gens, degree))};
  }
  if (spec.empty())
    throw wc::Error(wc::Errc::InvalidParameter, "no group given (use --group or --gens)");
  if (spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0)
    return {spec, wc::group_from_json_file(spec)};
  if (std::filesystem::exists(spec)) return {spec, wc::group_from_json_file(spec)};
  return {spec, wc::parse_group_spec(spec)};
}

wc::Word parse_word_with_note(const std::string& text) {
  bool renumbered = false;
  wc::Word w = wc::parse_word(text, &renumbered);
  if (renumbered) std::cerr << "note: variables were renumbered densely\n";
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact census of word-equation solutions in finite groups"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "character-table splitting seed")->capture_default_str();
  app.add_option("--budget", cfg.budget, "max brute-force word evaluations")
      ->envname("WORD_CENSUS_BUDGET")
      ->capture_default_str();
  app.add_option("--kernel", cfg.kernel, "census kernel")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "census worker threads (0 = hardware)")
      ->capture_default_str();

  std::string group_spec, gens_text, word_text, sigma_text, method = "both";
  uint32_t degree = 0, cap = 16;

  auto add_group_opts = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_spec, "preset (C12, S4, D5, Q8, C2*C6) or JSON table file");
    cmd->add_option("--gens", gens_text, "semicolon-separated generator permutations");
    cmd->add_option("--degree", degree, "permutation degree for --gens");
  };

  auto* group_cmd = app.add_subcommand("group", "group inspection");
  group_cmd->require_subcommand(1);
  auto* info_cmd = group_cmd->add_subcommand("info", "order, classes, commutator data");
  add_group_opts(info_cmd);

  auto* chartable_cmd = app.add_subcommand("chartable", "character table mod p");
  add_group_opts(chartable_cmd);

  auto* genus_cmd = app.add_subcommand("genus", "surface data of an orientable surface word");
  genus_cmd->add_option("--word", word_text, "word text, e.g. \"[g1,g2]\"")->required();

  auto* perm_cmd = app.add_subcommand("perm", "permutation tools");
  perm_cmd->require_subcommand(1);
  auto* dist_cmd = perm_cmd->add_subcommand("distance", "block-interchange distance vs genus");
  dist_cmd->add_option("--sigma", sigma_text, "cycle or one-line notation")->required();
  dist_cmd->add_option("--cap", cap, "search depth cap")->capture_default_str();

  auto* census_cmd = app.add_subcommand("census", "word value distribution over a group");
  census_cmd->add_option("--word", word_text, "word text")->required();
  add_group_opts(census_cmd);
  census_cmd->add_option("--method", method, "census method")
      ->check(CLI::IsMember({"brute", "character", "both"}))
      ->capture_default_str();

  auto* bounds_cmd = app.add_subcommand("bounds", "commuting-probability and genus bounds");
  add_group_opts(bounds_cmd);
  bounds_cmd->add_option("--sigma", sigma_text, "also check the rearrangement word of sigma");

  app.add_subcommand("suite", "run the full verification sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*info_cmd) {
      auto [name, g] = resolve_group(group_spec, gens_text, degree);
      emit(wc::group_info_json(name, g), cfg);
      return 0;
    }
    if (*chartable_cmd) {
      auto [name, g] = resolve_group(group_spec, gens_text, degree);
      wc::ordered_json table = wc::chartable_to_json(wc::dixon_table(g, cfg.seed), wc::conjugacy(g));
      wc::ordered_json j;
      j["group"] = name;
      for (auto& [k, v] : table.items()) j[k] = v;
      emit(j, cfg);
      return 0;
    }
    if (*genus_cmd) {
      wc::Word w = parse_word_with_note(word_text);
      emit(wc::surface_to_json(wc::genus(w), w), cfg);
      return 0;
    }
    if (*dist_cmd) {
      wc::Permutation sigma = wc::parse_permutation(sigma_text);
      uint32_t d = wc::block_transposition_distance(sigma, cap);
      uint32_t k = wc::genus(wc::rearrangement_word(sigma)).genus;
      wc::ordered_json j;
      j["sigma"] = sigma.cycle_string();
      j["degree"] = sigma.degree();
      j["distance"] = d;
      j["genus"] = k;
      j["agree"] = d == k;
      emit(j, cfg);
      return d == k ? 0 : 4;
    }
    if (*census_cmd) {
      auto [name, g] = resolve_group(group_spec, gens_text, degree);
      wc::Word w = parse_word_with_note(word_text);
      wc::CensusOptions copts = census_options(cfg);
      if (method == "brute") {
        emit(wc::census_to_json(wc::census_bruteforce(w, g, copts), g, name, "brute"), cfg);
        return 0;
      }
      if (method == "character") {
        wc::CharTableSource tables(g, cfg.seed);
        emit(wc::census_to_json(wc::census_character(w, tables), g, name, "character"), cfg);
        return 0;
      }
      wc::CharTableSource tables(g, cfg.seed);
      wc::WordCensus brute = wc::census_bruteforce(w, g, copts);
      wc::WordCensus character = wc::census_character(w, tables);
      bool match = brute.counts == character.counts;
      wc::ordered_json j;
      j["word"] = w.to_string();
      j["group"] = name;
      j["match"] = match;
      j["brute"] = wc::census_to_json(brute, g, name, "brute");
      j["character"] = wc::census_to_json(character, g, name, "character");
      emit(j, cfg);
      return match ? 0 : 4;
    }
    if (*bounds_cmd) {
      auto [name, g] = resolve_group(group_spec, gens_text, degree);
      wc::ordered_json j;
      j["group"] = name;
      j["five_eighths"] = wc::bound_to_json(wc::check_five_eighths(g));
      if (!sigma_text.empty())
        j["llr"] =
            wc::bound_to_json(wc::check_llr(wc::parse_permutation(sigma_text), g, census_options(cfg)));
      emit(j, cfg);
      return 0;
    }
    // suite
    wc::SuiteResult res = wc::run_acceptance_suite(std::cout, std::cerr);
    return res.all_passed ? 0 : 4;
  } catch (const wc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
