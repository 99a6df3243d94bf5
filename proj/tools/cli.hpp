// The coxrig command line: check | spherical | iso | abelianize | verify | census.
#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxrig/coxrig.hpp"
#include "coxrig/json_report.hpp"

namespace coxrig::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInconclusive = 2, kError = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a matrix from a path, "-" for stdin, or "preset:NAME".
inline CoxeterMatrix load_matrix(const std::string& source) {
  if (source.rfind("preset:", 0) == 0) return preset(source.substr(7));
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw InputError("cannot open '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_coxeter_file(text);
  } catch (const ParseError& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline std::vector<Label> parse_label_list(const std::string& list) {
  std::vector<Label> labels;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf") {
      labels.push_back(kInfinity);
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 2 || v > UINT32_MAX) {
      throw InputError("invalid label '" + item + "' (expected an integer >= 2 or inf)");
    }
    labels.push_back(Label(static_cast<std::uint32_t>(v)));
  }
  if (labels.empty()) throw InputError("empty label list");
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

inline std::vector<GeneratorSubset> parse_subsets(const std::vector<std::string>& specs,
                                                  std::size_t rank) {
  std::vector<GeneratorSubset> out;
  for (const auto& spec : specs) {
    std::vector<std::size_t> idx;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || v < 1 || v > rank) {
        throw InputError("invalid generator '" + item + "' in subset '" + spec + "'");
      }
      idx.push_back(v - 1);
    }
    try {
      out.emplace_back(std::move(idx));
    } catch (const std::invalid_argument&) {
      throw InputError("repeated generator in subset '" + spec + "'");
    }
  }
  return out;
}

namespace detail {

inline std::string subset_text(const GeneratorSubset& s) {
  std::string r = "{";
  for (std::size_t k = 0; k < s.size(); ++k) r += (k ? "," : "") + std::to_string(s[k] + 1);
  return r + "}";
}

inline void print_json(std::ostream& out, const nlohmann::ordered_json& j) {
  out << j.dump(2) << '\n';
}

}  // namespace detail

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter system rigidity toolkit", "coxrig"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::size_t max_cosets = kDefaultMaxCosets;
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_option("--max-cosets", max_cosets, "Coset enumeration cap")
      ->check(CLI::PositiveNumber);

  std::string file, file2;
  auto* check = app.add_subcommand("check", "Decide membership in the rigid class");
  check->add_option("file", file, "Coxeter matrix file")->required();

  auto* spherical = app.add_subcommand("spherical", "List maximal spherical and independent subsets");
  spherical->add_option("file", file, "Coxeter matrix file")->required();

  auto* iso = app.add_subcommand("iso", "Find a diagram isomorphism between two matrices");
  iso->add_option("first", file, "First matrix file")->required();
  iso->add_option("second", file2, "Second matrix file")->required();

  std::vector<std::string> subset_specs;
  auto* abel = app.add_subcommand("abelianize", "Odd components and abelianized parabolic images");
  abel->add_option("file", file, "Coxeter matrix file")->required();
  abel->add_option("--subset", subset_specs, "Extra subset to image, e.g. 1,3 (repeatable)");

  OracleLimits limits;
  bool dump_table = false;
  auto* verify = app.add_subcommand("verify", "Search all Coxeter generating sets of a finite group");
  verify->add_option("file", file, "Coxeter matrix file")->required();
  verify->add_option("--max-order", limits.max_order, "Largest group order searched")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-gens", limits.max_gens, "Largest generating set size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-subsets", limits.max_subsets, "Search node budget")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--dump-table", dump_table, "Write the coset table to stderr");

  std::size_t census_rank = 0;
  std::string census_labels = "2,3,4,5,6,inf";
  auto* census = app.add_subcommand("census", "Classify every matrix of a rank over a label set");
  census->add_option("--rank", census_rank, "Rank of the swept matrices")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  census->add_option("--labels", census_labels, "Comma-separated labels, inf allowed");

  std::vector<const char*> argv{"coxrig"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "coxrig: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*check) {
      const auto m = load_matrix(file);
      const auto r = check_class_membership(m);
      if (as_json) {
        detail::print_json(out, json::class_report(r));
      } else {
        out << "in class: " << (r.in_class ? "yes" : "no") << '\n';
        for (int c = 0; c < 4; ++c) {
          out << "condition (" << c << "): " << (r.conditions[c] ? "holds" : "fails") << '\n';
        }
        for (const auto& w : r.witnesses) {
          out << "  witness (" << w.condition << "):";
          for (auto g : w.generators) out << ' ' << g + 1;
          out << "  m =";
          for (auto v : w.values) out << ' ' << v.to_string();
          if (w.condition == 3) out << "  meeting subsets = " << w.count;
          out << '\n';
        }
        out << "evenness: " << to_string(r.evenness) << '\n';
        out << "s_bar: " << detail::subset_text(r.s_bar)
            << (r.s_bar_authoritative ? "" : " (system out of class)") << '\n';
      }
      return r.in_class ? kOk : kNegative;
    }

    if (*spherical) {
      const auto m = load_matrix(file);
      const auto j = json::spherical_report(m);
      if (as_json) {
        detail::print_json(out, j);
      } else {
        out << "maximal spherical subsets:\n";
        for (const auto& t : j["maximal_spherical"]) {
          out << "  " << t["subset"].dump() << "  " << t["type"].get<std::string>() << "  order "
              << t["order"].dump() << '\n';
        }
        out << "s_bar: " << j["s_bar"].dump() << '\n';
        out << "maximal independent subsets of s_bar:";
        for (const auto& t : j["maximal_independent"]) out << ' ' << t.dump();
        out << '\n';
      }
      return kOk;
    }

    if (*iso) {
      const auto a = load_matrix(file);
      const auto b = load_matrix(file2);
      const auto psi = diagram_isomorphic(a, b);
      if (as_json) {
        nlohmann::ordered_json j;
        j["isomorphic"] = psi.has_value();
        if (psi) j["bijection"] = json::bijection(*psi);
        detail::print_json(out, j);
      } else if (psi) {
        for (std::size_t i = 0; i < psi->size(); ++i) {
          out << i + 1 << " -> " << (*psi)(i) + 1 << '\n';
        }
      } else {
        out << "not isomorphic\n";
      }
      return psi ? kOk : kNegative;
    }

    if (*abel) {
      const auto m = load_matrix(file);
      const auto report = check_class_membership(m);
      std::vector<GeneratorSubset> subsets = report.maximal_spherical;
      subsets.push_back(report.s_bar);
      subsets.push_back(GeneratorSubset::full(m.rank()));
      for (auto& s : parse_subsets(subset_specs, m.rank())) subsets.push_back(std::move(s));
      const auto j = json::abelianization_report(m, subsets);
      if (as_json) {
        detail::print_json(out, j);
      } else {
        out << "k = " << j["k"].get<std::size_t>() << '\n';
        out << "odd components: " << j["components"].dump() << '\n';
        for (const auto& img : j["images"]) {
          out << "  dim pi(W_" << img["subset"].dump() << ") = " << img["dim"].dump() << '\n';
        }
      }
      return kOk;
    }

    if (*verify) {
      const auto m = load_matrix(file);
      limits.max_cosets = max_cosets;
      if (dump_table) {
        if (!coxeter_order(m)) throw InfiniteGroup("the Coxeter group is infinite");
        todd_coxeter(m, max_cosets).dump_table(err);
      }
      std::optional<RigidityVerdict> verdict;
      try {
        verdict = rigidity_verdict(m, limits);
      } catch (const LimitExceeded& e) {
        if (as_json) {
          nlohmann::ordered_json j;
          j["rigid"] = false;
          j["exhausted"] = false;
          j["limit_exceeded"] = e.what();
          j["limits"] = json::limits(limits);
          detail::print_json(out, j);
        } else {
          out << "search not run to completion: " << e.what() << '\n';
        }
        return kInconclusive;
      }
      const auto& v = *verdict;
      if (as_json) {
        detail::print_json(out, json::verdict(v));
      } else {
        out << "group order: " << v.group_order << '\n';
        out << "Coxeter generating sets found: " << v.candidates.size() << '\n';
        out << "diagram classes: " << v.classes.size() << '\n';
        for (const auto& k : v.classes) {
          out << "  " << type_name(*classify_finite_type(k.matrix)) << " (" << k.members
              << " generating sets)\n";
        }
        if (v.classes.size() > 1) {
          out << "not rigid\n";
        } else if (v.rigid) {
          out << "rigid\n";
        } else {
          out << "no second class found within limits (search not exhausted)\n";
        }
      }
      if (v.classes.size() > 1) return kNegative;
      return v.rigid ? kOk : kInconclusive;
    }

    if (*census) {
      const auto labels = parse_label_list(census_labels);
      const std::size_t n = census_rank;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      }
      // Odometer over the upper triangle; the first pair is most significant.
      std::vector<std::size_t> digit(pairs.size(), 0);
      while (true) {
        CoxeterMatrix m(n);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          m.set(pairs[p].first, pairs[p].second, labels[digit[p]]);
        }
        const auto r = check_class_membership(m);
        nlohmann::ordered_json rec;
        rec["matrix"] = json::matrix(m);
        rec["in_class"] = r.in_class;
        rec["evenness"] = to_string(r.evenness);
        out << rec.dump() << '\n';
        std::size_t p = pairs.size();
        while (p > 0 && ++digit[p - 1] == labels.size()) digit[--p] = 0;
        if (p == 0) break;
      }
      return kOk;
    }
  } catch (const InputError& e) {
    err << "coxrig: " << e.what() << '\n';
    return kError;
  } catch (const UnknownPreset& e) {
    err << "coxrig: " << e.what() << '\n';
    return kError;
  } catch (const InfiniteGroup& e) {
    err << "coxrig: " << e.what() << '\n';
    return kError;
  } catch (const CapExceeded& e) {
    err << "coxrig: " << e.what() << '\n';
    return kInconclusive;
  } catch (const InternalInconsistency& e) {
    err << "coxrig: INTERNAL INCONSISTENCY\n" << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "coxrig: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace coxrig::cli
