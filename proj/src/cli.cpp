#include "hnfold/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hnfold/decomposition.hpp"
#include "hnfold/error.hpp"
#include "hnfold/experiment.hpp"
#include "hnfold/intersection.hpp"
#include "hnfold/serialize.hpp"

namespace hnfold::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string dot_path;
  bool json_output = false;
  std::optional<std::uint64_t> seed;

  std::string input;
  std::string other_input;
  std::string check_path;

  std::size_t samples = 100;
  std::string distribution = "positive-words";
  std::string generators = "1-3";
  std::string length = "1-6";
  int rank = 2;
  std::string reproducer_dir;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SubgroupPresentation load_subgroup(const std::string& path) {
  try {
    return parse_subgroup(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": " + e.detail());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write file");
  out << text;
}

void maybe_write_dot(const Options& o, const Folding& f) {
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(f));
}

SizeRange parse_range(const std::string& text, const char* what) {
  SizeRange r;
  const auto dash = text.find('-');
  const std::string lo = text.substr(0, dash);
  const std::string hi = dash == std::string::npos ? lo : text.substr(dash + 1);
  auto number = [&](const std::string& s, std::size_t& v) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw InputError(std::string("bad ") + what + " range '" + text + "'");
    }
  };
  number(lo, r.min);
  number(hi, r.max);
  return r;
}

std::string blocker_text(const SourceSinkReport& r) {
  std::string out;
  auto add = [&](const char* kind, const std::vector<VertexId>& vs) {
    for (VertexId v : vs) {
      out += out.empty() ? "" : ", ";
      out += std::string(kind) + " at vertex " + std::to_string(v);
    }
  };
  add("source", r.sources);
  add("sink", r.sinks);
  add("one-way vertex", r.one_way);
  return out;
}

int cmd_fold(const Options& o, std::ostream& out) {
  const Folding f = folding_of(load_subgroup(o.input), o.seed);
  maybe_write_dot(o, f);
  if (o.json_output) {
    out << folding_json(f).dump(2) << "\n";
  } else {
    out << canonical_text(f);
  }
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Folding f = folding_of(load_subgroup(o.input), o.seed);
  maybe_write_dot(o, f);
  out << analysis_json(f).dump(2) << "\n";
  return kOk;
}

int cmd_positive_basis(const Options& o, std::ostream& out) {
  const Folding f = folding_of(load_subgroup(o.input), o.seed);
  const auto basis = positive_basis(f);
  if (o.json_output) {
    json j{{"positively_generated", basis.has_value()}, {"basis", nullptr}};
    if (basis) {
      j["basis"] = json::array();
      for (const Word& w : *basis) j["basis"].push_back(to_string(w));
    }
    out << j.dump(2) << "\n";
  } else if (!basis) {
    out << "not positively generated: folding is not strongly connected\n";
  } else {
    for (const Word& w : *basis) out << to_string(w) << "\n";
  }
  return kOk;
}

int cmd_trail_decomp(const Options& o, std::ostream& out) {
  const Folding f = folding_of(load_subgroup(o.input), o.seed);
  maybe_write_dot(o, f);

  if (!o.check_path.empty()) {
    const std::string text = slurp(o.check_path);
    TrailDecomposition d;
    try {
      const auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && (text[first] == '{')) {
        json j = json::parse(text);
        // Accept the wrapper written by `--json trail-decomp` as well.
        if (j.contains("decomposition")) j = j.at("decomposition");
        d = j.get<TrailDecomposition>();
      } else {
        d = parse_decomposition_text(text);
      }
    } catch (const json::exception& e) {
      throw InputError(o.check_path + ": " + e.what());
    } catch (const ParseError& e) {
      throw InputError(o.check_path + ":" + std::to_string(e.line()) + ":" +
                       std::to_string(e.column()) + ": " + e.detail());
    }
    const bool ok = verify_decomposition(f.graph(), d, false);
    const bool strong = ok && verify_decomposition(f.graph(), d, true);
    if (o.json_output) {
      out << json{{"valid", ok}, {"strong", strong}}.dump(2) << "\n";
    } else {
      out << (ok ? (strong ? "valid strong decomposition\n" : "valid decomposition\n")
                 : "invalid decomposition\n");
    }
    return kOk;
  }

  if (f.is_trivial()) {
    if (o.json_output) {
      out << json{{"decomposition", nullptr}, {"reason", "trivial subgroup"}}.dump(2) << "\n";
    } else {
      out << "no decomposition: trivial subgroup has no edges\n";
    }
    return kOk;
  }
  const DecompositionResult result = trail_decomposition(f);
  if (const auto* none = std::get_if<NoDecomposition>(&result)) {
    if (o.json_output) {
      out << json{{"decomposition", nullptr}, {"blockers", none->report}}.dump(2) << "\n";
    } else {
      out << "no decomposition: " << blocker_text(none->report) << "\n";
    }
    return kOk;
  }
  const auto& d = std::get<TrailDecomposition>(result);
  if (o.json_output) {
    out << json{{"decomposition", d}}.dump(2) << "\n";
  } else {
    out << decomposition_text(d);
  }
  return kOk;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const SubgroupPresentation ph = load_subgroup(o.input);
  const SubgroupPresentation pk = load_subgroup(o.other_input);
  if (ph.alphabet != pk.alphabet) throw InputError("alphabets differ");
  const Folding meet = pullback(folding_of(ph), folding_of(pk));
  maybe_write_dot(o, meet);
  if (o.json_output) {
    out << folding_json(meet).dump(2) << "\n";
  } else {
    out << canonical_text(meet);
  }
  return kOk;
}

int cmd_hnc_check(const Options& o, std::ostream& out) {
  const SubgroupPresentation ph = load_subgroup(o.input);
  const SubgroupPresentation pk = load_subgroup(o.other_input);
  if (ph.alphabet != pk.alphabet) throw InputError("alphabets differ");
  const HncReport report = hnc_check(ph, pk);
  out << json(report).dump(2) << "\n";
  if (!report.proved_bounds_hold()) return kProvedBoundFails;
  if (!report.verdict_hn_conjecture) return kConjectureFails;
  return kOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  out << format_subgroup(embed_to_rank2(load_subgroup(o.input)));
  return kOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentConfig config;
  config.seed = o.seed.value_or(1);
  config.samples = o.samples;
  const auto distribution = parse_distribution(o.distribution);
  if (!distribution) throw InputError("unknown distribution '" + o.distribution + "'");
  config.distribution = *distribution;
  config.generator_count = parse_range(o.generators, "generator count");
  config.word_length = parse_range(o.length, "word length");
  config.ambient_rank = o.rank;
  if (!o.reproducer_dir.empty()) config.reproducer_dir = o.reproducer_dir;
  try {
    config.validate();
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  const ExperimentResult result = run_experiment(config);
  if (o.json_output) {
    json tallies = json::array();
    for (const auto& t : result.tallies) {
      tallies.push_back({{"property", t.name}, {"passed", t.passed}, {"applicable", t.applicable}});
    }
    out << json{{"seed", config.seed},
                {"samples", config.samples},
                {"distribution", to_string(config.distribution)},
                {"ambient_rank", config.ambient_rank},
                {"properties", tallies},
                {"violations", result.violations},
                {"ok", result.all_passed()}}
               .dump(2)
        << "\n";
  } else {
    out << result.report();
  }
  return result.all_passed() ? kOk : kProvedBoundFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stallings foldings, trail decompositions and Hanna Neumann checks",
               "hnfold"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--dot", o.dot_path, "Write the resulting folding as Graphviz DOT");
  app.add_flag("--json", o.json_output, "Emit JSON");
  app.add_option("--seed", o.seed, "Seed for randomized folding order / experiments");

  auto single = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", o.input, "Subgroup file")->required();
    return sub;
  };
  auto pair = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("H", o.input, "Subgroup file for H")->required();
    sub->add_option("K", o.other_input, "Subgroup file for K")->required();
    return sub;
  };

  auto* fold_cmd = single("fold", "Print the canonical folding");
  auto* analyze_cmd = single("analyze", "Structural summary of a folding as JSON");
  auto* basis_cmd = single("positive-basis", "Positive basis, if one exists");
  auto* decomp_cmd = single("trail-decomp", "Directed trail decomposition");
  decomp_cmd->add_option("--check", o.check_path,
                         "Verify a decomposition (JSON or text) instead of computing one");
  auto* intersect_cmd = pair("intersect", "Folding of the intersection H ∩ K");
  auto* hnc_cmd = pair("hnc-check", "Rank bounds for H ∩ K; exit 1 if the conjecture fails, 3 if a theorem does");
  auto* embed_cmd = single("embed", "Rewrite into F(a, b) via x_i -> a^i b a^i");
  auto* experiment_cmd = app.add_subcommand("experiment", "Randomized property checks");
  experiment_cmd->fallthrough();
  experiment_cmd->add_option("--samples", o.samples, "Number of samples");
  experiment_cmd->add_option("--distribution", o.distribution,
                             "positive-words or reduced-words");
  experiment_cmd->add_option("--generators", o.generators, "Generator count range, e.g. 1-3");
  experiment_cmd->add_option("--length", o.length, "Word length range, e.g. 1-6");
  experiment_cmd->add_option("--rank", o.rank, "Ambient free group rank");
  experiment_cmd->add_option("--reproducers", o.reproducer_dir,
                             "Directory for reproducer files of violated properties");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hnfold: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*fold_cmd) return cmd_fold(o, out);
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*basis_cmd) return cmd_positive_basis(o, out);
    if (*decomp_cmd) return cmd_trail_decomp(o, out);
    if (*intersect_cmd) return cmd_intersect(o, out);
    if (*hnc_cmd) return cmd_hnc_check(o, out);
    if (*embed_cmd) return cmd_embed(o, out);
    if (*experiment_cmd) return cmd_experiment(o, out);
  } catch (const InputError& e) {
    err << "hnfold: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "hnfold: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hnfold::cli
