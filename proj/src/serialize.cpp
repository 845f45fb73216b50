#include "hnfold/serialize.hpp"

#include <sstream>

#include "hnfold/error.hpp"

namespace hnfold {

using nlohmann::json;

void to_json(json& j, const Trail& t) { j = t.edges; }
void from_json(const json& j, Trail& t) { j.get_to(t.edges); }

void to_json(json& j, const TrailDecomposition& d) {
  j = json{{"base", d.base}, {"trails", d.trails}};
}

void from_json(const json& j, TrailDecomposition& d) {
  j.at("base").get_to(d.base);
  j.at("trails").get_to(d.trails);
}

void to_json(json& j, const SourceSinkReport& r) {
  j = json{{"sources", r.sources}, {"sinks", r.sinks}, {"one_way", r.one_way}};
}

void from_json(const json& j, SourceSinkReport& r) {
  j.at("sources").get_to(r.sources);
  j.at("sinks").get_to(r.sinks);
  j.at("one_way").get_to(r.one_way);
}

namespace {

json optional_int(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<int> read_optional_int(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

void to_json(json& j, const HncReport& r) {
  j = json{
      {"rank_h", r.rank_h},
      {"rank_k", r.rank_k},
      {"rank_meet", r.rank_meet},
      {"reduced_rank_h", r.reduced_rank_h},
      {"reduced_rank_k", r.reduced_rank_k},
      {"reduced_rank_meet", r.reduced_rank_meet},
      {"bound_hn_conjecture", r.bound_hn_conjecture},
      {"bound_hneumann", r.bound_hneumann},
      {"bound_burns", r.bound_burns},
      {"bound_tardos96", r.bound_tardos96},
      {"verdict_hn_conjecture", r.verdict_hn_conjecture},
      {"verdict_hneumann", r.verdict_hneumann},
      {"verdict_burns", r.verdict_burns},
      {"verdict_tardos96", r.verdict_tardos96},
      {"h_positively_generated", r.h_positively_generated},
      {"k_positively_generated", r.k_positively_generated},
      {"h_source_sink_free", r.h_source_sink_free},
      {"k_source_sink_free", r.k_source_sink_free},
      {"majority_type_h", optional_int(r.majority_type_h)},
      {"majority_type_k", optional_int(r.majority_type_k)},
  };
}

void from_json(const json& j, HncReport& r) {
  j.at("rank_h").get_to(r.rank_h);
  j.at("rank_k").get_to(r.rank_k);
  j.at("rank_meet").get_to(r.rank_meet);
  j.at("reduced_rank_h").get_to(r.reduced_rank_h);
  j.at("reduced_rank_k").get_to(r.reduced_rank_k);
  j.at("reduced_rank_meet").get_to(r.reduced_rank_meet);
  j.at("bound_hn_conjecture").get_to(r.bound_hn_conjecture);
  j.at("bound_hneumann").get_to(r.bound_hneumann);
  j.at("bound_burns").get_to(r.bound_burns);
  j.at("bound_tardos96").get_to(r.bound_tardos96);
  j.at("verdict_hn_conjecture").get_to(r.verdict_hn_conjecture);
  j.at("verdict_hneumann").get_to(r.verdict_hneumann);
  j.at("verdict_burns").get_to(r.verdict_burns);
  j.at("verdict_tardos96").get_to(r.verdict_tardos96);
  j.at("h_positively_generated").get_to(r.h_positively_generated);
  j.at("k_positively_generated").get_to(r.k_positively_generated);
  j.at("h_source_sink_free").get_to(r.h_source_sink_free);
  j.at("k_source_sink_free").get_to(r.k_source_sink_free);
  r.majority_type_h = read_optional_int(j.at("majority_type_h"));
  r.majority_type_k = read_optional_int(j.at("majority_type_k"));
}

std::string decomposition_text(const TrailDecomposition& d) {
  std::ostringstream out;
  out << "base " << d.base << "\n";
  for (const Trail& t : d.trails) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      out << (i ? " " : "") << t.edges[i];
    }
    out << "\n";
  }
  return out.str();
}

TrailDecomposition parse_decomposition_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  TrailDecomposition d;
  bool have_base = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (!have_base) {
      std::string keyword;
      if (!(fields >> keyword >> d.base) || keyword != "base") {
        throw ParseError(line_no, 1, "expected 'base <vertex>'");
      }
      have_base = true;
      continue;
    }
    Trail t;
    EdgeId id = 0;
    while (fields >> id) t.edges.push_back(id);
    if (!fields.eof()) throw ParseError(line_no, 1, "expected edge ids");
    d.trails.push_back(std::move(t));
  }
  if (!have_base) throw ParseError(std::max<std::size_t>(line_no, 1), 1, "missing 'base' line");
  return d;
}

nlohmann::json folding_json(const Folding& f) {
  json edges = json::array();
  for (const Edge& e : f.graph().edges()) {
    edges.push_back({{"id", e.id},
                     {"tail", e.tail},
                     {"label", std::string(1, letter_char(Letter::pos(e.label)))},
                     {"head", e.head}});
  }
  return json{{"alphabet", f.alphabet().rank()},
              {"base", f.base()},
              {"vertices", f.graph().vertices()},
              {"edges", std::move(edges)},
              {"rank", rank(f)}};
}

nlohmann::json degree_profile_json(const Folding& f) {
  json out;
  const auto counts = degree_counts(f);
  json by_degree = json::object();
  for (std::size_t d = 1; d < std::max<std::size_t>(counts.size(), 5); ++d) {
    by_degree["d" + std::to_string(d)] = d < counts.size() ? counts[d] : 0;
  }
  out["degrees"] = by_degree;
  if (f.alphabet().rank() == 2) {
    const DegreeProfile p = degree_profile(f);
    out["classes"] = {{"c1", p.c(1)}, {"c2", p.c(2)}, {"c3", p.c(3)}, {"c4", p.c(4)}};
  } else {
    out["classes"] = nullptr;
  }
  return out;
}

nlohmann::json analysis_json(const Folding& f) {
  const SourceSinkReport report = find_sources_sinks(f);
  const bool rank2 = f.alphabet().rank() == 2;
  json out{
      {"rank", rank(f)},
      {"degree_profile", degree_profile_json(f)},
      {"three_balanced", rank2 ? json(is_3_balanced(f)) : json(nullptr)},
      {"sources", report.sources},
      {"sinks", report.sinks},
      {"one_way", report.one_way},
      {"source_sink_free", report.empty()},
      {"strongly_connected", is_strongly_connected(f.graph())},
      {"positively_generated", is_positively_generated(f)},
      {"majority_type", rank2 ? optional_int(neumann_majority_type(f)) : json(nullptr)},
  };
  return out;
}

}  // namespace hnfold
