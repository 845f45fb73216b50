#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "hnfold/cli.hpp"
#include "hnfold/decomposition.hpp"
#include "hnfold/intersection.hpp"
#include "hnfold/serialize.hpp"

using namespace hnfold;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("hnfold-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }

  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialization round trips") {
  const TrailDecomposition d{3, {Trail{{1, 2}}, Trail{{5}}}};
  CHECK(json(d).get<TrailDecomposition>() == d);
  CHECK(parse_decomposition_text(decomposition_text(d)) == d);
  CHECK(decomposition_text(d) == "base 3\n1 2\n5\n");

  const SourceSinkReport r{{1}, {2, 4}, {7}};
  CHECK(json(r).get<SourceSinkReport>() == r);

  const HncReport h = hnc_check(gen::presentation(2, {"aa", "b"}), gen::presentation(2, {"aaa", "b"}));
  CHECK(json(h).get<HncReport>() == h);
  CHECK(json::parse(json(h).dump()).get<HncReport>() == h);

  CHECK_THROWS(parse_decomposition_text("1 2\n"));
  CHECK_THROWS(parse_decomposition_text("base x\n"));
}

TEST_CASE("folding json") {
  const Folding f = folding_of(gen::presentation(2, {"aB"}));
  const json j = folding_json(f);
  CHECK(j.at("alphabet") == 2);
  CHECK(j.at("base") == 1);
  CHECK(j.at("rank") == 1);
  CHECK(j.at("edges").size() == 2);
  CHECK(j.at("edges")[0].at("label") == "a");
}

TEST_CASE("cli fold") {
  Scratch s;
  const auto conj = s.file("conj.txt", "alphabet 2\na\nbaB\n");
  const Run r = run({"fold", conj});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "alphabet 2\nbase 1\nvertices 2\nedges 3\n1 a 1\n1 b 2\n2 a 2\n");

  const auto free = s.file("free.txt", "alphabet 2\na\nb\n");
  const auto dot = (s.dir / "free.dot").string();
  CHECK(run({"--dot", dot, "fold", free}).out ==
        "alphabet 2\nbase 1\nvertices 1\nedges 2\n1 a 1\n1 b 1\n");
  std::ifstream in(dot);
  std::string dot_text((std::istreambuf_iterator<char>(in)), {});
  CHECK(dot_text.find("doublecircle") != std::string::npos);

  // Flags may also follow the subcommand.
  const Run j = run({"fold", free, "--json"});
  CHECK(json::parse(j.out).at("rank") == 2);

  const Run bad = run({"fold", s.file("bad.txt", "alphabet 2\na$\n")});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("bad.txt:2:2:") != std::string::npos);

  CHECK(run({"fold", (s.dir / "missing.txt").string()}).code == cli::kInputError);
  CHECK(run({"fold"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"fold", s.file("empty.txt", "alphabet 2\n")}).code == cli::kOk);
}

TEST_CASE("cli analyze") {
  Scratch s;
  const json pos = json::parse(run({"analyze", s.file("p.txt", "alphabet 2\nab\nba\n")}).out);
  CHECK(pos.at("strongly_connected") == true);
  CHECK(pos.at("positively_generated") == true);

  const json src = json::parse(run({"analyze", s.file("s.txt", "alphabet 2\naB\n")}).out);
  CHECK(src.at("sources") == json::array({1}));
  CHECK(src.at("sinks") == json::array({2}));
  CHECK(src.at("positively_generated") == false);

  const json free = json::parse(run({"analyze", s.file("f.txt", "alphabet 2\na\nb\n")}).out);
  CHECK(free.at("rank") == 2);
  CHECK(free.at("three_balanced") == true);
  CHECK(free.at("majority_type").is_null());

  const json r3 = json::parse(run({"analyze", s.file("r3.txt", "alphabet 3\nabc\n")}).out);
  CHECK(r3.at("three_balanced").is_null());
}

TEST_CASE("cli trail-decomp") {
  Scratch s;
  const Run none = run({"trail-decomp", s.file("s.txt", "alphabet 2\naB\n")});
  CHECK(none.code == cli::kOk);
  CHECK(none.out.rfind("no decomposition: source at vertex 1", 0) == 0);

  const auto h = s.file("h.txt", "alphabet 2\nab\nba\n");
  const Run text = run({"trail-decomp", h});
  CHECK(text.code == cli::kOk);
  const auto d_text = s.file("d.txt", text.out);
  CHECK(run({"trail-decomp", h, "--check", d_text}).out == "valid strong decomposition\n");

  // The JSON output is accepted back by --check.
  const Run j = run({"--json", "trail-decomp", h});
  const auto d_json = s.file("d.json", j.out);
  const json verdict = json::parse(run({"--json", "trail-decomp", h, "--check", d_json}).out);
  CHECK(verdict.at("valid") == true);
  CHECK(verdict.at("strong") == true);

  const auto wrong = s.file("w.txt", "base 1\n1\n");
  CHECK(run({"trail-decomp", h, "--check", wrong}).out == "invalid decomposition\n");
  CHECK(run({"trail-decomp", h, "--check", s.file("junk.json", "{\"base\": 1")}).code ==
        cli::kInputError);

  CHECK(run({"trail-decomp", s.file("t.txt", "alphabet 2\naA\n")}).code == cli::kOk);
}

TEST_CASE("cli positive-basis") {
  Scratch s;
  const Run r = run({"positive-basis", s.file("h.txt", "alphabet 2\nab\nba\n")});
  CHECK(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::vector<Word> basis;
  for (std::string line; std::getline(lines, line);) basis.push_back(parse_word(Alphabet(2), line));
  CHECK(basis.size() == 2);
  CHECK(foldings_isomorphic(folding_of({Alphabet(2), basis}),
                            folding_of(gen::presentation(2, {"ab", "ba"}))));

  const json no = json::parse(run({"--json", "positive-basis", s.file("n.txt", "alphabet 2\naB\n")}).out);
  CHECK(no.at("positively_generated") == false);
  CHECK(no.at("basis").is_null());
}

TEST_CASE("cli intersect and hnc-check") {
  Scratch s;
  const auto h = s.file("h.txt", "alphabet 2\naa\nb\n");
  const auto k = s.file("k.txt", "alphabet 2\naaa\nb\n");
  const Run meet = run({"intersect", h, k});
  CHECK(meet.code == cli::kOk);
  CHECK(meet.out.find("vertices 6\nedges 7\n") != std::string::npos);

  const Run check = run({"hnc-check", h, k});
  CHECK(check.code == cli::kOk);
  const HncReport report = json::parse(check.out).get<HncReport>();
  CHECK(report.rank_meet == 2);
  CHECK(report.bound_hn_conjecture == 1);
  CHECK(report == hnc_check(gen::presentation(2, {"aa", "b"}), gen::presentation(2, {"aaa", "b"})));

  CHECK(run({"hnc-check", h, s.file("k3.txt", "alphabet 3\nc\n")}).code == cli::kInputError);
  CHECK(run({"hnc-check", h}).code == cli::kInputError);
}

TEST_CASE("cli embed") {
  Scratch s;
  const Run r = run({"embed", s.file("f3.txt", "alphabet 3\na\nb\nC\n")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "alphabet 2\naba\naabaa\nAAABAAA\n");
  CHECK(parse_subgroup(r.out).generators.size() == 3);
}

TEST_CASE("cli experiment") {
  Scratch s;
  const std::vector<std::string> args{"experiment", "--samples", "40", "--seed", "9",
                                      "--generators", "1-2", "--length", "2-5"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("samples 40") != std::string::npos);

  std::vector<std::string> json_args = args;
  json_args.insert(json_args.begin(), "--json");
  const json j = json::parse(run(json_args).out);
  CHECK(j.at("ok") == true);
  CHECK(j.at("seed") == 9);

  CHECK(run({"experiment", "--samples", "0"}).code == cli::kInputError);
  CHECK(run({"experiment", "--length", "5-2"}).code == cli::kInputError);
  CHECK(run({"experiment", "--length", "x"}).code == cli::kInputError);
  CHECK(run({"experiment", "--distribution", "uniform"}).code == cli::kInputError);
  CHECK(run({"experiment", "--samples", "5", "--distribution", "reduced-words", "--rank", "3",
             "--reproducers", (s.dir / "repro").string()})
            .code == cli::kOk);
}

TEST_CASE("cli help") {
  const Run r = run({"--help"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("hnc-check") != std::string::npos);
}
