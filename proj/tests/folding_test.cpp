#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "hnfold/error.hpp"
#include "hnfold/folding.hpp"

using namespace hnfold;

namespace {

const Alphabet F2(2);

SubgroupPresentation sub(std::initializer_list<const char*> gens, int rank = 2) {
  std::vector<std::string> s(gens.begin(), gens.end());
  return gen::presentation(rank, s);
}

Folding folded(std::initializer_list<const char*> gens, int rank = 2) {
  return folding_of(sub(gens, rank));
}

bool in(const Folding& f, const char* w) { return membership(f, parse_word(f.alphabet(), w)); }

}  // namespace

TEST_CASE("build_rose") {
  const Rose a = build_rose(sub({"a"}));
  CHECK(a.graph.vertex_count() == 1);
  CHECK(a.graph.edge_count() == 1);
  CHECK(a.graph.edge(1).is_loop());

  const Rose ab = build_rose(sub({"ab"}));
  CHECK(ab.graph.vertex_count() == 2);
  CHECK(ab.graph.edge_count() == 2);
  CHECK(ab.graph.out_degree(ab.base) == 1);
  CHECK(ab.graph.in_degree(ab.base) == 1);

  // a-loop; b: 1 -> v1; a: v1 -> v2; b: 1 -> v2 (the inverse letter runs backward).
  const Rose r = build_rose(sub({"a", "baB"}));
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 4);
  CHECK(r.graph.out_degree(r.base) == 3);
  std::size_t b_out = 0;
  for (EdgeId e : r.graph.out_edges(r.base)) b_out += r.graph.edge(e).label == 2;
  CHECK(b_out == 2);

  CHECK_THROWS_AS(build_rose(sub({})), EmptyPresentation);
  CHECK_THROWS_AS(build_rose(sub({"aA", ""})), EmptyPresentation);
}

TEST_CASE("fold examples") {
  const Folding f = folded({"a", "baB"});
  CHECK(f.graph().vertex_count() == 2);
  CHECK(f.graph().edge_count() == 3);
  CHECK(canonical_text(f) ==
        "alphabet 2\nbase 1\nvertices 2\nedges 3\n1 a 1\n1 b 2\n2 a 2\n");

  const Folding free = folded({"a", "b"});
  CHECK(free.graph().vertex_count() == 1);
  CHECK(free.graph().edge_count() == 2);

  const Folding ab = folded({"aB"});
  CHECK(canonical_text(ab) == "alphabet 2\nbase 1\nvertices 2\nedges 2\n1 a 2\n1 b 2\n");

  // Needs folding at both ends and trimming of the hanging tail.
  const Folding g = folded({"aab", "aaB"});
  CHECK(rank(g) == 2);
  CHECK(in(g, "bb"));
}

TEST_CASE("trivial subgroup") {
  const Folding t = folded({"aA", "bB"});
  CHECK(t.is_trivial());
  CHECK(rank(t) == 0);
  CHECK(in(t, ""));
  CHECK_FALSE(in(t, "a"));
  CHECK(spanning_tree_basis(t).empty());
}

TEST_CASE("folding constructor validates") {
  LabeledDigraph g;
  g.add_vertex(1);
  g.add_vertex(2);
  g.add_edge(1, 2, 1);
  g.add_edge(1, 2, 1);
  CHECK_THROWS_AS(Folding(g, 1, F2), Error);  // not deterministic

  LabeledDigraph hanging;
  hanging.add_vertex(1);
  hanging.add_vertex(2);
  hanging.add_edge(1, 1, 1);
  hanging.add_edge(1, 2, 2);
  CHECK_THROWS_AS(Folding(hanging, 1, F2), Error);  // vertex 2 has degree 1

  LabeledDigraph apart;
  apart.add_vertex(1);
  apart.add_vertex(2);
  apart.add_edge(1, 1, 1);
  apart.add_edge(2, 2, 1);
  CHECK_THROWS_AS(Folding(apart, 1, F2), Error);

  LabeledDigraph big;
  big.add_vertex(1);
  big.add_edge(1, 1, 3);
  CHECK_THROWS_AS(Folding(big, 1, F2), Error);
}

TEST_CASE("membership") {
  const Folding f = folded({"a", "baB"});
  CHECK(in(f, "baB"));
  CHECK_FALSE(in(f, "b"));
  CHECK(in(f, ""));
  CHECK(in(f, "baaBA"));
  CHECK_THROWS_AS(membership(f, parse_word(Alphabet(3), "a")), AlphabetError);
}

TEST_CASE("rank") {
  CHECK(rank(folded({"a", "b"})) == 2);
  CHECK(rank(folded({"a", "baB"})) == 2);
  CHECK(rank(folded({"ab", "ba", "abab"})) == 2);
}

TEST_CASE("spanning_tree_basis") {
  std::vector<std::string> free;
  for (const Word& w : spanning_tree_basis(folded({"a", "b"}))) free.push_back(to_string(w));
  CHECK(free == std::vector<std::string>{"a", "b"});

  std::vector<std::string> conj;
  for (const Word& w : spanning_tree_basis(folded({"a", "baB"}))) conj.push_back(to_string(w));
  std::sort(conj.begin(), conj.end());
  CHECK(conj == std::vector<std::string>{"a", "baB"});
}

TEST_CASE("degree profile") {
  const DegreeProfile free = degree_profile(folded({"a", "b"}));
  CHECK(free.d(4) == 1);
  CHECK(free.d(1) + free.d(2) + free.d(3) == 0);

  const Folding conj = folded({"a", "baB"});
  const DegreeProfile p = degree_profile(conj);
  CHECK(p.d(3) == 2);
  // Base lacks b-in, the other vertex lacks b-out.
  CHECK(p.c(3) == 1);
  CHECK(p.c(4) == 1);
  CHECK(p.c(1) + p.c(2) == 0);
  CHECK(is_3_balanced(conj));

  const DegreeProfile loop = degree_profile(folded({"a"}));
  CHECK(loop.d(2) == 1);

  CHECK_THROWS_AS(degree_profile(folded({"a", "c"}, 3)), ClassCountUnavailable);
  CHECK_THROWS_AS(is_3_balanced(folded({"a", "c"}, 3)), ClassCountUnavailable);
  CHECK(degree_counts(folded({"a", "c"}, 3)).at(4) == 1);
}

TEST_CASE("3-balance and majority type") {
  CHECK(is_3_balanced(folded({"a", "b"})));
  CHECK_FALSE(neumann_majority_type(folded({"a", "b"})).has_value());

  // <b, aba^-1, a^2ba^-2>: a-path 1 -> 2 -> 3 with a b-loop at each vertex.
  // The base lacks a-in, the far end lacks a-out.
  const Folding path = folded({"b", "abA", "aabAA"});
  const DegreeProfile p = degree_profile(path);
  CHECK(p.d(3) == 2);
  CHECK(p.d(4) == 1);
  CHECK(p.c(1) == 1);
  CHECK(p.c(2) == 1);
  CHECK(is_3_balanced(path));
  CHECK_FALSE(neumann_majority_type(path).has_value());

  const Folding ab = folded({"aB"});
  CHECK(degree_profile(ab).d(3) == 0);
  CHECK_FALSE(neumann_majority_type(ab).has_value());
}

TEST_CASE("majority type fires when a class holds most degree-3 vertices") {
  gen::Rng rng(21);
  bool seen = false;
  for (int i = 0; i < 2000 && !seen; ++i) {
    const Folding f = folding_of(gen::presentation(rng, 2, 3, 4, false));
    const DegreeProfile p = degree_profile(f);
    const auto m = neumann_majority_type(f);
    for (int c = 1; c <= 4; ++c) {
      CHECK((m == c) == (2 * p.c(c) > p.d(3)));
    }
    if (m) {
      seen = true;
      CHECK_FALSE(is_3_balanced(f));
    }
  }
  CHECK(seen);
}

TEST_CASE("foldings_isomorphic") {
  const Folding f = folded({"ab", "ba"});
  CHECK(foldings_isomorphic(f, f));
  CHECK_FALSE(foldings_isomorphic(folded({"a"}), folded({"b"})));

  const std::vector<Word> basis = spanning_tree_basis(f);
  CHECK(foldings_isomorphic(f, folding_of({F2, basis})));

  CHECK(foldings_isomorphic(folded({"ab", "ba"}), folded({"ba", "ab", "abba"})));
  CHECK_FALSE(foldings_isomorphic(folded({"aa", "b"}), folded({"aaa", "b"})));
}

TEST_CASE("trail_word") {
  const Folding f = folded({"ab", "ba"});
  const auto p = shortest_directed_path(f.graph(), f.base(), f.graph().edge(1).head);
  REQUIRE(p.has_value());
  CHECK(to_string(trail_word(f, *p)) == "a");
}

TEST_CASE("subgroup file format") {
  const SubgroupPresentation p = parse_subgroup(
      "# two words\n"
      "alphabet 2   # F(a, b)\n"
      "\n"
      "ab\n"
      "  bA  # with a comment\n"
      "aA\n");
  CHECK(p.alphabet == F2);
  REQUIRE(p.generators.size() == 3);
  CHECK(to_string(p.generators[1]) == "bA");
  CHECK(p.generators[2].empty());
  CHECK(format_subgroup(p) == "alphabet 2\nab\nbA\n");
  CHECK(parse_subgroup(format_subgroup(p)).generators.size() == 2);

  auto error_at = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_subgroup(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("alphabet 2\na$\n") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(error_at("ab\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("alphabet 0\n").first == 1);
  CHECK(error_at("alphabet 27\n").first == 1);
  CHECK(error_at("alphabet two\n").first == 1);
  CHECK(error_at("alphabet 2\nab\n  c\n") == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(error_at("") == std::pair<std::size_t, std::size_t>{1, 1});

  std::istringstream in("alphabet 3\nabc\n");
  CHECK(read_subgroup(in).alphabet.rank() == 3);
}

TEST_CASE("folding dot export") {
  const std::string dot = to_dot(folded({"aB"}));
  CHECK(dot.find("1 [shape=doublecircle]") != std::string::npos);
  CHECK(dot.find("1 -> 2 [label=\"b\"]") != std::string::npos);
}

TEST_CASE("membership agrees with the generator-product oracle") {
  gen::Rng rng(1);
  const auto words = oracle::all_reduced_words(2, 6);
  for (int i = 0; i < 60; ++i) {
    const auto gens = gen::words(rng, 2, gen::between(rng, 1, 3), 1, 4, false);
    const Folding f = folding_of(gen::presentation(2, gens));
    const auto ball = oracle::subgroup_ball(gens, 6, 6, 4);
    for (const auto& w : words) {
      if (membership(f, parse_word(F2, w)) != (ball.count(w) > 0)) {
        CAPTURE(w);
        FAIL_CHECK("membership disagrees with oracle");
      }
    }
  }
}

TEST_CASE("fold is confluent") {
  gen::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto p = gen::presentation(rng, 2, 4, 7, false);
    const Folding plain = folding_of(p);
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
      const Folding shuffled = folding_of(p, seed);
      CHECK(foldings_isomorphic(plain, shuffled));
      // Canonical numbering erases the order too.
      CHECK(canonical_text(plain) == canonical_text(shuffled));
    }
  }
}

TEST_CASE("folding invariants on random presentations") {
  gen::Rng rng(4);
  for (int i = 0; i < 400; ++i) {
    const int r = static_cast<int>(gen::between(rng, 1, 4));
    const auto p = gen::presentation(rng, r, 4, 8, false);
    const Folding f = folding_of(p);

    for (const Word& w : p.generators) CHECK(membership(f, w));

    const std::vector<Word> basis = spanning_tree_basis(f);
    CHECK(basis.size() == rank(f));
    for (const Word& w : basis) CHECK(membership(f, w));
    if (!basis.empty()) CHECK(foldings_isomorphic(f, folding_of({p.alphabet, basis})));

    const auto counts = degree_counts(f);
    for (VertexId v : f.graph().vertices()) {
      CHECK(f.graph().degree(v) <= static_cast<std::size_t>(2 * r));
    }
    if (r == 2) {
      const DegreeProfile d = degree_profile(f);
      CHECK(d.c(1) + d.c(2) + d.c(3) + d.c(4) == d.d(3));
      CHECK(d.by_degree.size() <= 5);
    }
    std::size_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == f.graph().vertex_count());
  }
}
