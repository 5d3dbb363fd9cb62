#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidquot/catalog.hpp"
#include "braidquot/presentation.hpp"
#include "braidquot/presentation_json.hpp"

using namespace braidquot;

TEST_CASE("construction checks")
{
  CHECK_THROWS_AS(Presentation("x", {"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Presentation("x", {""}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Presentation("x", {"a"}, {Word{2}}), std::invalid_argument);
  Presentation p("x", {"a", "b"}, {Word{-2, 1, 1, 2}});
  CHECK(p.relators().front() == Word{1, 1});
  CHECK(p.generator_index("b") == 2);
  CHECK_FALSE(p.generator_index("c"));
}

TEST_CASE("normal closure quotient")
{
  auto b3 = catalog::artin_braid(3);
  Word cube{1, 1, 1};
  auto q = quotient_by_normal_closure(b3, std::span<Word const>(&cube, 1));
  REQUIRE(q.relators().size() == 2);
  CHECK(q.relators()[0] == b3.relators()[0]);
  CHECK(q.relators()[1] == cube);
  CHECK(quotient_by_normal_closure(b3, {}) == b3);
  Word bad{3};
  CHECK_THROWS_WITH_AS(quotient_by_normal_closure(b3, std::span<Word const>(&bad, 1)),
                       doctest::Contains("unknown generator"), std::invalid_argument);

  auto r = catalog::sphere4_triangle_reduction(5);
  CHECK(r.generator_count() == 3);
}

TEST_CASE("braid permutation")
{
  CHECK(to_cycle_string(braid_permutation({1}, 2)) == "(1 2)");
  CHECK(braid_permutation({}, 4).is_identity());
  CHECK(braid_permutation(catalog::pure_braid_generator_word(1, 3, 3), 3).is_identity());
  CHECK_THROWS(braid_permutation({3}, 3));
}

TEST_CASE("pure braid generators map to the identity")
{
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j)
        CHECK(braid_permutation(catalog::pure_braid_generator_word(i, j, n), n).is_identity());
    }
  }
}

TEST_CASE("braid permutation is a homomorphism")
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> g(1, 4), len(0, 10);
  std::bernoulli_distribution sign;
  auto word = [&] {
    std::vector<Letter> v(static_cast<std::size_t>(len(rng)));
    for (auto &x : v)
      x = sign(rng) ? g(rng) : -g(rng);
    return Word(std::move(v));
  };
  for (int t = 0; t < 300; ++t) {
    Word u = word(), v = word();
    CHECK(braid_permutation(u * v, 5) == braid_permutation(u, 5) * braid_permutation(v, 5));
    CHECK(braid_permutation(invert(u), 5) == braid_permutation(u, 5).inverse());
  }
}

TEST_CASE("JSON round trip")
{
  for (auto const &p : {catalog::artin_braid(4), catalog::projective_plane_braid(3),
                        catalog::crystallographic_surface(1, 2, 3),
                        catalog::crystallographic_disk(2)}) {
    auto text = to_json(p);
    CHECK(presentation_from_json(text) == p);
    CHECK(to_json(presentation_from_json(text)) == text);
  }
  std::string const s2 = R"j({"label":"B_2(S2)","generators":["s1"],"relators":[[1,1]]})j";
  CHECK(to_json(catalog::sphere_braid(2)) == s2);
}

TEST_CASE("JSON errors")
{
  std::string const no_relators = R"({"label":"x","generators":["a"]})";
  std::string const out_of_range = R"({"label":"x","generators":["a"],"relators":[[2]]})";
  std::string const zero_letter = R"({"label":"x","generators":["a"],"relators":[[0]]})";
  std::string const not_integer = R"({"label":"x","generators":["a"],"relators":[["a"]]})";
  CHECK_THROWS_AS(presentation_from_json("{"), JsonFormatError);
  CHECK_THROWS_AS(presentation_from_json("[]"), JsonFormatError);
  CHECK_THROWS_AS(presentation_from_json(no_relators), JsonFormatError);
  CHECK_THROWS(presentation_from_json(out_of_range));
  CHECK_THROWS(presentation_from_json(zero_letter));
  CHECK_THROWS(presentation_from_json(not_integer));
}
