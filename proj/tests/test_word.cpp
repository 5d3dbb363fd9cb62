#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidquot/permutation.hpp"
#include "braidquot/word.hpp"

using namespace braidquot;

TEST_CASE("free reduction")
{
  CHECK(free_reduce({1, -1}) == Word{});
  CHECK(free_reduce({1, 2, -2, -1}) == Word{});
  CHECK(free_reduce({1, 2, 1}) == Word{1, 2, 1});
  CHECK(free_reduce({-3, 3, 2}) == Word{2});
}

TEST_CASE("inversion")
{
  CHECK(invert({1, 2}) == Word{-2, -1});
  CHECK(invert({}) == Word{});
  CHECK(invert({1, -2, 1}) == Word{-1, 2, -1});
}

TEST_CASE("conjugation")
{
  CHECK(conjugate({1}, {}) == Word{1});
  CHECK(conjugate({1}, {2}) == Word{2, 1, -2});
  CHECK(conjugate({2}, {2}) == Word{2});
}

TEST_CASE("cyclic reduction")
{
  CHECK(cyclically_reduce({-2, 1, 2}) == Word{1});
  CHECK(cyclically_reduce({1, 2}) == Word{1, 2});
  // stripping continues until the ends no longer cancel
  CHECK(cyclically_reduce({-1, -2, 1, 2, 1}) == Word{1});
  CHECK(cyclically_reduce({1, -1}) == Word{});
}

TEST_CASE("letter zero is rejected")
{
  CHECK_THROWS_AS(Word({1, 0}), std::invalid_argument);
}

TEST_CASE("power, commutator, formatting")
{
  CHECK(power({1, 2}, 2) == Word{1, 2, 1, 2});
  CHECK(power({1, 2}, -1) == Word{-2, -1});
  CHECK(power({1}, 0) == Word{});
  CHECK(commutator({1}, {2}) == Word{1, 2, -1, -2});
  CHECK(to_string(Word{1, -2}) == "[1, -2]");
  CHECK(Word{3, -5, 1}.max_generator() == 5);
}

namespace {

Word random_word(std::mt19937 &rng, int gens, int max_len)
{
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> g(1, gens);
  std::bernoulli_distribution sign;
  std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
  for (auto &x : out)
    x = sign(rng) ? g(rng) : -g(rng);
  return Word(std::move(out));
}

} // namespace

TEST_CASE("word properties on random input")
{
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    Word u = random_word(rng, 3, 12);
    Word v = random_word(rng, 3, 12);
    Word ru = free_reduce(u);
    CHECK(is_freely_reduced(ru));
    CHECK(free_reduce(ru) == ru);
    CHECK(free_reduce(u * invert(u)) == Word{});
    CHECK(invert(invert(u)) == u);
    CHECK(free_reduce(invert(u * v)) == free_reduce(invert(v) * invert(u)));
    Word c = cyclically_reduce(ru);
    CHECK(cyclically_reduce(c) == c);
    CHECK(c.size() <= ru.size());
    if (c.size() >= 2)
      CHECK(c[0] != -c[c.size() - 1]);
    CHECK(conjugate(conjugate(u, v), invert(v)) == ru);
  }
}

TEST_CASE("permutations")
{
  auto t = Permutation::transposition(3, 1, 2);
  CHECK(to_cycle_string(t) == "(1 2)");
  CHECK(t.order() == 2);
  CHECK((t * t).is_identity());
  Permutation c({1, 2, 0});
  CHECK(c.order() == 3);
  CHECK((c * c.inverse()).is_identity());
  // left to right: apply c, then t
  CHECK((c * t)(0) == t(c(0)));
  CHECK(to_cycle_string(Permutation(4)) == "()");
  CHECK_THROWS(Permutation({0, 0, 1}));
}
