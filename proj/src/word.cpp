#include "braidquot/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braidquot {

namespace {

void check_letters(std::vector<Letter> const &letters)
{
  if (std::find(letters.begin(), letters.end(), 0) != letters.end())
    throw std::invalid_argument("word letter 0 is not a generator reference");
}

} // namespace

Word::Word(std::initializer_list<Letter> letters)
: _letters(letters)
{ check_letters(_letters); }

Word::Word(std::vector<Letter> letters)
: _letters(std::move(letters))
{ check_letters(_letters); }

int Word::max_generator() const noexcept
{
  int m = 0;
  for (Letter x : _letters)
    m = std::max(m, std::abs(x));
  return m;
}

Word operator*(Word const &lhs, Word const &rhs)
{
  std::vector<Letter> out(lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return Word(std::move(out));
}

Word free_reduce(Word const &w)
{
  // stack-based cancellation
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

Word invert(Word const &w)
{
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(-*it);
  return Word(std::move(out));
}

Word conjugate(Word const &w, Word const &by)
{ return free_reduce(by * w * invert(by)); }

Word cyclically_reduce(Word const &w)
{
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(letters.begin() + lo, letters.begin() + hi));
}

Word power(Word const &w, int k)
{
  Word base = k < 0 ? invert(w) : w;
  std::vector<Letter> out;
  for (int i = 0; i < std::abs(k); ++i)
    out.insert(out.end(), base.begin(), base.end());
  return free_reduce(Word(std::move(out)));
}

Word commutator(Word const &u, Word const &v)
{ return free_reduce(u * v * invert(u) * invert(v)); }

bool is_freely_reduced(Word const &w) noexcept
{
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == -w[i - 1])
      return false;
  }
  return true;
}

std::string to_string(Word const &w)
{
  std::ostringstream ss;
  ss << '[';
  for (std::size_t i = 0; i < w.size(); ++i)
    ss << (i ? ", " : "") << w[i];
  ss << ']';
  return ss.str();
}

} // namespace braidquot
