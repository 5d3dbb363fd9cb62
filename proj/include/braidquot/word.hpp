#ifndef BRAIDQUOT_WORD_HPP
#define BRAIDQUOT_WORD_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace braidquot {

// A letter is a signed 1-based generator reference: +g is the generator,
// -g its inverse. Zero is never a valid letter.
using Letter = int;

/// A word in the free group on the generators of a presentation.
///
/// Words are plain values. Construction does not reduce; use free_reduce()
/// when a canonical representative is needed.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::span<Letter const> letters() const noexcept { return _letters; }
  std::size_t size() const noexcept { return _letters.size(); }
  bool empty() const noexcept { return _letters.empty(); }
  Letter operator[](std::size_t i) const { return _letters[i]; }

  auto begin() const noexcept { return _letters.begin(); }
  auto end() const noexcept { return _letters.end(); }

  // Largest |letter|, 0 for the empty word.
  int max_generator() const noexcept;

  friend bool operator==(Word const &, Word const &) = default;
  friend auto operator<=>(Word const &, Word const &) = default;

private:
  std::vector<Letter> _letters;
};

// Concatenation without reduction.
Word operator*(Word const &lhs, Word const &rhs);

Word free_reduce(Word const &w);
Word invert(Word const &w);

// free_reduce(by * w * by^-1)
Word conjugate(Word const &w, Word const &by);

// Strips matching first/last inverse pairs. Expects a freely reduced word.
Word cyclically_reduce(Word const &w);

// w^k for any integer k, freely reduced.
Word power(Word const &w, int k);

// [u, v] = u v u^-1 v^-1, freely reduced.
Word commutator(Word const &u, Word const &v);

bool is_freely_reduced(Word const &w) noexcept;

// Letters as "[1, -2, 3]".
std::string to_string(Word const &w);

} // namespace braidquot

#endif // BRAIDQUOT_WORD_HPP
