#ifndef BRAIDQUOT_PRESENTATION_HPP
#define BRAIDQUOT_PRESENTATION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidquot/permutation.hpp"
#include "braidquot/word.hpp"

namespace braidquot {

struct GeneratorSymbol {
  int index;  // 1-based
  std::string display_name;

  friend bool operator==(GeneratorSymbol const &,
                         GeneratorSymbol const &) = default;
};

/// A finite presentation <generators | relators>.
///
/// Relators are freely and cyclically reduced on construction, which does
/// not change the normal closure they generate. Empty relators are kept so
/// that relator counts follow the builder schemas.
class Presentation {
public:
  Presentation() = default;

  // Throws std::invalid_argument on duplicate or empty generator names and
  // on relator letters outside 1..generator_count ("unknown generator").
  Presentation(std::string label, std::vector<std::string> generator_names,
               std::vector<Word> relators);

  std::string const &label() const noexcept { return _label; }
  std::vector<GeneratorSymbol> const &generators() const noexcept
  { return _generators; }
  std::vector<Word> const &relators() const noexcept { return _relators; }

  int generator_count() const noexcept
  { return static_cast<int>(_generators.size()); }

  // 1-based index of the generator with this display name.
  std::optional<int> generator_index(std::string const &name) const;

  // Throws if some letter of w references an undeclared generator.
  void check_word(Word const &w) const;

  Presentation relabelled(std::string label) const;

  friend bool operator==(Presentation const &, Presentation const &) = default;

private:
  std::string _label;
  std::vector<GeneratorSymbol> _generators;
  std::vector<Word> _relators;
};

// Same generators, relators extended by `extra`. Presents the quotient by the
// normal closure of `extra`.
Presentation quotient_by_normal_closure(Presentation const &p,
                                        std::span<Word const> extra);

// Image in S_n of a braid word over s1..s(n-1): s_i maps to (i i+1), letters
// applied left to right.
Permutation braid_permutation(Word const &w, int strands);

} // namespace braidquot

#endif // BRAIDQUOT_PRESENTATION_HPP
