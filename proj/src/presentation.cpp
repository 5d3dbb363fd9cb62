#include "braidquot/presentation.hpp"

#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace braidquot {

Presentation::Presentation(std::string label,
                           std::vector<std::string> generator_names,
                           std::vector<Word> relators)
: _label(std::move(label))
{
  std::unordered_set<std::string> seen;
  _generators.reserve(generator_names.size());
  for (auto &name : generator_names) {
    if (name.empty())
      throw std::invalid_argument("empty generator name");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate generator name: " + name);
    _generators.push_back(
        {static_cast<int>(_generators.size()) + 1, std::move(name)});
  }

  _relators.reserve(relators.size());
  for (auto const &r : relators) {
    check_word(r);
    _relators.push_back(cyclically_reduce(free_reduce(r)));
  }
}

std::optional<int> Presentation::generator_index(std::string const &name) const
{
  for (auto const &g : _generators) {
    if (g.display_name == name)
      return g.index;
  }
  return std::nullopt;
}

void Presentation::check_word(Word const &w) const
{
  if (w.max_generator() > generator_count())
    throw std::invalid_argument("unknown generator in word " + to_string(w));
}

Presentation Presentation::relabelled(std::string label) const
{
  Presentation p = *this;
  p._label = std::move(label);
  return p;
}

Presentation quotient_by_normal_closure(Presentation const &p,
                                        std::span<Word const> extra)
{
  std::vector<std::string> names;
  for (auto const &g : p.generators())
    names.push_back(g.display_name);

  std::vector<Word> relators = p.relators();
  relators.insert(relators.end(), extra.begin(), extra.end());
  return Presentation(p.label(), std::move(names), std::move(relators));
}

Permutation braid_permutation(Word const &w, int strands)
{
  if (strands < 1)
    throw std::invalid_argument("strand count must be positive");
  if (w.max_generator() >= strands)
    throw std::invalid_argument("generator index must be below strand count");

  auto n = static_cast<std::uint32_t>(strands);
  Permutation result(n);
  for (Letter x : w) {
    auto i = static_cast<std::uint32_t>(std::abs(x));
    result = result * Permutation::transposition(n, i, i + 1);
  }
  return result;
}

} // namespace braidquot
