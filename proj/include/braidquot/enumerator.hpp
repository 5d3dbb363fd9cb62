#ifndef BRAIDQUOT_ENUMERATOR_HPP
#define BRAIDQUOT_ENUMERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "braidquot/permutation.hpp"
#include "braidquot/presentation.hpp"

namespace braidquot {

enum class Strategy { hlt, felsch };
enum class Outcome { finite, inconclusive };

std::string to_string(Strategy s);
Strategy strategy_from_string(std::string const &s);  // throws on unknown
std::string to_string(Outcome o);

inline constexpr std::size_t default_max_cosets = 5'000'000;

struct EnumerationOptions {
  // Upper bound on table rows held at once, live or awaiting compaction.
  std::size_t max_cosets = default_max_cosets;
  Strategy strategy = Strategy::hlt;
  // Re-check table consistency after every coincidence; O(table) per check,
  // meant for tests on small groups. A violation throws std::logic_error.
  bool verify_after_merge = false;
};

/// Action of the generators and their inverses on cosets 1..size().
///
/// Coset 1 is the subgroup itself. Entries are coset numbers, 0 when
/// undefined. Column 2(g-1) holds generator g, column 2(g-1)+1 its inverse.
class CosetTable {
public:
  CosetTable() = default;
  CosetTable(int generator_count, std::uint32_t size,
             std::vector<std::uint32_t> entries, bool complete);

  int generator_count() const noexcept { return _generators; }
  std::uint32_t size() const noexcept { return _size; }
  bool complete() const noexcept { return _complete; }

  // Image of a 1-based coset under a letter, 0 if undefined.
  std::uint32_t image(std::uint32_t coset, Letter x) const;

  // Image under a word, 0 as soon as an entry is undefined.
  std::uint32_t trace(std::uint32_t coset, Word const &w) const;

  // entry(c, x) = d implies entry(d, x^-1) = c for every defined entry.
  bool is_consistent() const;

private:
  int _generators = 0;
  std::uint32_t _size = 0;
  std::vector<std::uint32_t> _entries;  // row-major, (coset-1) * 2 * gens
  bool _complete = false;
};

struct EnumerationResult {
  Outcome outcome = Outcome::inconclusive;
  std::uint64_t index = 0;  // meaningful when finite
  CosetTable table;
  std::size_t peak_live_cosets = 0;
  std::size_t total_defined = 0;
  Strategy strategy = Strategy::hlt;
  std::size_t max_cosets = 0;

  bool finite() const noexcept { return outcome == Outcome::finite; }
};

// Todd-Coxeter enumeration of the cosets of <subgroup> in the group presented
// by p. Reaching max_cosets is reported as Outcome::inconclusive, never as an
// exception. Throws std::invalid_argument for words over unknown generators
// or max_cosets == 0. Deterministic for a fixed input and strategy.
EnumerationResult enumerate(Presentation const &p,
                            std::span<Word const> subgroup = {},
                            EnumerationOptions const &options = {});

// Coset action of each generator. Throws std::invalid_argument on an
// incomplete table.
std::vector<Permutation> permutation_representation(CosetTable const &t);

// Image of w in the coset action.
Permutation word_permutation(CosetTable const &t, Word const &w);

// Order of w, assuming t is the table of the trivial subgroup (regular action).
std::uint64_t element_order(CosetTable const &t, Word const &w);

// {"outcome":...,"index":...,"peak":...,"strategy":...}; index only if finite.
std::string to_json(EnumerationResult const &r);

} // namespace braidquot

#endif // BRAIDQUOT_ENUMERATOR_HPP
