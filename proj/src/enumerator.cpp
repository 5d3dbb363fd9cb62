#include "braidquot/enumerator.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace braidquot {

namespace {

using Coset = std::uint32_t;
constexpr Coset undefined = 0;

int column(Letter x)
{ return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0); }

int inverse_column(int col) { return col ^ 1; }

std::vector<int> to_columns(Word const &w)
{
  std::vector<int> cols;
  cols.reserve(w.size());
  for (Letter x : w)
    cols.push_back(column(x));
  return cols;
}

// Lookahead passes reclaim dead rows when the table fills up. A pass that
// frees less than this fraction of the table ends the run.
constexpr std::size_t min_reclaim_divisor = 10;
constexpr int max_reclaim_passes = 12;

class Engine {
public:
  Engine(Presentation const &p, std::span<Word const> subgroup,
         EnumerationOptions const &options)
  : _ncols(2 * p.generator_count()),
    _cap(options.max_cosets),
    _felsch(options.strategy == Strategy::felsch),
    _verify(options.verify_after_merge),
    _strategy(options.strategy)
  {
    for (auto const &r : p.relators()) {
      if (!r.empty())
        _relators.push_back(to_columns(r));
    }
    for (auto const &w : subgroup)
      _subgroup.push_back(to_columns(free_reduce(w)));
    if (_felsch)
      build_conjugate_index();

    reserve_rows(std::min<std::size_t>(_cap, 1024));
    _parent[1] = 1;
    _next = 2;
    _live = 1;
    _peak = 1;
    _defined = 1;
  }

  EnumerationResult run()
  {
    bool finished = _felsch ? run_felsch() : run_hlt();
    Coset cursor = 1;
    compact(cursor);

    EnumerationResult result;
    result.strategy = _strategy;
    result.max_cosets = _cap;
    result.peak_live_cosets = _peak;
    result.total_defined = _defined;

    Coset rows = _next - 1;
    if (finished) {
      verify_complete();
      result.outcome = Outcome::finite;
      result.index = rows;
    }
    std::vector<std::uint32_t> entries(
        _table.begin() + _ncols,
        _table.begin() + static_cast<std::ptrdiff_t>((rows + 1) * _ncols));
    _table.clear();
    _table.shrink_to_fit();
    result.table = CosetTable(_ncols / 2, rows, std::move(entries), finished);
    return result;
  }

private:
  // ---- storage --------------------------------------------------------

  std::uint32_t &at(Coset c, int col)
  { return _table[static_cast<std::size_t>(c) * _ncols + col]; }

  void reserve_rows(std::size_t rows)
  {
    // row 0 is a sentinel so cosets index rows directly
    std::size_t want = rows + 1;
    if (_parent.size() >= want)
      return;
    _parent.resize(want, 0);
    _table.resize(want * static_cast<std::size_t>(_ncols), undefined);
  }

  bool live(Coset c) const { return _parent[c] == c; }

  Coset rep(Coset c)
  {
    Coset root = c;
    while (_parent[root] != root)
      root = _parent[root];
    while (_parent[c] != root) {
      Coset next = _parent[c];
      _parent[c] = root;
      c = next;
    }
    return root;
  }

  // ---- primitive steps ------------------------------------------------

  bool define(Coset c, int col)
  {
    if (static_cast<std::size_t>(_next) > _cap)
      return false;
    if (_next >= _parent.size())
      reserve_rows(std::min(_cap, 2 * static_cast<std::size_t>(_next)));
    Coset d = _next++;
    _parent[d] = d;
    at(c, col) = d;
    at(d, inverse_column(col)) = c;
    ++_live;
    ++_defined;
    _peak = std::max(_peak, _live);
    if (_felsch)
      _deductions.push_back({c, col});
    return true;
  }

  void deduce(Coset c, int col, Coset d)
  {
    at(c, col) = d;
    at(d, inverse_column(col)) = c;
    if (_felsch)
      _deductions.push_back({c, col});
  }

  void merge(Coset k, Coset l)
  {
    k = rep(k);
    l = rep(l);
    if (k == l)
      return;
    Coset lo = std::min(k, l);
    Coset hi = std::max(k, l);
    _parent[hi] = lo;
    _merge_queue.push_back(hi);
  }

  void coincidence(Coset a, Coset b)
  {
    if (a == b)
      return;
    _merge_queue.clear();
    merge(a, b);
    for (std::size_t i = 0; i < _merge_queue.size(); ++i) {
      Coset e = _merge_queue[i];
      for (int x = 0; x < _ncols; ++x) {
        Coset f = at(e, x);
        if (f == undefined)
          continue;
        int xi = inverse_column(x);
        at(f, xi) = undefined;
        Coset e1 = rep(e);
        Coset f1 = rep(f);
        if (at(e1, x) != undefined)
          merge(f1, at(e1, x));
        else if (at(f1, xi) != undefined)
          merge(e1, at(f1, xi));
        else
          deduce(e1, x, f1);
      }
    }
    _live -= _merge_queue.size();
    if (_verify)
      check_consistency();
  }

  void check_consistency()
  {
    for (Coset c = 1; c < _next; ++c) {
      if (!live(c))
        continue;
      for (int x = 0; x < _ncols; ++x) {
        Coset d = at(c, x);
        if (d == undefined)
          continue;
        if (!live(d) || at(d, inverse_column(x)) != c)
          throw std::logic_error("coset table inconsistent after coincidence");
      }
    }
  }

  enum class Scan { ok, no_space };

  // Traces w from a in both directions, defining new cosets until the gap
  // closes.
  Scan scan_and_fill(Coset a, std::vector<int> const &w)
  {
    Coset f = a;
    Coset b = a;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != undefined)
        f = at(f, w[i++]);
      if (i > j) {
        coincidence(f, b);
        return Scan::ok;
      }
      while (j >= i && at(b, inverse_column(w[j])) != undefined)
        b = at(b, inverse_column(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return Scan::ok;
      }
      if (i == j) {
        deduce(f, w[i], b);
        return Scan::ok;
      }
      if (!define(f, w[i]))
        return Scan::no_space;
    }
  }

  // Same trace without definitions: closes a gap of one letter or records a
  // coincidence.
  void scan(Coset a, std::vector<int> const &w)
  {
    Coset f = a;
    Coset b = a;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (i <= j && at(f, w[i]) != undefined)
      f = at(f, w[i++]);
    if (i > j) {
      coincidence(f, b);
      return;
    }
    while (j >= i && at(b, inverse_column(w[j])) != undefined)
      b = at(b, inverse_column(w[j--]));
    if (j < i)
      coincidence(f, b);
    else if (i == j)
      deduce(f, w[i], b);
  }

  // ---- space management -----------------------------------------------

  void compact(Coset &cursor)
  {
    std::vector<Coset> renumber(_next, undefined);
    Coset count = 0;
    for (Coset c = 1; c < _next; ++c) {
      if (live(c))
        renumber[c] = ++count;
    }
    for (Coset c = 1; c < _next; ++c) {
      if (!live(c))
        continue;
      Coset dst = renumber[c];
      for (int x = 0; x < _ncols; ++x) {
        Coset e = at(c, x);
        at(dst, x) = e == undefined ? undefined : renumber[rep(e)];
      }
    }

    Coset new_cursor = count + 1;
    for (Coset c = cursor; c < _next; ++c) {
      if (live(c)) {
        new_cursor = renumber[c];
        break;
      }
    }
    cursor = new_cursor;

    std::vector<std::pair<Coset, int>> kept;
    for (auto [c, x] : _deductions) {
      if (c < _next && live(c))
        kept.push_back({renumber[c], x});
    }
    _deductions = std::move(kept);

    for (Coset c = 1; c <= count; ++c)
      _parent[c] = c;
    std::fill(_table.begin() + static_cast<std::ptrdiff_t>((count + 1) * _ncols),
              _table.begin() + static_cast<std::ptrdiff_t>(_next) * _ncols,
              undefined);
    _next = count + 1;
  }

  // Lookahead over every live coset, then compaction. False when too little
  // room was recovered to continue.
  bool recover_space(Coset &cursor)
  {
    if (++_reclaim_passes > max_reclaim_passes)
      return false;
    Coset before = _next - 1;
    for (Coset c = 1; c < _next; ++c) {
      for (auto const &r : _relators) {
        if (!live(c))
          break;
        scan(c, r);
      }
    }
    if (_felsch)
      process_deductions();
    compact(cursor);
    std::size_t freed = before - (_next - 1);
    return freed >= std::max<std::size_t>(1, _cap / min_reclaim_divisor);
  }

  // ---- HLT --------------------------------------------------------------

  bool fill_subgroup(Coset &cursor)
  {
    for (std::size_t k = 0; k < _subgroup.size();) {
      if (scan_and_fill(1, _subgroup[k]) == Scan::no_space) {
        if (!recover_space(cursor))
          return false;
        continue;
      }
      if (_felsch)
        process_deductions();
      ++k;
    }
    return true;
  }

  bool run_hlt()
  {
    Coset c = 1;
    if (!fill_subgroup(c))
      return false;
    c = 1;
    while (c < _next) {
      bool out_of_space = false;
      for (auto const &r : _relators) {
        if (!live(c))
          break;
        if (scan_and_fill(c, r) == Scan::no_space) {
          out_of_space = true;
          break;
        }
      }
      for (int x = 0; !out_of_space && x < _ncols; ++x) {
        if (!live(c))
          break;
        if (at(c, x) == undefined && !define(c, x))
          out_of_space = true;
      }
      if (out_of_space) {
        if (!recover_space(c))
          return false;
        continue;  // rescan the (renumbered) current coset
      }
      ++c;
    }
    return true;
  }

  // ---- Felsch -----------------------------------------------------------

  void build_conjugate_index()
  {
    _conjugates.assign(static_cast<std::size_t>(_ncols), {});
    for (auto const &r : _relators) {
      std::vector<int> const inv = [&r] {
        std::vector<int> v(r.rbegin(), r.rend());
        for (auto &x : v)
          x = inverse_column(x);
        return v;
      }();
      for (auto const *w : {&r, &inv}) {
        for (std::size_t s = 0; s < w->size(); ++s) {
          std::vector<int> rot(w->begin() + static_cast<std::ptrdiff_t>(s), w->end());
          rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(s));
          auto &bucket = _conjugates[static_cast<std::size_t>(rot.front())];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
            bucket.push_back(std::move(rot));
        }
      }
    }
  }

  void process_deductions()
  {
    while (!_deductions.empty()) {
      auto [c, x] = _deductions.back();
      _deductions.pop_back();
      if (!live(c))
        continue;
      for (auto const &w : _conjugates[static_cast<std::size_t>(x)]) {
        if (!live(c))
          break;
        scan(c, w);
      }
      if (!live(c))
        continue;
      Coset d = at(c, x);
      if (d == undefined)
        continue;
      for (auto const &w : _conjugates[static_cast<std::size_t>(inverse_column(x))]) {
        if (!live(d))
          break;
        scan(d, w);
      }
    }
  }

  bool run_felsch()
  {
    Coset c = 1;
    if (!fill_subgroup(c))
      return false;
    c = 1;
    for (;;) {
      while (c < _next && !has_gap(c))
        ++c;
      if (c >= _next) {
        // coincidences may have reopened rows behind the cursor
        c = first_gap();
        if (c >= _next)
          return true;
      }
      int x = 0;
      while (at(c, x) != undefined)
        ++x;
      if (!define(c, x)) {
        if (!recover_space(c))
          return false;
        continue;
      }
      process_deductions();
    }
  }

  bool has_gap(Coset c)
  {
    if (!live(c))
      return false;
    for (int x = 0; x < _ncols; ++x) {
      if (at(c, x) == undefined)
        return true;
    }
    return false;
  }

  Coset first_gap()
  {
    Coset c = 1;
    while (c < _next && !has_gap(c))
      ++c;
    return c;
  }

  // ---- completion -------------------------------------------------------

  // Runs on the compacted table of a finished enumeration.
  void verify_complete()
  {
    Coset rows = _next - 1;
    for (Coset c = 1; c <= rows; ++c) {
      for (int x = 0; x < _ncols; ++x) {
        Coset d = at(c, x);
        if (d == undefined || at(d, inverse_column(x)) != c)
          throw std::logic_error("finished coset table is not complete");
      }
      for (auto const &r : _relators) {
        Coset e = c;
        for (int x : r)
          e = at(e, x);
        if (e != c)
          throw std::logic_error("relator does not close in finished table");
      }
    }
    for (auto const &w : _subgroup) {
      Coset e = 1;
      for (int x : w)
        e = at(e, x);
      if (e != 1)
        throw std::logic_error("subgroup generator does not fix coset 1");
    }
  }

  int _ncols;
  std::size_t _cap;
  bool _felsch;
  bool _verify;
  Strategy _strategy;

  std::vector<std::vector<int>> _relators;
  std::vector<std::vector<int>> _subgroup;
  std::vector<std::vector<std::vector<int>>> _conjugates;  // by first column

  std::vector<std::uint32_t> _table;
  std::vector<Coset> _parent;
  std::vector<Coset> _merge_queue;
  std::vector<std::pair<Coset, int>> _deductions;
  Coset _next = 1;
  std::size_t _live = 0;
  std::size_t _peak = 0;
  std::size_t _defined = 0;
  int _reclaim_passes = 0;
};

} // namespace

std::string to_string(Strategy s)
{ return s == Strategy::hlt ? "hlt" : "felsch"; }

Strategy strategy_from_string(std::string const &s)
{
  if (s == "hlt")
    return Strategy::hlt;
  if (s == "felsch")
    return Strategy::felsch;
  throw std::invalid_argument("unknown strategy: " + s);
}

std::string to_string(Outcome o)
{ return o == Outcome::finite ? "finite" : "inconclusive"; }

CosetTable::CosetTable(int generator_count, std::uint32_t size,
                       std::vector<std::uint32_t> entries, bool complete)
: _generators(generator_count),
  _size(size),
  _entries(std::move(entries)),
  _complete(complete)
{
  if (_entries.size() != static_cast<std::size_t>(size) * 2 * generator_count)
    throw std::invalid_argument("coset table entry count mismatch");
}

std::uint32_t CosetTable::image(std::uint32_t coset, Letter x) const
{
  if (coset < 1 || coset > _size)
    throw std::out_of_range("coset outside table");
  if (x == 0 || std::abs(x) > _generators)
    throw std::invalid_argument("letter outside generator range");
  return _entries[static_cast<std::size_t>(coset - 1) * 2 * _generators +
                  column(x)];
}

std::uint32_t CosetTable::trace(std::uint32_t coset, Word const &w) const
{
  for (Letter x : w) {
    coset = image(coset, x);
    if (coset == undefined)
      return undefined;
  }
  return coset;
}

bool CosetTable::is_consistent() const
{
  auto cols = 2 * _generators;
  for (std::uint32_t c = 1; c <= _size; ++c) {
    for (int x = 0; x < cols; ++x) {
      auto d = _entries[static_cast<std::size_t>(c - 1) * cols + x];
      if (d == undefined)
        continue;
      if (d > _size ||
          _entries[static_cast<std::size_t>(d - 1) * cols + inverse_column(x)] != c)
        return false;
    }
  }
  return true;
}

EnumerationResult enumerate(Presentation const &p, std::span<Word const> subgroup,
                            EnumerationOptions const &options)
{
  if (options.max_cosets == 0)
    throw std::invalid_argument("max_cosets must be at least 1");
  if (options.max_cosets >= UINT32_MAX / 2)
    throw std::invalid_argument("max_cosets too large");
  for (auto const &w : subgroup)
    p.check_word(w);
  return Engine(p, subgroup, options).run();
}

std::vector<Permutation> permutation_representation(CosetTable const &t)
{
  if (!t.complete())
    throw std::invalid_argument("permutation representation needs a complete table");
  std::vector<Permutation> perms;
  for (int g = 1; g <= t.generator_count(); ++g) {
    std::vector<std::uint32_t> images(t.size());
    for (std::uint32_t c = 1; c <= t.size(); ++c)
      images[c - 1] = t.image(c, g) - 1;
    perms.emplace_back(std::move(images));
  }
  return perms;
}

Permutation word_permutation(CosetTable const &t, Word const &w)
{
  if (!t.complete())
    throw std::invalid_argument("word permutation needs a complete table");
  std::vector<std::uint32_t> images(t.size());
  for (std::uint32_t c = 1; c <= t.size(); ++c)
    images[c - 1] = t.trace(c, w) - 1;
  return Permutation(std::move(images));
}

std::uint64_t element_order(CosetTable const &t, Word const &w)
{ return word_permutation(t, w).order(); }

std::string to_json(EnumerationResult const &r)
{
  nlohmann::ordered_json doc;
  doc["outcome"] = to_string(r.outcome);
  if (r.finite())
    doc["index"] = r.index;
  doc["peak"] = r.peak_live_cosets;
  doc["strategy"] = to_string(r.strategy);
  return doc.dump();
}

} // namespace braidquot
