#include "braidquot/abelianizer.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace braidquot {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> find_pivot(IntegerMatrix const &d, std::size_t t)
{
  std::optional<Position> best;
  mpz_class best_abs;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0)
        continue;
      mpz_class v = abs(d(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = v;
      }
    }
  }
  return best;
}

// Clears column t below and row t right of the pivot using quotient steps.
// Returns true when both are zero afterwards.
bool eliminate(SmithDecomposition &s, std::size_t t)
{
  auto &d = s.D;
  mpz_class const pivot = d(t, t);
  bool clean = true;
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    if (d(i, t) == 0)
      continue;
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), pivot.get_mpz_t());
    d.add_row_multiple(i, t, -q);
    s.U.add_row_multiple(i, t, -q);
    clean = clean && d(i, t) == 0;
  }
  for (std::size_t j = t + 1; j < d.cols(); ++j) {
    if (d(t, j) == 0)
      continue;
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), pivot.get_mpz_t());
    d.add_col_multiple(j, t, -q);
    s.V.add_col_multiple(j, t, -q);
    clean = clean && d(t, j) == 0;
  }
  return clean;
}

std::optional<std::size_t> row_not_divisible(IntegerMatrix const &d, std::size_t t)
{
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t()))
        return i;
    }
  }
  return std::nullopt;
}

} // namespace

SmithDecomposition smith_normal_form(IntegerMatrix const &a)
{
  SmithDecomposition s{a, IntegerMatrix::identity(a.rows()),
                       IntegerMatrix::identity(a.cols())};
  auto &d = s.D;
  std::size_t const steps = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = find_pivot(d, t);
      if (!pivot)
        return s;  // remaining block is zero
      d.swap_rows(t, pivot->row);
      s.U.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      s.V.swap_cols(t, pivot->col);

      if (!eliminate(s, t))
        continue;
      if (auto i = row_not_divisible(d, t)) {
        d.add_row_multiple(t, *i, 1);
        s.U.add_row_multiple(t, *i, 1);
        continue;
      }
      break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntegerMatrix relation_matrix(Presentation const &p)
{
  auto const &rels = p.relators();
  IntegerMatrix m(rels.size(), static_cast<std::size_t>(p.generator_count()));
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (Letter x : rels[r])
      m(r, static_cast<std::size_t>(std::abs(x) - 1)) += x > 0 ? 1 : -1;
  }
  return m;
}

AbelianInvariants abelian_invariants(IntegerMatrix const &m)
{
  auto s = smith_normal_form(m);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    mpz_class const &v = s.D(t, t);
    if (v == 0)
      continue;
    ++nonzero;
    if (v == 1)
      continue;
    if (!v.fits_slong_p())
      throw std::overflow_error("torsion coefficient exceeds 64 bits");
    inv.torsion.push_back(v.get_si());
  }
  inv.free_rank = static_cast<int>(m.cols() - nonzero);
  return inv;
}

AbelianInvariants abelian_invariants(Presentation const &p)
{ return abelian_invariants(relation_matrix(p)); }

bool certify_infinite(Presentation const &p)
{ return abelian_invariants(p).free_rank > 0; }

} // namespace braidquot
