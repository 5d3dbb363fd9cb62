#ifndef BRAIDQUOT_ABELIANIZER_HPP
#define BRAIDQUOT_ABELIANIZER_HPP

#include "braidquot/abelian_invariants.hpp"
#include "braidquot/integer_matrix.hpp"
#include "braidquot/presentation.hpp"

namespace braidquot {

/// U * A * V = D with U, V unimodular and D diagonal, non-negative, and each
/// diagonal entry dividing the next.
struct SmithDecomposition {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;
};

// Pivot is the nonzero entry of least absolute value in the remaining block,
// ties broken by lowest row, then lowest column.
SmithDecomposition smith_normal_form(IntegerMatrix const &a);

// One row per relator, one column per generator, entries are exponent sums.
IntegerMatrix relation_matrix(Presentation const &p);

AbelianInvariants abelian_invariants(Presentation const &p);

// Invariants of Z^cols / rowspace(m).
AbelianInvariants abelian_invariants(IntegerMatrix const &m);

// True proves the group infinite (positive free rank); false says nothing.
bool certify_infinite(Presentation const &p);

} // namespace braidquot

#endif // BRAIDQUOT_ABELIANIZER_HPP
