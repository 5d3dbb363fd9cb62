#ifndef BRAIDQUOT_ABELIAN_INVARIANTS_HPP
#define BRAIDQUOT_ABELIAN_INVARIANTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace braidquot {

/// Z^free_rank + Z_t1 + ... + Z_tk with every t >= 2 and t_i | t_(i+1).
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }

  // Normalizes a direct sum of cyclic groups Z_c (c = 0 meaning Z) into
  // invariant-factor form. Uses prime-power splitting, not matrix reduction.
  static AbelianInvariants from_cyclic_factors(std::span<std::int64_t const> orders);

  // Throws std::invalid_argument when the chain or range invariants fail.
  void validate() const;

  friend bool operator==(AbelianInvariants const &,
                         AbelianInvariants const &) = default;
};

// "Z^2 + Z_2 + Z_4", "Z_3", "0".
std::string to_string(AbelianInvariants const &inv);

// {"free_rank":r,"torsion":[...]}
std::string to_json(AbelianInvariants const &inv);

} // namespace braidquot

#endif // BRAIDQUOT_ABELIAN_INVARIANTS_HPP
