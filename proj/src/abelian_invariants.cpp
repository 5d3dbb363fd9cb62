#include "braidquot/abelian_invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace braidquot {

AbelianInvariants
AbelianInvariants::from_cyclic_factors(std::span<std::int64_t const> orders)
{
  AbelianInvariants inv;
  // prime -> exponents of the prime-power parts, one per factor
  std::map<std::int64_t, std::vector<int>> primary;

  for (auto c : orders) {
    if (c < 0)
      throw std::invalid_argument("cyclic order must be non-negative");
    if (c == 0) {
      ++inv.free_rank;
      continue;
    }
    for (std::int64_t p = 2; p * p <= c; ++p) {
      int e = 0;
      while (c % p == 0) {
        c /= p;
        ++e;
      }
      if (e > 0)
        primary[p].push_back(e);
    }
    if (c > 1)
      primary[c].push_back(1);
  }

  std::size_t len = 0;
  for (auto &[p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    len = std::max(len, exps.size());
  }

  // t_len is the product of the largest prime powers, t_(len-1) the next, ...
  inv.torsion.assign(len, 1);
  for (auto const &[p, exps] : primary) {
    for (std::size_t k = 0; k < exps.size(); ++k) {
      std::int64_t pe = 1;
      for (int i = 0; i < exps[k]; ++i)
        pe *= p;
      inv.torsion[len - 1 - k] *= pe;
    }
  }
  return inv;
}

void AbelianInvariants::validate() const
{
  if (free_rank < 0)
    throw std::invalid_argument("negative free rank");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      throw std::invalid_argument("torsion coefficient below 2");
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
      throw std::invalid_argument("torsion coefficients do not form a chain");
  }
}

std::string to_string(AbelianInvariants const &inv)
{
  if (inv.is_trivial())
    return "0";
  std::ostringstream ss;
  bool first = true;
  if (inv.free_rank > 0) {
    ss << "Z";
    if (inv.free_rank > 1)
      ss << '^' << inv.free_rank;
    first = false;
  }
  for (auto t : inv.torsion) {
    ss << (first ? "" : " + ") << "Z_" << t;
    first = false;
  }
  return ss.str();
}

std::string to_json(AbelianInvariants const &inv)
{
  nlohmann::ordered_json doc;
  doc["free_rank"] = inv.free_rank;
  doc["torsion"] = inv.torsion;
  return doc.dump();
}

} // namespace braidquot
