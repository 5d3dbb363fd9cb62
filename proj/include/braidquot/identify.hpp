#ifndef BRAIDQUOT_IDENTIFY_HPP
#define BRAIDQUOT_IDENTIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidquot/abelian_invariants.hpp"
#include "braidquot/enumerator.hpp"
#include "braidquot/presentation.hpp"

namespace braidquot {

// What identification is allowed to look at.
struct Fingerprint {
  std::uint64_t order;
  AbelianInvariants abelianization;
  bool is_abelian;

  bool is_perfect() const noexcept { return abelianization.is_trivial(); }
};

struct KnownGroup {
  std::string key;            // table entry name, e.g. "A4" or "Z_n"
  std::string justification;  // why the fingerprint pins the group down
  std::function<bool(Fingerprint const &)> matches;
  std::function<std::string(Fingerprint const &)> name;
};

// Fixed lookup table. Entries have pairwise disjoint match sets.
std::vector<KnownGroup> const &known_groups();

struct Identification {
  std::string name;
  std::string justification;
};

std::optional<Identification> identify(Fingerprint const &fp);

struct StructureReport {
  std::string label;
  std::optional<std::uint64_t> order;  // empty when enumeration was inconclusive
  AbelianInvariants abelian_invariants;
  std::optional<bool> is_abelian;      // needs a complete regular table
  bool is_perfect = false;
  std::optional<std::string> identified_name;
  std::string evidence;
};

// Enumerates the trivial subgroup within the given budget, abelianizes, and
// looks the fingerprint up in known_groups().
StructureReport analyze(Presentation const &p,
                        EnumerationOptions const &budget = {});

std::string to_json(StructureReport const &r);

// Quotient of the 3-strand sphere braid group by s1^q, checked against the
// gcd(4, q) classification: order 12 for gcd 4, S3 for gcd 2, trivial for 1.
struct SphereThreeStrandCheck {
  int q;
  StructureReport report;
  std::string expected;
  bool holds;
};

SphereThreeStrandCheck check_sphere3_quotient(int q,
                                              EnumerationOptions const &budget = {});

} // namespace braidquot

#endif // BRAIDQUOT_IDENTIFY_HPP
