#include "braidquot/identify.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "braidquot/abelianizer.hpp"
#include "braidquot/catalog.hpp"

namespace braidquot {

namespace {

std::vector<KnownGroup> make_table()
{
  auto fixed = [](std::string s) {
    return [s](Fingerprint const &) { return s; };
  };
  std::vector<KnownGroup> t;
  t.push_back({"trivial", "the only group of order 1",
               [](Fingerprint const &f) { return f.order == 1; },
               fixed("trivial")});
  t.push_back({"Z2", "the only group of order 2",
               [](Fingerprint const &f) { return f.order == 2; }, fixed("Z2")});
  t.push_back({"Z_n",
               "an abelian group equals its abelianization; a single invariant "
               "factor equal to the order means cyclic",
               [](Fingerprint const &f) {
                 return f.order >= 3 && f.is_abelian &&
                        f.abelianization.free_rank == 0 &&
                        f.abelianization.torsion ==
                            std::vector<std::int64_t>{static_cast<std::int64_t>(f.order)};
               },
               [](Fingerprint const &f) { return "Z" + std::to_string(f.order); }});
  t.push_back({"S3", "the only non-abelian group of order 6",
               [](Fingerprint const &f) {
                 return f.order == 6 && !f.is_abelian &&
                        f.abelianization == AbelianInvariants{0, {2}};
               },
               fixed("S3")});
  t.push_back({"A4",
               "of the five groups of order 12 only A4 has abelianization Z3 "
               "(Z12, Z2xZ6 abelian; D12 has Z2xZ2; Z3:Z4 has Z4)",
               [](Fingerprint const &f) {
                 return f.order == 12 && !f.is_abelian &&
                        f.abelianization == AbelianInvariants{0, {3}};
               },
               fixed("A4")});
  t.push_back({"A5", "the only perfect group of order 60",
               [](Fingerprint const &f) { return f.order == 60 && f.is_perfect(); },
               fixed("A5")});
  return t;
}

bool generators_commute(CosetTable const &t)
{
  auto perms = permutation_representation(t);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      if (!(perms[i] * perms[j] == perms[j] * perms[i]))
        return false;
    }
  }
  return true;
}

} // namespace

std::vector<KnownGroup> const &known_groups()
{
  static std::vector<KnownGroup> const table = make_table();
  return table;
}

std::optional<Identification> identify(Fingerprint const &fp)
{
  std::optional<Identification> found;
  for (auto const &entry : known_groups()) {
    if (!entry.matches(fp))
      continue;
    if (found)
      throw std::logic_error("fingerprint matches two table entries");
    found = Identification{entry.name(fp), entry.justification};
  }
  return found;
}

StructureReport analyze(Presentation const &p, EnumerationOptions const &budget)
{
  StructureReport r;
  r.label = p.label();
  r.abelian_invariants = abelian_invariants(p);
  r.is_perfect = r.abelian_invariants.is_trivial();

  auto e = enumerate(p, {}, budget);
  std::ostringstream ev;
  if (!e.finite()) {
    ev << "enumeration inconclusive at " << e.max_cosets << " cosets ("
       << to_string(e.strategy) << ")";
    if (r.abelian_invariants.free_rank > 0)
      ev << "; positive free rank of the abelianization proves the group infinite";
    r.evidence = ev.str();
    return r;
  }

  r.order = e.index;
  r.is_abelian = generators_commute(e.table);
  ev << "order " << e.index << " by " << to_string(e.strategy)
     << " enumeration; abelianization " << to_string(r.abelian_invariants)
     << "; generator images " << (*r.is_abelian ? "commute" : "do not commute");

  Fingerprint fp{e.index, r.abelian_invariants, *r.is_abelian};
  if (auto id = identify(fp)) {
    r.identified_name = id->name;
    ev << "; identified as " << id->name << ": " << id->justification;
  } else {
    ev << "; fingerprint not in table, left unnamed";
  }
  r.evidence = ev.str();
  return r;
}

std::string to_json(StructureReport const &r)
{
  nlohmann::ordered_json doc;
  doc["label"] = r.label;
  if (r.order)
    doc["order"] = *r.order;
  else
    doc["order"] = "inconclusive";
  doc["abelian_invariants"] = {{"free_rank", r.abelian_invariants.free_rank},
                               {"torsion", r.abelian_invariants.torsion}};
  if (r.is_abelian)
    doc["is_abelian"] = *r.is_abelian;
  else
    doc["is_abelian"] = nullptr;
  doc["is_perfect"] = r.is_perfect;
  if (r.identified_name)
    doc["identified_name"] = *r.identified_name;
  else
    doc["identified_name"] = nullptr;
  doc["evidence"] = r.evidence;
  return doc.dump();
}

SphereThreeStrandCheck check_sphere3_quotient(int q, EnumerationOptions const &budget)
{
  if (q < 3)
    throw std::invalid_argument("check_sphere3_quotient needs q >= 3");
  SphereThreeStrandCheck c;
  c.q = q;
  c.report = analyze(catalog::coxeter_quotient(catalog::sphere_braid(3), q), budget);
  switch (std::gcd(4, q)) {
  case 4:
    c.expected = "order 12";
    c.holds = c.report.order == 12u;
    break;
  case 2:
    c.expected = "S3";
    c.holds = c.report.identified_name == "S3";
    break;
  default:
    c.expected = "trivial";
    c.holds = c.report.identified_name == "trivial";
    break;
  }
  return c;
}

} // namespace braidquot
