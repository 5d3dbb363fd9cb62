#ifndef BRAIDQUOT_SUITE_HPP
#define BRAIDQUOT_SUITE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "braidquot/enumerator.hpp"

// The reproduction battery behind `braidquot paper-suite`: every published
// order, abelianization and finiteness claim checked against the engines.
namespace braidquot::suite {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct CheckRecord {
  std::string claim_id;
  std::string anchor;      // the mathematical statement being checked
  std::string basis;       // "stated", "derived" or "elementary"
  std::string parameters;
  std::string expected;
  std::string observed;
  Status status = Status::fail;
  // Set on inconclusive records whose claim is infiniteness: enumeration
  // cannot prove it, so these do not count against the run.
  bool infinite_by_design = false;
  std::string note;
  long long runtime_ms = 0;
};

struct Options {
  std::size_t max_cosets = default_max_cosets;
  Strategy strategy = Strategy::hlt;
};

struct Report {
  std::vector<CheckRecord> records;  // sorted by claim_id

  std::size_t count(Status s) const;
  // Inconclusive records that were expected to finish.
  std::size_t unexpected_inconclusive() const;
  // 0 all good, 1 some record failed, 2 only unexpected inconclusives.
  int exit_code() const;
};

Report run(Options const &options);

std::string to_json(Report const &r, bool with_timings);
std::string to_markdown(Report const &r, bool with_timings);

} // namespace braidquot::suite

#endif // BRAIDQUOT_SUITE_HPP
