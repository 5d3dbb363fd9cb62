#include "braidquot/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "braidquot/abelianizer.hpp"
#include "braidquot/catalog.hpp"
#include "braidquot/identify.hpp"

namespace braidquot::suite {

namespace {

using namespace braidquot::catalog;

std::string const infinite = "infinite";
std::string const inconclusive = "INCONCLUSIVE";

class Battery {
public:
  explicit Battery(Options const &options)
  {
    _budget.max_cosets = options.max_cosets;
    _budget.strategy = options.strategy;
  }

  Report finish()
  {
    std::stable_sort(_records.begin(), _records.end(),
                     [](auto const &a, auto const &b) { return a.claim_id < b.claim_id; });
    return Report{std::move(_records)};
  }

  // Runs `observe`, which fills observed/status/note, and times it.
  void check(std::string id, std::string anchor, std::string basis,
             std::string params, std::string expected,
             std::function<void(CheckRecord &)> const &observe)
  {
    CheckRecord r;
    r.claim_id = std::move(id);
    r.anchor = std::move(anchor);
    r.basis = std::move(basis);
    r.parameters = std::move(params);
    r.expected = std::move(expected);
    auto t0 = std::chrono::steady_clock::now();
    observe(r);
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    _records.push_back(std::move(r));
  }

  // Exact comparison of expected and observed.
  void compare(std::string id, std::string anchor, std::string basis,
               std::string params, std::string expected,
               std::function<std::string(CheckRecord &)> const &observe)
  {
    check(std::move(id), std::move(anchor), std::move(basis), std::move(params),
          std::move(expected), [&](CheckRecord &r) {
            r.observed = observe(r);
            if (r.observed == inconclusive)
              r.status = Status::inconclusive;
            else
              r.status = r.observed == r.expected ? Status::pass : Status::fail;
          });
  }

  // Claim of infiniteness: finite enumeration refutes it, a cap is expected.
  void infinite_claim(std::string id, std::string anchor, std::string params,
                      Presentation const &p, std::string witness)
  {
    check(std::move(id), std::move(anchor), "stated", std::move(params), infinite,
          [&](CheckRecord &r) {
            auto e = enumerate(p, {}, _budget);
            if (e.finite()) {
              r.observed = "finite (" + std::to_string(e.index) + ")";
              r.status = Status::fail;
              return;
            }
            r.observed = inconclusive;
            r.status = Status::inconclusive;
            r.infinite_by_design = true;
            r.note = "cap of " + std::to_string(_budget.max_cosets) +
                     " cosets reached; enumeration cannot prove infiniteness; " +
                     witness;
          });
  }

  std::string order_of(Presentation const &p)
  {
    auto e = enumerate(p, {}, _budget);
    return e.finite() ? std::to_string(e.index) : inconclusive;
  }

  EnumerationOptions const &budget() const { return _budget; }

private:
  EnumerationOptions _budget;
  std::vector<CheckRecord> _records;
};

std::string nq(int n, int q)
{ return "n=" + std::to_string(n) + " q=" + std::to_string(q); }

std::string two(int v) { return v < 10 ? "0" + std::to_string(v) : std::to_string(v); }

std::string cyclic(std::int64_t d)
{ return to_string(AbelianInvariants::from_cyclic_factors(std::vector<std::int64_t>{d})); }

void coxeter_table(Battery &b)
{
  static int const types[][2] = {{3, 3}, {4, 3}, {3, 4}, {5, 3}, {3, 5}};
  static std::uint64_t const published[] = {24, 648, 96, 155520, 600};
  for (std::size_t k = 0; k < 5; ++k) {
    int n = types[k][0];
    int q = types[k][1];
    b.compare("coxeter-order-n" + std::to_string(n) + "-q" + std::to_string(q),
              "|B_n(q)| = (f/2)^(n-1) n! for the Platonic type (n,q)", "stated",
              nq(n, q), std::to_string(published[k]), [&](CheckRecord &r) {
                auto formula = coxeter_expected_order(n, q);
                if (formula != published[k])
                  r.note = "face-count formula gives " + std::to_string(formula);
                return b.order_of(coxeter_quotient(artin_braid(n), q));
              });
  }
}

void coxeter_boundary(Battery &b)
{
  for (int n = 3; n <= 5; ++n) {
    for (int q = 3; q <= 6; ++q) {
      auto id = "coxeter-finiteness-n" + std::to_string(n) + "-q" + std::to_string(q);
      std::string anchor = "B_n(q) finite iff (q-2)(n-2) < 4";
      auto p = coxeter_quotient(artin_braid(n), q);
      if (coxeter_is_finite(n, q)) {
        b.compare(id, anchor, "stated", nq(n, q), "finite", [&](CheckRecord &r) {
          auto e = enumerate(p, {}, b.budget());
          if (!e.finite())
            return inconclusive;
          r.note = "order " + std::to_string(e.index);
          return std::string("finite");
        });
      } else {
        b.infinite_claim(id, anchor, nq(n, q), p,
                         "(q-2)(n-2) = " + std::to_string((q - 2) * (n - 2)) + " >= 4");
      }
    }
  }
}

void sphere_small(Battery &b)
{
  for (int q : {3, 4, 5, 6}) {
    b.compare("sphere2-q" + std::to_string(q),
              "B_2(S2)(q) is Z2 for q even, trivial for q odd", "stated",
              nq(2, q), q % 2 == 0 ? "2" : "1", [&](CheckRecord &) {
                return b.order_of(coxeter_quotient(sphere_braid(2), q));
              });
  }

  b.compare("sphere3-order", "B_3(S2) has order 12", "stated", "n=3", "12",
            [&](CheckRecord &) { return b.order_of(sphere_braid(3)); });
  b.compare("sphere3-s1-order", "s1 and s2 have order 4 in B_3(S2)", "stated",
            "n=3", "4 4", [&](CheckRecord &) {
              auto e = enumerate(sphere_braid(3), {}, b.budget());
              if (!e.finite())
                return inconclusive;
              return std::to_string(element_order(e.table, Word{1})) + " " +
                     std::to_string(element_order(e.table, Word{2}));
            });

  for (int q : {3, 4, 5, 6, 7, 8, 10}) {
    int g = std::gcd(4, q);
    std::string expected = g == 4 ? "order 12" : (g == 2 ? "S3" : "trivial");
    b.compare("sphere3-q" + two(q),
              "B_3(S2)(q) is B_3(S2), S3 or trivial as gcd(4,q) is 4, 2 or 1",
              "stated", nq(3, q), expected, [&](CheckRecord &r) {
                auto c = check_sphere3_quotient(q, b.budget());
                if (!c.report.order)
                  return inconclusive;
                r.note = c.report.evidence;
                if (g == 4)
                  return "order " + std::to_string(*c.report.order);
                return c.report.identified_name.value_or(
                    "unnamed order " + std::to_string(*c.report.order));
              });
  }
}

void sphere_four(Battery &b)
{
  struct Finite {
    int q;
    std::string expected;
    std::string anchor;
  };
  for (auto const &[q, expected, anchor] :
       {Finite{3, "order 12 A4", "B_4(S2)(3) is isomorphic to A4"},
        Finite{4, "order 192", "B_4(S2)(4) has order 192"},
        Finite{5, "order 60 perfect A5", "B_4(S2)(5) is isomorphic to A5"}}) {
    b.compare("sphere4-q" + std::to_string(q), anchor, "stated", nq(4, q), expected,
              [&, q = q](CheckRecord &r) {
                auto rep = analyze(coxeter_quotient(sphere_braid(4), q), b.budget());
                if (!rep.order)
                  return inconclusive;
                r.note = rep.evidence;
                std::string s = "order " + std::to_string(*rep.order);
                if (rep.is_perfect)
                  s += " perfect";
                if (rep.identified_name)
                  s += " " + *rep.identified_name;
                return s;
              });
  }
  for (int q : {6, 7}) {
    b.infinite_claim("sphere4-q" + std::to_string(q),
                     "B_4(S2)(q) is infinite iff q >= 6", nq(4, q),
                     coxeter_quotient(sphere_braid(4), q),
                     std::string("quotient T(2,3,") + std::to_string(q) +
                         ") has 1/2+1/3+1/q <= 1 (triangle_is_finite = " +
                         (triangle_is_finite(2, 3, q) ? "true" : "false") + ")");
  }
}

void triangle_reduction(Battery &b)
{
  static int const orders[] = {12, 24, 60};
  for (int q : {3, 4, 5}) {
    b.compare("triangle-reduction-q" + std::to_string(q),
              "B_4(S2)(q) / <<s1 s3^-1>> is the triangle group T(2,3,q)", "derived",
              "q=" + std::to_string(q),
              std::to_string(orders[q - 3]) + " " + std::to_string(orders[q - 3]),
              [&](CheckRecord &) {
                auto lhs = b.order_of(sphere4_triangle_reduction(q));
                auto rhs = b.order_of(triangle_group(2, 3, q));
                return lhs + " " + rhs;
              });
  }
}

void sphere_abelianization(Battery &b)
{
  for (int n = 3; n <= 6; ++n) {
    for (int q = 2; q <= 9; ++q) {
      auto d = std::gcd(q, 2 * (n - 1));
      b.compare("sphere-abelian-n" + std::to_string(n) + "-q" + std::to_string(q),
                "abelianization of B_n(S2)(q) is Z_d, d = gcd(q, 2(n-1)); perfect iff d = 1",
                "stated", nq(n, q),
                cyclic(d) + (d == 1 ? " perfect" : " not-perfect"), [&](CheckRecord &) {
                  auto inv = abelian_invariants(coxeter_quotient(sphere_braid(n), q));
                  return to_string(inv) + (inv.is_trivial() ? " perfect" : " not-perfect");
                });
    }
  }
}

void projective_abelianization(Battery &b)
{
  for (int n = 2; n <= 4; ++n) {
    for (int q = 3; q <= 6; ++q) {
      b.compare("rp2-abelian-n" + std::to_string(n) + "-q" + std::to_string(q),
                "abelianization of B_n(RP2)(q) is Z2 for q odd, Z2+Z2 for q even",
                "stated", nq(n, q), q % 2 ? "Z_2" : "Z_2 + Z_2", [&](CheckRecord &) {
                  return to_string(abelian_invariants(
                      coxeter_quotient(projective_plane_braid(n), q)));
                });
    }
  }
}

void nonorientable(Battery &b)
{
  for (int g = 2; g <= 4; ++g) {
    for (int q = 2; q <= 6; ++q) {
      std::vector<std::int64_t> parts(static_cast<std::size_t>(g - 1), 0);
      parts.push_back(2);
      parts.push_back(std::gcd(2, q));
      auto expected = AbelianInvariants::from_cyclic_factors(parts);
      b.compare("nonorientable-g" + std::to_string(g) + "-q" + std::to_string(q),
                "B_n(N_g)(q)^ab is Z_gcd(2,q) + Z^(g-1) + Z2, hence infinite",
                "stated", "g=" + std::to_string(g) + " q=" + std::to_string(q),
                to_string(expected) + " infinite", [&](CheckRecord &) {
                  auto p = nonorientable_abelianized(g, q);
                  return to_string(abelian_invariants(p)) +
                         (certify_infinite(p) ? " infinite" : " no-certificate");
                });
    }
  }
}

void crystallographic_disk_checks(Battery &b)
{
  for (auto [n, q] : {std::pair{3, 3}, {3, 5}, {4, 3}, {4, 5}}) {
    b.compare("cryst-disk-n" + std::to_string(n) + "-q" + std::to_string(q),
              "B_n/[P_n,P_n](q) is Z_q for q odd", "stated", nq(n, q),
              std::to_string(q) + " " + cyclic(q), [&, n = n, q = q](CheckRecord &) {
                auto p = crystallographic_disk(n, q);
                auto order = b.order_of(p);
                if (order == inconclusive)
                  return inconclusive;
                return order + " " + to_string(abelian_invariants(p));
              });
  }
  for (auto [n, q] : {std::pair{3, 4}, {4, 4}, {3, 6}, {4, 6}}) {
    auto stated = crystallographic_disk_expected_order(n, q);
    b.compare("cryst-disk-n" + std::to_string(n) + "-q" + std::to_string(q),
              "B_n/[P_n,P_n](q) has order n(n-1)k/2 * n! for q = 2k", "stated",
              nq(n, q), std::to_string(stated), [&, n = n, q = q](CheckRecord &r) {
                auto order = b.order_of(crystallographic_disk(n, q));
                std::uint64_t k = static_cast<std::uint64_t>(q / 2);
                std::uint64_t lattice = 1;
                std::uint64_t fact = 1;
                for (int i = 0; i < n * (n - 1) / 2; ++i)
                  lattice *= k;
                for (int i = 2; i <= n; ++i)
                  fact *= static_cast<std::uint64_t>(i);
                r.note = "k^(n(n-1)/2) * n! = " + std::to_string(lattice * fact);
                return order;
              });
  }
}

void crystallographic_surface_checks(Battery &b)
{
  for (int g : {1, 2}) {
    for (int n : {2, 3}) {
      std::string params = "g=" + std::to_string(g) + " n=" + std::to_string(n);
      std::vector<std::int64_t> parts(static_cast<std::size_t>(2 * g), 0);
      parts.push_back(2);
      b.compare("cryst-surface-g" + std::to_string(g) + "-n" + std::to_string(n),
                "B_n(M)/[P_n(M),P_n(M)] abelianizes to Z2 + Z^(2g)", "derived", params,
                to_string(AbelianInvariants::from_cyclic_factors(parts)) + " infinite",
                [&](CheckRecord &) {
                  auto p = crystallographic_surface(g, n);
                  return to_string(abelian_invariants(p)) +
                         (certify_infinite(p) ? " infinite" : " no-certificate");
                });
      for (int q : {3, 5}) {
        b.compare("cryst-surface-g" + std::to_string(g) + "-n" + std::to_string(n) +
                      "-q" + std::to_string(q),
                  "B_n(M)/[P_n(M),P_n(M)](q) is free abelian of rank 2g for q odd",
                  "stated", params + " q=" + std::to_string(q),
                  "Z^" + std::to_string(2 * g) + " infinite quotient-order 1",
                  [&](CheckRecord &) {
                    auto p = crystallographic_surface(g, n, q);
                    std::vector<Word> lattice;
                    for (auto const &gen : p.generators()) {
                      if (gen.display_name.starts_with("a_"))
                        lattice.push_back(Word{gen.index});
                    }
                    auto order = b.order_of(quotient_by_normal_closure(p, lattice));
                    auto inv = abelian_invariants(p);
                    std::string ab = inv.torsion.empty()
                                         ? "Z^" + std::to_string(inv.free_rank)
                                         : to_string(inv);
                    return ab + (certify_infinite(p) ? " infinite" : " no-certificate") +
                           " quotient-order " + order;
                  });
      }
    }
  }
}

void gcd_collapse(Battery &b)
{
  b.compare("gcd-collapse-grid", "g^a = g^b = 1 implies g^gcd(a,b) = 1", "stated",
            "1 <= a, b <= 30", "900/900", [](CheckRecord &) {
              int ok = 0;
              for (int a = 1; a <= 30; ++a) {
                for (int c = 1; c <= 30; ++c) {
                  Presentation p("g", {"g"}, {power(Word{1}, a), power(Word{1}, c)});
                  if (abelian_invariants(p) == AbelianInvariants::from_cyclic_factors(
                                                   std::vector<std::int64_t>{std::gcd(a, c)}))
                    ++ok;
                }
              }
              return std::to_string(ok) + "/900";
            });
}

} // namespace

std::string to_string(Status s)
{
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::inconclusive:
    return "inconclusive";
  }
  return "fail";
}

std::size_t Report::count(Status s) const
{
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [s](auto const &r) { return r.status == s; }));
}

std::size_t Report::unexpected_inconclusive() const
{
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](auto const &r) {
        return r.status == Status::inconclusive && !r.infinite_by_design;
      }));
}

int Report::exit_code() const
{
  if (count(Status::fail) > 0)
    return 1;
  if (unexpected_inconclusive() > 0)
    return 2;
  return 0;
}

Report run(Options const &options)
{
  Battery b(options);
  coxeter_table(b);
  coxeter_boundary(b);
  sphere_small(b);
  sphere_four(b);
  triangle_reduction(b);
  sphere_abelianization(b);
  projective_abelianization(b);
  nonorientable(b);
  crystallographic_disk_checks(b);
  crystallographic_surface_checks(b);
  gcd_collapse(b);
  return b.finish();
}

std::string to_json(Report const &r, bool with_timings)
{
  nlohmann::ordered_json doc;
  auto records = nlohmann::ordered_json::array();
  for (auto const &c : r.records) {
    nlohmann::ordered_json j;
    j["claim_id"] = c.claim_id;
    j["paper_anchor"] = c.anchor;
    j["basis"] = c.basis;
    j["parameters"] = c.parameters;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["status"] = to_string(c.status);
    j["infinite_by_design"] = c.infinite_by_design;
    if (!c.note.empty())
      j["note"] = c.note;
    if (with_timings)
      j["runtime_ms"] = c.runtime_ms;
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  doc["summary"] = {{"pass", r.count(Status::pass)},
                    {"fail", r.count(Status::fail)},
                    {"inconclusive", r.count(Status::inconclusive)},
                    {"unexpected_inconclusive", r.unexpected_inconclusive()}};
  return doc.dump(2);
}

std::string to_markdown(Report const &r, bool with_timings)
{
  std::ostringstream ss;
  ss << "| claim | parameters | expected | observed | status |"
     << (with_timings ? " ms |" : "") << "\n";
  ss << "|---|---|---|---|---|" << (with_timings ? "---|" : "") << "\n";
  for (auto const &c : r.records) {
    std::string status = to_string(c.status);
    if (c.infinite_by_design)
      status += " (infinite, by design)";
    ss << "| " << c.claim_id << " | " << c.parameters << " | " << c.expected
       << " | " << c.observed << " | " << status << " |";
    if (with_timings)
      ss << ' ' << c.runtime_ms << " |";
    ss << "\n";
  }
  bool header = false;
  for (auto const &c : r.records) {
    if (c.status != Status::fail || c.note.empty())
      continue;
    if (!header)
      ss << "\nNotes on failed claims:\n";
    header = true;
    ss << "- " << c.claim_id << ": " << c.note << "\n";
  }
  ss << "\n" << r.count(Status::pass) << " pass, " << r.count(Status::fail)
     << " fail, " << r.count(Status::inconclusive) << " inconclusive ("
     << r.unexpected_inconclusive() << " unexpected)\n";
  return ss.str();
}

} // namespace braidquot::suite
