// Acceptance gate. Prints one PASS/FAIL line per criterion; with an argument
// N runs only criterion N. Exit status is non-zero if any selected criterion
// fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "braidquot/abelianizer.hpp"
#include "braidquot/catalog.hpp"
#include "braidquot/enumerator.hpp"
#include "braidquot/identify.hpp"
#include "oracles/oracles.hpp"

using namespace braidquot;
using namespace braidquot::catalog;

namespace {

constexpr std::size_t cap = 5'000'000;

EnumerationOptions budget(bool verify = false)
{
  EnumerationOptions o;
  o.max_cosets = cap;
  o.verify_after_merge = verify;
  return o;
}

// Collects failures for one criterion.
class Check {
public:
  void expect(bool ok, std::string const &what)
  {
    ++_total;
    if (!ok)
      _failures.push_back(what);
  }
  bool ok() const { return _failures.empty(); }
  std::string summary() const
  { return std::to_string(_total - _failures.size()) + "/" + std::to_string(_total) + " checks"; }
  std::vector<std::string> const &failures() const { return _failures; }

private:
  std::size_t _total = 0;
  std::vector<std::string> _failures;
};

std::string show(EnumerationResult const &r)
{ return r.finite() ? std::to_string(r.index) : std::string("INCONCLUSIVE"); }

Presentation with_power(Presentation const &p, int q) { return coxeter_quotient(p, q); }

void coxeter_orders(Check &c)
{
  auto start = std::chrono::steady_clock::now();
  struct Row { int n, q; std::uint64_t order; };
  for (auto [n, q, order] : {Row{3, 3, 24}, Row{4, 3, 648}, Row{3, 4, 96},
                             Row{5, 3, 155520}, Row{3, 5, 600}}) {
    auto r = enumerate(with_power(artin_braid(n), q), {}, budget());
    std::string tag = "B_" + std::to_string(n) + "(" + std::to_string(q) + ") = " + show(r);
    c.expect(r.finite() && r.index == order, tag + ", want " + std::to_string(order));
    c.expect(coxeter_expected_order(n, q) == order, tag + ": closed form disagrees");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 300.0, "runtime " + std::to_string(secs) + " s");
}

void coxeter_boundary(Check &c)
{
  for (int n = 3; n <= 5; ++n) {
    for (int q = 3; q <= 6; ++q) {
      bool finite = (q - 2) * (n - 2) < 4;
      c.expect(coxeter_is_finite(n, q) == finite, "predicate at n=" + std::to_string(n));
      auto r = enumerate(with_power(artin_braid(n), q), {}, budget());
      c.expect(r.finite() == finite, "B_" + std::to_string(n) + "(" + std::to_string(q) +
                                         ") enumerated " + show(r));
    }
  }
}

void sphere_two(Check &c)
{
  for (int q = 3; q <= 6; ++q) {
    auto r = enumerate(with_power(sphere_braid(2), q), {}, budget(true));
    std::uint64_t want = q % 2 == 0 ? 2 : 1;
    c.expect(r.finite() && r.index == want, "B_2(S2)(" + std::to_string(q) + ") = " + show(r));
  }
}

void sphere_three(Check &c)
{
  auto r = enumerate(sphere_braid(3), {}, budget(true));
  c.expect(r.finite() && r.index == 12, "B_3(S2) = " + show(r));
  if (r.finite())
    c.expect(element_order(r.table, Word{1}) == 4, "order of s1");
  for (int q : {4, 8, 6, 10, 3, 5, 7}) {
    auto check = check_sphere3_quotient(q, budget(true));
    std::string want = q % 4 == 0 ? "order 12" : (q % 2 == 0 ? "S3" : "trivial");
    c.expect(check.expected == want && check.holds,
             "B_3(S2)(" + std::to_string(q) + "): " + check.report.evidence);
  }
}

void sphere_four(Check &c)
{
  auto a4 = analyze(with_power(sphere_braid(4), 3), budget());
  c.expect(a4.order == 12u && a4.identified_name == "A4", "q=3: " + a4.evidence);
  auto b192 = analyze(with_power(sphere_braid(4), 4), budget());
  c.expect(b192.order == 192u, "q=4: " + b192.evidence);
  auto a5 = analyze(with_power(sphere_braid(4), 5), budget());
  c.expect(a5.order == 60u && a5.is_perfect && a5.identified_name == "A5", "q=5: " + a5.evidence);
  for (int q : {6, 7}) {
    auto r = enumerate(with_power(sphere_braid(4), q), {}, budget());
    c.expect(!r.finite(), "q=" + std::to_string(q) + " enumerated " + show(r));
    c.expect(!triangle_is_finite(2, 3, q), "T(2,3," + std::to_string(q) + ") reported finite");
  }
}

void triangle_reduction(Check &c)
{
  // Frozen from permutation closures; the generators satisfy the triangle
  // relations and generate groups of these sizes.
  std::vector<std::pair<int, std::vector<oracle::Perm>>> oracles{
      {3, {oracle::from_cycles(4, {{1, 2}, {3, 4}}), oracle::from_cycles(4, {{1, 2, 3}})}},
      {4, {oracle::from_cycles(4, {{1, 2}}), oracle::from_cycles(4, {{2, 3, 4}})}},
      {5, {oracle::from_cycles(5, {{1, 2}, {3, 4}}), oracle::from_cycles(5, {{1, 3, 5}})}}};
  std::vector<std::uint64_t> frozen{12, 24, 60};
  for (std::size_t i = 0; i < oracles.size(); ++i) {
    auto const &[q, gens] = oracles[i];
    c.expect(oracle::closure_size(gens) == frozen[i], "oracle closure for q=" + std::to_string(q));
    auto red = enumerate(sphere4_triangle_reduction(q), {}, budget(true));
    auto tri = enumerate(triangle_group(2, 3, q), {}, budget(true));
    c.expect(red.finite() && tri.finite() && red.index == tri.index && tri.index == frozen[i],
             "q=" + std::to_string(q) + ": reduction " + show(red) + ", triangle " + show(tri));
  }
}

void sphere_abelian(Check &c)
{
  for (int n = 3; n <= 6; ++n) {
    for (int q = 2; q <= 9; ++q) {
      int d = std::gcd(q, 2 * (n - 1));
      auto inv = abelian_invariants(with_power(sphere_braid(n), q));
      AbelianInvariants want = d == 1 ? AbelianInvariants{} : AbelianInvariants{0, {d}};
      std::string tag = "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " + to_string(inv);
      c.expect(inv == want, tag);
      c.expect(inv == expected_abelianization(SurfaceClass::sphere(), n, q), tag + " vs closed form");
      c.expect(inv.is_trivial() == (d == 1), tag + " perfectness");
    }
  }
}

void projective_abelian(Check &c)
{
  for (int n = 2; n <= 4; ++n) {
    for (int q = 3; q <= 6; ++q) {
      auto inv = abelian_invariants(with_power(projective_plane_braid(n), q));
      AbelianInvariants want = q % 2 ? AbelianInvariants{0, {2}} : AbelianInvariants{0, {2, 2}};
      c.expect(inv == want, "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " + to_string(inv));
    }
  }
}

void nonorientable(Check &c)
{
  for (int g = 2; g <= 4; ++g) {
    for (int q = 2; q <= 6; ++q) {
      auto p = nonorientable_abelianized(g, q);
      std::vector<std::int64_t> factors{std::gcd(2, q), 2};
      for (int i = 0; i < g - 1; ++i)
        factors.push_back(0);
      auto want = AbelianInvariants::from_cyclic_factors(factors);
      auto inv = abelian_invariants(p);
      std::string tag = "g=" + std::to_string(g) + " q=" + std::to_string(q) + ": " + to_string(inv);
      c.expect(inv == want, tag);
      c.expect(certify_infinite(p), tag + " not certified infinite");
    }
  }
}

void crystallographic_disks(Check &c)
{
  for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {4, 3}, {4, 5}}) {
    auto r = analyze(crystallographic_disk(n, q), budget());
    std::string want = "Z" + std::to_string(q);
    c.expect(r.order == static_cast<std::uint64_t>(q) && r.identified_name == want,
             "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " + r.evidence);
  }
  struct Row { int n, q; std::uint64_t order; };
  for (auto [n, q, order] : {Row{3, 4, 36}, Row{4, 4, 288}, Row{3, 6, 54}, Row{4, 6, 432}}) {
    auto r = enumerate(crystallographic_disk(n, q), {}, budget());
    c.expect(crystallographic_disk_expected_order(n, q) == order, "closed form");
    c.expect(r.finite() && r.index == order, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                                 ": enumerated " + show(r) + ", want " +
                                                 std::to_string(order));
  }
}

void crystallographic_surfaces(Check &c)
{
  for (int g = 1; g <= 2; ++g) {
    for (int n = 2; n <= 3; ++n) {
      std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n);
      auto base = crystallographic_surface(g, n);
      auto inv = abelian_invariants(base);
      c.expect(inv == AbelianInvariants{2 * g, {2}}, tag + ": " + to_string(inv));
      c.expect(certify_infinite(base), tag + " not certified infinite");
      for (int q : {3, 5}) {
        auto p = crystallographic_surface(g, n, q);
        auto iq = abelian_invariants(p);
        std::string tq = tag + " q=" + std::to_string(q);
        c.expect(iq == AbelianInvariants{2 * g, {}}, tq + ": " + to_string(iq));
        c.expect(certify_infinite(p), tq + " not certified infinite");
        std::vector<Word> pure;
        for (int x = n; x <= p.generator_count(); ++x)
          pure.push_back(Word{x});
        auto r = enumerate(quotient_by_normal_closure(p, pure), {}, budget(true));
        c.expect(r.finite() && r.index == 1, tq + ": quotient by pure generators " + show(r));
      }
    }
  }
}

bool snf_ok(oracle::Matrix const &a)
{
  IntegerMatrix m(a.size(), a[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = a[i][j];
  }
  auto s = smith_normal_form(m);
  auto unit = [](mpz_class const &x) { return x == 1 || x == -1; };
  if (!(s.U * m * s.V == s.D) || !unit(determinant(s.U)) || !unit(determinant(s.V)))
    return false;
  auto inv = oracle::invariant_factors(a);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j ? s.D(i, i) != inv[i] : s.D(i, j) != 0)
        return false;
    }
  }
  return true;
}

void properties(Check &c)
{
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  int snf_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    oracle::Matrix a(static_cast<std::size_t>(dim(rng)),
                     std::vector<long>(static_cast<std::size_t>(dim(rng))));
    for (auto &row : a) {
      for (auto &x : row)
        x = entry(rng);
    }
    snf_bad += snf_ok(a) ? 0 : 1;
  }
  c.expect(snf_bad == 0, std::to_string(snf_bad) + " random matrices failed Smith form checks");

  int merge_bad = 0;
  for (auto const &p : {sphere_braid(3), with_power(sphere_braid(4), 3), with_power(sphere_braid(4), 5),
                        with_power(artin_braid(3), 4), with_power(artin_braid(4), 3),
                        crystallographic_disk(3, 4), triangle_group(2, 3, 5)}) {
    for (auto s : {Strategy::hlt, Strategy::felsch}) {
      auto o = budget(true);
      o.strategy = s;
      try {
        auto r = enumerate(p, {}, o);
        merge_bad += r.finite() && r.table.is_consistent() ? 0 : 1;
      } catch (std::logic_error const &) {
        ++merge_bad;
      }
    }
  }
  c.expect(merge_bad == 0, std::to_string(merge_bad) + " enumerations lost consistency");

  std::uniform_int_distribution<int> ngen(1, 4), nrel(0, 4), len(1, 8), pick(0, 1000);
  std::bernoulli_distribution sign;
  int tietze_bad = 0;
  for (int t = 0; t < 200; ++t) {
    int gens = ngen(rng);
    auto word = [&](int g) {
      std::vector<Letter> v(static_cast<std::size_t>(len(rng)));
      for (auto &x : v)
        x = (sign(rng) ? 1 : -1) * (1 + pick(rng) % g);
      return Word(std::move(v));
    };
    std::vector<std::string> names;
    for (int i = 1; i <= gens; ++i)
      names.push_back("x" + std::to_string(i));
    std::vector<Word> rels;
    for (int i = nrel(rng); i > 0; --i)
      rels.push_back(word(gens));
    Presentation p("p", names, rels);
    auto more = p.relators();
    if (!more.empty())
      more.push_back(conjugate(more[static_cast<std::size_t>(pick(rng)) % more.size()], word(gens)) *
                     invert(more.front()));
    names.push_back("y");
    more.push_back(Word{-(gens + 1)} * word(gens));
    tietze_bad += abelian_invariants(Presentation("q", names, more)) == abelian_invariants(p) ? 0 : 1;
  }
  c.expect(tietze_bad == 0, std::to_string(tietze_bad) + " Tietze augmentations changed invariants");

  int gcd_bad = 0;
  for (int a = 1; a <= 30; ++a) {
    for (int b = 1; b <= 30; ++b) {
      int d = std::gcd(a, b);
      Presentation p("g", {"g"}, {power(Word{1}, a), power(Word{1}, b)});
      auto inv = abelian_invariants(p);
      auto r = enumerate(p, {}, budget());
      bool ok = inv == (d == 1 ? AbelianInvariants{} : AbelianInvariants{0, {d}}) && r.finite() &&
                r.index == static_cast<std::uint64_t>(d);
      gcd_bad += ok ? 0 : 1;
    }
  }
  c.expect(gcd_bad == 0, std::to_string(gcd_bad) + " gcd grid cells disagree");
}

struct Criterion {
  char const *title;
  std::function<void(Check &)> run;
};

} // namespace

int main(int argc, char **argv)
{
  std::vector<Criterion> criteria{
      {"Coxeter quotient orders of B_n(q)", coxeter_orders},
      {"Coxeter finiteness boundary", coxeter_boundary},
      {"two-strand sphere quotients", sphere_two},
      {"three-strand sphere quotients", sphere_three},
      {"four-strand sphere quotients", sphere_four},
      {"triangle reduction", triangle_reduction},
      {"sphere abelianization grid", sphere_abelian},
      {"projective plane abelianization", projective_abelian},
      {"non-orientable abelianized presentations", nonorientable},
      {"crystallographic disk quotients", crystallographic_disks},
      {"crystallographic surface quotients", crystallographic_surfaces},
      {"property suites", properties},
  };
  std::size_t first = 1, last = criteria.size();
  if (argc > 1) {
    first = last = static_cast<std::size_t>(std::atoi(argv[1]));
    if (first < 1 || first > criteria.size()) {
      std::cerr << "criterion must be 1.." << criteria.size() << '\n';
      return 2;
    }
  }
  bool all = true;
  for (std::size_t i = first; i <= last; ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i - 1].run(c);
    } catch (std::exception const &e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && c.ok();
    std::cout << "criterion " << (i < 10 ? " " : "") << i << ": " << (c.ok() ? "PASS" : "FAIL")
              << "  " << criteria[i - 1].title << " (" << c.summary() << ", "
              << static_cast<int>(secs * 1000) << " ms)\n";
    for (auto const &f : c.failures())
      std::cout << "      mismatch: " << f << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
