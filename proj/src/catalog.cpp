#include "braidquot/catalog.hpp"

#include <numeric>
#include <stdexcept>

namespace braidquot::catalog {

namespace {

void require(bool cond, char const *message)
{
  if (!cond)
    throw std::invalid_argument(message);
}

std::vector<std::string> artin_names(int n)
{
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i)
    names.push_back("s" + std::to_string(i));
  return names;
}

// Artin relators over generators offset+1 .. offset+n-1: braid relators for
// adjacent pairs first, then commutators of distant pairs.
std::vector<Word> artin_relators(int n, int offset = 0)
{
  std::vector<Word> rels;
  for (int i = 1; i + 1 < n; ++i) {
    int a = offset + i;
    int b = offset + i + 1;
    rels.push_back(Word{a, b, a, -b, -a, -b});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j)
      rels.push_back(commutator(Word{offset + i}, Word{offset + j}));
  }
  return rels;
}

// s1 s2 ... s(n-2) s(n-1)^2 s(n-2) ... s1
Word surface_word(int n)
{
  std::vector<Letter> w;
  for (int i = 1; i < n; ++i)
    w.push_back(i);
  for (int i = n - 1; i >= 1; --i)
    w.push_back(i);
  return Word(std::move(w));
}

std::string q_suffix(std::optional<int> q)
{ return q ? "(" + std::to_string(*q) + ")" : ""; }

} // namespace

SurfaceClass SurfaceClass::orientable(int genus)
{
  require(genus >= 1, "orientable closed surface needs genus >= 1");
  return {SurfaceKind::orientable_closed, genus};
}

SurfaceClass SurfaceClass::nonorientable(int genus)
{
  require(genus >= 2, "non-orientable closed surface needs genus >= 2");
  return {SurfaceKind::nonorientable_closed, genus};
}

AbelianInvariants SurfaceClass::homology() const
{
  switch (_kind) {
  case SurfaceKind::disk:
  case SurfaceKind::sphere:
    return {};
  case SurfaceKind::projective_plane:
    return {0, {2}};
  case SurfaceKind::orientable_closed:
    return {2 * _genus, {}};
  case SurfaceKind::nonorientable_closed:
    return {_genus - 1, {2}};
  }
  throw std::logic_error("unhandled surface kind");
}

Presentation artin_braid(int n)
{
  require(n >= 2, "artin_braid needs n >= 2");
  return Presentation("B_" + std::to_string(n), artin_names(n),
                      artin_relators(n));
}

Presentation symmetric_group(int n)
{
  require(n >= 2, "symmetric_group needs n >= 2");
  auto rels = artin_relators(n);
  rels.push_back(Word{1, 1});
  return Presentation("S_" + std::to_string(n), artin_names(n),
                      std::move(rels));
}

Presentation coxeter_quotient(Presentation const &p, int q)
{
  require(q >= 1, "coxeter_quotient needs q >= 1");
  auto s1 = p.generator_index("s1");
  if (!s1)
    throw std::invalid_argument("coxeter_quotient: presentation has no s1");
  Word extra[] = {power(Word{*s1}, q)};
  return quotient_by_normal_closure(p, extra)
      .relabelled(p.label() + "(" + std::to_string(q) + ")");
}

Presentation sphere_braid(int n)
{
  require(n >= 2, "sphere_braid needs n >= 2");
  auto rels = artin_relators(n);
  rels.push_back(surface_word(n));
  return Presentation("B_" + std::to_string(n) + "(S2)", artin_names(n),
                      std::move(rels));
}

Presentation projective_plane_braid(int n)
{
  require(n >= 1, "projective_plane_braid needs n >= 1");
  auto names = artin_names(n);
  for (int j = 1; j <= n; ++j)
    names.push_back("rho" + std::to_string(j));
  auto rho = [n](int j) { return n - 1 + j; };

  std::vector<Word> rels;
  // I
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j)
      rels.push_back(commutator(Word{i}, Word{j}));
  }
  // II
  for (int i = 1; i + 1 < n; ++i)
    rels.push_back(Word{i, i + 1, i, -(i + 1), -i, -(i + 1)});
  // III
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1)
        rels.push_back(commutator(Word{i}, Word{rho(j)}));
    }
  }
  // IV: rho_i = s_i rho_(i+1) s_i
  for (int i = 1; i < n; ++i)
    rels.push_back(Word{i, rho(i + 1), i, -rho(i)});
  // V: rho_(i+1)^-1 rho_i^-1 rho_(i+1) rho_i = s_i^2
  for (int i = 1; i < n; ++i)
    rels.push_back(Word{-rho(i + 1), -rho(i), rho(i + 1), rho(i), -i, -i});
  // VI: rho_1^2 = s1 ... s(n-1)^2 ... s1
  rels.push_back(Word{rho(1), rho(1)} * invert(surface_word(n)));

  return Presentation("B_" + std::to_string(n) + "(RP2)", std::move(names),
                      std::move(rels));
}

Word pure_braid_generator_word(int i, int j, int n)
{
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("pure braid generator needs 1 <= i < j <= n");
  std::vector<Letter> prefix;
  for (int k = j - 1; k > i; --k)
    prefix.push_back(k);
  Word conj(std::move(prefix));
  return conjugate(Word{i, i}, conj);
}

Presentation crystallographic_disk(int n, std::optional<int> q)
{
  require(n >= 2, "crystallographic_disk needs n >= 2");
  require(n <= 6, "crystallographic_disk is limited to n <= 6");
  require(!q || *q >= 1, "crystallographic_disk needs q >= 1");

  std::vector<Word> pure;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j)
      pure.push_back(pure_braid_generator_word(i, j, n));
  }

  auto rels = artin_relators(n);
  for (std::size_t a = 0; a < pure.size(); ++a) {
    for (std::size_t b = a + 1; b < pure.size(); ++b)
      rels.push_back(commutator(pure[a], pure[b]));
  }
  if (q)
    rels.push_back(power(Word{1}, *q));

  auto ns = std::to_string(n);
  return Presentation("B_" + ns + "/[P_" + ns + ",P_" + ns + "]" + q_suffix(q),
                      artin_names(n), std::move(rels));
}

Presentation crystallographic_surface(int g, int n, std::optional<int> q)
{
  require(g >= 1, "crystallographic_surface needs g >= 1");
  require(n >= 1, "crystallographic_surface needs n >= 1");
  require(!q || *q >= 1, "crystallographic_surface needs q >= 1");
  require(!q || n >= 2, "s1^q needs n >= 2");

  auto names = artin_names(n);
  int const lattice_rank = 2 * g;
  auto a = [n, lattice_rank](int i, int r) {
    return (n - 1) + (i - 1) * lattice_rank + r;
  };
  for (int i = 1; i <= n; ++i) {
    for (int r = 1; r <= lattice_rank; ++r)
      names.push_back("a_" + std::to_string(i) + "_" + std::to_string(r));
  }

  // (a)
  auto rels = artin_relators(n);
  // (b)
  for (int i = 1; i < n; ++i)
    rels.push_back(Word{i, i});
  // (c)
  int const first = a(1, 1);
  int const last = a(n, lattice_rank);
  for (int x = first; x <= last; ++x) {
    for (int y = x + 1; y <= last; ++y)
      rels.push_back(commutator(Word{x}, Word{y}));
  }
  // (d): s_i a_(j,r) s_i^-1 = a_(tau_i(j),r)
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int tj = j == i ? i + 1 : (j == i + 1 ? i : j);
      for (int r = 1; r <= lattice_rank; ++r)
        rels.push_back(Word{i, a(j, r), -i, -a(tj, r)});
    }
  }
  if (q)
    rels.push_back(power(Word{1}, *q));

  return Presentation("B_" + std::to_string(n) + "(T" + std::to_string(g) +
                          ")/[P,P]" + q_suffix(q),
                      std::move(names), std::move(rels));
}

Presentation triangle_group(int l, int m, int n)
{
  require(l >= 2 && m >= 2 && n >= 2, "triangle_group needs l, m, n >= 2");
  std::vector<Word> rels = {power(Word{1}, l), power(Word{2}, m),
                            power(Word{1, 2}, n)};
  return Presentation("T(" + std::to_string(l) + "," + std::to_string(m) +
                          "," + std::to_string(n) + ")",
                      {"a", "b"}, std::move(rels));
}

Presentation nonorientable_abelianized(int g, int q)
{
  require(g >= 2, "nonorientable_abelianized needs g >= 2");
  require(q >= 2, "nonorientable_abelianized needs q >= 2");

  std::vector<std::string> names = {"s1"};
  for (int j = 1; j <= g; ++j)
    names.push_back("rho" + std::to_string(j));

  std::vector<Word> rels;
  for (int x = 1; x <= g + 1; ++x) {
    for (int y = x + 1; y <= g + 1; ++y)
      rels.push_back(commutator(Word{x}, Word{y}));
  }
  rels.push_back(Word{1, 1});
  rels.push_back(power(Word{1}, q));
  // rho_g^2 rho_(g-1)^2 ... rho_1^2; rho_j is generator j + 1
  std::vector<Letter> surface;
  for (int j = g; j >= 1; --j) {
    surface.push_back(j + 1);
    surface.push_back(j + 1);
  }
  rels.emplace_back(std::move(surface));

  return Presentation("B_n(N" + std::to_string(g) + ")(" + std::to_string(q) +
                          ")^ab",
                      std::move(names), std::move(rels));
}

Presentation sphere4_triangle_reduction(int q)
{
  require(q >= 1, "sphere4_triangle_reduction needs q >= 1");
  Word extra[] = {Word{1, -3}};
  auto p = coxeter_quotient(sphere_braid(4), q);
  return quotient_by_normal_closure(p, extra)
      .relabelled(p.label() + "/<<s1 s3^-1>>");
}

bool triangle_is_finite(int l, int m, int n)
{
  require(l >= 2 && m >= 2 && n >= 2, "triangle parameters must be >= 2");
  // 1/l + 1/m + 1/n > 1, cleared of denominators
  auto L = static_cast<std::int64_t>(l);
  auto M = static_cast<std::int64_t>(m);
  auto N = static_cast<std::int64_t>(n);
  return M * N + L * N + L * M > L * M * N;
}

bool coxeter_is_finite(int n, int q)
{
  require(n >= 2 && q >= 2, "coxeter_is_finite needs n, q >= 2");
  return static_cast<std::int64_t>(q - 2) * (n - 2) < 4;
}

std::uint64_t coxeter_expected_order(int n, int q)
{
  require(n >= 2 && q >= 2, "coxeter_expected_order needs n, q >= 2");
  if (!coxeter_is_finite(n, q))
    throw std::domain_error("not finite");

  std::uint64_t factorial = 1;
  for (int k = 2; k <= n; ++k) {
    if (factorial > UINT64_MAX / static_cast<std::uint64_t>(k))
      throw std::overflow_error("n! does not fit in 64 bits");
    factorial *= static_cast<std::uint64_t>(k);
  }
  if (q == 2)
    return factorial;

  // faces of the Platonic solid with n-gon faces, q meeting at each vertex
  static std::map<std::pair<int, int>, std::uint64_t> const faces = {
      {{3, 3}, 4}, {{4, 3}, 6}, {{3, 4}, 8}, {{5, 3}, 12}, {{3, 5}, 20}};
  auto it = faces.find({n, q});
  if (it == faces.end())
    throw std::invalid_argument("type (n, q) is not a Platonic solid");

  std::uint64_t order = factorial;
  for (int k = 1; k < n; ++k)
    order *= it->second / 2;
  return order;
}

AbelianInvariants expected_abelianization(SurfaceClass const &m, int n, int q)
{
  require(q >= 2, "expected_abelianization needs q >= 2");
  require(n >= 2, "expected_abelianization needs n >= 2");

  std::vector<std::int64_t> factors;
  switch (m.kind()) {
  case SurfaceKind::disk:
    throw std::invalid_argument(
        "disk quotients are covered by the crystallographic order formula");
  case SurfaceKind::sphere:
    require(n >= 3, "sphere abelianization formula needs n >= 3");
    factors = {std::gcd<std::int64_t>(q, 2 * (n - 1))};
    break;
  case SurfaceKind::projective_plane:
    factors = {2, q % 2 == 0 ? 2 : 1};
    break;
  case SurfaceKind::orientable_closed:
    factors.assign(static_cast<std::size_t>(2 * m.genus()), 0);
    factors.push_back(q);
    break;
  case SurfaceKind::nonorientable_closed:
    factors.assign(static_cast<std::size_t>(m.genus() - 1), 0);
    factors.push_back(2);
    factors.push_back(std::gcd(2, q));
    break;
  }
  return AbelianInvariants::from_cyclic_factors(factors);
}

std::uint64_t crystallographic_disk_expected_order(int n, int q)
{
  require(n >= 3 && q >= 3, "crystallographic_disk_expected_order needs n, q >= 3");
  if (q % 2 == 1)
    return static_cast<std::uint64_t>(q);

  std::uint64_t const k = static_cast<std::uint64_t>(q / 2);
  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i)
    factorial *= static_cast<std::uint64_t>(i);
  auto nn = static_cast<std::uint64_t>(n);
  return nn * (nn - 1) * k / 2 * factorial;
}

} // namespace braidquot::catalog
