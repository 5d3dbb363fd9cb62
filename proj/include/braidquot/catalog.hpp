#ifndef BRAIDQUOT_CATALOG_HPP
#define BRAIDQUOT_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidquot/abelian_invariants.hpp"
#include "braidquot/presentation.hpp"

// Presentations of braid groups of the disk, sphere and projective plane,
// their quotients by the normal closure of s1^q, crystallographic quotients
// B_n(M)/[P_n(M), P_n(M)], triangle groups, and closed-form predictions for
// orders and abelianizations of these groups.
//
// Generator naming is fixed: Artin generators are s1..s(n-1), projective
// plane generators rho1..rhon, surface lattice generators a_<i>_<r>.
// Parameter errors throw std::invalid_argument.
namespace braidquot::catalog {

enum class SurfaceKind {
  disk,
  sphere,
  projective_plane,
  orientable_closed,
  nonorientable_closed
};

class SurfaceClass {
public:
  static SurfaceClass disk() { return {SurfaceKind::disk, 0}; }
  static SurfaceClass sphere() { return {SurfaceKind::sphere, 0}; }
  static SurfaceClass projective_plane()
  { return {SurfaceKind::projective_plane, 0}; }
  static SurfaceClass orientable(int genus);     // genus >= 1
  static SurfaceClass nonorientable(int genus);  // genus >= 2

  SurfaceKind kind() const noexcept { return _kind; }
  int genus() const noexcept { return _genus; }

  // First homology of the surface itself.
  AbelianInvariants homology() const;

private:
  SurfaceClass(SurfaceKind kind, int genus)
  : _kind(kind), _genus(genus)
  {}

  SurfaceKind _kind;
  int _genus;
};

// ---- builders ------------------------------------------------------------

Presentation artin_braid(int n);
Presentation symmetric_group(int n);

// Adds s1^q. Requires a generator named "s1"; q >= 1.
Presentation coxeter_quotient(Presentation const &p, int q);

Presentation sphere_braid(int n);
Presentation projective_plane_braid(int n);

// A_{i,j} = (s(j-1)...s(i+1)) s_i^2 (s(j-1)...s(i+1))^-1, 1 <= i < j <= n.
Word pure_braid_generator_word(int i, int j, int n);

// B_n / [P_n, P_n], optionally with s1^q. 2 <= n <= 6.
Presentation crystallographic_disk(int n, std::optional<int> q = std::nullopt);

// B_n(M) / [P_n(M), P_n(M)] for M orientable of genus g, optionally with s1^q.
Presentation crystallographic_surface(int g, int n,
                                      std::optional<int> q = std::nullopt);

// <a, b | a^l, b^m, (ab)^n>
Presentation triangle_group(int l, int m, int n);

// Abelianized presentation of B_n(N_g)(q), N_g the non-orientable surface of
// genus g: generators s1, rho1..rhog.
Presentation nonorientable_abelianized(int g, int q);

// B_4(S^2)(q) modulo the normal closure of s1 s3^-1.
Presentation sphere4_triangle_reduction(int q);

// ---- closed forms --------------------------------------------------------

bool triangle_is_finite(int l, int m, int n);

// B_n / <<s1^q>> is finite iff (q-2)(n-2) < 4.
bool coxeter_is_finite(int n, int q);

// (f/2)^(n-1) n! with f the face count of the Platonic solid of type (n, q);
// n! for q = 2. Throws std::domain_error("not finite") for infinite cases.
std::uint64_t coxeter_expected_order(int n, int q);

// Abelianization of B_n(M)(q).
AbelianInvariants expected_abelianization(SurfaceClass const &m, int n, int q);

// Order of B_n/[P_n,P_n](q) as stated for n, q >= 3: q when q is odd,
// n(n-1)k/2 * n! when q = 2k.
std::uint64_t crystallographic_disk_expected_order(int n, int q);

// ---- registry ------------------------------------------------------------

struct BuilderInfo {
  std::string name;
  std::vector<std::string> required;  // parameter names
  std::vector<std::string> optional;
  std::string summary;
  std::function<Presentation(std::map<std::string, int> const &)> build;
};

std::vector<BuilderInfo> const &builders();

// Looks up by name (or alias) and checks that the parameter set matches.
// Throws std::invalid_argument for unknown builders or bad parameters.
Presentation build(std::string const &name,
                   std::map<std::string, int> const &params);

} // namespace braidquot::catalog

#endif // BRAIDQUOT_CATALOG_HPP
