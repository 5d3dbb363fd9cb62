#include <algorithm>
#include <stdexcept>

#include "braidquot/catalog.hpp"

namespace braidquot::catalog {

namespace {

using Params = std::map<std::string, int>;

std::optional<int> get_optional(Params const &p, std::string const &key)
{
  auto it = p.find(key);
  if (it == p.end())
    return std::nullopt;
  return it->second;
}

Presentation with_q(Presentation p, Params const &params)
{
  if (auto q = get_optional(params, "q"))
    return coxeter_quotient(p, *q);
  return p;
}

std::vector<BuilderInfo> make_registry()
{
  std::vector<BuilderInfo> r;
  r.push_back({"artin_braid", {"n"}, {"q"}, "Artin braid group B_n, optionally modulo s1^q",
               [](Params const &p) { return with_q(artin_braid(p.at("n")), p); }});
  r.push_back({"symmetric_group", {"n"}, {}, "symmetric group S_n as B_n modulo s1^2",
               [](Params const &p) { return symmetric_group(p.at("n")); }});
  r.push_back({"sphere_braid", {"n"}, {"q"}, "sphere braid group B_n(S2), optionally modulo s1^q",
               [](Params const &p) { return with_q(sphere_braid(p.at("n")), p); }});
  r.push_back({"projective_plane_braid", {"n"}, {"q"},
               "projective plane braid group B_n(RP2), optionally modulo s1^q",
               [](Params const &p) {
                 if (p.count("q") && p.at("n") < 2)
                   throw std::invalid_argument("s1^q needs n >= 2");
                 return with_q(projective_plane_braid(p.at("n")), p);
               }});
  r.push_back({"crystallographic_disk", {"n"}, {"q"}, "B_n/[P_n,P_n], optionally modulo s1^q",
               [](Params const &p) {
                 return crystallographic_disk(p.at("n"), get_optional(p, "q"));
               }});
  r.push_back({"crystallographic_surface", {"g", "n"}, {"q"},
               "B_n(M)/[P_n(M),P_n(M)] for M orientable of genus g, optionally modulo s1^q",
               [](Params const &p) {
                 return crystallographic_surface(p.at("g"), p.at("n"),
                                                 get_optional(p, "q"));
               }});
  r.push_back({"triangle_group", {"l", "m", "n"}, {}, "triangle group <a,b | a^l, b^m, (ab)^n>",
               [](Params const &p) {
                 return triangle_group(p.at("l"), p.at("m"), p.at("n"));
               }});
  r.push_back({"nonorientable_abelianized", {"g", "q"}, {},
               "abelianized presentation of B_n(N_g)(q)",
               [](Params const &p) {
                 return nonorientable_abelianized(p.at("g"), p.at("q"));
               }});
  r.push_back({"sphere4_triangle_reduction", {"q"}, {},
               "B_4(S2)(q) modulo the normal closure of s1 s3^-1",
               [](Params const &p) { return sphere4_triangle_reduction(p.at("q")); }});
  return r;
}

std::string const &resolve_alias(std::string const &name)
{
  static std::map<std::string, std::string> const aliases = {
      {"triangle", "triangle_group"},
      {"artin", "artin_braid"},
      {"sphere", "sphere_braid"},
      {"symmetric", "symmetric_group"}};
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

} // namespace

std::vector<BuilderInfo> const &builders()
{
  static std::vector<BuilderInfo> const registry = make_registry();
  return registry;
}

Presentation build(std::string const &name, std::map<std::string, int> const &params)
{
  auto const &canonical = resolve_alias(name);
  auto const &all = builders();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](BuilderInfo const &b) { return b.name == canonical; });
  if (it == all.end())
    throw std::invalid_argument("unknown builder: " + name);

  for (auto const &key : it->required) {
    if (!params.count(key))
      throw std::invalid_argument(it->name + ": missing parameter " + key);
  }
  for (auto const &[key, value] : params) {
    bool known = std::count(it->required.begin(), it->required.end(), key) ||
                 std::count(it->optional.begin(), it->optional.end(), key);
    if (!known)
      throw std::invalid_argument(it->name + ": unexpected parameter " + key);
  }
  return it->build(params);
}

} // namespace braidquot::catalog
