#pragma once

// Registry of the bound quivers used by the example recollements.
//
//   quad_free  v1 <-> v2 with H: v1 -> v2, P: v2 -> v1, PHP = HPH = 0
//   quad_vect  the same with PH = 0 added
//   sigma2     one vertex with a loop u, u^2 = 0 (F2[Z/2] with u = 1 + T)
//   vect       one vertex, no arrows
//   vect_times_sigma2  vertex w with no arrows beside vertex v with a loop u, u^2 = 0

#include <map>
#include <stdexcept>
#include <string>

#include "quiver.hpp"

namespace recolle::quivers {

inline QuiverPtr quad_free() {
  static const QuiverPtr q =
      BoundQuiver::make("quad_free", {"v1", "v2"}, {{"H", "v1", "v2"}, {"P", "v2", "v1"}},
                        {{{"P", "H", "P"}}, {{"H", "P", "H"}}}, 3);
  return q;
}

// PH in composition order is the traversal H then P.
inline QuiverPtr quad_vect() {
  static const QuiverPtr q =
      BoundQuiver::make("quad_vect", {"v1", "v2"}, {{"H", "v1", "v2"}, {"P", "v2", "v1"}},
                        {{{"P", "H", "P"}}, {{"H", "P", "H"}}, {{"H", "P"}}}, 3);
  return q;
}

inline QuiverPtr sigma2() {
  static const QuiverPtr q = BoundQuiver::make("sigma2", {"v"}, {{"u", "v", "v"}}, {{{"u", "u"}}}, 2);
  return q;
}

inline QuiverPtr vect() {
  static const QuiverPtr q = BoundQuiver::make("vect", {"v"}, {}, {}, 1);
  return q;
}

inline QuiverPtr vect_times_sigma2() {
  static const QuiverPtr q =
      BoundQuiver::make("vect_times_sigma2", {"w", "v"}, {{"u", "v", "v"}}, {{{"u", "u"}}}, 2);
  return q;
}

inline QuiverPtr by_name(const std::string& name) {
  static const std::map<std::string, QuiverPtr (*)()> reg{
      {"quad_free", &quad_free}, {"quad_vect", &quad_vect}, {"sigma2", &sigma2}, {"vect", &vect},
      {"vect_times_sigma2", &vect_times_sigma2}};
  auto it = reg.find(name);
  if (it != reg.end()) return it->second();
  const std::string base = BoundQuiver::opposite_name(name);
  if (base != name && reg.count(base)) return reg.at(base)()->opposite();
  throw std::invalid_argument("unknown quiver " + name);
}

}  // namespace recolle::quivers
