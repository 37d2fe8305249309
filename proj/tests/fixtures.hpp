#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ptolemy_lab/diagram.hpp"
#include "ptolemy_lab/polygon.hpp"

namespace ptolemy_lab::testing {

// A 12-gon diagram, vertex k at angle 30k degrees: seven
// dissecting diagonals, an empty quadrilateral {3,5,7,9} and a clique
// quadrilateral {9,11,1,3} on either side of c = {3,9}.
inline Diagram twelve_gon() {
  const Polygon p(12);
  return Diagram::of(p, {{3, 9}, {1, 3}, {1, 11}, {7, 9}, {5, 7}, {3, 5}, {9, 11}, {3, 11}, {1, 9}});
}

// The same dissection with the clique cell emptied.
inline Diagram twelve_gon_two_empty() {
  const Polygon p(12);
  return Diagram::of(p, {{3, 9}, {1, 3}, {1, 11}, {7, 9}, {5, 7}, {3, 5}, {9, 11}});
}

// Triangulation {0,2},{2,4},{4,0} of the hexagon.
inline Diagram hexagon_triangulation() {
  return Diagram::of(Polygon(6), {{0, 2}, {2, 4}, {0, 4}});
}

// The subset of `all` selected by the bits of `mask`.
inline Diagram subset(const Polygon& p, const std::vector<Diagonal>& all, std::uint64_t mask) {
  std::set<Diagonal> ds;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if ((mask >> k) & 1U) ds.insert(all[k]);
  }
  return Diagram(p, std::move(ds));
}

}  // namespace ptolemy_lab::testing
