#include "ptolemy_lab/hom.hpp"

#include <algorithm>
#include <sstream>

#include "ptolemy_lab/error.hpp"

namespace ptolemy_lab {

namespace {

std::string describe(const Diagonal& a, const Diagonal& b) {
  std::ostringstream os;
  os << a << " and " << b;
  return os.str();
}

// Label `y` so that its first endpoint lands in [lo0, hi0] and the second
// in [lo1, hi1]. The two intervals are disjoint in every caller.
std::optional<RelativeEndpoints> label_into(const Polygon& p, const Diagonal& y, Vertex lo0,
                                            Vertex hi0, Vertex lo1, Vertex hi1) {
  const Vertex u = y.first();
  const Vertex v = y.second();
  if (p.in_interval(u, lo0, hi0) && p.in_interval(v, lo1, hi1)) return RelativeEndpoints{u, v};
  if (p.in_interval(v, lo0, hi0) && p.in_interval(u, lo1, hi1)) return RelativeEndpoints{v, u};
  return std::nullopt;
}

bool one_in_each(const Polygon& p, const Arc& s, Vertex lo0, Vertex hi0, Vertex lo1, Vertex hi1) {
  const Vertex u = s.first();
  const Vertex v = s.second();
  return (p.in_interval(u, lo0, hi0) && p.in_interval(v, lo1, hi1)) ||
         (p.in_interval(v, lo0, hi0) && p.in_interval(u, lo1, hi1));
}

}  // namespace

int ext1_dim(const Polygon& p, const Diagonal& a, const Diagonal& c) {
  return p.crosses(a, c) ? 1 : 0;
}

std::optional<RelativeEndpoints> relative_from(const Polygon& p, const Diagonal& x,
                                               const Diagonal& y) {
  const Vertex x0 = x.first();
  const Vertex x1 = x.second();
  return label_into(p, y, x0, p.step(x1, -2), x1, p.step(x0, -2));
}

std::optional<RelativeEndpoints> relative_to(const Polygon& p, const Diagonal& z,
                                             const Diagonal& x) {
  const Vertex x0 = x.first();
  const Vertex x1 = x.second();
  return label_into(p, z, p.step(x0, 2), x1, p.step(x1, 2), x0);
}

int hom_dim_from(const Polygon& p, const Diagonal& x, const Diagonal& y) {
  return relative_from(p, x, y) ? 1 : 0;
}

int hom_dim_to(const Polygon& p, const Diagonal& z, const Diagonal& x) {
  return relative_to(p, z, x) ? 1 : 0;
}

bool factors_from(const Polygon& p, const Diagonal& x, const Diagonal& y, const Arc& s) {
  const auto rel = relative_from(p, x, y);
  if (!rel) {
    throw Error(ErrorCode::precondition_violation,
                "no non-zero morphism between " + describe(x, y));
  }
  if (p.is_zero(s)) return false;
  return one_in_each(p, s, x.first(), rel->first, x.second(), rel->second);
}

bool factors_to(const Polygon& p, const Diagonal& z, const Diagonal& x, const Arc& s) {
  const auto rel = relative_to(p, z, x);
  if (!rel) {
    throw Error(ErrorCode::precondition_violation, "no non-zero morphism between " + describe(z, x));
  }
  if (p.is_zero(s)) return false;
  return one_in_each(p, s, rel->first, x.second(), rel->second, x.first());
}

CrossingTriangles crossing_triangles(const Polygon& p, const Diagonal& a, const Diagonal& c) {
  if (!p.crosses(a, c)) {
    throw Error(ErrorCode::not_crossing, "diagonals do not cross: " + describe(a, c));
  }
  // Endpoints alternate around the polygon, so the nearest endpoint of c
  // clockwise from a_k is also the nearest endpoint of a or c.
  auto clockwise_partner = [&](Vertex ak) {
    return p.distance(c.first(), ak) < p.distance(c.second(), ak) ? c.first() : c.second();
  };
  const Vertex a0 = a.first();
  const Vertex a1 = a.second();
  const Vertex c_for_a0 = clockwise_partner(a0);
  const Vertex c_for_a1 = clockwise_partner(a1);

  std::array<Arc, 2> b_pair{p.arc(a0, c_for_a0), p.arc(a1, c_for_a1)};
  std::array<Arc, 2> s_pair{p.arc(a0, c.other(c_for_a0)), p.arc(a1, c.other(c_for_a1))};
  std::sort(b_pair.begin(), b_pair.end());
  std::sort(s_pair.begin(), s_pair.end());
  return CrossingTriangles{a, c, b_pair, s_pair};
}

bool is_ar_triangle(const Polygon& p, const CrossingTriangles& t, TriangleSide side) {
  switch (side) {
    case TriangleSide::b_side:
      return t.a == p.suspend(t.c);
    case TriangleSide::s_side:
      return t.c == p.suspend(t.a);
  }
  return false;
}

std::vector<Diagonal> ar_mesh(const Polygon& p, const Diagonal& a) {
  const auto t = crossing_triangles(p, p.suspend(a), a);
  std::vector<Diagonal> out;
  for (const Arc& b : t.b_pair) {
    if (auto d = p.as_diagonal(b)) out.push_back(*d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ARQuiver::ARQuiver(const Polygon& p) : polygon_(p), nodes_(p.all_diagonals()) {
  for (const Diagonal& d : nodes_) {
    for (const Vertex moved : d.endpoints()) {
      const Vertex fixed = d.other(moved);
      const Vertex next = p.step(moved, 1);
      if (p.is_diagonal(fixed, next)) arrows_.emplace_back(d, p.diagonal(fixed, next));
    }
  }
  std::sort(arrows_.begin(), arrows_.end());
}

std::vector<Diagonal> ARQuiver::successors(const Diagonal& d) const {
  std::vector<Diagonal> out;
  for (const auto& [from, to] : arrows_) {
    if (from == d) out.push_back(to);
  }
  return out;
}

std::vector<Diagonal> ARQuiver::predecessors(const Diagonal& d) const {
  std::vector<Diagonal> out;
  for (const auto& [from, to] : arrows_) {
    if (to == d) out.push_back(from);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ARQuiver ar_quiver(const Polygon& p) { return ARQuiver(p); }

}  // namespace ptolemy_lab
