#include "ptolemy_lab/weak_ar.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/hom.hpp"

namespace ptolemy_lab {

namespace {

std::string show(const Diagonal& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

void require_dissecting(const Diagram& d, const Diagonal& c, ErrorCode code, const char* what) {
  if (!d.contains(c)) {
    throw Error(code, show(c) + " is not a member of the diagram, hence not " + what);
  }
  if (auto witness = crossing_witness(d, c)) {
    throw Error(code, show(c) + " is not " + what + ": it is crossed by " + show(*witness),
                witness);
  }
}

// Walk from `from` in steps of `dir` until reaching a vertex joined to
// `anchor` by a member or an edge. The edge next to the anchor always stops
// the walk.
Vertex scan(const Diagram& d, Vertex anchor, Vertex from, int dir) {
  const Polygon& p = d.polygon();
  Vertex t = from;
  while (!d.contains_or_edge(p.arc(anchor, t))) t = p.step(t, dir);
  return t;
}

std::vector<Vertex> bordering_cell_vertices(const Diagram& d, const Diagonal& c) {
  const CellDecomposition cells = cell_decomposition(d);
  const auto [left, right] = cells.cells_bordering(c);
  std::set<Vertex> all(left->vertices.begin(), left->vertices.end());
  all.insert(right->vertices.begin(), right->vertices.end());
  return {all.begin(), all.end()};
}

WeakARTriangle assemble(const Diagram& d, Direction dir, const Diagonal& c,
                        const std::array<WeakARTriangle, 2>& by_role) {
  const WeakARTriangle& t = by_role[0];
  const WeakARTriangle& u = by_role[1];
  std::array<Arc, 2> bt{t.b0, t.b1};
  std::array<Arc, 2> bu{u.b0, u.b1};
  std::sort(bt.begin(), bt.end());
  std::sort(bu.begin(), bu.end());
  if (t.x != u.x || bt != bu) {
    throw std::logic_error("weak AR triangle depends on the endpoint labelling of " + show(c));
  }

  WeakARTriangle out = t;
  out.direction = dir;
  out.cell_vertices = bordering_cell_vertices(d, c);
  for (const Vertex v : out.x.endpoints()) {
    if (!std::binary_search(out.cell_vertices.begin(), out.cell_vertices.end(), v)) {
      throw std::logic_error("weak AR end term " + show(out.x) +
                             " has an endpoint off the cells bordered by " + show(c));
    }
  }
  if (d.contains(out.x)) {
    throw std::logic_error("weak AR end term " + show(out.x) + " lies in the diagram");
  }
  return out;
}

// Checks shared by all four approximation oracles: non-zero summands are
// members distinct from `anchor` carrying a non-zero map in the required
// direction, and End(b0 (+) b1) is diagonal.
template <typename HomNonZero>
bool summands_ok(const Diagram& d, const Diagonal& anchor, const Arc& b0, const Arc& b1,
                 HomNonZero&& hom_nonzero) {
  const Polygon& p = d.polygon();
  for (const Arc& b : {b0, b1}) {
    const auto diag = p.as_diagonal(b);
    if (!diag) continue;
    if (!d.contains(*diag) || *diag == anchor || !hom_nonzero(*diag)) return false;
  }
  return summands_orthogonal(p, b0, b1);
}

}  // namespace

std::vector<Diagonal> WeakARTriangle::middle(const Polygon& p) const {
  std::vector<Diagonal> out;
  for (const Arc& b : {b0, b1}) {
    if (auto diag = p.as_diagonal(b)) out.push_back(*diag);
  }
  return out;
}

std::optional<Diagonal> crossing_witness(const Diagram& diagram, const Diagonal& d) {
  for (const Diagonal& e : diagram) {
    if (diagram.polygon().crosses(d, e)) return e;
  }
  return std::nullopt;
}

std::vector<Diagonal> ext_projectives(const Diagram& d) {
  const Polygon& p = d.polygon();
  std::vector<Diagonal> by_definition;
  for (const Diagonal& c : d) {
    const bool projective = std::all_of(d.begin(), d.end(),
                                        [&](const Diagonal& e) { return ext1_dim(p, c, e) == 0; });
    if (projective) by_definition.push_back(c);
  }
  if (by_definition != dissecting_diagonals(d)) {
    throw std::logic_error("Ext-projectives differ from the dissecting diagonals");
  }
  return by_definition;
}

std::vector<Diagonal> ext_injectives(const Diagram& d) {
  const Polygon& p = d.polygon();
  std::vector<Diagonal> by_definition;
  for (const Diagonal& a : d) {
    const bool injective = std::all_of(d.begin(), d.end(),
                                       [&](const Diagonal& e) { return ext1_dim(p, e, a) == 0; });
    if (injective) by_definition.push_back(a);
  }
  if (by_definition != dissecting_diagonals(d)) {
    throw std::logic_error("Ext-injectives differ from the dissecting diagonals");
  }
  return by_definition;
}

WeakARTriangle left_weak_ar(const Diagram& d, const Diagonal& c) {
  require_dissecting(d, c, ErrorCode::not_ext_projective, "Ext-projective");
  const Polygon& p = d.polygon();

  auto build = [&](Vertex vi, Vertex vj) {
    const Vertex vp = scan(d, vi, p.step(vj, -1), -1);
    const Vertex vq = scan(d, vj, p.step(vi, -1), -1);
    return WeakARTriangle{Direction::left, p.diagonal(vp, vq), p.arc(vi, vp), p.arc(vj, vq), c, {}};
  };
  return assemble(d, Direction::left, c, {build(c.first(), c.second()), build(c.second(), c.first())});
}

WeakARTriangle right_weak_ar(const Diagram& d, const Diagonal& a) {
  require_dissecting(d, a, ErrorCode::not_ext_injective, "Ext-injective");
  const Polygon& p = d.polygon();

  auto build = [&](Vertex vr, Vertex vs) {
    const Vertex vp = scan(d, vs, p.step(vr, 1), 1);
    const Vertex vq = scan(d, vr, p.step(vs, 1), 1);
    return WeakARTriangle{Direction::right, p.diagonal(vp, vq), p.arc(vs, vp), p.arc(vr, vq), a, {}};
  };
  return assemble(d, Direction::right, a, {build(a.first(), a.second()), build(a.second(), a.first())});
}

bool summands_orthogonal(const Polygon& p, const Arc& b0, const Arc& b1) {
  if (p.is_zero(b0) || p.is_zero(b1)) return true;
  if (b0 == b1) return false;
  return !p.crosses(b1, p.suspend_inverse(b0)) && !p.crosses(b0, p.suspend_inverse(b1));
}

bool verify_minimal_right_almost_split(const Diagram& d, const WeakARTriangle& t) {
  if (t.direction != Direction::left) {
    throw Error(ErrorCode::precondition_violation, "expected a left weak AR triangle");
  }
  const Polygon& p = d.polygon();
  const Diagonal& c = t.c;
  if (!d.contains(c)) return false;
  if (!summands_ok(d, c, t.b0, t.b1, [&](const Diagonal& b) { return hom_dim_to(p, b, c) == 1; })) {
    return false;
  }
  const auto middle = t.middle(p);
  return std::all_of(d.begin(), d.end(), [&](const Diagonal& e) {
    if (e == c || hom_dim_to(p, e, c) == 0) return true;
    return std::any_of(middle.begin(), middle.end(),
                       [&](const Diagonal& b) { return factors_to(p, e, c, b); });
  });
}

bool verify_minimal_left_almost_split(const Diagram& d, const WeakARTriangle& t) {
  if (t.direction != Direction::right) {
    throw Error(ErrorCode::precondition_violation, "expected a right weak AR triangle");
  }
  const Polygon& p = d.polygon();
  const Diagonal& a = t.c;
  if (!d.contains(a)) return false;
  if (!summands_ok(d, a, t.b0, t.b1, [&](const Diagonal& b) { return hom_dim_from(p, a, b) == 1; })) {
    return false;
  }
  const auto middle = t.middle(p);
  return std::all_of(d.begin(), d.end(), [&](const Diagonal& e) {
    if (e == a || hom_dim_from(p, a, e) == 0) return true;
    return std::any_of(middle.begin(), middle.end(),
                       [&](const Diagonal& b) { return factors_from(p, a, e, b); });
  });
}

bool verify_envelope(const Diagram& d, const Diagonal& x, const Arc& b0, const Arc& b1) {
  if (d.contains(x)) {
    throw Error(ErrorCode::precondition_violation, show(x) + " already lies in the diagram");
  }
  const Polygon& p = d.polygon();
  if (!summands_ok(d, x, b0, b1, [&](const Diagonal& b) { return hom_dim_from(p, x, b) == 1; })) {
    return false;
  }
  std::vector<Diagonal> middle;
  for (const Arc& b : {b0, b1}) {
    if (auto diag = p.as_diagonal(b)) middle.push_back(*diag);
  }
  return std::all_of(d.begin(), d.end(), [&](const Diagonal& e) {
    if (hom_dim_from(p, x, e) == 0) return true;
    return std::any_of(middle.begin(), middle.end(),
                       [&](const Diagonal& b) { return factors_from(p, x, e, b); });
  });
}

bool verify_cover(const Diagram& d, const Diagonal& z, const Arc& b0, const Arc& b1) {
  if (d.contains(z)) {
    throw Error(ErrorCode::precondition_violation, show(z) + " already lies in the diagram");
  }
  const Polygon& p = d.polygon();
  if (!summands_ok(d, z, b0, b1, [&](const Diagonal& b) { return hom_dim_to(p, b, z) == 1; })) {
    return false;
  }
  std::vector<Diagonal> middle;
  for (const Arc& b : {b0, b1}) {
    if (auto diag = p.as_diagonal(b)) middle.push_back(*diag);
  }
  return std::all_of(d.begin(), d.end(), [&](const Diagonal& e) {
    if (hom_dim_to(p, e, z) == 0) return true;
    return std::any_of(middle.begin(), middle.end(),
                       [&](const Diagonal& b) { return factors_to(p, e, z, b); });
  });
}

bool uniqueness_check(const Diagram& d) {
  std::set<Diagonal> left_ends;
  const auto projectives = ext_projectives(d);
  for (const Diagonal& c : projectives) left_ends.insert(left_weak_ar(d, c).x);
  std::set<Diagonal> right_ends;
  const auto injectives = ext_injectives(d);
  for (const Diagonal& a : injectives) right_ends.insert(right_weak_ar(d, a).x);
  return left_ends.size() == projectives.size() && right_ends.size() == injectives.size();
}

}  // namespace ptolemy_lab
