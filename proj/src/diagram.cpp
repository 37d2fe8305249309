#include "ptolemy_lab/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/hom.hpp"

namespace ptolemy_lab {

namespace {

// Faces of the polygon cut along pairwise non-crossing diagonals, each as
// an anticlockwise vertex list starting at its smallest vertex.
std::vector<std::vector<Vertex>> split_cells(const Polygon& p,
                                             const std::vector<Diagonal>& dissecting) {
  std::vector<std::vector<Vertex>> cells(1);
  for (Vertex v = 0; v < p.size(); ++v) cells.front().push_back(v);

  for (const Diagonal& d : dissecting) {
    for (auto& cell : cells) {
      const auto i = std::find(cell.begin(), cell.end(), d.first());
      const auto j = std::find(cell.begin(), cell.end(), d.second());
      if (i == cell.end() || j == cell.end()) continue;
      // Vertices are ascending within a cell, so i precedes j.
      std::vector<Vertex> inner(i, j + 1);
      std::vector<Vertex> outer(j, cell.end());
      outer.insert(outer.end(), cell.begin(), i + 1);
      std::rotate(outer.begin(), std::min_element(outer.begin(), outer.end()), outer.end());
      cell = std::move(inner);
      cells.push_back(std::move(outer));
      break;
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Diagonal> internal_diagonals(const Polygon& p, const std::vector<Vertex>& vertices) {
  std::vector<Diagonal> out;
  const std::size_t m = vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      out.push_back(p.diagonal(vertices[i], vertices[j]));
    }
  }
  return out;
}

// The up to four endpoint-connecting arcs of a crossing pair that are
// genuine diagonals.
std::vector<Diagonal> connectors(const Polygon& p, const Diagonal& a, const Diagonal& b) {
  std::vector<Diagonal> out;
  for (const Vertex u : a.endpoints()) {
    for (const Vertex v : b.endpoints()) {
      if (p.is_diagonal(u, v)) out.push_back(p.diagonal(u, v));
    }
  }
  return out;
}

}  // namespace

Diagram::Diagram(const Polygon& p, std::set<Diagonal> diagonals)
    : polygon_(p), diagonals_(std::move(diagonals)) {
  for (const Diagonal& d : diagonals_) {
    if (!p.is_diagonal(d.first(), d.second())) {
      std::ostringstream os;
      os << d << " is not a diagonal of the " << p.size() << "-gon";
      throw Error(ErrorCode::parse_error, os.str());
    }
  }
}

Diagram Diagram::of(const Polygon& p, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::set<Diagonal> ds;
  for (const auto& [u, v] : pairs) ds.insert(p.diagonal(u, v));
  return Diagram(p, std::move(ds));
}

bool Diagram::contains(const Arc& a) const {
  const auto d = polygon_.as_diagonal(a);
  return d && diagonals_.contains(*d);
}

Diagram Diagram::with(const Diagonal& d) const {
  Diagram out = *this;
  out.diagonals_.insert(d);
  return out;
}

Diagram Diagram::without(const Diagonal& d) const {
  Diagram out = *this;
  out.diagonals_.erase(d);
  return out;
}

std::vector<Diagonal> Diagram::crossing(const Arc& d) const {
  std::vector<Diagonal> out;
  for (const Diagonal& e : diagonals_) {
    if (polygon_.crosses(d, e)) out.push_back(e);
  }
  return out;
}

bool is_ptolemy(const Diagram& d) {
  const Polygon& p = d.polygon();
  for (auto a = d.begin(); a != d.end(); ++a) {
    for (auto b = std::next(a); b != d.end(); ++b) {
      if (!p.crosses(*a, *b)) continue;
      for (const Diagonal& e : connectors(p, *a, *b)) {
        if (!d.contains(e)) return false;
      }
    }
  }
  return true;
}

Diagram ptolemy_closure(const Diagram& d) {
  const Polygon& p = d.polygon();
  std::set<Diagonal> current = d.diagonals();
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Diagonal> members(current.begin(), current.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!p.crosses(members[i], members[j])) continue;
        for (const Diagonal& e : connectors(p, members[i], members[j])) {
          changed |= current.insert(e).second;
        }
      }
    }
  }
  return Diagram(p, std::move(current));
}

bool extension_closed_oracle(const Diagram& d) {
  const Polygon& p = d.polygon();
  for (auto a = d.begin(); a != d.end(); ++a) {
    for (auto c = std::next(a); c != d.end(); ++c) {
      if (!p.crosses(*a, *c)) continue;
      const CrossingTriangles t = crossing_triangles(p, *a, *c);
      for (const auto& pair : {t.b_pair, t.s_pair}) {
        for (const Arc& middle : pair) {
          if (!p.is_zero(middle) && !d.contains(middle)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Diagonal> dissecting_diagonals(const Diagram& d) {
  std::vector<Diagonal> out;
  for (const Diagonal& a : d) {
    const bool crossed = std::any_of(d.begin(), d.end(),
                                     [&](const Diagonal& b) { return d.polygon().crosses(a, b); });
    if (!crossed) out.push_back(a);
  }
  return out;
}

bool Cell::has_side(const Arc& a) const {
  const std::size_t m = vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = vertices[i];
    const Vertex v = vertices[(i + 1) % m];
    if (a.has_endpoint(u) && a.has_endpoint(v)) return true;
  }
  return false;
}

std::pair<const Cell*, const Cell*> CellDecomposition::cells_bordering(const Diagonal& d) const {
  const Cell* first = nullptr;
  const Cell* second = nullptr;
  for (const Cell& cell : cells) {
    if (!cell.has_side(d)) continue;
    (first == nullptr ? first : second) = &cell;
  }
  if (first == nullptr || second == nullptr) {
    std::ostringstream os;
    os << d << " is not a dissecting diagonal";
    throw Error(ErrorCode::precondition_violation, os.str());
  }
  return {first, second};
}

std::vector<Diagonal> internal_diagonals(const Polygon& p, const Cell& cell) {
  return internal_diagonals(p, cell.vertices);
}

CellDecomposition cell_decomposition(const Diagram& d) {
  const Polygon& p = d.polygon();
  CellDecomposition out;
  out.dissecting = dissecting_diagonals(d);
  for (auto& vertices : split_cells(p, out.dissecting)) {
    Cell cell{std::move(vertices), CellKind::empty};
    const auto inner = internal_diagonals(p, cell.vertices);
    const auto members =
        std::count_if(inner.begin(), inner.end(), [&](const Diagonal& e) { return d.contains(e); });
    if (members == 0) {
      cell.kind = CellKind::empty;
    } else if (static_cast<std::size_t>(members) == inner.size()) {
      cell.kind = CellKind::clique;
    } else {
      cell.kind = CellKind::mixed;
    }
    out.cells.push_back(std::move(cell));
  }
  return out;
}

std::vector<std::vector<Diagonal>> enumerate_dissections(const Polygon& p) {
  const auto all = p.all_diagonals();
  std::vector<std::vector<Diagonal>> out;
  std::vector<Diagonal> chosen;

  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (next == all.size()) {
      out.push_back(chosen);
      return;
    }
    self(self, next + 1);
    const Diagonal& d = all[next];
    const bool fits = std::none_of(chosen.begin(), chosen.end(),
                                   [&](const Diagonal& e) { return p.crosses(d, e); });
    if (fits) {
      chosen.push_back(d);
      self(self, next + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<Diagram> enumerate_ptolemy(const Polygon& p, int max_size) {
  if (p.size() > max_size) {
    throw Error(ErrorCode::size_limit, "enumeration is limited to polygons with at most " +
                                           std::to_string(max_size) + " vertices");
  }
  std::vector<std::set<Diagonal>> found;
  for (const auto& dissection : enumerate_dissections(p)) {
    std::vector<std::vector<Diagonal>> choosable;
    for (const auto& cell : split_cells(p, dissection)) {
      if (cell.size() > 3) choosable.push_back(internal_diagonals(p, cell));
    }
    const std::size_t combos = std::size_t{1} << choosable.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      std::set<Diagonal> ds(dissection.begin(), dissection.end());
      for (std::size_t k = 0; k < choosable.size(); ++k) {
        if ((mask >> k) & 1U) ds.insert(choosable[k].begin(), choosable[k].end());
      }
      found.push_back(std::move(ds));
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<Diagram> out;
  out.reserve(found.size());
  for (auto& ds : found) out.emplace_back(p, std::move(ds));
  return out;
}

}  // namespace ptolemy_lab
