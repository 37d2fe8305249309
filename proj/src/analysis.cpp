#include "ptolemy_lab/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "ptolemy_lab/mutation.hpp"

namespace ptolemy_lab {

AnalysisReport analyze(const Diagram& d) {
  AnalysisReport r{.diagram = d,
                   .ptolemy = is_ptolemy(d),
                   .extension_closed = extension_closed_oracle(d),
                   .cells = cell_decomposition(d),
                   .ext_projectives = ext_projectives(d),
                   .weak_ar_left = {},
                   .weak_ar_right = {},
                   .mutable_two_empty_cells = {}};
  if (r.ptolemy != r.extension_closed) {
    std::ostringstream os;
    os << "Ptolemy test says " << r.ptolemy << " but the extension-closure oracle says "
       << r.extension_closed << " for " << to_text(document_json(d));
    throw std::logic_error(os.str());
  }
  if (!r.ptolemy) return r;

  for (const Diagonal& c : r.ext_projectives) {
    r.weak_ar_left.push_back(left_weak_ar(d, c));
    r.weak_ar_right.push_back(right_weak_ar(d, c));
    if (borders_two_empty_cells(d, c)) r.mutable_two_empty_cells.push_back(c);
  }
  return r;
}

Json analysis_json(const AnalysisReport& r) {
  const Polygon& p = r.diagram.polygon();
  Json out;
  out["ptolemy"] = r.ptolemy;
  out["extension_closed"] = r.extension_closed;
  out["dissecting"] = diagonals_json(r.cells.dissecting);
  out["cells"] = Json::array();
  for (const Cell& c : r.cells.cells) out["cells"].push_back(cell_json(c));
  out["ext_projectives"] = diagonals_json(r.ext_projectives);
  out["weak_ar_left"] = Json::array();
  for (const WeakARTriangle& t : r.weak_ar_left) out["weak_ar_left"].push_back(triangle_json(p, t));
  out["weak_ar_right"] = Json::array();
  for (const WeakARTriangle& t : r.weak_ar_right) out["weak_ar_right"].push_back(triangle_json(p, t));
  out["mutable_two_empty_cells"] = diagonals_json(r.mutable_two_empty_cells);
  return out;
}

}  // namespace ptolemy_lab
