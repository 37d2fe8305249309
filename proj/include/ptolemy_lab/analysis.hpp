#pragma once

#include <vector>

#include "ptolemy_lab/diagram.hpp"
#include "ptolemy_lab/serialize.hpp"
#include "ptolemy_lab/weak_ar.hpp"

namespace ptolemy_lab {

struct AnalysisReport {
  Diagram diagram;
  bool ptolemy = false;
  bool extension_closed = false;
  CellDecomposition cells;
  std::vector<Diagonal> ext_projectives;
  /// Weak AR triangles and the mutable list are only filled in for
  /// Ptolemy diagrams.
  std::vector<WeakARTriangle> weak_ar_left;
  std::vector<WeakARTriangle> weak_ar_right;
  /// Ext-projectives whose two bordering cells are both empty.
  std::vector<Diagonal> mutable_two_empty_cells;
};

/// Throws std::logic_error if the Ptolemy test and the extension-closure
/// oracle disagree.
AnalysisReport analyze(const Diagram& d);

Json analysis_json(const AnalysisReport& r);

}  // namespace ptolemy_lab
