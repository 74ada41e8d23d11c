#pragma once

#include <string>
#include <vector>

#include "qacert/bigint.hpp"
#include "qacert/diagram.hpp"
#include "qacert/tait.hpp"

namespace qacert {

// Standard pretzel diagram P(t_1,...,t_k): one twist column per entry,
// stacked top to bottom, columns joined cyclically by top and bottom bars.
// Entries must be nonzero; a single entry closes into a 2-strand torus
// diagram.
LinkDiagram pretzel_diagram(const std::vector<int>& entries);

// |sum_i prod_{j != i} t_j| for two or more strands, |t_1| for one.
BigInt pretzel_determinant(const std::vector<int>& entries);

LinkDiagram torus2(int k);

enum class PretzelClass {
  Alternating,
  QuasiAlternating,
  NotQuasiAlternating,
  Open,
};

struct PretzelClassification {
  PretzelClass cls = PretzelClass::Open;
  std::string reason;
};

std::string pretzel_class_name(PretzelClass cls);

PretzelClassification classify_pretzel(const std::vector<int>& entries);

struct UnitColumnSmoothing {
  LinkDiagram diagram;
  SmoothType label = SmoothType::Zero;  // name of the structural smoothing
  int crossing = -1;                    // index of the smoothed crossing
};

// Smooth the crossing of the first entry equal to 1 so that the remaining
// columns close into a connected sum of 2-strand torus links.
UnitColumnSmoothing unit_column_smoothing(const std::vector<int>& entries);

}  // namespace qacert
