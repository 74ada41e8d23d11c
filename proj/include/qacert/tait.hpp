#pragma once

#include <map>
#include <vector>

#include "qacert/bigint.hpp"
#include "qacert/diagram.hpp"

namespace qacert {

// Checkerboard coloring as a per-face flag. Within each connected piece the
// face whose sorted boundary-arc list is lexicographically smallest is
// unshaded, which pins the two possible colorings deterministically.
std::vector<bool> checkerboard_shading(const LinkDiagram& d, const FaceData& f);

// +1 when the shaded regions meet the crossing at corners 0 and 2.
int tait_sign(const LinkDiagram& d, const FaceData& f,
              const std::vector<bool>& shaded, int crossing);
std::vector<int> tait_signs(const LinkDiagram& d);

enum class SmoothType { Zero, Infinity };

// The zero smoothing merges the two shaded corners of the crossing
// (contracting the corresponding Tait edge); infinity merges the unshaded
// corners (deleting it).
LinkDiagram smooth(const LinkDiagram& d, int crossing, SmoothType type);

// Signed planar multigraph on the shaded faces, one edge per crossing.
struct TaitGraph {
  int vertices = 0;
  struct Edge {
    int u, v, sign, crossing;
  };
  std::vector<Edge> edges;
};
TaitGraph tait_graph(const LinkDiagram& d);

// Spanning-tree census of the Tait graph, bucketed by the number of
// positive edges used. Refuses via TooManyTrees when the total tree count
// (known in advance from the matrix-tree theorem) exceeds the budget.
std::map<int, BigInt> spanning_tree_profile(const LinkDiagram& d,
                                            long long budget = 100000000LL);

// |sum over v of (-1)^v * trees with v positive edges|
BigInt determinant_tree(const LinkDiagram& d, long long budget = 100000000LL);

// Determinant of the symmetric form on the unshaded faces.
BigInt determinant_goeritz(const LinkDiagram& d);

}  // namespace qacert
