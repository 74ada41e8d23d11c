#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qacert {

// Planar link diagram in PD form. Each crossing lists the four incident arc
// labels counterclockwise, starting from the incoming under-strand, so the
// under-strand occupies slots 0/2 and the over-strand slots 1/3. Closed
// components that meet no crossing are tracked by count only.
struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;
  int free_circles = 0;
  // Index of the distinguished crossing tracked through tangle replacement.
  std::optional<int> marked;

  bool empty() const { return crossings.empty(); }
  int size() const { return static_cast<int>(crossings.size()); }
};

LinkDiagram unknot();

// Text form: whitespace-separated X[a,b,c,d] terms, '#' starts a line
// comment, empty input is the unknot.
LinkDiagram parse_pd(const std::string& text);
std::string to_pd(const LinkDiagram& d);

// Faces of the underlying 4-valent plane graph as orbits of darts, where
// dart id = 4*crossing + slot. The orbit of a dart is traced by hopping to
// the other end of its arc and turning one slot counterclockwise.
struct FaceData {
  std::vector<std::vector<int>> faces;  // dart ids in boundary order
  std::vector<int> face_of;             // dart id -> face index
};
FaceData compute_faces(const LinkDiagram& d);

// Corner k of a crossing is the region between slots k and k+1 (mod 4).
int corner_face(const FaceData& f, int crossing, int corner);

int arc_count(const LinkDiagram& d);
int component_count(const LinkDiagram& d);
bool crossing_graph_connected(const LinkDiagram& d);
int crossing_graph_pieces(const LinkDiagram& d);

// Structural checks: every arc label used exactly twice, and the face count
// satisfies Euler's formula piece by piece. Throws on violation.
void validate(const LinkDiagram& d);

bool is_alternating(const LinkDiagram& d);

// Writhe under a fixed deterministic orientation of every component.
int writhe(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);

// A splice reconnects the strand ends at two darts of removed crossings:
// the strand arriving on the arc at (c1,s1) continues on the arc at (c2,s2).
struct Splice {
  int c1, s1, c2, s2;
};

// Remove the given crossings and reconnect strands along the splices. Every
// dart of a removed crossing must appear in exactly one splice. Strand
// classes left with no free ends become free circles. Arcs are renumbered
// by first occurrence and kept crossings are compacted in order.
LinkDiagram apply_splices(const LinkDiagram& d, const std::vector<int>& removed,
                          const std::vector<Splice>& splices);

// Join two diagrams along their highest-numbered arcs.
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);

struct SimplifyMove {
  std::string kind;  // "R1" or "R2"
  int c1 = -1;
  int c2 = -1;  // second crossing for R2, unused for R1
};

struct SimplifyResult {
  LinkDiagram diagram;
  std::vector<SimplifyMove> trace;
};

// Greedy crossing-reducing Reidemeister moves: repeatedly perform the first
// available R1 (by crossing index), else the first R2 (by index pair). Move
// indices in the trace refer to the diagram state at the time of the move.
SimplifyResult simplify(const LinkDiagram& d);

// Re-apply one recorded move, checking that it is actually available.
bool apply_move(LinkDiagram& d, const SimplifyMove& m);

// Label-independent identity string: minimized over all traversal starts and
// directions, with arcs renumbered in traversal order. Split diagrams get
// the sorted concatenation of per-piece keys.
std::string canonical_key(const LinkDiagram& d);

}  // namespace qacert
