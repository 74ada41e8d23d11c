#include "qacert/tangle.hpp"

#include <algorithm>
#include <cstdlib>

#include "qacert/errors.hpp"
#include "qacert/tait.hpp"

namespace qacert {

int epsilon(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.size())
    throw PreconditionViolated("crossing index out of range");
  auto f = compute_faces(d);
  auto shaded = checkerboard_shading(d, f);
  return tait_sign(d, f, shaded, crossing);
}

void validate_extension(const std::vector<int>& coeffs, int eps) {
  if (coeffs.empty())
    throw ExtensionViolated("tangle needs at least one coefficient", 0);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (eps * coeffs[i] < 1)
      throw ExtensionViolated(
          "coefficient " + std::to_string(coeffs[i]) + " at position " +
              std::to_string(i + 1) + " conflicts with crossing sign " +
              std::to_string(eps),
          static_cast<int>(i + 1));
}

std::vector<int> tangle_exponents(const std::vector<int>& coeffs, int eps) {
  validate_extension(coeffs, eps);
  int m = static_cast<int>(coeffs.size());
  std::vector<int> exps;
  for (int j = m; j >= 2; --j) {
    int sign = ((m - j + 1) % 2 == 0) ? 1 : -1;
    exps.push_back(sign * coeffs[j - 1]);
  }
  int sign1 = (m % 2 == 0) ? 1 : -1;
  exps.push_back(sign1 * (coeffs[0] - eps));
  return exps;
}

namespace {

int max_arc_label(const LinkDiagram& d) {
  int m = 0;
  for (const auto& t : d.crossings)
    m = std::max({m, t[0], t[1], t[2], t[3]});
  return m;
}

// Insert one crossing into the region at corner k of crossing c. A vertical
// band subdivides the strand pair; a horizontal band doubles it. Returns the
// index of the new crossing.
int insert_band(LinkDiagram& d, int c, int k, bool vertical) {
  int u = d.crossings[c][k];
  int v = d.crossings[c][(k + 1) % 4];
  int base = max_arc_label(d);
  int x = base + 1, y = base + 2;
  d.crossings[c][k] = x;
  d.crossings[c][(k + 1) % 4] = y;
  std::array<int, 4> z{};
  if (u == v) {
    int w = base + 3;
    z = vertical ? std::array<int, 4>{y, x, w, w}
                 : std::array<int, 4>{x, w, w, y};
  } else {
    z = vertical ? std::array<int, 4>{y, x, u, v}
                 : std::array<int, 4>{x, u, v, y};
  }
  d.crossings.push_back(z);
  return d.size() - 1;
}

// One twist block of |n| insertions; assumes the corner arithmetic for the
// crossing `c` has already been settled by the caller.
int twist_block(LinkDiagram& d, int c, int first_corner, bool vertical,
                int reps) {
  int chain_corner = vertical ? 2 : 1;
  int cur = insert_band(d, c, first_corner, vertical);
  for (int i = 1; i < reps; ++i)
    cur = insert_band(d, cur, chain_corner, vertical);
  return cur;
}

}  // namespace

LinkDiagram twist(const LinkDiagram& d, int crossing, int n) {
  if (epsilon(d, crossing) != 1)
    throw PreconditionViolated("twisting requires a positive crossing");
  LinkDiagram r = d;
  if (n == 0) {
    r.marked = crossing;
    return r;
  }
  bool vertical = n > 0;
  r.marked = twist_block(r, crossing, vertical ? 0 : 1, vertical,
                         std::abs(n));
  validate(r);
  return r;
}

LinkDiagram replace_with_tangle(const LinkDiagram& d, int crossing,
                                const std::vector<int>& coeffs) {
  int eps = epsilon(d, crossing);
  validate_extension(coeffs, eps);
  if (eps == -1) {
    std::vector<int> negated;
    for (int a : coeffs) negated.push_back(-a);
    return mirror(replace_with_tangle(mirror(d), crossing, negated));
  }

  auto exps = tangle_exponents(coeffs, eps);
  LinkDiagram r = d;
  int cur = crossing;
  // Blocks alternate strictly between horizontal and vertical; only the
  // final exponent can vanish. After a vertical block the next horizontal
  // one starts at corner 1 of the block's outer crossing, and after a
  // horizontal block the next vertical one starts at corner 0.
  bool have_prev = false;
  bool prev_vertical = false;
  for (int e : exps) {
    if (e == 0) continue;
    bool vertical = e > 0;
    int first_corner;
    if (!have_prev) {
      first_corner = vertical ? 0 : 1;
    } else {
      first_corner = prev_vertical ? 1 : 0;
    }
    cur = twist_block(r, cur, first_corner, vertical, std::abs(e));
    have_prev = true;
    prev_vertical = vertical;
  }
  r.marked = cur;
  validate(r);
  return r;
}

}  // namespace qacert
