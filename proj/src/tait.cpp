#include "qacert/tait.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "qacert/errors.hpp"

namespace qacert {

namespace {

// Exact integer determinant, fraction-free Gaussian elimination.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<int>> face_arc_lists(const LinkDiagram& d,
                                             const FaceData& f) {
  std::vector<std::vector<int>> lists(f.faces.size());
  for (size_t i = 0; i < f.faces.size(); ++i) {
    for (int dart : f.faces[i])
      lists[i].push_back(d.crossings[dart / 4][dart % 4]);
    std::sort(lists[i].begin(), lists[i].end());
  }
  return lists;
}

}  // namespace

std::vector<bool> checkerboard_shading(const LinkDiagram& d,
                                       const FaceData& f) {
  int nf = static_cast<int>(f.faces.size());
  auto lists = face_arc_lists(d, f);

  // Faces on either side of each arc must take opposite colors.
  std::map<int, std::vector<int>> arc_faces;
  for (int dart = 0; dart < 4 * d.size(); ++dart)
    arc_faces[d.crossings[dart / 4][dart % 4]].push_back(f.face_of[dart]);

  std::vector<std::vector<int>> adjacent(nf);
  for (const auto& [arc, fs] : arc_faces) {
    adjacent[fs[0]].push_back(fs[1]);
    adjacent[fs[1]].push_back(fs[0]);
  }

  std::vector<int> color(nf, -1);
  for (;;) {
    int seed = -1;
    for (int i = 0; i < nf; ++i) {
      if (color[i] != -1) continue;
      if (seed == -1 || lists[i] < lists[seed]) seed = i;
    }
    if (seed == -1) break;
    color[seed] = 0;  // unshaded
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int next : adjacent[cur]) {
        if (color[next] == -1) {
          color[next] = 1 - color[cur];
          queue.push_back(next);
        } else if (color[next] == color[cur]) {
          throw std::logic_error("faces are not checkerboard colorable");
        }
      }
    }
  }
  std::vector<bool> shaded(nf);
  for (int i = 0; i < nf; ++i) shaded[i] = color[i] == 1;
  return shaded;
}

int tait_sign(const LinkDiagram& d, const FaceData& f,
              const std::vector<bool>& shaded, int crossing) {
  (void)d;
  bool s0 = shaded[corner_face(f, crossing, 0)];
  bool s1 = shaded[corner_face(f, crossing, 1)];
  if (s0 == s1) throw std::logic_error("adjacent corners equally shaded");
  return s0 ? 1 : -1;
}

std::vector<int> tait_signs(const LinkDiagram& d) {
  auto f = compute_faces(d);
  auto shaded = checkerboard_shading(d, f);
  std::vector<int> signs(d.size());
  for (int c = 0; c < d.size(); ++c) signs[c] = tait_sign(d, f, shaded, c);
  return signs;
}

LinkDiagram smooth(const LinkDiagram& d, int crossing, SmoothType type) {
  auto f = compute_faces(d);
  auto shaded = checkerboard_shading(d, f);
  int sign = tait_sign(d, f, shaded, crossing);
  // Joining slots (0,3) and (1,2) merges corners 0 and 2; joining (0,1) and
  // (2,3) merges corners 1 and 3.
  bool merge_02 = (type == SmoothType::Zero) == (sign == 1);
  std::vector<Splice> sp;
  if (merge_02) {
    sp = {{crossing, 0, crossing, 3}, {crossing, 1, crossing, 2}};
  } else {
    sp = {{crossing, 0, crossing, 1}, {crossing, 2, crossing, 3}};
  }
  return apply_splices(d, {crossing}, sp);
}

TaitGraph tait_graph(const LinkDiagram& d) {
  auto f = compute_faces(d);
  auto shaded = checkerboard_shading(d, f);
  std::vector<int> vertex_of(f.faces.size(), -1);
  TaitGraph g;
  for (size_t i = 0; i < f.faces.size(); ++i)
    if (shaded[i]) vertex_of[i] = g.vertices++;
  for (int c = 0; c < d.size(); ++c) {
    int sign = tait_sign(d, f, shaded, c);
    int k = sign == 1 ? 0 : 1;  // shaded corner pair: {0,2} or {1,3}
    int u = vertex_of[corner_face(f, c, k)];
    int v = vertex_of[corner_face(f, c, k + 2)];
    g.edges.push_back({u, v, sign, c});
  }
  return g;
}

namespace {

BigInt matrix_tree_count(int vertices, const std::vector<TaitGraph::Edge>& edges) {
  if (vertices == 0) return 0;
  if (vertices == 1) return 1;
  std::vector<std::vector<BigInt>> lap(vertices, std::vector<BigInt>(vertices, 0));
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    lap[e.u][e.u] += 1;
    lap[e.v][e.v] += 1;
    lap[e.u][e.v] -= 1;
    lap[e.v][e.u] -= 1;
  }
  std::vector<std::vector<BigInt>> minor(vertices - 1,
                                         std::vector<BigInt>(vertices - 1));
  for (int i = 1; i < vertices; ++i)
    for (int j = 1; j < vertices; ++j) minor[i - 1][j - 1] = lap[i][j];
  BigInt det = bareiss_det(std::move(minor));
  return det < 0 ? -det : det;
}

struct MinorEdge {
  int u, v, sign;
};

bool minor_connected(int vertices, const std::vector<MinorEdge>& edges) {
  if (vertices <= 1) return true;
  std::vector<int> parent(vertices);
  for (int i = 0; i < vertices; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int pieces = vertices;
  for (const auto& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --pieces;
    }
  }
  return pieces == 1;
}

std::string minor_key(int vertices, std::vector<MinorEdge> edges) {
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  auto cmp = [](const MinorEdge& a, const MinorEdge& b) {
    return std::tie(a.u, a.v, a.sign) < std::tie(b.u, b.v, b.sign);
  };
  std::sort(edges.begin(), edges.end(), cmp);
  std::unordered_map<int, int> relabel;
  for (const auto& e : edges) {
    if (!relabel.count(e.u)) relabel[e.u] = static_cast<int>(relabel.size());
    if (!relabel.count(e.v)) relabel[e.v] = static_cast<int>(relabel.size());
  }
  for (auto& e : edges) {
    e.u = relabel[e.u];
    e.v = relabel[e.v];
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), cmp);
  std::ostringstream out;
  out << vertices << ':';
  for (const auto& e : edges) out << e.u << ',' << e.v << ',' << e.sign << ';';
  return out.str();
}

using Profile = std::map<int, BigInt>;

void profile_add(Profile& into, const Profile& from, int shift) {
  for (const auto& [v, count] : from) into[v + shift] += count;
}

// Deletion/contraction on the signed multigraph; loops never enter a tree.
Profile tree_profile(int vertices, std::vector<MinorEdge> edges,
                     std::map<std::string, Profile>& memo) {
  while (!edges.empty() && edges.back().u == edges.back().v) edges.pop_back();
  if (vertices == 1) {
    Profile base;
    bool only_loops = true;
    for (const auto& e : edges)
      if (e.u != e.v) only_loops = false;
    if (only_loops) {
      base[0] = 1;
      return base;
    }
  }
  if (edges.empty()) return {};
  if (!minor_connected(vertices, edges)) return {};

  std::string key = minor_key(vertices, edges);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  MinorEdge e = edges.back();
  edges.pop_back();
  if (e.u == e.v) {
    Profile r = tree_profile(vertices, std::move(edges), memo);
    memo[key] = r;
    return r;
  }

  Profile result;
  // delete e
  profile_add(result, tree_profile(vertices, edges, memo), 0);
  // contract e: merge v into u
  std::vector<MinorEdge> contracted;
  contracted.reserve(edges.size());
  for (auto f : edges) {
    if (f.u == e.v) f.u = e.u;
    if (f.v == e.v) f.v = e.u;
    if (f.u != f.v) contracted.push_back(f);
  }
  // compact labels so vertex count stays accurate
  std::unordered_map<int, int> relabel;
  relabel[e.u] = 0;
  for (auto& f : contracted) {
    if (!relabel.count(f.u)) relabel[f.u] = static_cast<int>(relabel.size());
    if (!relabel.count(f.v)) relabel[f.v] = static_cast<int>(relabel.size());
    f.u = relabel[f.u];
    f.v = relabel[f.v];
  }
  if (static_cast<int>(relabel.size()) == vertices - 1) {
    profile_add(result,
                tree_profile(vertices - 1, std::move(contracted), memo),
                e.sign == 1 ? 1 : 0);
  }
  memo[key] = result;
  return result;
}

}  // namespace

std::map<int, BigInt> spanning_tree_profile(const LinkDiagram& d,
                                            long long budget) {
  if (d.empty()) {
    Profile p;
    if (d.free_circles == 1) p[0] = 1;
    return p;
  }
  if (d.free_circles > 0 || crossing_graph_pieces(d) > 1) return {};

  TaitGraph g = tait_graph(d);
  BigInt total = matrix_tree_count(g.vertices, g.edges);
  if (total > budget)
    throw TooManyTrees("spanning tree count " + total.str() +
                       " exceeds budget " + std::to_string(budget));

  std::vector<MinorEdge> edges;
  for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.sign});
  std::map<std::string, Profile> memo;
  Profile p = tree_profile(g.vertices, std::move(edges), memo);

  BigInt sum = 0;
  for (const auto& [v, count] : p) sum += count;
  if (sum != total)
    throw std::logic_error("tree census " + sum.str() +
                           " disagrees with matrix-tree count " + total.str());
  return p;
}

BigInt determinant_tree(const LinkDiagram& d, long long budget) {
  auto p = spanning_tree_profile(d, budget);
  BigInt alt = 0;
  for (const auto& [v, count] : p) alt += (v % 2 == 0) ? count : -count;
  return alt < 0 ? -alt : alt;
}

BigInt determinant_goeritz(const LinkDiagram& d) {
  if (d.empty()) return d.free_circles == 1 ? 1 : 0;
  if (d.free_circles > 0 || crossing_graph_pieces(d) > 1) return 0;

  auto f = compute_faces(d);
  auto shaded = checkerboard_shading(d, f);
  std::vector<int> white_index(f.faces.size(), -1);
  int whites = 0;
  for (size_t i = 0; i < f.faces.size(); ++i)
    if (!shaded[i]) white_index[i] = whites++;

  std::vector<std::vector<BigInt>> g(whites, std::vector<BigInt>(whites, 0));
  for (int c = 0; c < d.size(); ++c) {
    int sign = tait_sign(d, f, shaded, c);
    int eta = -sign;  // +1 exactly when the white corners are {0,2}
    int k = sign == 1 ? 1 : 0;  // white corner pair
    int i = white_index[corner_face(f, c, k)];
    int j = white_index[corner_face(f, c, k + 2)];
    if (i == j) continue;
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  if (whites <= 1) return 1;
  std::vector<std::vector<BigInt>> minor(whites - 1,
                                         std::vector<BigInt>(whites - 1));
  for (int i = 1; i < whites; ++i)
    for (int j = 1; j < whites; ++j) minor[i - 1][j - 1] = g[i][j];
  BigInt det = bareiss_det(std::move(minor));
  return det < 0 ? -det : det;
}

}  // namespace qacert
