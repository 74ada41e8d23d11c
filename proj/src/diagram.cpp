#include "qacert/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "qacert/errors.hpp"

namespace qacert {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

std::map<int, std::vector<int>> arc_darts(const LinkDiagram& d) {
  std::map<int, std::vector<int>> m;
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) m[d.crossings[c][s]].push_back(4 * c + s);
  return m;
}

std::map<int, std::vector<int>> arc_darts_checked(const LinkDiagram& d) {
  auto m = arc_darts(d);
  for (const auto& [arc, darts] : m)
    if (darts.size() != 2)
      throw ArcUsedNotTwice("arc " + std::to_string(arc) + " used " +
                            std::to_string(darts.size()) + " times");
  return m;
}

// alpha: dart -> the other dart on the same arc
std::vector<int> build_alpha(const LinkDiagram& d) {
  auto m = arc_darts_checked(d);
  std::vector<int> alpha(4 * d.size(), -1);
  for (const auto& [arc, darts] : m) {
    alpha[darts[0]] = darts[1];
    alpha[darts[1]] = darts[0];
  }
  return alpha;
}

UnionFind crossing_components(const LinkDiagram& d) {
  UnionFind uf(std::max(1, d.size()));
  auto m = arc_darts(d);
  for (const auto& [arc, darts] : m)
    if (darts.size() == 2) uf.unite(darts[0] / 4, darts[1] / 4);
  return uf;
}

}  // namespace

LinkDiagram unknot() {
  LinkDiagram d;
  d.free_circles = 1;
  return d;
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<std::array<int, 4>> crossings;
  size_t i = 0;
  const size_t n = text.size();
  auto skip_blank = [&] {
    while (i < n) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '#') {
        while (i < n && text[i] != '\n') ++i;
      } else {
        break;
      }
    }
  };
  auto fail = [&](const std::string& why) -> MalformedSyntax {
    return MalformedSyntax(why + " at offset " + std::to_string(i));
  };
  auto expect = [&](char c) {
    if (i >= n || text[i] != c)
      throw fail(std::string("expected '") + c + "'");
    ++i;
  };
  auto read_int = [&]() -> int {
    size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw fail("expected arc label");
    long v = std::stol(text.substr(start, i - start));
    if (v < 1 || v > 1000000000) throw fail("arc label out of range");
    return static_cast<int>(v);
  };

  skip_blank();
  while (i < n) {
    expect('X');
    expect('[');
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s) {
      skip_blank();
      t[s] = read_int();
      skip_blank();
      if (s < 3) expect(',');
    }
    expect(']');
    crossings.push_back(t);
    skip_blank();
  }

  if (crossings.empty()) return unknot();

  LinkDiagram d;
  d.crossings = std::move(crossings);
  arc_darts_checked(d);
  if (!crossing_graph_connected(d))
    throw DisconnectedDiagram("diagram is split");
  validate(d);
  return d;
}

std::string to_pd(const LinkDiagram& d) {
  if (d.empty()) return "";
  if (d.free_circles > 0)
    throw std::logic_error("crossing-free circles are not representable");
  std::ostringstream out;
  for (int c = 0; c < d.size(); ++c) {
    if (c) out << ' ';
    const auto& t = d.crossings[c];
    out << "X[" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ']';
  }
  return out.str();
}

FaceData compute_faces(const LinkDiagram& d) {
  auto alpha = build_alpha(d);
  FaceData f;
  f.face_of.assign(4 * d.size(), -1);
  for (int start = 0; start < 4 * d.size(); ++start) {
    if (f.face_of[start] != -1) continue;
    std::vector<int> orbit;
    int cur = start;
    do {
      f.face_of[cur] = static_cast<int>(f.faces.size());
      orbit.push_back(cur);
      int other = alpha[cur];
      cur = 4 * (other / 4) + (other % 4 + 1) % 4;
    } while (cur != start);
    f.faces.push_back(std::move(orbit));
  }
  return f;
}

int corner_face(const FaceData& f, int crossing, int corner) {
  return f.face_of[4 * crossing + (corner + 1) % 4];
}

int arc_count(const LinkDiagram& d) {
  return static_cast<int>(arc_darts(d).size());
}

int component_count(const LinkDiagram& d) {
  auto darts = arc_darts_checked(d);
  std::map<int, int> arc_idx;
  for (const auto& [arc, _] : darts) {
    int k = static_cast<int>(arc_idx.size());
    arc_idx[arc] = k;
  }
  UnionFind uf(std::max<int>(1, static_cast<int>(arc_idx.size())));
  for (const auto& t : d.crossings) {
    uf.unite(arc_idx[t[0]], arc_idx[t[2]]);
    uf.unite(arc_idx[t[1]], arc_idx[t[3]]);
  }
  std::vector<int> reps;
  for (const auto& [arc, k] : arc_idx) reps.push_back(uf.find(k));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return static_cast<int>(reps.size()) + d.free_circles;
}

bool crossing_graph_connected(const LinkDiagram& d) {
  return crossing_graph_pieces(d) <= 1;
}

int crossing_graph_pieces(const LinkDiagram& d) {
  if (d.empty()) return 0;
  auto uf = crossing_components(d);
  std::vector<int> reps;
  for (int c = 0; c < d.size(); ++c) reps.push_back(uf.find(c));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return static_cast<int>(reps.size());
}

void validate(const LinkDiagram& d) {
  if (d.empty()) return;
  auto f = compute_faces(d);
  int v = d.size();
  int e = arc_count(d);
  int faces = static_cast<int>(f.faces.size());
  int pieces = crossing_graph_pieces(d);
  // Disjoint plane pieces share the unbounded region, so orbit counting
  // yields V - E + F = 2 per piece.
  if (v - e + faces != 2 * pieces)
    throw NonPlanarDiagram("Euler check failed: V=" + std::to_string(v) +
                           " E=" + std::to_string(e) +
                           " F=" + std::to_string(faces));
}

bool is_alternating(const LinkDiagram& d) {
  if (d.empty()) return true;
  auto alpha = build_alpha(d);
  std::vector<bool> visited(4 * d.size(), false);
  for (int start = 0; start < 4 * d.size(); ++start) {
    if (visited[start]) continue;
    std::vector<int> parities;
    int cur = start;
    do {
      int c = cur / 4, s = cur % 4;
      visited[cur] = true;
      visited[4 * c + (s + 2) % 4] = true;
      parities.push_back(s % 2);
      cur = alpha[4 * c + (s + 2) % 4];
    } while (cur != start);
    for (size_t k = 0; k < parities.size(); ++k)
      if (parities[k] == parities[(k + 1) % parities.size()]) return false;
  }
  return true;
}

int writhe(const LinkDiagram& d) {
  if (d.empty()) return 0;
  auto alpha = build_alpha(d);
  // head[arc] = the dart this arc flows into, under a deterministic
  // orientation of each component (started at its smallest dart).
  std::map<int, int> head;
  std::vector<bool> visited(4 * d.size(), false);
  for (int start = 0; start < 4 * d.size(); ++start) {
    if (visited[start]) continue;
    int cur = start;
    do {
      int c = cur / 4, s = cur % 4;
      visited[cur] = true;
      visited[4 * c + (s + 2) % 4] = true;
      head[d.crossings[c][s]] = cur;
      cur = alpha[4 * c + (s + 2) % 4];
    } while (cur != start);
  }
  int w = 0;
  for (int c = 0; c < d.size(); ++c) {
    const auto& t = d.crossings[c];
    int u = (head[t[0]] == 4 * c) ? 0 : 2;
    int o = (head[t[1]] == 4 * c + 1) ? 1 : 3;
    w += (o == (u + 3) % 4) ? 1 : -1;
  }
  return w;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram m = d;
  for (auto& t : m.crossings) std::swap(t[1], t[3]);
  return m;
}

LinkDiagram apply_splices(const LinkDiagram& d, const std::vector<int>& removed,
                          const std::vector<Splice>& splices) {
  std::vector<bool> is_removed(d.size(), false);
  for (int c : removed) is_removed[c] = true;

  std::vector<int> dart_used(4 * d.size(), 0);
  for (const auto& sp : splices) {
    dart_used[4 * sp.c1 + sp.s1]++;
    dart_used[4 * sp.c2 + sp.s2]++;
  }
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s)
      if (dart_used[4 * c + s] != (is_removed[c] ? 1 : 0))
        throw std::logic_error("splices must cover removed darts exactly");

  std::map<int, int> arc_idx;
  for (const auto& t : d.crossings)
    for (int a : t)
      if (!arc_idx.count(a)) {
        int k = static_cast<int>(arc_idx.size());
        arc_idx[a] = k;
      }
  int na = static_cast<int>(arc_idx.size());
  UnionFind uf(std::max(1, na));
  std::vector<int> consumed(na, 0);
  for (const auto& sp : splices) {
    int a1 = arc_idx[d.crossings[sp.c1][sp.s1]];
    int a2 = arc_idx[d.crossings[sp.c2][sp.s2]];
    uf.unite(a1, a2);
    consumed[a1]++;
    consumed[a2]++;
  }

  std::map<int, int> remaining;  // class rep -> loose strand ends
  for (const auto& [arc, k] : arc_idx) remaining[uf.find(k)] += 2 - consumed[k];

  int circles = 0;
  for (const auto& [rep, ends] : remaining) {
    if (ends == 0)
      ++circles;
    else if (ends != 2)
      throw std::logic_error("splice left a strand with " +
                             std::to_string(ends) + " ends");
  }

  LinkDiagram out;
  out.free_circles = d.free_circles + circles;
  std::map<int, int> new_label;  // class rep -> renumbered arc
  int next_label = 1;
  std::vector<int> new_index(d.size(), -1);
  for (int c = 0; c < d.size(); ++c) {
    if (is_removed[c]) continue;
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s) {
      int rep = uf.find(arc_idx[d.crossings[c][s]]);
      auto it = new_label.find(rep);
      if (it == new_label.end()) it = new_label.emplace(rep, next_label++).first;
      t[s] = it->second;
    }
    new_index[c] = out.size();
    out.crossings.push_back(t);
  }
  if (d.marked && new_index[*d.marked] >= 0) out.marked = new_index[*d.marked];
  validate(out);
  return out;
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.empty() || b.empty()) {
    const LinkDiagram& trivial = a.empty() ? a : b;
    const LinkDiagram& other = a.empty() ? b : a;
    if (trivial.free_circles != 1)
      throw PreconditionViolated("connected sum with a non-unknot trivial part");
    return other;
  }
  if (a.free_circles || b.free_circles)
    throw PreconditionViolated("connected sum operands must be circle-free");

  int max_a = 0;
  for (const auto& t : a.crossings) max_a = std::max({max_a, t[0], t[1], t[2], t[3]});

  LinkDiagram joined;
  joined.crossings = a.crossings;
  int max_b = 0;
  for (const auto& t : b.crossings) {
    std::array<int, 4> shifted{};
    for (int s = 0; s < 4; ++s) {
      shifted[s] = t[s] + max_a;
      max_b = std::max(max_b, shifted[s]);
    }
    joined.crossings.push_back(shifted);
  }

  // Cut the highest-numbered arc of each part and cross-join the four loose
  // ends; of the two pairings exactly one is planar.
  auto darts_of = [&](int arc, int lo, int hi) {
    std::vector<int> ds;
    for (int c = lo; c < hi; ++c)
      for (int s = 0; s < 4; ++s)
        if (joined.crossings[c][s] == arc) ds.push_back(4 * c + s);
    return ds;
  };
  auto ea = darts_of(max_a, 0, a.size());
  auto eb = darts_of(max_b, a.size(), joined.size());

  int x = max_b + 1, y = max_b + 2;
  auto with_pairing = [&](bool crossed) {
    LinkDiagram r = joined;
    auto set = [&](int dart, int label) {
      r.crossings[dart / 4][dart % 4] = label;
    };
    set(ea[0], x);
    set(ea[1], y);
    set(eb[0], crossed ? y : x);
    set(eb[1], crossed ? x : y);
    return r;
  };
  LinkDiagram first = with_pairing(true);
  try {
    validate(first);
    return first;
  } catch (const NonPlanarDiagram&) {
  }
  LinkDiagram second = with_pairing(false);
  validate(second);
  return second;
}

namespace {

std::optional<int> find_r1(const LinkDiagram& d) {
  for (int c = 0; c < d.size(); ++c)
    for (int k = 0; k < 4; ++k)
      if (d.crossings[c][k] == d.crossings[c][(k + 1) % 4]) return c;
  return std::nullopt;
}

// Two crossings admit R2 when a pair of arcs runs between them bounding a
// bigon, with each arc's strand playing the same role (over/under) at both
// ends; that rules out clasps, where removal would change the link.
bool r2_applicable(const LinkDiagram& d, const FaceData& f, int c1, int c2) {
  const auto& t1 = d.crossings[c1];
  const auto& t2 = d.crossings[c2];
  for (int k1 = 0; k1 < 4; ++k1) {
    int u = t1[k1], v = t1[(k1 + 1) % 4];
    if (u == v) continue;
    for (int k2 = 0; k2 < 4; ++k2) {
      int p = t2[k2], q = t2[(k2 + 1) % 4];
      bool match_uv = (p == u && q == v);
      bool match_vu = (p == v && q == u);
      if (!match_uv && !match_vu) continue;
      int u_slot2 = match_uv ? k2 : (k2 + 1) % 4;
      if (k1 % 2 != u_slot2 % 2) continue;
      int face = corner_face(f, c1, k1);
      if (face != corner_face(f, c2, k2)) continue;
      if (f.faces[face].size() != 2) continue;
      return true;
    }
  }
  return false;
}

LinkDiagram erase_through(const LinkDiagram& d, const std::vector<int>& cs) {
  std::vector<Splice> sp;
  for (int c : cs) {
    sp.push_back({c, 0, c, 2});
    sp.push_back({c, 1, c, 3});
  }
  return apply_splices(d, cs, sp);
}

}  // namespace

SimplifyResult simplify(const LinkDiagram& d) {
  SimplifyResult res;
  res.diagram = d;
  for (;;) {
    if (auto c = find_r1(res.diagram)) {
      res.trace.push_back({"R1", *c, -1});
      res.diagram = erase_through(res.diagram, {*c});
      continue;
    }
    bool applied = false;
    if (res.diagram.size() >= 2) {
      auto f = compute_faces(res.diagram);
      for (int c1 = 0; c1 < res.diagram.size() && !applied; ++c1)
        for (int c2 = c1 + 1; c2 < res.diagram.size() && !applied; ++c2)
          if (r2_applicable(res.diagram, f, c1, c2)) {
            res.trace.push_back({"R2", c1, c2});
            res.diagram = erase_through(res.diagram, {c1, c2});
            applied = true;
          }
    }
    if (!applied) break;
  }
  return res;
}

bool apply_move(LinkDiagram& d, const SimplifyMove& m) {
  if (m.kind == "R1") {
    if (m.c1 < 0 || m.c1 >= d.size()) return false;
    bool kink = false;
    for (int k = 0; k < 4; ++k)
      if (d.crossings[m.c1][k] == d.crossings[m.c1][(k + 1) % 4]) kink = true;
    if (!kink) return false;
    d = erase_through(d, {m.c1});
    return true;
  }
  if (m.kind == "R2") {
    if (m.c1 < 0 || m.c2 < 0 || m.c1 >= d.size() || m.c2 >= d.size() ||
        m.c1 == m.c2)
      return false;
    auto f = compute_faces(d);
    if (!r2_applicable(d, f, m.c1, m.c2)) return false;
    d = erase_through(d, {m.c1, m.c2});
    return true;
  }
  return false;
}

namespace {

struct KeyState {
  std::map<int, int> arc_label;
  int next_arc = 1;
  std::vector<int> cross_num;
  int next_cross = 0;
  std::vector<int> under_entry;
  std::vector<std::array<bool, 2>> passage_done;
  int passages_left = 0;
};

void key_walk(const LinkDiagram& d, const std::vector<int>& alpha,
              KeyState& st, int start) {
  int cur = start;
  do {
    int c = cur / 4, s = cur % 4;
    int arc_in = d.crossings[c][s];
    if (!st.arc_label.count(arc_in)) st.arc_label[arc_in] = st.next_arc++;
    if (st.cross_num[c] < 0) st.cross_num[c] = st.next_cross++;
    st.passage_done[c][s % 2] = true;
    --st.passages_left;
    if (s % 2 == 0) st.under_entry[c] = s;
    int exit_slot = (s + 2) % 4;
    int arc_out = d.crossings[c][exit_slot];
    if (!st.arc_label.count(arc_out)) st.arc_label[arc_out] = st.next_arc++;
    cur = alpha[4 * c + exit_slot];
  } while (cur != start);
}

std::string key_serialize(const LinkDiagram& d, const KeyState& st) {
  std::vector<std::array<int, 4>> tuples;
  for (int c = 0; c < d.size(); ++c) {
    int e = st.under_entry[c];
    std::array<int, 4> t{};
    for (int i = 0; i < 4; ++i)
      t[i] = st.arc_label.at(d.crossings[c][(e + i) % 4]);
    tuples.push_back(t);
  }
  std::sort(tuples.begin(), tuples.end());
  std::ostringstream out;
  out << d.size() << ';';
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (i) out << '|';
    out << tuples[i][0] << ',' << tuples[i][1] << ',' << tuples[i][2] << ','
        << tuples[i][3];
  }
  return out.str();
}

std::string key_complete(const LinkDiagram& d, const std::vector<int>& alpha,
                         const KeyState& st) {
  if (st.passages_left == 0) return key_serialize(d, st);
  // Next component: enter at the lowest-numbered visited crossing that still
  // has an untraversed passage; both entry directions are tried.
  int best_c = -1;
  for (int c = 0; c < d.size(); ++c) {
    if (st.cross_num[c] < 0) continue;
    if (st.passage_done[c][0] && st.passage_done[c][1]) continue;
    if (best_c < 0 || st.cross_num[c] < st.cross_num[best_c]) best_c = c;
  }
  if (best_c < 0)
    throw std::logic_error("canonical key requires a connected piece");
  int p = st.passage_done[best_c][0] ? 1 : 0;
  std::string best;
  for (int entry : {p, p + 2}) {
    KeyState branch = st;
    key_walk(d, alpha, branch, 4 * best_c + entry);
    std::string k = key_complete(d, alpha, branch);
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

std::string key_connected(const LinkDiagram& d) {
  auto alpha = build_alpha(d);
  std::string best;
  for (int start = 0; start < 4 * d.size(); ++start) {
    KeyState st;
    st.cross_num.assign(d.size(), -1);
    st.under_entry.assign(d.size(), -1);
    st.passage_done.assign(d.size(), {false, false});
    st.passages_left = 2 * d.size();
    key_walk(d, alpha, st, start);
    std::string k = key_complete(d, alpha, st);
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

}  // namespace

std::string canonical_key(const LinkDiagram& d) {
  std::string suffix = ";f" + std::to_string(d.free_circles);
  if (d.empty()) return "0;" + suffix;
  auto uf = crossing_components(d);
  std::map<int, std::vector<int>> pieces;
  for (int c = 0; c < d.size(); ++c) pieces[uf.find(c)].push_back(c);
  std::vector<std::string> keys;
  for (const auto& [rep, cs] : pieces) {
    LinkDiagram piece;
    for (int c : cs) piece.crossings.push_back(d.crossings[c]);
    keys.push_back(key_connected(piece));
  }
  std::sort(keys.begin(), keys.end());
  std::ostringstream out;
  for (size_t i = 0; i < keys.size(); ++i) {
    if (i) out << '+';
    out << keys[i];
  }
  out << suffix;
  return out.str();
}

}  // namespace qacert
