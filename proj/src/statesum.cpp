#include "qacert/statesum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qacert/errors.hpp"

namespace qacert {

namespace {

struct ArcUF {
  std::vector<int> parent;
  explicit ArcUF(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

std::map<int, int> arc_indices(const LinkDiagram& d) {
  std::map<int, int> idx;
  for (const auto& t : d.crossings)
    for (int a : t)
      if (!idx.count(a)) {
        int k = static_cast<int>(idx.size());
        idx[a] = k;
      }
  return idx;
}

void poly_add_term(LaurentPoly& p, int exp, const BigInt& c) {
  auto it = p.find(exp);
  if (it == p.end()) {
    if (c != 0) p[exp] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) p.erase(it);
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) poly_add_term(r, ea + eb, ca * cb);
  return r;
}

LaurentPoly delta_power(int k) {
  LaurentPoly r{{0, 1}};
  LaurentPoly delta{{2, -1}, {-2, -1}};
  for (int i = 0; i < k; ++i) r = poly_mul(r, delta);
  return r;
}

}  // namespace

std::string laurent_to_string(const LaurentPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, coeff] : p) {
    BigInt c = coeff;
    if (first) {
      if (c < 0) {
        out << '-';
        c = -c;
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool unit = (c == 1) && exp != 0;
    if (!unit) out << c.str();
    if (exp != 0) {
      if (!unit) out << '*';
      out << "A^" << exp;
    }
  }
  return out.str();
}

LaurentPoly kauffman_bracket(const LinkDiagram& d, int max_crossings) {
  int n = d.size();
  if (n > max_crossings)
    throw BudgetExceeded("state sum over " + std::to_string(n) +
                         " crossings exceeds limit of " +
                         std::to_string(max_crossings));
  int total_circles_base = d.free_circles;
  if (n == 0) {
    if (total_circles_base == 0)
      throw std::logic_error("bracket of an empty diagram");
    return delta_power(total_circles_base - 1);
  }

  auto idx = arc_indices(d);
  int na = static_cast<int>(idx.size());
  LaurentPoly result;
  for (unsigned long state = 0; state < (1UL << n); ++state) {
    ArcUF uf(na);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& t = d.crossings[c];
      if (state >> c & 1UL) {
        // A-smoothing joins slots (0,3) and (1,2)
        ++a_count;
        uf.unite(idx[t[0]], idx[t[3]]);
        uf.unite(idx[t[1]], idx[t[2]]);
      } else {
        uf.unite(idx[t[0]], idx[t[1]]);
        uf.unite(idx[t[2]], idx[t[3]]);
      }
    }
    int circles = total_circles_base;
    for (int a = 0; a < na; ++a)
      if (uf.find(a) == a) ++circles;
    int b_count = n - a_count;
    LaurentPoly term = delta_power(circles - 1);
    LaurentPoly shifted;
    for (const auto& [exp, coeff] : term)
      shifted[exp + a_count - b_count] = coeff;
    for (const auto& [exp, coeff] : shifted) poly_add_term(result, exp, coeff);
  }
  return result;
}

LaurentPoly normalized_bracket(const LinkDiagram& d, int max_crossings) {
  LaurentPoly bracket = kauffman_bracket(d, max_crossings);
  int w = writhe(d);
  LaurentPoly result;
  int sign = (w % 2 == 0) ? 1 : -1;
  for (const auto& [exp, coeff] : bracket)
    result[exp - 3 * w] = sign * coeff;
  return result;
}

BigInt determinant_jones(const LinkDiagram& d, int max_crossings) {
  LaurentPoly f = normalized_bracket(d, max_crossings);
  // Evaluate in Z[x]/(x^4+1): x^8 = 1 and x^{r+4} = -x^r.
  std::array<BigInt, 4> coeff{};
  for (const auto& [exp, c] : f) {
    int r = ((exp % 8) + 8) % 8;
    if (r < 4)
      coeff[r] += c;
    else
      coeff[r - 4] -= c;
  }
  BigInt value = 0;
  int nonzero = 0;
  for (const auto& c : coeff)
    if (c != 0) {
      ++nonzero;
      value = c;
    }
  if (nonzero > 1)
    throw std::logic_error(
        "bracket evaluation is not a single unit multiple: " +
        laurent_to_string(f));
  return value < 0 ? -value : value;
}

StateSummary state_summary(const LinkDiagram& d) {
  StateSummary s;
  int n = d.size();
  if (n == 0) {
    s.circles_a = s.circles_b = d.free_circles;
    s.a_adequate = s.b_adequate = s.adequate = true;
    return s;
  }
  auto idx = arc_indices(d);
  int na = static_cast<int>(idx.size());
  ArcUF ufa(na), ufb(na);
  for (const auto& t : d.crossings) {
    ufa.unite(idx[t[0]], idx[t[3]]);
    ufa.unite(idx[t[1]], idx[t[2]]);
    ufb.unite(idx[t[0]], idx[t[1]]);
    ufb.unite(idx[t[2]], idx[t[3]]);
  }
  for (int a = 0; a < na; ++a) {
    if (ufa.find(a) == a) ++s.circles_a;
    if (ufb.find(a) == a) ++s.circles_b;
  }
  s.circles_a += d.free_circles;
  s.circles_b += d.free_circles;
  s.a_adequate = true;
  s.b_adequate = true;
  for (const auto& t : d.crossings) {
    if (ufa.find(idx[t[0]]) == ufa.find(idx[t[1]])) s.a_adequate = false;
    if (ufb.find(idx[t[0]]) == ufb.find(idx[t[2]])) s.b_adequate = false;
  }
  s.adequate = s.a_adequate && s.b_adequate;
  return s;
}

int turaev_genus(const LinkDiagram& d) {
  if (d.empty()) return 0;
  if (d.free_circles > 0 || !crossing_graph_connected(d))
    throw PreconditionViolated("state surface genus needs a connected diagram");
  StateSummary s = state_summary(d);
  int numerator = 2 + d.size() - s.circles_a - s.circles_b;
  if (numerator < 0 || numerator % 2 != 0)
    throw std::logic_error("state circle counts violate the genus formula");
  return numerator / 2;
}

}  // namespace qacert
