#include "qacert/families.hpp"

#include <algorithm>
#include <cstdlib>

#include "qacert/errors.hpp"
#include "qacert/tangle.hpp"

namespace qacert {

LinkDiagram pretzel_diagram(const std::vector<int>& entries) {
  if (entries.empty())
    throw PreconditionViolated("pretzel needs at least one strand");
  for (int e : entries)
    if (e == 0) throw PreconditionViolated("pretzel entries must be nonzero");

  int k = static_cast<int>(entries.size());
  // Arcs 1..k are the top bars (bar i joins column i's top-right end to
  // column i+1's top-left), arcs k+1..2k the bottom bars.
  auto top_bar = [&](int i) { return ((i % k) + k) % k + 1; };
  auto bottom_bar = [&](int i) { return ((i % k) + k) % k + k + 1; };
  int next_arc = 2 * k + 1;

  LinkDiagram d;
  for (int i = 0; i < k; ++i) {
    int t = entries[i];
    int count = std::abs(t);
    int tl = top_bar(i - 1);
    int tr = top_bar(i);
    int bl = bottom_bar(i - 1);
    int br = bottom_bar(i);
    int cur_l = tl, cur_r = tr;
    for (int j = 0; j < count; ++j) {
      bool last = j + 1 == count;
      int nl = last ? bl : next_arc++;
      int nr = last ? br : next_arc++;
      if (t > 0)
        d.crossings.push_back({cur_l, nl, nr, cur_r});
      else
        d.crossings.push_back({cur_r, cur_l, nl, nr});
      cur_l = nl;
      cur_r = nr;
    }
  }
  validate(d);
  return d;
}

BigInt pretzel_determinant(const std::vector<int>& entries) {
  if (entries.empty())
    throw PreconditionViolated("pretzel needs at least one strand");
  for (int e : entries)
    if (e == 0) throw PreconditionViolated("pretzel entries must be nonzero");
  if (entries.size() == 1) {
    BigInt v = entries[0];
    return v < 0 ? -v : v;
  }
  BigInt sum = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    BigInt prod = 1;
    for (size_t j = 0; j < entries.size(); ++j)
      if (j != i) prod *= entries[j];
    sum += prod;
  }
  return sum < 0 ? -sum : sum;
}

LinkDiagram torus2(int k) { return pretzel_diagram({k}); }

std::string pretzel_class_name(PretzelClass cls) {
  switch (cls) {
    case PretzelClass::Alternating:
      return "Alternating";
    case PretzelClass::QuasiAlternating:
      return "QuasiAlternating";
    case PretzelClass::NotQuasiAlternating:
      return "NotQuasiAlternating";
    case PretzelClass::Open:
      return "Open";
  }
  return "Open";
}

PretzelClassification classify_pretzel(const std::vector<int>& entries) {
  if (entries.empty())
    throw PreconditionViolated("pretzel needs at least one strand");
  for (int e : entries)
    if (e == 0) throw PreconditionViolated("pretzel entries must be nonzero");

  std::vector<int> pos, neg;
  for (int e : entries) (e > 0 ? pos : neg).push_back(std::abs(e));

  if (pos.empty() || neg.empty())
    return {PretzelClass::Alternating, "all strands twist the same way"};

  auto at_least_two = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 2; });
  };
  if (pos.size() >= 2 && neg.size() >= 2 && at_least_two(pos) &&
      at_least_two(neg))
    return {PretzelClass::NotQuasiAlternating,
            "two or more strands of each handedness, all of magnitude at "
            "least two"};

  // One strand against the rest: quasi-alternating when the lone strand
  // out-twists the smallest opposing one. Either handedness can play the
  // lone role, so check both assignments.
  auto lone_out_twists = [](const std::vector<int>& lone,
                            const std::vector<int>& rest) {
    return lone.size() == 1 &&
           lone[0] > *std::min_element(rest.begin(), rest.end());
  };
  if (lone_out_twists(neg, pos) || lone_out_twists(pos, neg))
    return {PretzelClass::QuasiAlternating,
            "the lone opposing strand out-twists the smallest of the others"};

  // Three-strand case with a lone strand that does not out-twist: settled
  // by whether the double branched cover is an L-space.
  auto lspace_rules_out = [&](const std::vector<int>& lone,
                              const std::vector<int>& rest) {
    if (lone.size() != 1 || rest.size() != 2) return false;
    if (lone[0] < 2 || !at_least_two(rest)) return false;
    int q = lone[0];
    int m = *std::min_element(rest.begin(), rest.end());
    int mx = *std::max_element(rest.begin(), rest.end());
    bool lspace = q >= m || (q == m - 1 && mx <= 2 * q + 1);
    return !lspace;
  };
  if (lspace_rules_out(neg, pos) || lspace_rules_out(pos, neg))
    return {PretzelClass::NotQuasiAlternating,
            "the double branched cover is not an L-space"};

  return {PretzelClass::Open, "outside the classified families"};
}

UnitColumnSmoothing unit_column_smoothing(const std::vector<int>& entries) {
  int idx = -1, crossing = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 1) {
      idx = static_cast<int>(i);
      break;
    }
    crossing += std::abs(entries[i]);
  }
  if (idx < 0)
    throw PreconditionViolated("no single-crossing column to smooth");

  LinkDiagram d = pretzel_diagram(entries);
  UnitColumnSmoothing out;
  out.crossing = crossing;
  // Joining slots (0,3) and (1,2) of the column's crossing fuses its top
  // ends together and its bottom ends together, cutting the column cycle
  // open into a chain.
  out.label =
      epsilon(d, crossing) == 1 ? SmoothType::Zero : SmoothType::Infinity;
  out.diagram = apply_splices(
      d, {crossing}, {{crossing, 0, crossing, 3}, {crossing, 1, crossing, 2}});
  return out;
}

}  // namespace qacert
