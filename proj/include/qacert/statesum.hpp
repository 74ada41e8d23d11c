#pragma once

#include <map>
#include <string>

#include "qacert/bigint.hpp"
#include "qacert/diagram.hpp"

namespace qacert {

// Laurent polynomial in the state-sum variable A: exponent -> coefficient.
using LaurentPoly = std::map<int, BigInt>;

std::string laurent_to_string(const LaurentPoly& p);

// Full 2^n state sum; throws BudgetExceeded above max_crossings.
LaurentPoly kauffman_bracket(const LinkDiagram& d, int max_crossings = 16);

// Bracket normalized by writhe: (-A)^{-3w} * bracket.
LaurentPoly normalized_bracket(const LinkDiagram& d, int max_crossings = 16);

// Link determinant read off the normalized bracket evaluated exactly in
// Z[x]/(x^4+1), i.e. at a primitive eighth root of unity.
BigInt determinant_jones(const LinkDiagram& d, int max_crossings = 16);

struct StateSummary {
  int circles_a = 0;
  int circles_b = 0;
  bool a_adequate = false;
  bool b_adequate = false;
  bool adequate = false;
};

// Circle counts and self-touch data of the two extreme smoothing states.
StateSummary state_summary(const LinkDiagram& d);

// (2 + crossings - circles_a - circles_b) / 2 for a connected diagram.
int turaev_genus(const LinkDiagram& d);

}  // namespace qacert
