#pragma once

#include <vector>

#include "qacert/diagram.hpp"

namespace qacert {

// Sign of one crossing under the fixed checkerboard coloring.
int epsilon(const LinkDiagram& d, int crossing);

// Twist-tangle coefficients must all agree in sign with the crossing being
// replaced: eps * a_i >= 1. Throws ExtensionViolated carrying the 1-based
// index of the first offender.
void validate_extension(const std::vector<int>& coeffs, int eps);

// Twist exponents realizing the tangle C(a_1,...,a_m), in application
// order: -a_m, +a_{m-1}, ..., and finally (-1)^m (a_1 - eps).
std::vector<int> tangle_exponents(const std::vector<int>& coeffs, int eps);

// Add |n| crossings to the twist region at a positive crossing: vertical
// twists for n > 0, horizontal for n < 0, n = 0 is the identity. The
// outermost inserted crossing is marked in the result.
LinkDiagram twist(const LinkDiagram& d, int crossing, int n);

// Replace the marked crossing by the twist tangle C(a_1,...,a_m), realized
// as the composite of the twist blocks above. A negative crossing is
// handled by mirroring, replacing with the negated tangle, and mirroring
// back. Adds sum(|a_i|) - 1 crossings.
LinkDiagram replace_with_tangle(const LinkDiagram& d, int crossing,
                                const std::vector<int>& coeffs);

}  // namespace qacert
