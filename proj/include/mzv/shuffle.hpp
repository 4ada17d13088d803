#pragma once

#include "mzv/algebra.hpp"

namespace mzv {

/// Shuffle product of two words: 1 ⧢ w = w, aw1 ⧢ bw2 = a(w1 ⧢ bw2) + b(aw1 ⧢ w2).
NCPoly shuffle(const Word& u, const Word& v);
/// Bilinear extension.
NCPoly shuffle(const NCPoly& p, const NCPoly& q);

/// Checks w1a ⧢ w2b = (w1 ⧢ w2b)a + (w1a ⧢ w2)b with the main shuffle.
bool shuffle_right_recursion_check(const Word& w1, Letter a, const Word& w2, Letter b);

/// Σ_{r=-n}^{n} (-1)^r (xy)^{n-r} ⧢ (xy)^{n+r} − 4^n (x²y²)^n; zero for every n ≥ 0.
NCPoly bbbl_convolution(int n);

}  // namespace mzv
