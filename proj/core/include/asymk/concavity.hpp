#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymk/arith.hpp"
#include "asymk/errors.hpp"
#include "asymk/laurent.hpp"

namespace asymk {

// A violated inequality. For segment checks w = ((q-a) u + a v) / q and the
// cross-multiplied integers satisfy lhs < rhs. For superlevel-hull checks,
// support lists points with g > g(w) whose hull contains w.
struct ConcavityWitness {
  std::string kind;  // "log-segment", "nonpositive", "segment", "superlevel", "negative"
  Exponent u, w, v;
  long q = 0;
  long a = 0;
  Rational gu, gw, gv;
  Integer lhs, rhs;
  std::vector<Exponent> support;
};

struct ConcavityVerdict {
  bool holds = true;
  std::optional<ConcavityWitness> witness;
};

// Coefficients are tested on every lattice point of the convex hull of the
// support, with missing coefficients read as 0.
ConcavityVerdict isLogConcave(const LaurentPoly& f, const Limits& limits = {});
ConcavityVerdict isQuasiConcave(const LaurentPoly& f, const Limits& limits = {});

// Re-checks a segment witness from its stored fields alone.
bool witnessViolates(const ConcavityWitness& w);

}  // namespace asymk
