#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's counting, volume or sieving code.

#include <cstdint>
#include <map>
#include <vector>

#include "asymk/arith.hpp"

namespace oracle {

using asymk::Exponent;
using asymk::Integer;
using asymk::Rational;

using Rows = std::vector<Exponent>;         // d rows of n entries
using Poly = std::map<Exponent, Rational>;  // exponent -> coefficient, no zeros

// #{x in [0,r-1]^n : A x = w}, by full enumeration.
Integer countBox(const Rows& a, std::int64_t r, const Exponent& w);

// Phi_r[F] by enumerating every x in [0,r-1]^n once.
Poly phi(const Rows& a, const Poly& f, std::int64_t r);

// Number of permutations of {1..k} with exactly j ascents, j = 0..k-1.
std::vector<Integer> eulerianRow(int k);

// (n-d)! * lim N_r(r u) / r^{n-d} from exact finite differences of brute
// counts at r = step, 2 step, ...; step must make the count a polynomial
// in r / step. Throws std::logic_error if two windows disagree.
Rational asymptoticCoefficient(const Rows& a, const Exponent& u, std::int64_t step);

// lcm of the absolute values of the nonzero maximal minors.
std::int64_t minorLcm(const Rows& a);

Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace oracle
