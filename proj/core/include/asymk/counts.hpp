#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "asymk/arith.hpp"
#include "asymk/errors.hpp"
#include "asymk/intlat.hpp"

namespace asymk {

// Dense table of N_r(w) = #{x in [0,r-1]^n : A x = w}, so that
// C_r(u,v) = N_r(r u - v). Built column by column with sliding-window sums.
class CountTable {
public:
  CountTable(const MatrixConfig& config, std::int64_t r, const Limits& limits = {});

  std::int64_t r() const noexcept { return r_; }
  Integer at(const Exponent& w) const;
  Integer count(const Exponent& u, const Exponent& v) const;

  // Visits every w with N_r(w) > 0 in lexicographic order.
  void forEachNonzero(const std::function<void(const Exponent&, const Integer&)>& visit) const;

private:
  bool index(const Exponent& w, std::size_t& out) const;
  Exponent point(std::size_t idx) const;

  std::int64_t r_;
  std::size_t d_;
  Exponent lo_;
  Exponent extent_;
  std::vector<std::size_t> strides_;
  std::variant<std::vector<std::int64_t>, std::vector<Integer>> values_;
};

// C_r(u,v) by bounded depth-first enumeration, independent of CountTable.
Integer cCoeff(const MatrixConfig& config, std::int64_t r, const Exponent& u, const Exponent& v);

}  // namespace asymk
