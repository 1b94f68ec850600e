#include "asymk/counts.hpp"

#include <map>

namespace asymk {

namespace {

template <typename T>
std::vector<T> buildTable(const MatrixConfig& cfg, std::int64_t r, const Exponent& lo, const Exponent& extent,
                          const std::vector<std::size_t>& strides, std::size_t total) {
  const std::size_t d = cfg.d;
  std::vector<T> cur(total, T(0));
  {
    std::size_t origin = 0;
    for (std::size_t i = 0; i < d; ++i) origin += static_cast<std::size_t>(-lo[i]) * strides[i];
    cur[origin] = 1;
  }
  auto inside = [&](const Exponent& w) {
    for (std::size_t i = 0; i < d; ++i) {
      if (w[i] < lo[i] || w[i] >= lo[i] + extent[i]) return false;
    }
    return true;
  };
  auto flat = [&](const Exponent& w) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) idx += static_cast<std::size_t>(w[i] - lo[i]) * strides[i];
    return idx;
  };

  std::vector<T> next(total);
  Exponent w(d);
  for (const auto& a : cfg.columns) {
    std::fill(next.begin(), next.end(), T(0));
    const Exponent window = scale(a, r);
    // Walk every line {w0 + k a} from its first point inside the box.
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rem = idx;
      for (std::size_t i = 0; i < d; ++i) {
        w[i] = lo[i] + static_cast<std::int64_t>(rem / strides[i]);
        rem %= strides[i];
      }
      if (inside(sub(w, a))) continue;
      T running(0);
      Exponent p = w;
      while (inside(p)) {
        const std::size_t fp = flat(p);
        running += cur[fp];
        Exponent back = sub(p, window);
        if (inside(back)) running -= cur[flat(back)];
        next[fp] = running;
        p = add(p, a);
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace

CountTable::CountTable(const MatrixConfig& config, std::int64_t r, const Limits& limits) : r_(r), d_(config.d) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive");
  lo_.assign(d_, 0);
  Exponent hi(d_, 0);
  for (const auto& a : config.columns) {
    for (std::size_t i = 0; i < d_; ++i) (a[i] > 0 ? hi[i] : lo_[i]) += (r - 1) * a[i];
  }
  extent_.resize(d_);
  Integer total = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    extent_[i] = hi[i] - lo_[i] + 1;
    total *= Integer(static_cast<long>(extent_[i]));
  }
  if (total > Integer(static_cast<unsigned long>(limits.latticeBoxCap))) {
    throw Error(ErrorKind::SizeLimit, "count table of " + total.get_str() + " cells exceeds the lattice box cap");
  }
  strides_.assign(d_, 1);
  for (std::size_t i = d_; i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(extent_[i]);
  const std::size_t cells = total.get_ui();

  // Every count is at most r^n; use machine integers while that fits.
  Integer bound = pow(Integer(static_cast<long>(r)), config.n);
  if (bound < (Integer(1) << 62)) {
    values_ = buildTable<std::int64_t>(config, r, lo_, extent_, strides_, cells);
  } else {
    values_ = buildTable<Integer>(config, r, lo_, extent_, strides_, cells);
  }
}

bool CountTable::index(const Exponent& w, std::size_t& out) const {
  out = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    if (w[i] < lo_[i] || w[i] >= lo_[i] + extent_[i]) return false;
    out += static_cast<std::size_t>(w[i] - lo_[i]) * strides_[i];
  }
  return true;
}

Exponent CountTable::point(std::size_t idx) const {
  Exponent w(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    w[i] = lo_[i] + static_cast<std::int64_t>(idx / strides_[i]);
    idx %= strides_[i];
  }
  return w;
}

Integer CountTable::at(const Exponent& w) const {
  std::size_t idx;
  if (!index(w, idx)) return 0;
  return std::visit([&](const auto& v) { return Integer(v[idx]); }, values_);
}

Integer CountTable::count(const Exponent& u, const Exponent& v) const { return at(sub(scale(u, r_), v)); }

void CountTable::forEachNonzero(const std::function<void(const Exponent&, const Integer&)>& visit) const {
  std::visit(
      [&](const auto& values) {
        for (std::size_t idx = 0; idx < values.size(); ++idx) {
          if (values[idx] != 0) visit(point(idx), Integer(values[idx]));
        }
      },
      values_);
}

namespace {

struct BoxCounter {
  const MatrixConfig& cfg;
  std::int64_t r;
  std::vector<Exponent> suffixLo, suffixHi;  // reachable range of columns j..n-1
  std::map<std::pair<std::size_t, Exponent>, Integer> memo;

  BoxCounter(const MatrixConfig& c, std::int64_t rr) : cfg(c), r(rr) {
    suffixLo.assign(cfg.n + 1, Exponent(cfg.d, 0));
    suffixHi.assign(cfg.n + 1, Exponent(cfg.d, 0));
    for (std::size_t j = cfg.n; j-- > 0;) {
      suffixLo[j] = suffixLo[j + 1];
      suffixHi[j] = suffixHi[j + 1];
      for (std::size_t i = 0; i < cfg.d; ++i) {
        const std::int64_t s = (r - 1) * cfg.columns[j][i];
        (s > 0 ? suffixHi[j][i] : suffixLo[j][i]) += s;
      }
    }
  }

  Integer count(std::size_t j, const Exponent& rem) {
    for (std::size_t i = 0; i < cfg.d; ++i) {
      if (rem[i] < suffixLo[j][i] || rem[i] > suffixHi[j][i]) return 0;
    }
    if (j == cfg.n) return 1;
    auto key = std::make_pair(j, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    Exponent cur = rem;
    for (std::int64_t x = 0; x < r; ++x) {
      total += count(j + 1, cur);
      cur = sub(cur, cfg.columns[j]);
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

}  // namespace

Integer cCoeff(const MatrixConfig& config, std::int64_t r, const Exponent& u, const Exponent& v) {
  if (r < 1) throw Error(ErrorKind::InvalidInput, "r must be positive");
  BoxCounter counter(config, r);
  return counter.count(0, sub(scale(u, r), v));
}

}  // namespace asymk
