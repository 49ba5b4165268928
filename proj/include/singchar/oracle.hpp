#pragma once

// Brute-force local quotient dimensions by linear algebra on truncations.
// Deliberately independent of the standard basis code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "singchar/poly.hpp"
#include "singchar/standard_basis.hpp"

namespace singchar {

struct OracleResult {
  std::uint64_t dim = 0;
  bool certified = false;
  std::uint64_t degree = 0;  // truncation degree D
  std::int64_t certificate_slice = -1;  // a degree d with m^d in the span, or -1
};

namespace detail {

template <Coefficient K>
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::uint32_t, K>>;

  explicit SparseEchelon(std::size_t ncols) : pivot_(ncols, -1) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces `r` against the stored rows; returns the remainder.
  Row reduce(Row r) const {
    std::size_t pos = 0;
    while (pos < r.size()) {
      const auto [col, c] = r[pos];
      const int p = pivot_[col];
      if (p < 0) {
        ++pos;
        continue;
      }
      r = axpy(r, c, rows_[static_cast<std::size_t>(p)]);
    }
    return r;
  }

  /// Adds r to the span; true if the rank grew.
  bool insert(Row r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    const K inv = r.front().second.inverse();
    for (auto& e : r) e.second = e.second * inv;
    pivot_[r.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  /// r - c * p, where p has leading coefficient 1 at a column present in r.
  static Row axpy(const Row& r, const K& c, const Row& p) {
    Row out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
      if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || p[j].first < r[i].first) {
        out.push_back({p[j].first, -(c * p[j].second)});
        ++j;
      } else {
        K v = r[i].second - c * p[j].second;
        if (!v.is_zero()) out.push_back({r[i].first, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<int> pivot_;
  std::vector<Row> rows_;
};

}  // namespace detail

/// dim_K R / (I + m^{D+1}) by row reduction of {x^b g mod m^{D+1}}. Certified when
/// some full degree slice d <= D - max deg(gens) lies in the span, which forces
/// m^d inside I and makes the count equal to dim_K R / I.
template <Coefficient K>
OracleResult quotient_dim_truncated(const std::vector<Poly<K>>& gens, std::uint64_t D) {
  OracleResult res;
  res.degree = D;
  std::vector<Poly<K>> live;
  for (const auto& g : gens)
    if (!g.is_zero()) live.push_back(g);

  std::size_t nvars = 0;
  if (!gens.empty()) nvars = gens.front().nvars();
  std::vector<std::vector<Monomial>> by_degree(D + 1);
  std::map<Monomial, std::uint32_t, LocalOrder> index;
  std::uint32_t ncols = 0;
  for (std::uint64_t d = 0; d <= D; ++d) {
    by_degree[d] = monomials_of_degree(nvars, d);
    for (const auto& m : by_degree[d]) index.emplace(m, ncols++);
  }
  if (live.empty()) {
    res.dim = ncols;
    return res;
  }

  using Row = typename detail::SparseEchelon<K>::Row;
  detail::SparseEchelon<K> ech(ncols);
  std::uint64_t maxdeg = 0;
  for (const auto& g : live) {
    maxdeg = std::max(maxdeg, g.total_degree());
    const std::uint64_t low = g.order().value();
    if (low > D) continue;
    for (std::uint64_t b = 0; b + low <= D; ++b) {
      for (const auto& shift : by_degree[b]) {
        Row row;
        for (const auto& t : g.terms()) {
          const Monomial m = t.mono * shift;
          if (m.degree() > D) continue;
          row.push_back({index.at(m), t.coeff});
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(std::move(row));
      }
    }
  }
  res.dim = ncols - ech.rank();

  if (maxdeg <= D) {
    const K one = K::from_int(1, live.front().field());
    for (std::uint64_t d = 0; d + maxdeg <= D; ++d) {
      const bool full = std::all_of(by_degree[d].begin(), by_degree[d].end(), [&](const Monomial& m) {
        return ech.reduce(Row{{index.at(m), one}}).empty();
      });
      if (full) {
        res.certified = true;
        res.certificate_slice = static_cast<std::int64_t>(d);
        break;
      }
    }
  }
  return res;
}

/// Adaptive truncation: D starts at 2 * max degree + 2 and doubles until
/// certified or past `ceiling`.
template <Coefficient K>
OracleResult oracle_dimension(const std::vector<Poly<K>>& gens, std::uint64_t ceiling = 64) {
  std::uint64_t maxdeg = 0;
  for (const auto& g : gens)
    if (!g.is_zero()) maxdeg = std::max(maxdeg, g.total_degree());
  std::uint64_t D = 2 * maxdeg + 2;
  OracleResult r = quotient_dim_truncated(gens, D);
  while (!r.certified && D < ceiling) {
    D = std::min(2 * D, ceiling);
    r = quotient_dim_truncated(gens, D);
  }
  return r;
}

}  // namespace singchar
