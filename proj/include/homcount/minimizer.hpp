// Copyright 2026 The homcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal tuples: integer tuples (r_1, ..., r_s) with sum r_i d_i = r that
// minimise sum r_i^2. Their count m_r, the defect eps_r and the stability
// bound N determine the leading term of |Hom(A, GL_n(q))|.

#ifndef HOMCOUNT_MINIMIZER_HPP_
#define HOMCOUNT_MINIMIZER_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

#include "homcount/errors.hpp"
#include "homcount/exactpoly.hpp"
#include "homcount/profiles.hpp"

namespace homcount {

/// Coordinates aligned with DegreeProfile::degrees.
using IntTuple = std::vector<std::int64_t>;

struct MinimalReport {
  std::int64_t r = 0;
  /// All minimal tuples, lexicographically sorted.
  std::vector<IntTuple> tuples;
  std::int64_t s_r = 0;
  Rational eps_r;

  std::size_t m_r() const noexcept { return tuples.size(); }
};

struct StabilityBound {
  std::int64_t b = 0;
  std::int64_t n_threshold = 0;  // N = b * a
};

/// Minimal tuples for an arbitrary dimension n = k a + r.
struct DimensionReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::vector<IntTuple> tuples;
  std::int64_t square_sum = 0;
  bool all_eligible = true;
};

inline std::int64_t weight(std::span<const std::int64_t> t, const DegreeProfile& p) {
  if (t.size() != p.size()) throw LengthMismatch(p.size(), t.size());
  std::int64_t w = 0;
  for (std::size_t i = 0; i < t.size(); ++i) w += t[i] * p.degrees[i];
  return w;
}

inline std::int64_t square_sum(std::span<const std::int64_t> t) {
  std::int64_t s = 0;
  for (auto v : t) s += v * v;
  return s;
}

inline bool is_eligible(std::span<const std::int64_t> t) {
  return std::all_of(t.begin(), t.end(), [](std::int64_t v) { return v >= 0; });
}

namespace detail {

inline std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline std::int64_t ceil_div_nonneg(std::int64_t num, std::int64_t den) {
  return (num + den - 1) / den;
}

// Depth-first branch and bound. Coordinates are visited in decreasing-degree
// order so the degree-1 coordinate comes last and is forced by the weight.
// A node with remaining weight w over coordinates R is pruned when
//   current + ceil(w^2 / sum_{i in R} d_i^2) > best,
// the real relaxation bound. Ties are kept so every optimum is reported.
class MinimalTupleSearch {
 public:
  MinimalTupleSearch(const DegreeProfile& p, std::int64_t target, bool nonnegative = false)
      : profile_(p), nonnegative_(nonnegative) {
    const std::size_t s = p.size();
    order_.resize(s);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return p.degrees[a] > p.degrees[b];
    });
    tail_.assign(s + 1, 0);
    for (std::size_t pos = s; pos-- > 0;) {
      const auto d = p.degrees[order_[pos]];
      tail_[pos] = tail_[pos + 1] + d * d;
    }
    current_.assign(s, 0);
    // (target, 0, ..., 0) is admissible, so the optimum is at most target^2.
    best_ = target * target;
    search(0, target, 0);
    std::sort(found_.begin(), found_.end());
  }

  std::int64_t best() const { return best_; }
  std::vector<IntTuple>& tuples() { return found_; }

 private:
  void record(std::int64_t total) {
    if (total < best_) {
      best_ = total;
      found_.clear();
    }
    if (total == best_) found_.push_back(current_);
  }

  void search(std::size_t pos, std::int64_t remaining, std::int64_t acc) {
    if (nonnegative_ && remaining < 0) return;
    const std::size_t coord = order_[pos];
    const std::int64_t d = profile_.degrees[coord];
    if (pos + 1 == order_.size()) {
      if (remaining % d != 0 || (nonnegative_ && remaining < 0)) return;
      const std::int64_t v = remaining / d;
      current_[coord] = v;
      record(acc + v * v);
      current_[coord] = 0;
      return;
    }
    const std::int64_t rest = tail_[pos + 1];
    auto bound = [&](std::int64_t v) {
      const std::int64_t left = remaining - v * d;
      return acc + v * v + ceil_div_nonneg(left * left, rest);
    };
    // The relaxed objective is minimised at v* = remaining * d / tail_[pos]
    // and is monotone on either side of it.
    std::int64_t lo = floor_div(remaining * d, tail_[pos]);
    if (nonnegative_ && lo < 0) lo = -1;  // upward sweep starts at 0
    for (std::int64_t v = lo + 1; bound(v) <= best_; ++v) descend(pos, coord, v, remaining - v * d, acc + v * v);
    for (std::int64_t v = lo; (!nonnegative_ || v >= 0) && bound(v) <= best_; --v) descend(pos, coord, v, remaining - v * d, acc + v * v);
  }

  void descend(std::size_t pos, std::size_t coord, std::int64_t v, std::int64_t remaining,
               std::int64_t acc) {
    current_[coord] = v;
    search(pos + 1, remaining, acc);
    current_[coord] = 0;
  }

  const DegreeProfile& profile_;
  bool nonnegative_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> tail_;
  IntTuple current_;
  std::int64_t best_ = 0;
  std::vector<IntTuple> found_;
};

}  // namespace detail

/// eps_r = S_r - r^2 / a, exactly.
inline Rational epsilon_from(const DegreeProfile& p, std::int64_t r, std::int64_t s_r) {
  return Rational(s_r) - Rational(r * r, p.order);
}

/// All minimal tuples of weight `n` (any n >= 0), found by direct search
/// without the residue reduction.
inline std::vector<IntTuple> minimal_tuples_direct(const DegreeProfile& p, std::int64_t n) {
  if (n < 0) throw RangeError("weight must be non-negative");
  detail::MinimalTupleSearch search(p, n);
  return std::move(search.tuples());
}

/// Eligible tuples of weight n minimising sum n_i^2; they index the largest
/// orbits of Hom(A, GL_n(q)) whether or not n >= N.
inline std::vector<IntTuple> minimal_eligible_tuples(const DegreeProfile& p, std::int64_t n) {
  if (n < 0) throw RangeError("weight must be non-negative");
  detail::MinimalTupleSearch search(p, n, /*nonnegative=*/true);
  return std::move(search.tuples());
}

inline MinimalReport minimal_tuples(const DegreeProfile& p, std::int64_t r) {
  if (r < 0 || r >= p.order) {
    throw RangeError("residue " + std::to_string(r) + " outside [0, " + std::to_string(p.order) + ")");
  }
  detail::MinimalTupleSearch search(p, r);
  MinimalReport report;
  report.r = r;
  report.s_r = search.best();
  report.tuples = std::move(search.tuples());
  report.eps_r = epsilon_from(p, r, report.s_r);
  return report;
}

inline Rational epsilon(const DegreeProfile& p, std::int64_t r) {
  return minimal_tuples(p, r).eps_r;
}

/// Reports for every residue 0 <= r < a, in ascending r regardless of how
/// many worker threads are used.
inline std::vector<MinimalReport> all_minimal_reports(const DegreeProfile& p, unsigned threads = 1) {
  const auto a = static_cast<std::size_t>(p.order);
  std::vector<MinimalReport> reports(a);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(a)));
  if (threads == 1) {
    for (std::size_t r = 0; r < a; ++r) reports[r] = minimal_tuples(p, static_cast<std::int64_t>(r));
    return reports;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t r = w; r < a; r += threads) {
        reports[r] = minimal_tuples(p, static_cast<std::int64_t>(r));
      }
    });
  }
  workers.clear();
  return reports;
}

/// Smallest b >= 0 with b d_i + r_i >= 0 over every entry of every minimal
/// tuple of every residue; N = b a.
inline StabilityBound stability_bound(const DegreeProfile& p, std::span<const MinimalReport> reports) {
  std::int64_t b = 0;
  for (const auto& report : reports) {
    for (const auto& t : report.tuples) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0) b = std::max(b, detail::ceil_div_nonneg(-t[i], p.degrees[i]));
      }
    }
  }
  return {b, b * p.order};
}

inline StabilityBound stability_bound(const DegreeProfile& p) {
  const auto reports = all_minimal_reports(p);
  return stability_bound(p, reports);
}

/// (k d_1 + r_1, ..., k d_s + r_s), a minimal tuple for k a + r.
inline IntTuple lift_minimal(const DegreeProfile& p, std::span<const std::int64_t> residue_tuple,
                             std::int64_t k) {
  if (residue_tuple.size() != p.size()) throw LengthMismatch(p.size(), residue_tuple.size());
  if (k < 0) throw RangeError("lift factor must be non-negative");
  IntTuple out(residue_tuple.begin(), residue_tuple.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += k * p.degrees[i];
  return out;
}

inline DimensionReport minimal_tuples_for_n(const DegreeProfile& p, const MinimalReport& residue,
                                            std::int64_t n) {
  if (n < 0) throw RangeError("dimension must be non-negative");
  DimensionReport out;
  out.n = n;
  out.k = n / p.order;
  out.r = n % p.order;
  if (residue.r != out.r) throw RangeError("residue report does not match n mod a");
  for (const auto& t : residue.tuples) {
    out.tuples.push_back(lift_minimal(p, t, out.k));
    out.all_eligible = out.all_eligible && is_eligible(out.tuples.back());
  }
  out.square_sum = out.k * out.k * p.order + 2 * out.k * out.r + residue.s_r;
  return out;
}

inline DimensionReport minimal_tuples_for_n(const DegreeProfile& p, std::int64_t n) {
  if (n < 0) throw RangeError("dimension must be non-negative");
  return minimal_tuples_for_n(p, minimal_tuples(p, n % p.order), n);
}

/// All non-negative solutions of sum n_i d_i = n in lexicographic order.
/// Throws ResourceLimit once more than `max_tuples` have been produced.
inline std::vector<IntTuple> eligible_tuples(const DegreeProfile& p, std::int64_t n,
                                             std::size_t max_tuples = 1'000'000) {
  if (n < 0) throw RangeError("dimension must be non-negative");
  const std::size_t s = p.size();
  // reachable[i][w]: weight w is a non-negative combination of degrees i..s-1.
  std::vector<std::vector<char>> reachable(s + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  reachable[s][0] = 1;
  for (std::size_t i = s; i-- > 0;) {
    const auto d = static_cast<std::size_t>(p.degrees[i]);
    for (std::size_t w = 0; w <= static_cast<std::size_t>(n); ++w) {
      reachable[i][w] = reachable[i + 1][w] || (w >= d && reachable[i][w - d]);
    }
  }
  std::vector<IntTuple> out;
  IntTuple current(s, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
    if (i == s) {
      if (out.size() >= max_tuples) {
        throw ResourceLimit("more than " + std::to_string(max_tuples) + " eligible tuples for n=" +
                            std::to_string(n));
      }
      out.push_back(current);
      return;
    }
    for (std::int64_t v = 0; v * p.degrees[i] <= remaining; ++v) {
      const std::int64_t left = remaining - v * p.degrees[i];
      if (!reachable[i + 1][static_cast<std::size_t>(left)]) continue;
      current[i] = v;
      self(self, i + 1, left);
    }
    current[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace homcount

#endif  // HOMCOUNT_MINIMIZER_HPP_
