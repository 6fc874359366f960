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

// Independent ground truth: enumerate GL_n(F_p) for n <= 3, count
// homomorphisms from a finitely presented group by checking relators on
// every tuple of candidate images, and find minimal tuples by scanning the
// whole box [-r, r]^s.

#ifndef HOMCOUNT_ORACLE_HPP_
#define HOMCOUNT_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "homcount/errors.hpp"
#include "homcount/exactpoly.hpp"
#include "homcount/minimizer.hpp"
#include "homcount/profiles.hpp"

namespace homcount::oracle {

inline constexpr std::uint64_t kDefaultMaxGl = 100'000'000;

class PrimeFieldMatrix {
 public:
  static constexpr int kMaxDim = 3;

  PrimeFieldMatrix(int n, std::int64_t q) : n_(n), q_(q) {
    if (n < 1 || n > kMaxDim) throw RangeError("matrix dimension must be in [1, 3]");
  }

  static PrimeFieldMatrix identity(int n, std::int64_t q) {
    PrimeFieldMatrix m(n, q);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % q;
    return m;
  }

  int dim() const noexcept { return n_; }
  std::int64_t modulus() const noexcept { return q_; }
  std::int64_t& at(int i, int j) { return e_[static_cast<std::size_t>(i * kMaxDim + j)]; }
  std::int64_t at(int i, int j) const { return e_[static_cast<std::size_t>(i * kMaxDim + j)]; }

  std::int64_t determinant() const {
    const auto& m = *this;
    std::int64_t d = 0;
    switch (n_) {
      case 1: d = m.at(0, 0); break;
      case 2: d = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); break;
      case 3:
        d = m.at(0, 0) * ((m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) % q_) -
            m.at(0, 1) * ((m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) % q_) +
            m.at(0, 2) * ((m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0)) % q_);
        break;
    }
    return reduce(d);
  }

  /// Inverse via the adjugate; the matrix must be invertible.
  PrimeFieldMatrix inverse() const {
    const std::int64_t det = determinant();
    if (det == 0) throw ValidationError("matrix is singular");
    const std::int64_t det_inv = inverse_mod(det);
    PrimeFieldMatrix adj(n_, q_);
    if (n_ == 1) {
      adj.at(0, 0) = 1;
    } else if (n_ == 2) {
      adj.at(0, 0) = at(1, 1);
      adj.at(0, 1) = -at(0, 1);
      adj.at(1, 0) = -at(1, 0);
      adj.at(1, 1) = at(0, 0);
    } else {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          // adj(i, j) = cofactor(j, i)
          const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
          const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
          adj.at(i, j) = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        }
      }
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) adj.at(i, j) = adj.reduce(adj.reduce(adj.at(i, j)) * det_inv);
    }
    return adj;
  }

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    PrimeFieldMatrix c(a.n_, a.q_);
    for (int i = 0; i < a.n_; ++i) {
      for (int j = 0; j < a.n_; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < a.n_; ++k) s = (s + a.at(i, k) * b.at(k, j)) % a.q_;
        c.at(i, j) = s;
      }
    }
    return c;
  }

  PrimeFieldMatrix pow(std::uint64_t e) const {
    PrimeFieldMatrix result = identity(n_, q_);
    PrimeFieldMatrix base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  bool is_identity() const { return *this == identity(n_, q_); }

  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

 private:
  std::int64_t reduce(std::int64_t v) const {
    v %= q_;
    return v < 0 ? v + q_ : v;
  }

  std::int64_t inverse_mod(std::int64_t v) const {
    // Fermat: q is prime.
    std::int64_t result = 1, base = v % q_;
    for (std::int64_t e = q_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % q_;
      base = base * base % q_;
    }
    return result;
  }

  int n_;
  std::int64_t q_;
  std::array<std::int64_t, kMaxDim * kMaxDim> e_{};
};

/// |GL_n(q)| = prod_{i<n} (q^n - q^i), evaluated directly in 64 bits.
inline std::uint64_t gl_order(int n, std::int64_t q) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= static_cast<std::uint64_t>(q);
  std::uint64_t result = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    result *= qn - qi;
    qi *= static_cast<std::uint64_t>(q);
  }
  return result;
}

/// Visits every invertible n x n matrix over F_q exactly once and returns the
/// count. Throws ResourceLimit if q^(n^2) exceeds `max_candidates`.
inline std::uint64_t gl_enumerate(int n, std::int64_t q,
                                  const std::function<void(const PrimeFieldMatrix&)>& visit,
                                  std::uint64_t max_candidates = kDefaultMaxGl) {
  if (!is_prime(q)) throw ValidationError("oracle fields must have prime order, got " + std::to_string(q));
  if (n < 1 || n > PrimeFieldMatrix::kMaxDim) throw RangeError("oracle dimension must be in [1, 3]");
  std::uint64_t candidates = 1;
  for (int i = 0; i < n * n; ++i) {
    candidates *= static_cast<std::uint64_t>(q);
    if (candidates > max_candidates) {
      throw ResourceLimit("GL_" + std::to_string(n) + "(" + std::to_string(q) + ") needs " + std::to_string(q) +
                          "^" + std::to_string(n * n) + " candidate matrices, cap is " +
                          std::to_string(max_candidates));
    }
  }
  PrimeFieldMatrix m(n, q);
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < candidates; ++c) {
    if (m.determinant() != 0) {
      ++count;
      if (visit) visit(m);
    }
    // Odometer increment over the n*n entries.
    for (int k = 0; k < n * n; ++k) {
      auto& e = m.at(k / n, k % n);
      if (++e < q) break;
      e = 0;
    }
  }
  return count;
}

/// Number of g in GL_n(q) with g^m = 1, in a single pass.
inline std::uint64_t count_order_dividing(int n, std::int64_t q, std::uint64_t m,
                                          std::uint64_t max_candidates = kDefaultMaxGl) {
  std::uint64_t count = 0;
  gl_enumerate(
      n, q, [&](const PrimeFieldMatrix& g) { count += g.pow(m).is_identity() ? 1 : 0; }, max_candidates);
  return count;
}

/// A word is a sequence of signed 1-based generator indices; -i is the
/// inverse of generator i.
using Word = std::vector<int>;

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
  std::string label;
};

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation pr;
    skip_ws();
    expect("gens=");
    pr.generator_count = static_cast<int>(integer());
    if (pr.generator_count < 1) throw ParseError(pos_, "generator count must be positive");
    gens_ = pr.generator_count;
    skip_ws();
    while (pos_ < text_.size()) {
      expect(";");
      skip_ws();
      if (pos_ == text_.size()) break;
      expect("rel=");
      skip_ws();
      const std::size_t start = pos_;
      Word w = word();
      if (w.empty()) throw ParseError(start, "relator expands to the empty word");
      pr.relators.push_back(std::move(w));
      skip_ws();
    }
    if (pr.relators.empty()) throw ParseError(pos_, "expected at least one relator");
    pr.label = std::string(text_);
    return pr;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError(pos_, "expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    std::int64_t v = 0;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) throw ParseError(start, "integer too large");
    }
    if (pos_ == digits) throw ParseError(start, "expected an integer");
    return negative ? -v : v;
  }

  Word word() {
    Word w = factor();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word factor() {
    Word base;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      skip_ws();
      base = word();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
    } else if (c == 'x') {
      ++pos_;
      const std::size_t at = pos_;
      const auto g = integer();
      if (g < 1 || g > gens_) {
        throw ParseError(at, "generator x" + std::to_string(g) + " out of range 1.." + std::to_string(gens_));
      }
      base.push_back(static_cast<int>(g));
    } else {
      throw ParseError(pos_, "expected a generator 'x<i>' or '('");
    }
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const auto e = integer();
    Word unit = base;
    if (e < 0) {
      std::reverse(unit.begin(), unit.end());
      for (auto& g : unit) g = -g;
    }
    Word out;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int gens_ = 0;
};

}  // namespace detail

/// Parses `gens=k; rel=x1^2; rel=(x1*x2)^3; ...`.
inline Presentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

/// Shipped presentations paired with the built-in families. These pairings
/// are fixtures; they are checked against the orbit polynomial in the tests.
inline std::optional<Presentation> builtin_presentation(const GroupSpec& g) {
  std::string text;
  switch (g.family) {
    case Family::kCyclic:
      text = "gens=1; rel=x1^" + std::to_string(g.params.at(0));
      break;
    case Family::kAbelian: {
      const auto k = g.params.size();
      text = "gens=" + std::to_string(k);
      for (std::size_t i = 0; i < k; ++i) text += "; rel=x" + std::to_string(i + 1) + "^" + std::to_string(g.params[i]);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          const auto xi = "x" + std::to_string(i + 1), xj = "x" + std::to_string(j + 1);
          text += "; rel=" + xi + "*" + xj + "*" + xi + "^-1*" + xj + "^-1";
        }
      }
      break;
    }
    case Family::kDihedral:
      text = "gens=2; rel=x1^" + std::to_string(g.params.at(0)) + "; rel=x2^2; rel=(x1*x2)^2";
      break;
    case Family::kSym:
      text = g.params.at(0) == 4 ? "gens=2; rel=x1^2; rel=x2^3; rel=(x1*x2)^4"
                                 : "gens=2; rel=x1^2; rel=x2^5; rel=(x1*x2)^4; rel=(x1*x2^-1*x1*x2)^3";
      break;
    case Family::kCustom:
      return std::nullopt;
  }
  auto pr = parse_presentation(text);
  pr.label = to_string(g);
  return pr;
}

struct BruteForceOptions {
  std::uint64_t max_gl = kDefaultMaxGl;
  /// Bound on the product of per-generator candidate counts.
  std::uint64_t max_assignments = kDefaultMaxGl;
  /// When set, candidate lists are shuffled before the search.
  std::optional<std::uint64_t> shuffle_seed;
};

/// |Hom(A, GL_n(q))| for A given by `pr`: the number of generator images
/// (g_1, ..., g_k) in GL_n(q) satisfying every relator.
inline std::uint64_t hom_count_bruteforce(const Presentation& pr, int n, std::int64_t q,
                                          const BruteForceOptions& options = {}) {
  const auto k = static_cast<std::size_t>(pr.generator_count);
  for (const auto& w : pr.relators) {
    if (w.empty()) throw ValidationError("empty relator");
    for (int g : w) {
      if (g == 0 || static_cast<std::size_t>(g < 0 ? -g : g) > k) throw ValidationError("relator index out of range");
    }
  }

  // Pure power relators x_i^m restrict the candidates for x_i to matrices of
  // order dividing m; the remaining relators are checked per assignment.
  std::vector<std::uint64_t> power(k, 0);
  std::vector<const Word*> mixed;
  for (const auto& w : pr.relators) {
    const bool pure = std::all_of(w.begin(), w.end(), [&](int g) { return g == w.front(); });
    if (pure) {
      auto& p = power[static_cast<std::size_t>((w.front() < 0 ? -w.front() : w.front()) - 1)];
      p = std::gcd(p, static_cast<std::uint64_t>(w.size()));
    } else {
      mixed.push_back(&w);
    }
  }

  struct Candidate {
    PrimeFieldMatrix g, inv;
  };
  std::vector<std::vector<Candidate>> candidates(k);
  gl_enumerate(
      n, q,
      [&](const PrimeFieldMatrix& g) {
        std::optional<Candidate> c;
        for (std::size_t i = 0; i < k; ++i) {
          if (power[i] != 0 && !g.pow(power[i]).is_identity()) continue;
          if (!c) c = Candidate{g, g.inverse()};
          candidates[i].push_back(*c);
        }
      },
      options.max_gl);

  std::uint64_t assignments = 1;
  for (const auto& list : candidates) {
    if (list.empty()) return 0;
    if (assignments > options.max_assignments / list.size()) {
      throw ResourceLimit("brute-force search exceeds " + std::to_string(options.max_assignments) +
                          " generator assignments");
    }
    assignments *= list.size();
  }
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    for (auto& list : candidates) std::shuffle(list.begin(), list.end(), rng);
  }

  const auto identity = PrimeFieldMatrix::identity(n, q);
  std::vector<std::size_t> choice(k, 0);
  std::uint64_t count = 0;
  for (std::uint64_t step = 0; step < assignments; ++step) {
    bool ok = true;
    for (const Word* w : mixed) {
      PrimeFieldMatrix acc = identity;
      for (int g : *w) {
        const auto& c = candidates[static_cast<std::size_t>((g < 0 ? -g : g) - 1)]
                                  [choice[static_cast<std::size_t>((g < 0 ? -g : g) - 1)]];
        acc = acc * (g < 0 ? c.inv : c.g);
      }
      if (acc != identity) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    for (std::size_t i = 0; i < k; ++i) {
      if (++choice[i] < candidates[i].size()) break;
      choice[i] = 0;
    }
  }
  return count;
}

/// Minimal tuples for r by scanning every tuple in [-r, r]^s of weight r.
/// The degree-1 coordinate is solved from the weight, so (2r+1)^(s-1)
/// candidates are visited; more than `max_candidates` throws ResourceLimit.
inline MinimalReport minimal_tuples_naive(const DegreeProfile& p, std::int64_t r,
                                          std::uint64_t max_candidates = kDefaultMaxGl) {
  if (r < 0 || r >= p.order) throw RangeError("residue outside [0, a)");
  const std::size_t s = p.size();
  const auto side = static_cast<std::uint64_t>(2 * r + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < s; ++i) {
    if (total > max_candidates / side) {
      throw ResourceLimit("naive box enumeration exceeds " + std::to_string(max_candidates) + " candidates");
    }
    total *= side;
  }
  MinimalReport report;
  report.r = r;
  report.s_r = -1;
  IntTuple t(s, -r);
  for (std::uint64_t step = 0; step < total; ++step) {
    std::int64_t w = 0, sq = 0;
    for (std::size_t i = 1; i < s; ++i) {
      w += t[i] * p.degrees[i];
      sq += t[i] * t[i];
    }
    t[0] = r - w;  // d_1 = 1
    if (t[0] >= -r && t[0] <= r) {
      sq += t[0] * t[0];
      if (report.s_r < 0 || sq < report.s_r) {
        report.s_r = sq;
        report.tuples.clear();
      }
      if (sq == report.s_r) report.tuples.push_back(t);
    }
    for (std::size_t i = 1; i < s; ++i) {
      if (++t[i] <= r) break;
      t[i] = -r;
    }
  }
  std::sort(report.tuples.begin(), report.tuples.end());
  report.eps_r = Rational(report.s_r) - Rational(r * r, p.order);
  return report;
}

}  // namespace homcount::oracle

#endif  // HOMCOUNT_ORACLE_HPP_
