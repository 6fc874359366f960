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

// Degree profiles of finite groups: the group order a together with the
// degrees of the irreducible representations over a splitting field.

#ifndef HOMCOUNT_PROFILES_HPP_
#define HOMCOUNT_PROFILES_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcount/errors.hpp"

namespace homcount {

struct DegreeProfile {
  std::int64_t order = 0;
  /// Sorted non-decreasing; degrees[0] is the trivial representation.
  std::vector<std::int64_t> degrees;
  std::string label;

  std::size_t size() const noexcept { return degrees.size(); }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Throws ValidationError naming the first violated invariant.
inline void validate(const DegreeProfile& p) {
  if (p.order <= 0) throw ValidationError("group order must be positive");
  if (p.degrees.empty()) throw ValidationError("degree list is empty");
  for (auto d : p.degrees) {
    if (d <= 0) throw ValidationError("degrees must be positive, got " + std::to_string(d));
  }
  if (!std::is_sorted(p.degrees.begin(), p.degrees.end())) {
    throw ValidationError("degrees must be sorted non-decreasing");
  }
  if (p.degrees.front() != 1) {
    throw ValidationError("d_1 = " + std::to_string(p.degrees.front()) +
                          " but the trivial representation has degree 1");
  }
  std::int64_t sum = 0;
  for (auto d : p.degrees) sum += d * d;
  if (sum != p.order) {
    throw ValidationError("degree-square sum " + std::to_string(sum) +
                          " != group order " + std::to_string(p.order));
  }
}

/// Sorts the degrees into canonical order, then validates.
inline DegreeProfile make_profile(std::int64_t order, std::vector<std::int64_t> degrees,
                                  std::string label = {}) {
  std::sort(degrees.begin(), degrees.end());
  DegreeProfile p{order, std::move(degrees), std::move(label)};
  validate(p);
  return p;
}

enum class Family { kCyclic, kAbelian, kDihedral, kSym, kCustom };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::kCyclic: return "cyclic";
    case Family::kAbelian: return "abelian";
    case Family::kDihedral: return "dihedral";
    case Family::kSym: return "sym";
    case Family::kCustom: return "custom";
  }
  return "?";
}

struct GroupSpec {
  Family family = Family::kCyclic;
  /// cyclic: {m}; abelian: invariant factors; dihedral: {m}; sym: {4} or {5}.
  std::vector<std::int64_t> params;
  /// custom only.
  std::int64_t order = 0;
  std::vector<std::int64_t> degrees;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Canonical text form, parseable by parse_group_spec.
inline std::string to_string(const GroupSpec& g) {
  std::string out(family_name(g.family));
  out += ':';
  if (g.family == Family::kCustom) {
    out += "order=" + std::to_string(g.order) + ",degrees=";
    for (std::size_t i = 0; i < g.degrees.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(g.degrees[i]);
    }
    return out;
  }
  for (std::size_t i = 0; i < g.params.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(g.params[i]);
  }
  return out;
}

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec g;
    const std::size_t name_end = text_.find(':');
    const std::string_view name = text_.substr(0, name_end);
    for (std::size_t i = 0; i < name.size(); ++i) {
      if (!std::isalpha(static_cast<unsigned char>(name[i]))) throw ParseError(i, "expected a family name");
    }
    if (name == "cyclic") {
      g.family = Family::kCyclic;
    } else if (name == "abelian") {
      g.family = Family::kAbelian;
    } else if (name == "dihedral") {
      g.family = Family::kDihedral;
    } else if (name == "sym") {
      g.family = Family::kSym;
    } else if (name == "custom") {
      g.family = Family::kCustom;
    } else if (name.empty()) {
      throw ParseError(0, "expected a family name");
    } else {
      throw UnsupportedFamily("unsupported group family '" + std::string(name) +
                              "' (expected cyclic, abelian, dihedral, sym or custom)");
    }
    pos_ = name.size();
    expect(":");

    switch (g.family) {
      case Family::kCyclic:
        g.params.push_back(integer_at_least(1, "cyclic modulus"));
        break;
      case Family::kAbelian:
        g.params.push_back(integer_at_least(1, "invariant factor"));
        while (peek() == 'x') {
          ++pos_;
          g.params.push_back(integer_at_least(1, "invariant factor"));
        }
        break;
      case Family::kDihedral:
        g.params.push_back(integer_at_least(3, "dihedral parameter"));
        break;
      case Family::kSym: {
        const char c = peek();
        if (c != '4' && c != '5') throw ParseError(pos_, "expected '4' or '5'");
        ++pos_;
        g.params.push_back(c - '0');
        break;
      }
      case Family::kCustom:
        expect("order=");
        g.order = integer_at_least(1, "order");
        expect(",degrees=");
        g.degrees.push_back(integer_at_least(1, "degree"));
        while (peek() == ',') {
          ++pos_;
          g.degrees.push_back(integer_at_least(1, "degree"));
        }
        break;
    }
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return g;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError(pos_, "expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  std::int64_t integer_at_least(std::int64_t lo, const char* what) {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = peek() - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw ParseError(start, std::string(what) + " is too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, std::string("expected ") + what + " (decimal integer)");
    if (v < lo) {
      throw ParseError(start, std::string(what) + " must be >= " + std::to_string(lo));
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `family:params`. Never partially succeeds: any unconsumed input is
/// a ParseError.
inline GroupSpec parse_group_spec(std::string_view text) {
  return detail::SpecParser(text).parse();
}

/// Order of the group described by `g`.
inline std::int64_t group_order(const GroupSpec& g) {
  switch (g.family) {
    case Family::kCyclic: return g.params.at(0);
    case Family::kAbelian: {
      std::int64_t a = 1;
      for (auto f : g.params) {
        if (a > std::numeric_limits<std::int64_t>::max() / f) {
          throw ValidationError("abelian group order overflows");
        }
        a *= f;
      }
      return a;
    }
    case Family::kDihedral: return 2 * g.params.at(0);
    case Family::kSym: return g.params.at(0) == 4 ? 24 : 120;
    case Family::kCustom: return g.order;
  }
  return 0;
}

/// Exponent (lcm of the invariant factors) of an abelian or cyclic spec.
inline std::int64_t abelian_exponent(const GroupSpec& g) {
  std::int64_t e = 1;
  for (auto f : g.params) e = std::lcm(e, f);
  return e;
}

inline DegreeProfile profile_of(const GroupSpec& g) {
  const std::string label = to_string(g);
  std::vector<std::int64_t> degrees;
  switch (g.family) {
    case Family::kCyclic:
    case Family::kAbelian:
      degrees.assign(static_cast<std::size_t>(group_order(g)), 1);
      break;
    case Family::kDihedral: {
      const std::int64_t m = g.params.at(0);
      const std::int64_t ones = m % 2 ? 2 : 4;
      const std::int64_t twos = m % 2 ? (m - 1) / 2 : (m - 2) / 2;
      degrees.assign(static_cast<std::size_t>(ones), 1);
      degrees.insert(degrees.end(), static_cast<std::size_t>(twos), 2);
      break;
    }
    case Family::kSym:
      degrees = g.params.at(0) == 4 ? std::vector<std::int64_t>{1, 1, 2, 3, 3}
                                    : std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6};
      break;
    case Family::kCustom:
      degrees = g.degrees;
      break;
  }
  return make_profile(group_order(g), std::move(degrees), label);
}

// Small-integer arithmetic helpers.

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// The prime p with q = p^k (k >= 1), or nullopt if q is not a prime power.
inline std::optional<std::int64_t> prime_power_base(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  while (q % p == 0) q /= p;
  if (q != 1) return std::nullopt;
  return p;
}

struct SplittingCheck {
  bool ok = false;
  std::string reason;
};

/// Whether F_q is a splitting field for the group described by `g`.
inline SplittingCheck splitting_field_check(const GroupSpec& g, std::int64_t q) {
  const auto p = prime_power_base(q);
  const std::string fq = "F_" + std::to_string(q);
  if (!p) return {false, std::to_string(q) + " is not a prime power"};
  auto congruent_one = [&](std::int64_t modulus, const std::string& what) -> SplittingCheck {
    if (q % modulus == 1 % modulus) {
      return {true, fq + " contains the " + what + " roots of unity (q = 1 mod " +
                        std::to_string(modulus) + ")"};
    }
    return {false, fq + " is not a splitting field: q != 1 mod " + std::to_string(modulus)};
  };
  switch (g.family) {
    case Family::kCyclic:
      return congruent_one(g.params.at(0), std::to_string(g.params.at(0)) + "-th");
    case Family::kAbelian: {
      const auto e = abelian_exponent(g);
      return congruent_one(e, std::to_string(e) + "-th");
    }
    case Family::kDihedral: {
      const std::int64_t m = g.params.at(0);
      if (*p == 2) return {false, fq + " is not a splitting field: characteristic 2"};
      // The two-dimensional representations are realised over F_q(z + 1/z)
      // with z a primitive m-th root of unity, which lies in F_q exactly
      // when q = +-1 mod m.
      const std::int64_t residue = q % m;
      if (residue == 1 || residue == m - 1) {
        return {true, fq + " splits D_" + std::to_string(m) + " (q odd, q = +-1 mod " +
                          std::to_string(m) + ")"};
      }
      return {false, fq + " is not a splitting field: q != +-1 mod " + std::to_string(m)};
    }
    case Family::kSym:
      if (g.params.at(0) == 4) {
        if (*p == 2 || *p == 3) return {false, fq + " is not a splitting field: characteristic 2 or 3"};
        return {true, "characteristic not 2 or 3"};
      }
      if (*p <= 5) return {false, fq + " is not a splitting field: characteristic <= 5"};
      return {true, "characteristic larger than 5"};
    case Family::kCustom:
      return {true, "caller-asserted"};
  }
  return {false, "unknown family"};
}

}  // namespace homcount

#endif  // HOMCOUNT_PROFILES_HPP_
