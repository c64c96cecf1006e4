// Copyright 2026 The lslab Authors
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


#ifndef LSLAB_RADICAL_HPP_
#define LSLAB_RADICAL_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lslab/walkstats.hpp"

namespace lslab {

/// Exact element of Q[p^(1/4) : p prime]: a rational combination of
/// monomials prod p^(e_p/4) with 0 < e_p < 4.
///
/// Monomials are kept in this reduced form, so two values are equal exactly
/// when their term maps are equal (distinct reduced radicals are linearly
/// independent over Q).
class Radical {
 public:
  using Monomial = std::vector<std::pair<std::uint64_t, int>>;  // sorted primes, e in 1..3

  Radical() = default;
  Radical(const Rational& q) { add_term({}, q); }  // NOLINT: implicit by design
  Radical(long long q) : Radical(Rational(q)) {}    // NOLINT

  /// base^(quarters / 4) for a positive integer base.
  static Radical power(std::uint64_t base, long long quarters) {
    if (base == 0) throw std::invalid_argument("radical base must be positive");
    Rational coeff = 1;
    Monomial mono;
    for (auto [p, e] : factorize(base)) {
      const long long total = quarters * e;
      long long whole = total / 4, rem = total % 4;
      if (rem < 0) {
        rem += 4;
        --whole;
      }
      coeff *= whole >= 0 ? pow_rational(Rational(p), static_cast<unsigned>(whole))
                          : 1 / pow_rational(Rational(p), static_cast<unsigned>(-whole));
      if (rem) mono.emplace_back(p, static_cast<int>(rem));
    }
    Radical r;
    r.add_term(mono, coeff);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational rational_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  long double to_long_double() const {
    long double s = 0;
    for (const auto& [mono, c] : terms_) {
      long double m = c.convert_to<long double>();
      for (auto [p, e] : mono) m *= std::pow(static_cast<long double>(p), e / 4.0L);
      s += m;
    }
    return s;
  }

  Radical& operator+=(const Radical& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  Radical& operator-=(const Radical& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }

  friend Radical operator*(const Radical& a, const Radical& b) {
    Radical r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Rational coeff = ca * cb;
        Monomial mono;
        std::size_t i = 0, j = 0;
        auto push = [&](std::uint64_t p, int e) {
          if (e >= 4) {
            coeff *= p;
            e -= 4;
          }
          if (e) mono.emplace_back(p, e);
        };
        while (i < ma.size() || j < mb.size()) {
          if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
            push(ma[i].first, ma[i].second);
            ++i;
          } else if (i == ma.size() || mb[j].first < ma[i].first) {
            push(mb[j].first, mb[j].second);
            ++j;
          } else {
            push(ma[i].first, ma[i].second + mb[j].second);
            ++i;
            ++j;
          }
        }
        r.add_term(mono, coeff);
      }
    }
    return r;
  }
  Radical& operator*=(const Radical& o) { return *this = *this * o; }

  bool operator==(const Radical& o) const { return terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (auto [p, e] : mono) {
        os << "*" << p << "^(" << (e % 2 == 0 ? std::to_string(e / 2) + "/2" : std::to_string(e) + "/4")
           << ")";
      }
    }
    return os.str();
  }

 private:
  static std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t x) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
      int e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      if (e) out.emplace_back(p, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
  }

  void add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Radical& r) { return os << r.to_string(); }

}  // namespace lslab

#endif  // LSLAB_RADICAL_HPP_
