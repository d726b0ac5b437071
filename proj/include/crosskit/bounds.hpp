#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "crosskit/error.hpp"

namespace crosskit {

using i64 = long long;
using Rational = boost::rational<i64>;

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
inline i64 floor_of(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

// A(k) = floor(k/2) floor((k-1)/2), the per-side factor of Z.
inline i64 half_pairs(i64 k) { return k <= 0 ? 0 : (k / 2) * ((k - 1) / 2); }

inline i64 zarankiewicz_number(i64 m, i64 n) { return half_pairs(m) * half_pairs(n); }

// The printed form sums the last correction over 1 <= i <= j <= n. Only the
// strict range i < j reproduces the bipartite and tripartite special cases,
// so that is the default.
enum class HarborthRange { Strict, WithDiagonal };

inline Rational harborth_exact(const std::vector<i64>& x, HarborthRange range = HarborthRange::Strict) {
  const std::size_t k = x.size();
  i64 t = 0, c = 0;
  for (i64 v : x) {
    if (v < 1) fail("INVALID_PARTS", "part sizes must be positive");
    t += v;
    c += v % 2;
  }
  i64 quad = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t r = j + 1; r < k; ++r)
        for (std::size_t s = r + 1; s < k; ++s) quad += 3 * x[i] * x[j] * x[r] * x[s];
  i64 hc = c / 2;
  i64 odd_pairs = 3 * (hc * (hc - 1) / 2);
  i64 corr = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) corr += ((c - (x[i] % 2 + x[j] % 2)) / 2) * x[i] * x[j];
  Rational out(quad + odd_pairs - corr, 8);
  for (i64 v : x) out += half_pairs(v) * half_pairs(t - v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = range == HarborthRange::Strict ? i + 1 : i; j < k; ++j)
      out -= half_pairs(x[i]) * half_pairs(x[j]);
  return out;
}

inline i64 harborth_bound(const std::vector<i64>& x, HarborthRange range = HarborthRange::Strict) {
  return floor_of(harborth_exact(x, range));
}

enum class HcFamily { K1mn, K2mn, K11mn };

inline i64 hc_value(HcFamily f, i64 m, i64 n) {
  if (m < 1 || n < 1) fail("INVALID_PARTS", "m,n must be positive");
  switch (f) {
    case HcFamily::K1mn: return zarankiewicz_number(m + 1, n + 1) - (m / 2) * (n / 2);
    case HcFamily::K2mn: return zarankiewicz_number(m + 2, n + 2) - m * n;
    case HcFamily::K11mn: return zarankiewicz_number(m + 2, n + 2) - m * n + (m / 2) * (n / 2);
  }
  return 0;
}

inline std::string sizes_spec(std::vector<i64> x) {
  std::sort(x.begin(), x.end());
  std::string s = "K=";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s;
}

struct KnownValue {
  i64 value;
  std::string provenance;
};

// Every registry pattern that matches the sorted part sizes. Overlapping
// patterns must agree; known_value returns the first.
inline std::vector<KnownValue> registry_matches(std::vector<i64> x) {
  std::sort(x.begin(), x.end());
  std::vector<KnownValue> out;
  auto Z = zarankiewicz_number;
  // The third part of a tripartite pattern {a, b, n} with a, b fixed.
  auto rest3 = [&](i64 a, i64 b) -> std::optional<i64> {
    if (x.size() != 3) return std::nullopt;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && x[i] == a && x[j] == b) return x[3 - i - j];
    return std::nullopt;
  };
  if (x.size() == 2 && x[0] <= 6)
    out.push_back({Z(x[0], x[1]), "cr(K_{m,n}) = Z(m,n) for min(m,n) <= 6"});
  if (auto n = rest3(1, 3)) out.push_back({Z(4, *n + 1) - *n / 2, "cr(K_{1,3,n}) = Z(4,n+1) - floor(n/2)"});
  if (auto n = rest3(1, 4)) out.push_back({Z(5, *n + 1) - 2 * (*n / 2), "cr(K_{1,4,n}) = Z(5,n+1) - 2 floor(n/2)"});
  if (auto n = rest3(2, 3)) out.push_back({Z(5, *n + 2) - 3 * *n, "cr(K_{2,3,n}) = Z(5,n+2) - 3n"});
  if (auto n = rest3(2, 4)) out.push_back({Z(6, *n + 2) - 4 * *n, "cr(K_{2,4,n}) = Z(6,n+2) - 4n"});
  if (x.size() == 4 && x[0] == 1 && x[1] == 1) {
    for (int i = 2; i < 4; ++i)
      if (x[i] == 3) {
        i64 n = x[5 - i];
        out.push_back({Z(5, n) + (3 * n) / 2, "cr(K_{1,1,3,n}) = Z(5,n) + floor(3n/2)"});
        break;
      }
    if (x[2] == 4 && x[3] == 4) out.push_back({24, "cr(K_{1,1,4,4}) = 24"});
  }
  return out;
}

inline std::optional<KnownValue> known_value(const std::vector<i64>& x) {
  auto all = registry_matches(x);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// Where crossing numbers of smaller graphs come from. Values found here are
// used as lower bounds; assumed values are marked so reports can say which
// assumptions a number depends on.
struct CrSource {
  bool registry = true;
  bool assume_zc = false;
  bool assume_hc2mn = false;
  std::map<std::string, i64> table;  // keyed by sizes_spec

  struct Value {
    i64 value;
    std::string provenance;
    std::vector<std::string> assumptions;
  };

  std::optional<Value> lookup(std::vector<i64> x) const;
};

struct PriorTerm {
  std::string spec;
  i64 value;
  std::string provenance;
};

struct BoundValue {
  Rational exact;
  i64 value;        // exact if integral, otherwise its floor
  bool integral;
  std::vector<PriorTerm> inputs;
  std::vector<std::string> assumptions;
};

namespace detail {

inline i64 need_cr(const CrSource& src, std::vector<i64> x, BoundValue& acc) {
  auto v = src.lookup(x);
  if (!v) fail("MISSING_VALUE", "no crossing number available for " + sizes_spec(x));
  acc.inputs.push_back({sizes_spec(x), v->value, v->provenance});
  for (auto& a : v->assumptions)
    if (std::find(acc.assumptions.begin(), acc.assumptions.end(), a) == acc.assumptions.end())
      acc.assumptions.push_back(a);
  return v->value;
}

inline void finish(BoundValue& b) {
  b.integral = b.exact.denominator() == 1;
  b.value = floor_of(b.exact);
  std::sort(b.assumptions.begin(), b.assumptions.end());
}

}  // namespace detail

// Earlier lower bounds for cr(K_{1,m,n}), in terms of bipartite values.
enum class PriorKind { A10, A4, A6 };

inline BoundValue prior_lower_bound(PriorKind kind, i64 m, i64 n, const CrSource& src) {
  if (m < 1 || n < 1) fail("INVALID_PARTS", "m,n must be positive");
  BoundValue b;
  switch (kind) {
    case PriorKind::A10: {
      i64 big = detail::need_cr(src, {m + 1, n + 1}, b);
      b.exact = Rational(big - floor_div(n * (m / 2) * ((m + 1) / 2), m));
      break;
    }
    case PriorKind::A4: {
      if (m % 2) fail("WRONG_PARITY", "this bound needs m even");
      i64 a = detail::need_cr(src, {m + 1, n + 2}, b), c = detail::need_cr(src, {m + 1, n}, b);
      b.exact = Rational(a + c - (m / 2) * (m / 2 + n - 1), 2);
      break;
    }
    case PriorKind::A6: {
      if (m % 2 == 0 || n % 2 == 0) fail("WRONG_PARITY", "this bound needs m and n odd");
      i64 a = detail::need_cr(src, {m + 2, n}, b), c = detail::need_cr(src, {m, n + 2}, b);
      b.exact = Rational(a + c - (m / 2) * (m / 2) - (n / 2) * (n / 2), 2);
      break;
    }
  }
  detail::finish(b);
  return b;
}

inline std::optional<CrSource::Value> CrSource::lookup(std::vector<i64> x) const {
  std::sort(x.begin(), x.end());
  if (auto it = table.find(sizes_spec(x)); it != table.end()) return Value{it->second, "user table", {"table"}};
  if (registry)
    if (auto k = known_value(x)) return Value{k->value, k->provenance, {}};
  if (x.size() == 2 && assume_zc) return Value{zarankiewicz_number(x[0], x[1]), "assumed Z(m,n)", {"zc"}};
  if (x.size() == 3 && x[0] == 2 && assume_hc2mn)
    return Value{hc_value(HcFamily::K2mn, x[1], x[2]), "assumed Z(m+2,n+2) - mn", {"hc2mn"}};
  if (x.size() == 3 && x[0] == 1) {
    // Best earlier bound over both orientations, with bipartite values from
    // this same source.
    std::optional<Value> best;
    for (int swap = 0; swap < 2; ++swap) {
      i64 m = swap ? x[2] : x[1], n = swap ? x[1] : x[2];
      for (auto kind : {PriorKind::A10, PriorKind::A4, PriorKind::A6}) {
        try {
          auto b = prior_lower_bound(kind, m, n, *this);
          if (!best || b.value > best->value) {
            std::string name = kind == PriorKind::A10 ? "A10" : kind == PriorKind::A4 ? "A4" : "A6";
            best = Value{b.value, "lower bound " + name + "(" + std::to_string(m) + "," + std::to_string(n) + ")", b.assumptions};
          }
        } catch (const Error&) {
        }
      }
    }
    return best;
  }
  return std::nullopt;
}

// Lower bounds on cr(K_{1,1,m,n}) from the three redrawing arguments.
inline BoundValue theorem_lower_bound(int thm, i64 m, i64 n, const CrSource& src) {
  if (m < 1 || n < 1) fail("INVALID_PARTS", "m,n must be positive");
  BoundValue b;
  switch (thm) {
    case 1: {
      if (m % 2 || n % 2) fail("WRONG_PARITY", "needs m and n even");
      i64 a = detail::need_cr(src, {m + 1, n + 3}, b), c = detail::need_cr(src, {m + 3, n + 1}, b);
      b.exact = (Rational(a + c - m * n) - Rational(m * m + n * n, 4)) / 2;
      break;
    }
    case 2: {
      if (m % 2 == 0 || n % 2 == 0) fail("WRONG_PARITY", "needs m and n odd");
      i64 a = detail::need_cr(src, {1, m + 1, n + 1}, b), c = detail::need_cr(src, {2, m, n}, b);
      b.exact = (Rational(a + c + 1) - Rational((m + 1) * (n + 1), 4)) / 2;
      break;
    }
    case 3: {
      if (m % 2 || n % 2 == 0) fail("WRONG_PARITY", "needs m even and n odd");
      i64 a = detail::need_cr(src, {m + 1, n + 2}, b), c = detail::need_cr(src, {m + 3, n + 2}, b);
      i64 d = detail::need_cr(src, {2, m, n}, b);
      b.exact = (Rational(a + c + 2 * d - m * (n + 1)) - Rational((n + 1) * (n + 1), 4)) / 4;
      break;
    }
    default: fail("INVALID_ARGUMENT", "theorem must be 1, 2 or 3");
  }
  detail::finish(b);
  return b;
}

struct LowerEntry {
  std::string source;
  std::vector<std::string> assumptions;
  i64 value;
};

struct BoundReport {
  i64 m, n;
  std::vector<LowerEntry> lower_bounds;
  std::string upper_source;
  i64 upper;

  const LowerEntry& best() const {
    return *std::max_element(lower_bounds.begin(), lower_bounds.end(),
                             [](const LowerEntry& a, const LowerEntry& b) { return a.value < b.value; });
  }
  bool exact() const { return best().value == upper; }
  i64 gap() const { return upper - best().value; }
};

struct Assumptions {
  bool zc = false;
  bool hc2mn = false;
};

// Bounds on cr(K_{1,1,m,n}) for one cell.
inline BoundReport bound_report(i64 m, i64 n, Assumptions as) {
  CrSource src;
  src.assume_zc = as.zc;
  src.assume_hc2mn = as.hc2mn;
  BoundReport r{m, n, {}, "general drawing", hc_value(HcFamily::K11mn, m, n)};
  r.lower_bounds.push_back({"trivial", {}, 0});
  auto try_thm = [&](int thm, i64 a, i64 b) {
    try {
      auto v = theorem_lower_bound(thm, a, b, src);
      r.lower_bounds.push_back({"theorem " + std::to_string(thm), v.assumptions, v.value});
    } catch (const Error& e) {
      if (e.code() != "MISSING_VALUE" && e.code() != "WRONG_PARITY") throw;
    }
  };
  try_thm(1, m, n);
  try_thm(2, m, n);
  try_thm(3, m, n);
  try_thm(3, n, m);  // K_{1,1,m,n} = K_{1,1,n,m}
  if (auto k = known_value({1, 1, m, n})) r.lower_bounds.push_back({"registry: " + k->provenance, {}, k->value});
  return r;
}

inline std::vector<BoundReport> status_report(std::pair<i64, i64> m_range, std::pair<i64, i64> n_range, Assumptions as) {
  std::vector<BoundReport> out;
  for (i64 m = m_range.first; m <= m_range.second; ++m)
    for (i64 n = n_range.first; n <= n_range.second; ++n) out.push_back(bound_report(m, n, as));
  return out;
}

inline std::string join_assumptions(const std::vector<std::string>& a) {
  if (a.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "+" : "") + a[i];
  return s;
}

inline std::string report_csv(const std::vector<BoundReport>& rs) {
  std::ostringstream os;
  os << "m,n,lower,lower_source,assumptions,upper,status\n";
  for (auto& r : rs) {
    auto& b = r.best();
    os << r.m << ',' << r.n << ',' << b.value << ",\"" << b.source << "\"," << join_assumptions(b.assumptions) << ','
       << r.upper << ',' << (r.exact() ? "exact" : "gap") << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json report_json(const std::vector<BoundReport>& rs) {
  auto arr = nlohmann::ordered_json::array();
  for (auto& r : rs) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    auto lows = nlohmann::ordered_json::array();
    for (auto& l : r.lower_bounds) lows.push_back({{"source", l.source}, {"assumptions", l.assumptions}, {"value", l.value}});
    j["lower_bounds"] = lows;
    j["upper_bound"] = {{"source", r.upper_source}, {"value", r.upper}};
    j["status"] = r.exact() ? "exact" : "gap";
    j["gap"] = r.gap();
    arr.push_back(j);
  }
  return arr;
}

}  // namespace crosskit
