/*
 * Copyright 2026 The relideal Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "relideal/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace relideal {

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = c;
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < p.arity(); ++i) {
      if (m.deg(i) == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "T" + std::to_string(i + 1);
      if (m.deg(i) > 1) mono += "^" + std::to_string(m.deg(i));
    }
    if (mono.empty()) {
      os << a.get_str();
    } else if (a == 1) {
      os << mono;
    } else {
      os << a.get_str() << "*" << mono;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial parse error at position " + std::to_string(i) +
                     ": " + what + " in \"" + s + "\"");
  }
};

Int parse_uint(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) c.fail("expected a number");
  return Int(c.s.substr(start, c.i - start));
}

int parse_var(Cursor& c, int arity) {
  char ch = c.peek();
  if (ch == 'Z' || ch == 'z') {
    ++c.i;
    return 0;
  }
  if (ch != 'T' && ch != 't') c.fail("expected a variable");
  ++c.i;
  Int idx = parse_uint(c);
  if (idx < 1 || idx > arity) c.fail("variable index out of range");
  return static_cast<int>(idx.get_ui()) - 1;
}

}  // namespace

QPoly parse_qpoly(const std::string& text, int arity) {
  RatField F;
  QPoly out(arity);
  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;
    // coefficient (optional), then monomial (optional); not both absent
    Rat coef(1);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      Int num = parse_uint(c);
      Int den = 1;
      if (c.peek() == '/') {
        ++c.i;
        den = parse_uint(c);
        if (den == 0) c.fail("zero denominator");
      }
      coef = make_rat(num, den);
      saw_coef = true;
      if (c.peek() == '*') ++c.i;
    }
    Monomial m(arity);
    bool saw_var = false;
    while (true) {
      char v = c.peek();
      if (v != 'T' && v != 't' && v != 'Z' && v != 'z') break;
      int var = parse_var(c, arity);
      int e = 1;
      if (c.peek() == '^') {
        ++c.i;
        Int ee = parse_uint(c);
        if (ee > 1000000) c.fail("exponent too large");
        e = static_cast<int>(ee.get_ui());
      }
      m.deg(var) += e;
      saw_var = true;
      if (c.peek() == '*') ++c.i;
    }
    if (!saw_coef && !saw_var) c.fail("empty term");
    if (sign < 0) coef = -coef;
    out.add_term(F, m, coef);
  }
  return out;
}

ZpePoly reduce_mod(const ModRing& R, const QPoly& p) {
  ZpePoly out(p.arity());
  for (const auto& [m, c] : p.terms()) out.add_term(R, m, R.from_rat(c));
  return out;
}

void TriangularBasis::validate() const {
  if (static_cast<int>(polys.size()) != n ||
      static_cast<int>(degrees.size()) != n)
    throw InvalidBasis("triangular basis has wrong length");
  RatField F;
  for (int i = 0; i < n; ++i) {
    const QPoly& f = polys[i];
    if (f.arity() != n) throw InvalidBasis("arity mismatch in basis");
    if (degrees[i] < 1) throw InvalidBasis("degree profile entry < 1");
    bool lead_seen = false;
    for (const auto& [m, c] : f.terms()) {
      for (int j = i + 1; j < n; ++j)
        if (m.deg(j) > 0)
          throw InvalidBasis("f" + std::to_string(i + 1) +
                             " uses a variable beyond T" + std::to_string(i + 1));
      if (m.deg(i) > degrees[i])
        throw InvalidBasis("main-variable degree exceeds profile");
      if (m.deg(i) == degrees[i]) {
        if (m.total_degree() != degrees[i] || !(c == Rat(1)))
          throw InvalidBasis("f" + std::to_string(i + 1) +
                             " is not monic of degree d in its main variable");
        lead_seen = true;
      } else {
        for (int j = 0; j < i; ++j)
          if (m.deg(j) >= degrees[j])
            throw InvalidBasis("staircase violation in f" + std::to_string(i + 1));
      }
    }
    if (!lead_seen)
      throw InvalidBasis("f" + std::to_string(i + 1) + " misses its leading term");
  }
  (void)F;
}

std::vector<Monomial> order_ideal(int n, const std::vector<int>& degrees) {
  std::vector<Monomial> out;
  Monomial cur(n);
  // odometer over the staircase box
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < n) {
      if (cur.deg(i) + 1 < degrees[i]) {
        ++cur.deg(i);
        break;
      }
      cur.deg(i) = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return b.lex_less(a); });
  return out;
}

bool supported_on_order_ideal(const QPoly& p, const std::vector<int>& degrees) {
  for (const auto& [m, c] : p.terms())
    for (int i = 0; i < p.arity(); ++i)
      if (m.deg(i) >= degrees[i]) return false;
  return true;
}

QPoly normal_form(const QPoly& P, const TriangularBasis& B) {
  RatField F;
  if (P.arity() > B.n) throw Error("polynomial arity exceeds basis arity");
  QPoly r(B.n);
  if (P.arity() == B.n) {
    r = P;
  } else {
    for (const auto& [m, c] : P.terms()) {
      Monomial mm(B.n);
      for (int i = 0; i < P.arity(); ++i) mm.deg(i) = m.deg(i);
      r.add_term(F, mm, c);
    }
  }
  // reduce by the highest variable first; by triangularity the remainder is
  // independent of this order
  for (int i = B.n - 1; i >= 0; --i) {
    while (true) {
      // lex-largest term reducible by fi^
      const Monomial* hit = nullptr;
      const Rat* coef = nullptr;
      for (const auto& [m, c] : r.terms()) {
        if (m.deg(i) >= B.degrees[i]) {
          hit = &m;
          coef = &c;
          break;
        }
      }
      if (!hit) break;
      Monomial q = *hit;
      q.deg(i) -= B.degrees[i];
      QPoly sub = mp_scale(F, B.polys[i], *coef);
      QPoly shifted(B.n);
      for (const auto& [m, c] : sub.terms()) shifted.add_term(F, m * q, c);
      r = mp_sub(F, r, shifted);
    }
  }
  return r;
}

}  // namespace relideal
