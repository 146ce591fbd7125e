#include "ddca/liealg.hpp"

#include <stdexcept>

namespace ddca {

namespace {

std::string mono_name(const Mono2& m, const char* u, const char* w) {
  std::string s;
  auto part = [&](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part(u, m.a);
  part(w, m.b);
  return s;
}

Rat falling(long x, long j) {
  Rat r(1);
  for (long i = 0; i < j; ++i) r *= x - i;
  return r;
}

Rat binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  return falling(n, k) / falling(k, k);
}

}  // namespace

PoElement po(int a, int b, const ParamPoly& c) { return PoElement(Mono2{a, b}, c); }

PoElement po_bracket(const PoElement& x, const PoElement& y) {
  PoElement r;
  for (const auto& [u, cu] : x.terms)
    for (const auto& [v, cv] : y.terms) {
      long k = u.a, l = u.b, m = v.a, n = v.b;
      long coef = l * m - n * k;
      if (coef == 0) continue;
      r.add(Mono2{static_cast<int>(k + m - 1), static_cast<int>(l + n - 1)}, cu * cv * Rat(coef));
    }
  return r;
}

std::string po_str(const PoElement& x) {
  return x.str([](const Mono2& m) { return mono_name(m, "q", "p"); });
}

int po_degree(const PoElement& x) {
  if (x.is_zero()) throw std::invalid_argument("degree of zero");
  int d = x.terms.begin()->first.a + x.terms.begin()->first.b - 2;
  for (const auto& [m, c] : x.terms)
    if (m.a + m.b - 2 != d) throw std::invalid_argument("inhomogeneous element");
  return d;
}

bool po_is_even(const PoElement& x) {
  for (const auto& [m, c] : x.terms)
    if ((m.a + m.b) % 2) return false;
  return true;
}

std::vector<SymPoMono> po_bracket_symbolic(const SymPoMono& x, const SymPoMono& y) {
  ParamPoly coef = (x.b * y.a - y.b * x.a) * x.coef * y.coef;
  if (coef.is_zero()) return {};
  return {SymPoMono{x.a + y.a - ParamPoly(1L), x.b + y.b - ParamPoly(1L), coef}};
}

std::vector<SymPoMono> sympo_collect(const std::vector<SymPoMono>& xs) {
  std::map<std::pair<ParamPoly, ParamPoly>, ParamPoly> acc;
  for (const auto& m : xs) acc[{m.a, m.b}] += m.coef;
  std::vector<SymPoMono> out;
  for (const auto& [k, c] : acc)
    if (!c.is_zero()) out.push_back({k.first, k.second, c});
  return out;
}

PoElement sympo_specialize(const std::vector<SymPoMono>& xs, long l) {
  PoElement r;
  std::map<Sym, Rat> at{{Sym::l, Rat(l)}};
  for (const auto& m : xs) {
    Rat a = m.a.eval(at), b = m.b.eval(at);
    if (a < 0 || b < 0 || a.get_den() != 1 || b.get_den() != 1)
      throw std::domain_error("exponent is not a natural number at this l");
    r.add(Mono2{static_cast<int>(a.get_num().get_si()), static_cast<int>(b.get_num().get_si())},
          m.coef.partial_eval(at));
  }
  return r;
}

WeylElement weyl(int a, int b, const ParamPoly& c) { return WeylElement(Mono2{a, b}, c); }

WeylElement weyl_product(const WeylElement& x, const WeylElement& y) {
  WeylElement r;
  for (const auto& [u, cu] : x.terms)
    for (const auto& [v, cv] : y.terms) {
      // d^b x^c = sum_j C(b,j) c!/(c-j)! x^{c-j} d^{b-j}
      ParamPoly c = cu * cv;
      for (int j = 0; j <= std::min(u.b, v.a); ++j)
        r.add(Mono2{u.a + v.a - j, u.b + v.b - j}, c * (binom(u.b, j) * falling(v.a, j)));
    }
  return r;
}

WeylElement weyl_bracket(const WeylElement& x, const WeylElement& y) {
  return weyl_product(x, y) - weyl_product(y, x);
}

std::string weyl_str(const WeylElement& x) {
  return x.str([](const Mono2& m) { return mono_name(m, "x", "D"); });
}

PoElement weyl_leading_symbol(const WeylElement& x) {
  if (x.is_zero()) throw std::invalid_argument("leading symbol of zero");
  int top = x.terms.rbegin()->first.a + x.terms.rbegin()->first.b;
  PoElement r;
  for (const auto& [m, c] : x.terms)
    if (m.a + m.b == top) r.add(m, c);
  return r;
}

LinComb<Mono2> PoLie::bracket(const Mono2& x, const Mono2& y) {
  return po_bracket(PoElement(x, 1), PoElement(y, 1));
}
std::string PoLie::name(const Mono2& x) {
  std::string s = mono_name(x, "q", "p");
  return s.empty() ? "K" : s;
}

LinComb<Mono2> WeylLie::bracket(const Mono2& x, const Mono2& y) {
  return weyl_bracket(WeylElement(x, 1), WeylElement(y, 1));
}
std::string WeylLie::name(const Mono2& x) {
  std::string s = mono_name(x, "x", "D");
  return s.empty() ? "1" : "(" + s + ")";
}

LinComb<int> Sl2Lie::bracket(int x, int y) {
  if (x == y) return {};
  if (x > y) return Sl2Lie::bracket(y, x) * ParamPoly(-1L);
  if (x == 0 && y == 1) return LinComb<int>(0, 2);   // [f,h] = 2f
  if (x == 0 && y == 2) return LinComb<int>(1, -1);  // [f,e] = -h
  return LinComb<int>(2, 2);                          // [h,e] = 2e
}
std::string Sl2Lie::name(int x) { return x == 0 ? "f" : x == 1 ? "h" : "e"; }

ParamPoly GlLambda::casimir() {
  return (ParamPoly::var(Sym::lam, 2) - ParamPoly(1L)) * rat(1, 2);
}

namespace {

// (C - h - h^2/2)/2 as a polynomial in h, coefficients by power.
std::vector<ParamPoly> fe_poly() {
  return {GlLambda::casimir() * rat(1, 2), ParamPoly(rat(-1, 2)), ParamPoly(rat(-1, 4))};
}

}  // namespace

GlLambda::Elem GlLambda::lmul_h(const Elem& y) {
  Elem r;
  for (const auto& [k, c] : y.terms) {
    r.add({k.a, k.b + 1, k.c}, c);
    if (k.a) r.add(k, c * Rat(-2 * k.a));
  }
  return r;
}

GlLambda::Elem GlLambda::lmul_f(const Elem& y) {
  Elem r;
  auto fe = fe_poly();
  for (const auto& [k, c] : y.terms) {
    if (k.a > 0 || k.c == 0) {
      r.add({k.a + 1, k.b, k.c}, c);
      continue;
    }
    // f h^b e^c = (h+2)^b (fe) e^{c-1}
    for (int j = 0; j <= k.b; ++j) {
      Rat bj = binom(k.b, j);
      for (int t = 0; t < k.b - j; ++t) bj *= 2;
      for (int s = 0; s < 3; ++s) r.add({0, j + s, k.c - 1}, c * fe[s] * bj);
    }
  }
  return r;
}

GlLambda::Elem GlLambda::lmul_e(const Elem& y) {
  Elem r;
  auto fe = fe_poly();
  for (const auto& [k, c] : y.terms) {
    if (k.a == 0) {
      // e h^b = (h-2)^b e
      for (int j = 0; j <= k.b; ++j) {
        Rat bj = binom(k.b, j);
        for (int t = 0; t < k.b - j; ++t) bj *= -2;
        r.add({0, j, k.c + 1}, c * bj);
      }
      continue;
    }
    // here c = 0: e f^a h^b = f^{a-1} h^b (fe) + a f^{a-1} (h - a + 1) h^b
    for (int s = 0; s < 3; ++s) r.add({k.a - 1, k.b + s, 0}, c * fe[s]);
    r.add({k.a - 1, k.b + 1, 0}, c * Rat(k.a));
    r.add({k.a - 1, k.b, 0}, c * Rat(k.a * (1 - k.a)));
  }
  return r;
}

GlLambda::Elem GlLambda::product(const Elem& x, const Elem& y) {
  Elem out;
  for (const auto& [k, c] : x.terms) {
    Elem cur = y;
    for (int i = 0; i < k.c; ++i) cur = lmul_e(cur);
    for (int i = 0; i < k.b; ++i) cur = lmul_h(cur);
    for (int i = 0; i < k.a; ++i) cur = lmul_f(cur);
    out.add(cur, c);
  }
  return out;
}

std::string GlLambda::str(const Elem& x) {
  return x.str([](const GlKey& k) {
    std::string s;
    auto part = [&](const char* v, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += v;
      if (e > 1) s += "^" + std::to_string(e);
    };
    part("f", k.a);
    part("h", k.b);
    part("e", k.c);
    return s;
  });
}

}  // namespace ddca
