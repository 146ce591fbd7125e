#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ddca/lincomb.hpp"

namespace ddca {

// Monomial u^a w^b of two variables: q^a p^b in po, x^a d^b in the Weyl algebra.
// The order compares (a+b, a), so PBW monomials list higher-degree factors first.
struct Mono2 {
  int a = 0;
  int b = 0;
  friend bool operator==(const Mono2&, const Mono2&) = default;
  friend bool operator<(const Mono2& x, const Mono2& y) {
    if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
    return x.a < y.a;
  }
};

// ---- po: polynomials in q, p with the Poisson bracket {p, q} = 1

using PoElement = LinComb<Mono2>;

PoElement po(int a, int b, const ParamPoly& c = ParamPoly(1L));
PoElement po_bracket(const PoElement& x, const PoElement& y);
std::string po_str(const PoElement& x);
// Grading deg(q^a p^b) = a + b - 2; throws on inhomogeneous or zero input.
int po_degree(const PoElement& x);
bool po_is_even(const PoElement& x);

// q^a p^b with exponents affine in l and coefficient in Q[l].
struct SymPoMono {
  ParamPoly a;
  ParamPoly b;
  ParamPoly coef;
};

std::vector<SymPoMono> po_bracket_symbolic(const SymPoMono& x, const SymPoMono& y);
// Merges like monomials (equal exponent polynomials).
std::vector<SymPoMono> sympo_collect(const std::vector<SymPoMono>& xs);
PoElement sympo_specialize(const std::vector<SymPoMono>& xs, long l);

// ---- Weyl algebra C[x, d], normal order x^a d^b

using WeylElement = LinComb<Mono2>;

WeylElement weyl(int a, int b, const ParamPoly& c = ParamPoly(1L));
WeylElement weyl_product(const WeylElement& x, const WeylElement& y);
WeylElement weyl_bracket(const WeylElement& x, const WeylElement& y);
std::string weyl_str(const WeylElement& x);
// Top graded part for deg(x^a d^b) = a + b - 2, read as a po element.
PoElement weyl_leading_symbol(const WeylElement& x);

// ---- Lie algebras with a PBW basis, used as carriers of enveloping algebras

struct PoLie {
  using Basis = Mono2;
  static LinComb<Mono2> bracket(const Mono2& x, const Mono2& y);
  static std::string name(const Mono2& x);
};

// C[x, d] viewed as a Lie algebra under the commutator.
struct WeylLie {
  using Basis = Mono2;
  static LinComb<Mono2> bracket(const Mono2& x, const Mono2& y);
  static std::string name(const Mono2& x);
};

// sl2 basis 0 = f, 1 = h, 2 = e.
struct Sl2Lie {
  using Basis = int;
  static LinComb<int> bracket(int x, int y);
  static std::string name(int x);
};

// U(g) with PBW monomials stored as non-increasing sequences of basis elements.
template <class Lie>
class UEnv {
 public:
  using Basis = typename Lie::Basis;
  using Mono = std::vector<Basis>;
  using Elem = LinComb<Mono>;

  static Elem gen(const Basis& x, const ParamPoly& c = ParamPoly(1L)) { return Elem(Mono{x}, c); }
  static Elem scalar(const ParamPoly& c) { return Elem(Mono{}, c); }
  static Elem from_lie(const LinComb<Basis>& x) {
    Elem r;
    for (const auto& [b, c] : x.terms) r.add(Mono{b}, c);
    return r;
  }

  Elem product(const Elem& x, const Elem& y) {
    Elem out;
    for (const auto& [m, c] : x.terms) {
      Elem cur = y;
      for (auto it = m.rbegin(); it != m.rend(); ++it) cur = lmul(*it, cur);
      out.add(cur, c);
    }
    return out;
  }
  Elem bracket(const Elem& x, const Elem& y) { return product(x, y) - product(y, x); }

  Elem lmul(const Basis& x, const Elem& y) {
    Elem out;
    for (const auto& [m, c] : y.terms) out.add(lmul_mono(x, m), c);
    return out;
  }

  static std::string str(const Elem& x) {
    return x.str([](const Mono& m) {
      std::string s;
      for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "*" : "") + Lie::name(m[i]);
      return s;
    });
  }

  std::size_t cache_size() const { return memo_.size(); }

 private:
  const Elem& lmul_mono(const Basis& x, const Mono& m) {
    auto key = std::make_pair(x, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Elem r;
    if (m.empty() || !(x < m[0])) {
      Mono n;
      n.reserve(m.size() + 1);
      n.push_back(x);
      n.insert(n.end(), m.begin(), m.end());
      r.add(n, ParamPoly(1L));
    } else {
      // x m0 rest = m0 (x rest) + [x, m0] rest
      Mono rest(m.begin() + 1, m.end());
      Elem xr = lmul(x, Elem(rest, ParamPoly(1L)));
      r = lmul(m[0], xr);
      for (const auto& [b, c] : Lie::bracket(x, m[0]).terms) r.add(lmul_mono(b, rest), c);
    }
    return memo_.emplace(key, std::move(r)).first->second;
  }

  std::map<std::pair<Basis, Mono>, Elem> memo_;
};

// ---- gl(lambda) = U(sl2) / (C - (lambda^2 - 1)/2), C = ef + fe + h^2/2
// Basis f^a h^b e^c with a*c = 0.

struct GlKey {
  int a = 0;
  int b = 0;
  int c = 0;
  auto operator<=>(const GlKey&) const = default;
};

class GlLambda {
 public:
  using Elem = LinComb<GlKey>;
  static Elem e() { return Elem({0, 0, 1}, 1); }
  static Elem f() { return Elem({1, 0, 0}, 1); }
  static Elem h() { return Elem({0, 1, 0}, 1); }
  static Elem scalar(const ParamPoly& c) { return Elem({0, 0, 0}, c); }
  // Value of the Casimir, as a polynomial in lam.
  static ParamPoly casimir();

  static Elem product(const Elem& x, const Elem& y);
  static Elem bracket(const Elem& x, const Elem& y) { return product(x, y) - product(y, x); }
  static std::string str(const Elem& x);

 private:
  static Elem lmul_e(const Elem& y);
  static Elem lmul_f(const Elem& y);
  static Elem lmul_h(const Elem& y);
};

}  // namespace ddca
