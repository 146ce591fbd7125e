#pragma once

#include <map>
#include <sstream>
#include <string>

#include "ddca/poly.hpp"

namespace ddca {

// Finite linear combination of keys with ParamPoly coefficients, zero terms dropped.
template <class Key>
struct LinComb {
  std::map<Key, ParamPoly> terms;

  LinComb() = default;
  LinComb(const Key& k, const ParamPoly& c) { add(k, c); }

  bool is_zero() const { return terms.empty(); }
  void add(const Key& k, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  void add(const LinComb& o, const ParamPoly& c = ParamPoly(1L)) {
    for (const auto& [k, x] : o.terms) add(k, x * c);
  }
  ParamPoly coeff(const Key& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? ParamPoly() : it->second;
  }
  LinComb& operator+=(const LinComb& o) {
    add(o);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, ParamPoly(-1L));
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const LinComb& a, const ParamPoly& c) {
    LinComb r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : a.terms) r.terms.emplace(k, x * c);
    return r;
  }
  friend LinComb operator*(const ParamPoly& c, const LinComb& a) { return a * c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms == b.terms; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  template <class F>
  LinComb map_coeffs(F f) const {
    LinComb r;
    for (const auto& [k, x] : terms) r.add(k, f(x));
    return r;
  }

  template <class KeyStr>
  std::string str(KeyStr key_str) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      std::string k = key_str(it->first);
      if (k.empty())
        os << it->second.str();
      else if (it->second == ParamPoly(1L))
        os << k;
      else
        os << "(" << it->second.str() << ")*" << k;
    }
    return os.str();
  }
};

}  // namespace ddca
