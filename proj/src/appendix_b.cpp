#include "ddca/appendix_b.hpp"

#include <algorithm>
#include <cmath>

#include "ddca/liealg.hpp"
#include "ddca/linalg.hpp"

namespace ddca {

namespace {

using SymPo = std::vector<SymPoMono>;
using VCoords = std::map<int, RatFunc>;       // i -> coefficient of v_i^L
using SymTable = std::map<std::pair<int, int>, RatFunc>;  // (a, j) -> coefficient of [v_a^l, c_j]

const ParamPoly L = ParamPoly::var(Sym::l);

SymPo sp_br(const SymPo& x, const SymPo& y) {
  SymPo out;
  for (const auto& u : x)
    for (const auto& v : y)
      for (auto& t : po_bracket_symbolic(u, v)) out.push_back(std::move(t));
  return sympo_collect(out);
}

SymPo sp_f() { return {{0, 2, rat(1, 2)}}; }

SymPo v_elem(const ParamPoly& level, int i) {
  SymPo x{{level, 0, 1}};
  for (int k = 1; k < i; ++k) x = sp_br(sp_f(), x);
  return x;
}

const std::vector<SymPo>& c_elems() {
  static const std::vector<SymPo> cs = [] {
    std::vector<SymPo> out{{{3, 0, rat(1, 6)}}};
    for (int i = 0; i < 3; ++i) out.push_back(sp_br(sp_f(), out.back()));
    return out;
  }();
  return cs;
}

const std::vector<SymPo>& d_elems() {
  static const std::vector<SymPo> ds = [] {
    std::vector<SymPo> out{sp_br(c_elems()[1], c_elems()[0])};
    for (int i = 0; i < 3; ++i) out.push_back(sp_br(sp_f(), out.back()));
    return out;
  }();
  return ds;
}

ParamPoly falling(const ParamPoly& x, int m) {
  ParamPoly r(1L);
  for (int i = 0; i < m; ++i) r *= x - ParamPoly(i);
  return r;
}

// Coordinates of x in V_level, where v_i = (level)_{i-1} q^{level-i+1} p^{i-1}.
VCoords to_v(const SymPo& x, const ParamPoly& level) {
  VCoords out;
  for (const auto& m : x) {
    if (!m.b.is_constant() || m.a + m.b != level) throw std::logic_error("element is not in V_level");
    int j = static_cast<int>(m.b.to_rat().get_num().get_si()) + 1;
    RatFunc c = RatFunc(m.coef) / RatFunc(falling(level, j - 1));
    auto [it, fresh] = out.try_emplace(j, c);
    if (!fresh) it->second = it->second + c;
  }
  return out;
}

void add_sym(SymTable& t, const VCoords& v, int j, const RatFunc& s) {
  if (j > 4) return;
  for (const auto& [a, c] : v) {
    auto& slot = t[{a, j}];
    slot = slot + s * c;
  }
}

// [v, [c_x, c_y]] = [[v, c_x], c_y] - [[v, c_y], c_x] for v in V_{l-1}
void add_v_cc(SymTable& t, const VCoords& v, int x, int y, const RatFunc& s) {
  if (x > 4 || y > 4) return;
  for (const auto& [a, c] : v) {
    SymPo va = v_elem(L - ParamPoly(1L), a);
    add_sym(t, to_v(sp_br(va, c_elems()[x - 1]), L), y, s * c);
    add_sym(t, to_v(sp_br(va, c_elems()[y - 1]), L), x, -s * c);
  }
}

Rat binom(int n, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// [v, d_i] with d_i = sum_j C(i-1, j) [c_{2+j}, c_{i-j}]
void add_v_d(SymTable& t, const VCoords& v, int i, const RatFunc& s) {
  for (int j = 0; j < i; ++j) add_v_cc(t, v, 2 + j, i - j, s * RatFunc(binom(i - 1, j)));
}

// [v_2^{l-2}, [d_i, c_j]] = [[v, d_i], c_j] - [[v, c_j], d_i]
void add_v2_dc(SymTable& t, int i, int j, const RatFunc& s) {
  SymPo v2 = v_elem(L - ParamPoly(2L), 2);
  add_sym(t, to_v(sp_br(v2, d_elems()[i - 1]), L), j, s);
  add_v_d(t, to_v(sp_br(v2, c_elems()[j - 1]), L - ParamPoly(1L)), i, -s);
}

RatFunc get(const SymTable& t, int a, int j) {
  auto it = t.find({a, j});
  return it == t.end() ? RatFunc() : it->second;
}

Sl2Vector tensor(std::vector<std::tuple<ParamPoly, int, int>> ts) {
  Sl2Vector v(WordKind::tensor);
  for (auto& [c, a, j] : ts) v.add({letters::v(a), letters::c(j)}, c);
  return v;
}

std::vector<ParamPoly> coords(const Sl2Vector& x) {
  std::vector<ParamPoly> out;
  for (int a = 4; a >= 1; --a) {
    auto it = x.terms().find({letters::v(a), letters::c(5 - a)});
    out.push_back(it == x.terms().end() ? ParamPoly() : it->second);
  }
  return out;
}

}  // namespace

std::vector<long> integer_roots(const ParamPoly& p, Sym var) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has every root");
  auto cs = p.coeffs(var);
  // Cauchy bound on the absolute value of any root
  Rat lead = cs.back().to_rat(), bound(1);
  Rat mx(0);
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) mx = std::max(mx, Rat(abs(cs[i].to_rat() / lead)));
  bound += mx;
  long b = static_cast<long>(std::ceil(bound.get_d())) + 1;
  std::vector<long> out;
  for (long x = -b; x <= b; ++x)
    if (p.eval({{var, Rat(x)}}) == 0) out.push_back(x);
  return out;
}

AppendixB appendix_b() {
  AppendixB r;
  ParamPoly one(1L);
  r.hw = {tensor({{1, 1, 1}}),
          tensor({{3, 2, 1}, {-L, 1, 2}}),
          tensor({{6, 3, 1}, {Rat(-4) * (L - one), 2, 2}, {L * (L - one), 1, 3}}),
          tensor({{6, 4, 1},
                  {Rat(-6) * (L - ParamPoly(2L)), 3, 2},
                  {Rat(3) * (L - ParamPoly(2L)) * (L - one), 2, 3},
                  {-(L * (L - one) * (L - ParamPoly(2L))), 1, 4}})};
  for (const auto& h : r.hw) {
    r.hw_killed_by_e.push_back(act(Sl2Gen::e, h).is_zero());
    r.hw_weights.push_back(h.weight());
  }

  SymTable top;
  add_v2_dc(top, 1, 1, 1);
  r.top_coefficient = get(top, 1, 1);
  for (const auto& [k, c] : top)
    if (k != std::pair{1, 1} && !c.is_zero()) throw std::logic_error("unexpected term in the V_{l+3} identity");

  SymTable phi;
  VCoords v1{{1, RatFunc(1L)}};
  add_v_cc(phi, v1, 1, 4, 1);
  add_v_cc(phi, v1, 2, 3, -1);
  r.phi1_image = {get(phi, 3, 1), get(phi, 2, 2), get(phi, 1, 3)};

  SymTable a1;
  for (auto [i, j, s] : {std::tuple{4, 1, 1}, {3, 2, -2}, {2, 3, 3}, {1, 4, -4}}) add_v2_dc(a1, i, j, RatFunc(Rat(s)));
  for (int a = 4; a >= 1; --a) r.alpha1_derived.push_back(get(a1, a, 5 - a));

  ParamPoly l2 = L - ParamPoly(2L), l1 = L - one;
  r.alpha1_stated = {Rat(12) * (ParamPoly(44L) - Rat(16) * L), Rat(12) * l2 * (Rat(11) * L - ParamPoly(35L)),
                     Rat(12) * l2 * l1 * (ParamPoly(13L) - Rat(3) * L), L * l1 * l2 * (Rat(2) * L - ParamPoly(34L))};
  r.alpha2 = {1, 3, 3, 1};
  r.alpha3 = {6, ParamPoly(10L) - Rat(4) * L, l1 * (L - ParamPoly(4L)), L * l1};
  r.alpha2_is_f3_top = coords(act_power(Sl2Gen::f, r.hw[0], 3)) == r.alpha2;
  r.alpha3_is_f_of_hw3 = coords(act(Sl2Gen::f, r.hw[2])) == r.alpha3;

  // Solve stated = x * derived + z * alpha3 from the first two coordinates, then check all four.
  RatFunc d0 = r.alpha1_derived[0], d1 = r.alpha1_derived[1];
  RatFunc s0 = r.alpha1_stated[0], s1 = r.alpha1_stated[1], t0 = r.alpha3[0], t1 = r.alpha3[1];
  RatFunc det = d0 * t1 - d1 * t0;
  if (!det.is_zero()) {
    r.combo_x = (s0 * t1 - s1 * t0) / det;
    r.combo_z = (d0 * s1 - d1 * s0) / det;
    r.combo_holds = true;
    for (int i = 0; i < 4; ++i)
      r.combo_holds = r.combo_holds &&
                      RatFunc(r.alpha1_stated[i]) == r.combo_x * r.alpha1_derived[i] + r.combo_z * RatFunc(r.alpha3[i]);
  }

  r.minors = maximal_minors({r.alpha1_stated, r.alpha2, r.alpha3});
  bool first = true;
  for (const auto& m : r.minors) {
    if (m.is_zero()) continue;
    auto roots = integer_roots(m, Sym::l);
    if (first) {
      r.common_roots = roots;
      first = false;
    } else {
      std::vector<long> keep;
      std::set_intersection(r.common_roots.begin(), r.common_roots.end(), roots.begin(), roots.end(),
                            std::back_inserter(keep));
      r.common_roots = keep;
    }
  }
  return r;
}

}  // namespace ddca
