#include "ddca/admissible.hpp"

#include "ddca/beta.hpp"

#include <cstdlib>
#include <functional>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ddca {

std::string adm_word_str(const AdmWord& w) {
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += ' ';
    s += adm_is_y(c) ? 'y' : 'x';
    s += std::to_string(adm_slot(c) + 1);
  }
  return s.empty() ? "1" : s;
}

AdmWord adm_word_parse(const std::string& s) {
  AdmWord w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y')) throw std::invalid_argument("bad letter: " + tok);
    int slot = std::stoi(tok.substr(1)) - 1;
    if (slot < 0 || slot > 100) throw std::invalid_argument("bad slot: " + tok);
    w += tok[0] == 'x' ? adm_x(slot) : adm_y(slot);
  }
  return w;
}

AdmTerm canonicalize(const AdmTerm& t) {
  std::map<int, int> relabel;
  AdmWord w;
  w.reserve(t.word.size());
  for (char c : t.word) {
    auto [it, fresh] = relabel.try_emplace(adm_slot(c), static_cast<int>(relabel.size()));
    w += adm_is_y(c) ? adm_y(it->second) : adm_x(it->second);
  }
  int used = static_cast<int>(relabel.size());
  ParamPoly c = t.coeff;
  if (t.slot_count > used) c *= ParamPoly::var(Sym::n, t.slot_count - used);
  return {c, w, used};
}

AdmSum adm_sum(const AdmTerm& t) {
  AdmTerm c = canonicalize(t);
  return AdmSum(c.word, c.coeff);
}

namespace {

constexpr std::size_t kWordMemoLimit = 300'000;

int slot_count(const AdmWord& w) {
  int s = 0;
  for (char c : w) s = std::max(s, adm_slot(c) + 1);
  return s;
}

AdmWord shifted(const AdmWord& w, int by) {
  AdmWord r = w;
  for (char& c : r) c = static_cast<char>(c + 2 * by);
  return r;
}

// Replace slot labels in w[from, end) via f.
template <class F>
void relabel_tail(AdmWord& w, std::size_t from, F f) {
  for (std::size_t i = from; i < w.size(); ++i) {
    int s = f(adm_slot(w[i]));
    w[i] = adm_is_y(w[i]) ? adm_y(s) : adm_x(s);
  }
}

std::vector<std::pair<int, int>> slots_of(const TIndex& m) {
  std::vector<std::pair<int, int>> v;
  for (const auto& [rq, mult] : m.m)
    for (int i = 0; i < mult; ++i) v.push_back(rq);
  return v;
}

// T(m) is D(m) plus terms below it in this order
bool adm_below(const TIndex& u, const TIndex& v) {
  return u.weight() != v.weight() ? u.weight() < v.weight() : u.size() < v.size();
}

TIndex minus_one(TIndex m, std::pair<int, int> rq) {
  if (--m.m[rq] == 0) m.m.erase(rq);
  return m;
}

std::size_t poly_terms(const AdmVec& v) {
  std::size_t s = 0;
  for (const auto& [key, c] : v.terms) s += c.terms().size();
  return s;
}

}  // namespace

AdmSum adm_concat(const AdmSum& a, const AdmSum& b) {
  AdmSum r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add(wa + shifted(wb, slot_count(wa)), ca * cb);
  return r;
}

std::map<TIndex, Rat> specialize(const TVector& v, const Rat& n0, const Rat& t0, const Rat& k0) {
  std::map<TIndex, Rat> r;
  for (const auto& [m, c] : v.terms) {
    Rat x = c.eval({{Sym::n, n0}, {Sym::t, t0}, {Sym::k, k0}});
    if (x != 0) r[m] = x;
  }
  return r;
}

Admissible::Admissible(ParamPoly t, ParamPoly k, ParamPoly n_value)
    : t_(std::move(t)), k_(std::move(k)), n_(std::move(n_value)) {}

AdmWord Admissible::pbw_word(const TIndex& m) {
  auto slots = slots_of(m);
  AdmWord w;
  for (std::size_t i = 0; i < slots.size(); ++i) w.append(slots[i].first, adm_x(static_cast<int>(i)));
  for (std::size_t i = 0; i < slots.size(); ++i) w.append(slots[i].second, adm_y(static_cast<int>(i)));
  return w;
}

// Distinct-index sums: slots take pairwise different values, so a group
// element pushed through the suffix is an exact relabeling.
AdmTerm Admissible::canonicalize_distinct(const AdmTerm& t) const {
  AdmTerm c = canonicalize({1, t.word, t.word.empty() ? 0 : slot_count(t.word)});
  ParamPoly coeff = t.coeff;
  for (int j = c.slot_count; j < t.slot_count; ++j) coeff *= n_ - ParamPoly(j);
  return {coeff, c.word, c.slot_count};
}

const AdmVec& Admissible::normal_order_word(const AdmWord& w) {
  if (auto it = word_memo_.find(w); it != word_memo_.end()) return it->second;

  std::size_t i = 0;
  while (i + 1 < w.size() && !(adm_is_y(w[i]) && !adm_is_y(w[i + 1]))) ++i;
  AdmVec out;
  if (i + 1 >= w.size()) {
    std::map<int, std::pair<int, int>> per_slot;
    for (char c : w) (adm_is_y(c) ? per_slot[adm_slot(c)].second : per_slot[adm_slot(c)].first)++;
    TIndex m;
    for (const auto& [s, ab] : per_slot) m.m[ab]++;
    out.add(m, 1);
  } else {
    const int a = adm_slot(w[i]), b = adm_slot(w[i + 1]), s = slot_count(w);
    const AdmWord P = w.substr(0, i), Q = w.substr(i + 2);
    auto emit = [&](const ParamPoly& c, const AdmWord& word, int slots) {
      if (c.is_zero()) return;
      AdmTerm t = canonicalize_distinct({c, word, slots});
      for (const auto& [key, x] : normal_order_word(t.word).terms) out.add(key, x * t.coeff);
    };
    auto swap_in_Q = [&](int u, int v) {
      AdmWord r = P + Q;
      relabel_tail(r, P.size(), [&](int x) { return x == u ? v : x == v ? u : x; });
      return r;
    };
    emit(1, P + adm_x(b) + adm_y(a) + Q, s);
    if (a != b) {
      emit(k_, swap_in_Q(a, b), s);
    } else {
      // y_i x_i = x_i y_i + t - k sum_{m != i} s_im, with m another slot or a fresh index
      emit(t_, P + Q, s);
      for (int c = 0; c < s; ++c)
        if (c != a) emit(-k_, swap_in_Q(a, c), s);
      emit(-k_, swap_in_Q(a, s), s + 1);
    }
  }
  stored_terms_ += poly_terms(out);
  if (term_budget_ && stored_terms_ > term_budget_) throw BudgetExceeded("normal ordering exceeded the term budget");
  return word_memo_.emplace(w, std::move(out)).first->second;
}

AdmVec Admissible::normal_order(const AdmSum& a) {
  AdmVec r;
  for (const auto& [w, c] : a.terms) {
    AdmTerm t = canonicalize({c, w, slot_count(w)});
    ParamPoly coeff = t.coeff.subs(Sym::n, n_);
    // a free sum is the sum over set partitions of its slots of distinct sums
    const int s = t.slot_count;
    std::vector<int> block(s, 0);
    while (true) {
      AdmWord merged = t.word;
      relabel_tail(merged, 0, [&](int x) { return block[x]; });
      int blocks = s ? *std::max_element(block.begin(), block.end()) + 1 : 0;
      AdmTerm d = canonicalize_distinct({coeff, merged, blocks});
      r.add(normal_order_word(d.word), d.coeff);
      // next restricted growth string
      int j = s - 1;
      while (j > 0) {
        int mx = *std::max_element(block.begin(), block.begin() + j);
        if (block[j] <= mx) break;
        block[j--] = 0;
      }
      if (j <= 0) break;
      ++block[j];
    }
  }
  return r;
}

AdmVec Admissible::key_product(const TIndex& a, const TIndex& b) {
  if (a.empty()) return AdmVec(b, 1);
  if (b.empty()) return AdmVec(a, 1);
  auto key = std::make_pair(a, b);
  if (auto it = key_memo_.find(key); it != key_memo_.end()) return it->second;
  const AdmWord wa = pbw_word(a), wb = pbw_word(b);
  const int sa = a.size(), sb = b.size();
  // each slot of b is a fresh index or one of the slots of a, injectively
  AdmVec r;
  std::vector<int> target(sb, -1);
  std::vector<bool> taken(sa, false);
  std::function<void(int, int)> rec = [&](int j, int fresh) {
    if (j == sb) {
      AdmWord w2 = wb;
      relabel_tail(w2, 0, [&](int x) { return target[x]; });
      AdmTerm t = canonicalize_distinct({1, wa + w2, sa + fresh});
      r.add(normal_order_word(t.word), t.coeff);
      return;
    }
    target[j] = sa + fresh;
    rec(j + 1, fresh + 1);
    for (int c = 0; c < sa; ++c)
      if (!taken[c]) {
        taken[c] = true;
        target[j] = c;
        rec(j + 1, fresh);
        taken[c] = false;
      }
  };
  rec(0, 0);
  // the word memo only speeds up nearby products; keep memory bounded
  if (word_memo_.size() > kWordMemoLimit) word_memo_.clear();
  return key_memo_.emplace(key, std::move(r)).first->second;
}

AdmVec Admissible::product(const AdmVec& a, const AdmVec& b) {
  AdmVec r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) r.add(key_product(ka, kb), ca * cb);
  return r;
}

AdmSum Admissible::expand_T(const TIndex& m) {
  if (m.empty()) return AdmSum(AdmWord(), 1);
  if (m.size() == 1) {
    auto [r, q] = m.m.begin()->first;
    // r! q! / (r+q)! times all shuffles, i.e. the average shuffle
    AdmWord w = AdmWord(r, adm_x(0)) + AdmWord(q, adm_y(0));
    std::sort(w.begin(), w.end());
    AdmSum s;
    long count = 0;
    do {
      s.add(w, 1);
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return s * ParamPoly(rat(1, count));
  }
  AdmSum s;
  for (const auto& [rq, mult] : m.m)
    s += adm_concat(expand_T(TIndex::single(rq.first, rq.second)), expand_T(minus_one(m, rq))) *
         ParamPoly(rat(mult, m.size()));
  return s;
}

const AdmVec& Admissible::T(const TIndex& m) {
  if (auto it = t_memo_.find(m); it != t_memo_.end()) return it->second;
  AdmVec r;
  if (m.empty()) {
    r = unit();
  } else if (m.size() == 1) {
    r = normal_order(expand_T(m));
  } else {
    // average over orderings, split by the first factor
    for (const auto& [rq, mult] : m.m) {
      AdmVec head = T(TIndex::single(rq.first, rq.second));
      r += product(head, T(minus_one(m, rq))) * ParamPoly(rat(mult, m.size()));
    }
  }
  // the top-degree part of T(m) is the PBW word of m
  if (r.coeff(m) != ParamPoly(1)) throw NonCancellation("T(" + m.str() + ") does not lead with its word");
  for (const auto& [key, c] : r.terms)
    if (key != m && !adm_below(key, m)) throw NonCancellation("T(" + m.str() + ") has extra top terms");
  return t_memo_.emplace(m, std::move(r)).first->second;
}

int Admissible::potential(const TIndex& m, const ParamPoly& c) {
  return 2 * c.degree(Sym::n) + 2 * m.size() + m.weight();
}

TVector Admissible::reduce_to_T(const AdmVec& a) {
  int bound = 0;
  for (const auto& [m, c] : a.terms) bound = std::max(bound, potential(m, c));
  TVector out;
  AdmVec rem = a;
  while (!rem.is_zero()) {
    auto top = rem.terms.begin();
    for (auto it = rem.terms.begin(); it != rem.terms.end(); ++it)
      if (adm_below(top->first, it->first)) top = it;
    TIndex m = top->first;
    ParamPoly c = top->second;
    rem -= T(m) * c;
    if (!rem.coeff(m).is_zero()) throw NonCancellation("leading term of " + m.str() + " survived");
    if (potential(m, c) > bound) throw NonCancellation("n-degree bound violated at " + m.str());
    out.add(m, c);
  }
  return out;
}

AdmVec Admissible::from_T(const TVector& v) {
  AdmVec r;
  for (const auto& [m, c] : v.terms) r.add(T(m), c);
  return r;
}

std::string Admissible::cache_key(const TIndex& m1, const TIndex& m2) const {
  return "t=" + t_.str() + ";k=" + k_.str() + ";n=" + n_.str() + ";m1=" + m1.str() + ";m2=" + m2.str();
}

std::optional<TVector> Admissible::load_cached(const TIndex& m1, const TIndex& m2) const {
  if (!cache_dir_) return std::nullopt;
  std::string key = cache_key(m1, m2);
  std::ifstream in(*cache_dir_ / (std::to_string(std::hash<std::string>{}(key)) + ".json"));
  if (!in) return std::nullopt;
  auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || j.value("key", "") != key) return std::nullopt;
  TVector v;
  for (const auto& c : j["coords"]) v.add(TIndex::parse(c["m"]), ParamPoly::parse(c["poly"]));
  return v;
}

void Admissible::store_cached(const TIndex& m1, const TIndex& m2, const TVector& v) const {
  if (!cache_dir_) return;
  std::string key = cache_key(m1, m2);
  auto j = nlohmann::json::parse(structure_constants_json(m1, m2, v));
  j["key"] = key;
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir_, ec);
  auto name = std::to_string(std::hash<std::string>{}(key)) + ".json";
  // write then rename, so concurrent writers of the same entry are harmless
  auto tmp = *cache_dir_ / (name + ".tmp" + std::to_string(std::rand()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, *cache_dir_ / name, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

const TVector& Admissible::structure_constants(const TIndex& m1, const TIndex& m2) {
  auto key = std::make_pair(m1, m2);
  if (auto it = sc_memo_.find(key); it != sc_memo_.end()) return it->second;
  if (m1.weight() + m2.weight() > 16) throw BudgetExceeded("weight " + std::to_string(m1.weight() + m2.weight()) + " > 16");
  TVector v;
  if (auto c = load_cached(m1, m2)) {
    v = std::move(*c);
  } else {
    v = reduce_to_T(product(T(m1), T(m2)));
    store_cached(m1, m2, v);
  }
  return sc_memo_.emplace(key, std::move(v)).first->second;
}

SphElement Admissible::at_rank(const AdmVec& a, Cherednik& h) const {
  const int n = h.rank();
  SphElement out;
  for (const auto& [m, c] : a.terms) {
    ParamPoly cn = c.subs(Sym::n, ParamPoly(n));
    auto slots = slots_of(m);
    std::vector<int> idx(slots.size(), 0);
    if (static_cast<int>(slots.size()) > n) continue;
    while (true) {
      std::vector<bool> seen(n, false);
      bool injective = true;
      for (int i : idx) {
        if (seen[i]) injective = false;
        seen[i] = true;
      }
      SphKey key{std::vector<std::uint8_t>(n), std::vector<std::uint8_t>(n)};
      for (std::size_t j = 0; j < slots.size(); ++j) {
        key.a[idx[j]] += slots[j].first;
        key.b[idx[j]] += slots[j].second;
      }
      if (injective) out.add(key, cn);
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == n) idx[j++] = 0;
      if (j == idx.size()) break;
    }
  }
  return out;
}

std::string Admissible::str(const AdmVec& a) const {
  return a.str([](const TIndex& m) { return m.empty() ? std::string() : "D[" + m.str() + "]"; });
}

std::string tvector_str(const TVector& v) {
  return v.str([](const TIndex& m) { return m.empty() ? std::string() : "T[" + m.str() + "]"; });
}

std::string structure_constants_json(const TIndex& m1, const TIndex& m2, const TVector& v) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& [m, c] : v.terms) coords.push_back({{"m", m.str()}, {"poly", c.str()}});
  return nlohmann::json{{"m1", m1.str()}, {"m2", m2.str()}, {"coords", coords}}.dump();
}

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* d = std::getenv("DDCA_CACHE_DIR"); d && *d) return std::filesystem::path(d);
  return std::nullopt;
}

std::map<std::string, AdmVec> adm_beta_images(Admissible& a) {
  std::map<std::string, AdmVec> m;
  m["K"] = a.unit() * a.n_value();
  m["q"] = a.T(TIndex::single(1, 0));
  m["p"] = a.T(TIndex::single(0, 1));
  m["e"] = a.T(TIndex::single(2, 0)) * ParamPoly(rat(-1, 2));
  m["f"] = a.T(TIndex::single(0, 2)) * ParamPoly(rat(1, 2));
  m["r"] = a.T(TIndex::single(3, 0)) * ParamPoly(rat(1, 6));
  return m;
}

namespace {

// Upper bound for the potential of an expression's value.
struct PotentialModel {
  using Elem = int;
  Elem bracket(Elem a, Elem b) { return a + b; }
  Elem product(Elem a, Elem b) { return a + b; }
  Elem one() { return 0; }
  Elem add(Elem a, Elem b) { return std::max(a, b); }
  Elem scale(Elem a, const ParamPoly& c) { return a + 2 * c.degree(Sym::n); }
  bool is_zero(Elem) { return false; }
  std::string str(Elem a) { return std::to_string(a); }
};

int vec_potential(const AdmVec& v) {
  int p = 0;
  for (const auto& [m, c] : v.terms) p = std::max(p, Admissible::potential(m, c));
  return p;
}

}  // namespace

std::vector<SymbolicCheck> verify_beta_symbolic(CertMode mode, int max_degree, std::size_t term_budget,
                                                std::optional<std::filesystem::path> cache_dir) {
  const ParamPoly k = ParamPoly::var(Sym::k), n = ParamPoly::var(Sym::n);
  RelationSet rs = relation_set(RelKind::a_s1s2);
  ParamSubs params{beta_s_values(CherType::A), {{Sym::K, n}}};

  Admissible sym(1, k, n);
  sym.set_cache_dir(cache_dir);
  auto sym_images = adm_beta_images(sym);
  sym.set_term_budget(term_budget);
  AdmModel sym_model{sym};
  Evaluator<AdmModel> sym_eval(sym_model, sym_images, params);

  PotentialModel pm;
  std::map<std::string, int> pot_images;
  for (const auto& [name, v] : sym_images) pot_images[name] = vec_potential(v);
  Evaluator<PotentialModel> pot_eval(pm, pot_images, params);

  std::map<int, std::unique_ptr<Admissible>> samples;
  std::map<int, std::unique_ptr<Evaluator<AdmModel>>> sample_evals;
  std::map<int, std::unique_ptr<AdmModel>> sample_models;
  auto sample_eval = [&](int n0) -> Evaluator<AdmModel>& {
    if (!sample_evals.count(n0)) {
      samples[n0] = std::make_unique<Admissible>(1, k, ParamPoly(n0));
      sample_models[n0] = std::make_unique<AdmModel>(AdmModel{*samples[n0]});
      ParamSubs p = params;
      p.push_back({{Sym::n, ParamPoly(n0)}});
      sample_evals[n0] = std::make_unique<Evaluator<AdmModel>>(*sample_models[n0], adm_beta_images(*samples[n0]), p);
    }
    return *sample_evals[n0];
  };

  std::vector<SymbolicCheck> out;
  for (const auto& r : rs.relations) {
    if (r.degree > max_degree) continue;
    SymbolicCheck c{r.name, r.degree, false, mode, ""};
    Expr e = r.value();
    if (mode == CertMode::full) {
      try {
        const AdmVec& v = sym_eval(e);
        c.ok = v.is_zero();
        if (!c.ok) c.residual = tvector_str(sym.reduce_to_T(v));
        out.push_back(c);
        continue;
      } catch (const BudgetExceeded&) {
        c.mode = CertMode::sample_and_fit;
      }
    }
    // the n-degree of every coordinate is at most potential / 2
    const int bound = pot_eval(e) / 2;
    std::map<TIndex, std::map<Exps, std::vector<std::pair<Rat, Rat>>>> pts;
    bool all_zero = true;
    for (int n0 = 1; n0 <= bound + 1; ++n0) {
      const AdmVec& v = sample_eval(n0)(e);
      if (!v.is_zero()) all_zero = false;
      for (const auto& [m, x] : v.terms)
        for (const auto& t : x.terms()) pts[m][t.e].push_back({Rat(n0), t.c});
    }
    c.ok = all_zero;
    if (!all_zero) {
      AdmVec fitted;
      for (auto& [m, byexp] : pts)
        for (auto& [exps, samples_m] : byexp) {
          // missing samples are zeros
          std::vector<std::pair<Rat, Rat>> full;
          for (int n0 = 1; n0 <= bound + 1; ++n0) {
            Rat val = 0;
            for (const auto& [x, y] : samples_m)
              if (x == n0) val = y;
            full.push_back({Rat(n0), val});
          }
          ParamPoly fit = fit_polynomial(full, bound);
          fitted.add(m, fit * ParamPoly::monomial(exps, 1));
        }
      Admissible plain(1, k, n);
      c.residual = tvector_str(plain.reduce_to_T(fitted));
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace ddca
