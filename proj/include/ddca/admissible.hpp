#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddca/cherednik.hpp"
#include "ddca/lincomb.hpp"
#include "ddca/relations.hpp"

namespace ddca {

// A letter is 2*slot + (1 for y, 0 for x); a word is read left to right and
// summed over every slot independently, then multiplied by e.
using AdmWord = std::string;
inline char adm_x(int slot) { return static_cast<char>(2 * slot); }
inline char adm_y(int slot) { return static_cast<char>(2 * slot + 1); }
inline bool adm_is_y(char c) { return c & 1; }
inline int adm_slot(char c) { return static_cast<unsigned char>(c) >> 1; }
std::string adm_word_str(const AdmWord& w);  // "x1 y2 x1", slots from 1
AdmWord adm_word_parse(const std::string& s);

struct AdmTerm {
  ParamPoly coeff;
  AdmWord word;
  int slot_count = 0;
};

// Slots renumbered by first occurrence; each unused slot becomes a factor n.
AdmTerm canonicalize(const AdmTerm& t);

// Sums of canonical words (slot count = number of distinct slots).
using AdmSum = LinComb<AdmWord>;
AdmSum adm_sum(const AdmTerm& t);
AdmSum adm_concat(const AdmSum& a, const AdmSum& b);

// Normal-ordered sums over pairwise distinct slot values, all x before all y.
// Such a word D(m) is fixed by the multiset m of per-slot exponents (a, b).
using AdmVec = LinComb<TIndex>;
// Coordinates in the T(m) basis, K absorbed as n.
using TVector = LinComb<TIndex>;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonCancellation : std::logic_error {
  using std::logic_error::logic_error;
};

std::map<TIndex, Rat> specialize(const TVector& v, const Rat& n0, const Rat& t0, const Rat& k0);

class Admissible {
 public:
  // n_value replaces the symbol n for unused slots (an integer gives the quotient K = n0).
  explicit Admissible(ParamPoly t = ParamPoly::var(Sym::t), ParamPoly k = ParamPoly::var(Sym::k),
                      ParamPoly n_value = ParamPoly::var(Sym::n));

  const ParamPoly& t() const { return t_; }
  const ParamPoly& k() const { return k_; }
  const ParamPoly& n_value() const { return n_; }

  AdmVec normal_order(const AdmSum& a);
  // w canonical, read as a sum over distinct slot values
  const AdmVec& normal_order_word(const AdmWord& w);
  // Renumbers slots; each unused one contributes (n - #used - j).
  AdmTerm canonicalize_distinct(const AdmTerm& t) const;
  static AdmWord pbw_word(const TIndex& m);
  AdmVec unit() const { return AdmVec(TIndex{}, 1); }

  AdmVec product(const AdmVec& a, const AdmVec& b);
  AdmVec bracket(const AdmVec& a, const AdmVec& b) { return product(a, b) - product(b, a); }

  static AdmSum expand_T(const TIndex& m);
  const AdmVec& T(const TIndex& m);  // normal-ordered T(m)
  TVector reduce_to_T(const AdmVec& a);
  AdmVec from_T(const TVector& v);
  const TVector& structure_constants(const TIndex& m1, const TIndex& m2);

  // Evaluation at finite rank; the Cherednik algebra must use the same t, k.
  SphElement at_rank(const AdmVec& a, Cherednik& h) const;

  // 2*deg_n(c) + 2|m| + w(m), which normal ordering never increases.
  static int potential(const TIndex& m, const ParamPoly& c);

  void set_cache_dir(std::optional<std::filesystem::path> dir) { cache_dir_ = std::move(dir); }
  // Abort once this many coefficient monomials sit in the word memo.
  void set_term_budget(std::size_t b) { term_budget_ = b; }
  std::size_t memo_size() const { return word_memo_.size(); }

  std::string str(const AdmVec& a) const;

 private:
  AdmVec key_product(const TIndex& a, const TIndex& b);
  std::optional<TVector> load_cached(const TIndex& m1, const TIndex& m2) const;
  void store_cached(const TIndex& m1, const TIndex& m2, const TVector& v) const;
  std::string cache_key(const TIndex& m1, const TIndex& m2) const;

  ParamPoly t_, k_, n_;
  std::unordered_map<AdmWord, AdmVec> word_memo_;
  std::map<std::pair<TIndex, TIndex>, AdmVec> key_memo_;
  std::map<TIndex, AdmVec> t_memo_;
  std::map<std::pair<TIndex, TIndex>, TVector> sc_memo_;
  std::optional<std::filesystem::path> cache_dir_;
  std::size_t term_budget_ = 0;
  std::size_t stored_terms_ = 0;
};

std::string tvector_str(const TVector& v);
// {"m1": ..., "m2": ..., "coords": [{"m": ..., "poly": ...}]}
std::string structure_constants_json(const TIndex& m1, const TIndex& m2, const TVector& v);
// DDCA_CACHE_DIR if set, else nullopt.
std::optional<std::filesystem::path> default_cache_dir();

struct AdmModel {
  using Elem = AdmVec;
  Admissible& a;
  Elem bracket(const Elem& x, const Elem& y) { return a.bracket(x, y); }
  Elem product(const Elem& x, const Elem& y) { return a.product(x, y); }
  Elem one() { return a.unit(); }
  Elem add(const Elem& x, const Elem& y) { return x + y; }
  Elem scale(const Elem& x, const ParamPoly& c) { return x * c; }
  bool is_zero(const Elem& x) { return x.is_zero(); }
  std::string str(const Elem& x) { return tvector_str(a.reduce_to_T(x)); }
};

// K -> n, q -> T10, p -> T01, e -> -T20/2, f -> T02/2, r -> T30/6.
std::map<std::string, AdmVec> adm_beta_images(Admissible& a);

enum class CertMode { full, sample_and_fit };

struct SymbolicCheck {
  std::string name;
  int degree = 0;
  bool ok = false;
  CertMode mode = CertMode::full;
  std::string residual;  // T-coordinates, n symbolic
};

// Type A relations under beta with t = 1, k symbolic. In full mode n stays
// symbolic; sample-and-fit evaluates at n = 1..B+1 with B the degree bound in n
// and fits the residual. Full mode falls back per relation when term_budget is hit.
std::vector<SymbolicCheck> verify_beta_symbolic(CertMode mode, int max_degree = 4,
                                                std::size_t term_budget = 4'000'000,
                                                std::optional<std::filesystem::path> cache_dir = {});

}  // namespace ddca
