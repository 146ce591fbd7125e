#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ddca/lincomb.hpp"
#include "ddca/poly.hpp"

namespace ddca {

struct YoungDiagram {
  std::vector<int> rows;  // weakly decreasing, positive

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> r);
  int size() const;
  int length() const { return static_cast<int>(rows.size()); }
  std::string str() const;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;
};

struct InvalidN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

long content(const YoungDiagram& l);
// (n - |l|, l_1, l_2, ...); needs n >= l_1 + |l|.
YoungDiagram pad(const YoungDiagram& l, int n);
std::vector<YoungDiagram> partitions_of(int size);

// ct(l) - |l| + (nu - |l|)(nu - |l| - 1)/2
ParamPoly omega_interpolated(const YoungDiagram& l, const ParamPoly& nu = ParamPoly::var(Sym::nu));

struct InterpolationReport {
  bool ok = false;
  ParamPoly fitted, expected;
  std::string detail;
};
// Fits n -> content(pad(l, n)) in degree 2 and compares with omega_interpolated.
InterpolationReport interpolation_consistency(const YoungDiagram& l, const std::vector<int>& samples);
// Smallest n for which pad(l, n) is defined.
int min_pad_rank(const YoungDiagram& l);

// Points 1..n on top, n+1..n+m on the bottom; blocks sorted.
struct PartitionDiagram {
  int n = 0, m = 0;
  std::vector<std::vector<int>> blocks;

  PartitionDiagram() = default;
  PartitionDiagram(int n, int m, std::vector<std::vector<int>> blocks);
  static PartitionDiagram identity(int n);
  std::string str() const;
  friend auto operator<=>(const PartitionDiagram&, const PartitionDiagram&) = default;
};

using PartitionElem = LinComb<PartitionDiagram>;

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// mu: m -> k after lambda: n -> m. Returns the glued diagram and the number of
// components living entirely in the middle row.
std::pair<PartitionDiagram, int> stack_diagrams(const PartitionDiagram& mu, const PartitionDiagram& lambda);
PartitionElem compose_diagrams(const PartitionDiagram& mu, const PartitionDiagram& lambda,
                               const ParamPoly& nu = ParamPoly::var(Sym::nu));
PartitionElem compose(const PartitionElem& mu, const PartitionElem& lambda,
                      const ParamPoly& nu = ParamPoly::var(Sym::nu));

std::vector<PartitionDiagram> all_partition_diagrams(int n, int m);
long bell_number(int n);

struct AssociativityReport {
  long triples = 0, failures = 0;
  bool ok() const { return failures == 0; }
};
AssociativityReport partition_associativity(int n, const ParamPoly& nu = ParamPoly::var(Sym::nu));

}  // namespace ddca
