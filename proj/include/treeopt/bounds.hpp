#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "treeopt/graph.hpp"
#include "treeopt/linalg.hpp"

namespace treeopt {

/// Relative tolerance of the floating-point bound evaluations.
inline constexpr long double kBoundTolerance = 1e-9L;

struct FValue {
  long double value = 0;      ///< f(d, x); NaN when domain_error
  long double log_value = 0;  ///< -inf when a factor vanishes
  bool zero_factor = false;   ///< some d_i > 0 has x == d_i + 1
  bool domain_error = false;  ///< some d_i > 0 has x < d_i + 1
};

/// prod_i (1 - (d_i+1)/x)^{d_i/(d_i+1)}, summed in log space.
FValue f_of(std::span<const int> degrees, long double x);

/// Upper bound on t(complement(g)) next to the exact value.
struct BoundReport {
  long double bound_value = 0;
  long double log_bound = 0;
  BigInt exact_t;
  long double slack = 0;          ///< bound_value - exact_t
  bool equality_flag = false;     ///< g is a disjoint union of cliques
  bool complement_connected = false;
  int c_used = 0;

  /// exact_t <= bound_value * (1 + tol)
  bool holds(long double tol = kBoundTolerance) const;
  /// |slack| <= tol * max(1, bound_value)
  bool tight(long double tol = kBoundTolerance) const;
};

/// n^{n-2} exp(-2 nu / (3 n^3)) f(d(g), n).
BoundReport base_bound(const Graph& g);

/// n^{n-2} exp(-sum_{k<=c} g_k / (k n^k)) f(d(g), n).
BoundReport improved_bound(const Graph& g, int c);

struct FamilyTreeCount {
  BigInt exact;         ///< t(complement(G0(p,q))) by elimination
  BigRational formula;  ///< n'^{n'-2} g(n') assembled exactly
  int n_prime = 0;
  bool agree = false;
};

FamilyTreeCount family_tree_count(const Graph& g0, int d, int p, int q);

/// Vertex count beyond which the refinement argument applies:
/// 2d + g0_order (2d)^{c+2}. For c = 1 this is the exponent-3 value used
/// for almost-regular seeds as well.
BigInt n0_threshold(int g0_order, int d, int c);

enum class GirthVerdict { CertifiedUnique, CertifiedByCycleCounts, Inconclusive };

const char* to_string(GirthVerdict v);

struct CycleComparison {
  std::size_t opponent = 0;   ///< index in the class
  int length = 0;             ///< first cycle length where the counts differ (0: none)
  std::uint64_t candidate_count = 0;
  std::uint64_t opponent_count = 0;
};

struct GirthCertificate {
  GirthVerdict verdict = GirthVerdict::Inconclusive;
  std::optional<int> girth;      ///< of the candidate
  std::optional<int> max_girth;  ///< over the class
  std::size_t candidate_index = 0;
  std::vector<CycleComparison> comparisons;
};

/// Sufficient girth / cycle-count condition for trace-minimality within a
/// regular class. `cls` holds one representative per isomorphism class.
GirthCertificate girth_certificate(const Graph& g, std::span<const Graph> cls);

struct AbregoCheck {
  int q = 0;
  int rho = 0;
  BigRational rhs;
  bool holds = false;
};

/// rho((delta+1)^2 - rho^2)/4 + (3/2) tau_value against n, where
/// n = q(delta+1) + rho. The triangle term is supplied by the caller.
AbregoCheck abrego_feasibility(int n, int delta, std::uint64_t tau_value);

}  // namespace treeopt
