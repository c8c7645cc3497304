#include "treeopt/bounds.hpp"

#include <cmath>
#include <limits>

#include "treeopt/canonical.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/counters.hpp"
#include "treeopt/errors.hpp"
#include "treeopt/sequences.hpp"

namespace treeopt {

namespace {

// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0;
  long double comp_ = 0;
};

long double to_long_double(const BigInt& x) {
  // mpz_get_d truncates; decimal round trip keeps full long double precision.
  return std::strtold(x.get_str().c_str(), nullptr);
}

// g_k / (k n^k) as the nearest double.
long double gap_term(const BigInt& gap, int k, int n) {
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), n, k);
  denom *= k;
  BigRational r(gap, denom);
  r.canonicalize();
  return r.get_d();
}

BoundReport assemble(const Graph& g, long double exponent_penalty, int c_used) {
  const int n = g.order();
  const Graph comp = complement(g);
  BoundReport r;
  r.c_used = c_used;
  r.exact_t = spanning_tree_count(comp);
  r.complement_connected = is_connected(comp);
  r.equality_flag = is_clique_union(g);

  const FValue f = f_of(g.degrees(), n);
  if (f.zero_factor) {
    r.bound_value = 0;
    r.log_bound = -std::numeric_limits<long double>::infinity();
  } else {
    CompensatedSum log_sum;
    log_sum.add((n - 2) * std::log(static_cast<long double>(n)));
    log_sum.add(-exponent_penalty);
    log_sum.add(f.log_value);
    r.log_bound = log_sum.value();
    r.bound_value = std::exp(r.log_bound);
  }
  r.slack = r.bound_value - to_long_double(r.exact_t);
  return r;
}

}  // namespace

FValue f_of(std::span<const int> degrees, long double x) {
  FValue out;
  CompensatedSum log_sum;
  for (int d : degrees) {
    if (d == 0) continue;
    const long double base = 1.0L - static_cast<long double>(d + 1) / x;
    if (base < 0) {
      out.domain_error = true;
    } else if (base == 0) {
      out.zero_factor = true;
    } else {
      log_sum.add(static_cast<long double>(d) / (d + 1) * std::log(base));
    }
  }
  if (out.domain_error) {
    out.value = std::numeric_limits<long double>::quiet_NaN();
    out.log_value = out.value;
  } else if (out.zero_factor) {
    out.value = 0;
    out.log_value = -std::numeric_limits<long double>::infinity();
  } else {
    out.log_value = log_sum.value();
    out.value = std::exp(out.log_value);
  }
  return out;
}

bool BoundReport::holds(long double tol) const {
  return to_long_double(exact_t) <= bound_value * (1 + tol);
}

bool BoundReport::tight(long double tol) const {
  return std::fabs(slack) <= tol * std::max(1.0L, bound_value);
}

BoundReport base_bound(const Graph& g) {
  const BigInt nu = count_induced_p3(g);
  return assemble(g, gap_term(2 * nu, 3, g.order()), 3);
}

BoundReport improved_bound(const Graph& g, int c) {
  if (c < 1) throw ArgumentError("improved_bound needs c >= 1");
  const GapSequence gaps = gap_sequence(g, c);
  CompensatedSum penalty;
  for (int k = 1; k <= c; ++k) penalty.add(gap_term(gaps.at(k), k, g.order()));
  return assemble(g, penalty.value(), c);
}

FamilyTreeCount family_tree_count(const Graph& g0, int d, int p, int q) {
  const Graph family = extend_g0(g0, d, p, q);
  FamilyTreeCount out;
  out.n_prime = family.order();
  out.exact = spanning_tree_count(complement(family));

  // P_{G0(p,q)}(x) = x^{p+q} (x-d-1)^{pd} (x-d)^{q(d-1)} P_{G0}(x); divide by x^2 at x = n'.
  const BigInt np = out.n_prime;
  const BigInt p_g0 = char_poly(laplacian(g0)).eval(np);
  BigInt a;
  BigInt b;
  const BigInt base_a = np - d - 1;
  const BigInt base_b = np - d;
  mpz_pow_ui(a.get_mpz_t(), base_a.get_mpz_t(), static_cast<unsigned long>(p) * d);
  mpz_pow_ui(b.get_mpz_t(), base_b.get_mpz_t(), static_cast<unsigned long>(q) * (d - 1));
  BigRational value(a * b * p_g0);
  const int shift = p + q - 2;
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), np.get_mpz_t(), static_cast<unsigned long>(std::abs(shift)));
  if (shift >= 0) {
    value *= BigRational(scale);
  } else {
    value /= BigRational(scale);
  }
  value.canonicalize();
  out.formula = value;
  out.agree = out.formula == BigRational(out.exact);
  return out;
}

BigInt n0_threshold(int g0_order, int d, int c) {
  if (g0_order < 1 || d < 1 || c < 1) throw ArgumentError("n0_threshold needs positive arguments");
  // c = 1 coincides with the almost-regular threshold 2d + n(G0)(2d)^3.
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2UL * d, static_cast<unsigned long>(c) + 2);
  return 2 * d + BigInt(g0_order) * power;
}

const char* to_string(GirthVerdict v) {
  switch (v) {
    case GirthVerdict::CertifiedUnique: return "CERTIFIED_UNIQUE";
    case GirthVerdict::CertifiedByCycleCounts: return "CERTIFIED_BY_CYCLE_COUNTS";
    case GirthVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

GirthCertificate girth_certificate(const Graph& g, std::span<const Graph> cls) {
  const DegreeSequence ds = degree_info(g);
  if (!ds.is_regular) throw ArgumentError("girth certificate needs a regular candidate");
  const CanonicalForm key = canonical_form(g);
  GirthCertificate out;
  bool found = false;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].order() == g.order() && cls[i].edge_count() == g.edge_count() && canonical_form(cls[i]) == key) {
      out.candidate_index = i;
      found = true;
      break;
    }
  }
  if (!found) throw ArgumentError("candidate is not a member of the class");

  // nullopt (acyclic) ranks above every finite girth.
  auto larger = [](std::optional<int> a, std::optional<int> b) {
    if (!a) return b.has_value();
    return b && *a > *b;
  };
  std::vector<std::optional<int>> girths(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    girths[i] = girth(cls[i]);
    if (i == 0 || larger(girths[i], out.max_girth)) out.max_girth = girths[i];
  }
  out.girth = girths[out.candidate_index];
  if (out.girth != out.max_girth) return out;

  std::size_t at_max = 0;
  for (const auto& gi : girths) at_max += gi == out.max_girth ? 1 : 0;
  if (at_max == 1) {
    out.verdict = GirthVerdict::CertifiedUnique;
    return out;
  }

  const int limit = std::min(2 * *out.girth - 1, g.order());
  const CycleCensus mine = girth_and_cycles(g, limit);
  bool all_favour = true;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i == out.candidate_index) continue;
    const CycleCensus theirs = girth_and_cycles(cls[i], limit);
    CycleComparison cmp{i, 0, 0, 0};
    for (int len = 3; len <= limit; ++len) {
      if (mine.cycles(len) != theirs.cycles(len)) {
        cmp = {i, len, mine.cycles(len), theirs.cycles(len)};
        break;
      }
    }
    out.comparisons.push_back(cmp);
    if (cmp.length == 0 || cmp.candidate_count > cmp.opponent_count) all_favour = false;
  }
  out.verdict = all_favour ? GirthVerdict::CertifiedByCycleCounts : GirthVerdict::Inconclusive;
  return out;
}

AbregoCheck abrego_feasibility(int n, int delta, std::uint64_t tau_value) {
  if (delta < 3) throw ArgumentError("abrego_feasibility needs delta >= 3");
  if (n < 1) throw ArgumentError("abrego_feasibility needs n >= 1");
  AbregoCheck out;
  out.q = n / (delta + 1);
  out.rho = n % (delta + 1);
  const long rho = out.rho;
  const long width = delta + 1;
  out.rhs = BigRational(BigInt(rho * (width * width - rho * rho)), BigInt(4)) +
            BigRational(BigInt(3) * BigInt(std::to_string(tau_value)), BigInt(2));
  out.rhs.canonicalize();
  out.holds = BigRational(n) <= out.rhs;
  return out;
}

}  // namespace treeopt
