#include "treeopt/linalg.hpp"

#include <sstream>
#include <utility>

#include "treeopt/constructions.hpp"
#include "treeopt/errors.hpp"

namespace treeopt {

IntMatrix::IntMatrix(int order) : order_(order), a_(static_cast<std::size_t>(order) * order) {
  if (order < 0) throw ArgumentError("matrix order must be nonnegative");
}

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order);
  for (int i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(int order) {
  IntMatrix m(order);
  for (auto& x : m.a_) x = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (int i = 0; i < order_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::without(int k) const {
  IntMatrix m(order_ - 1);
  for (int i = 0, r = 0; i < order_; ++i) {
    if (i == k) continue;
    for (int j = 0, c = 0; j < order_; ++j) {
      if (j == k) continue;
      m(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.order_ != y.order_) throw ArgumentError("matrix order mismatch");
  const int n = x.order_;
  IntMatrix z(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const BigInt& xik = x(i, k);
      if (sgn(xik) == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (sgn(y(k, j)) != 0) mpz_addmul(z(i, j).get_mpz_t(), xik.get_mpz_t(), y(k, j).get_mpz_t());
      }
    }
  }
  return z;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  if (x.order_ != y.order_) throw ArgumentError("matrix order mismatch");
  IntMatrix z(x.order_);
  for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = x.a_[i] + y.a_[i];
  return z;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.order_ != y.order_) throw ArgumentError("matrix order mismatch");
  IntMatrix z(x.order_);
  for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
  return z;
}

IntMatrix operator*(const BigInt& s, const IntMatrix& x) {
  IntMatrix z(x.order_);
  for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] = s * x.a_[i];
  return z;
}

BigInt trace_of_product(const IntMatrix& x, const IntMatrix& y) {
  if (x.order() != y.order()) throw ArgumentError("matrix order mismatch");
  BigInt t = 0;
  for (int i = 0; i < x.order(); ++i) {
    for (int k = 0; k < x.order(); ++k) mpz_addmul(t.get_mpz_t(), x(i, k).get_mpz_t(), y(k, i).get_mpz_t());
  }
  return t;
}

BigInt CharPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

IntMatrix laplacian(const Graph& g) {
  IntMatrix l(g.order());
  for (int i = 0; i < g.order(); ++i) l(i, i) = g.degree(i);
  for (auto [u, v] : g.edges()) l(u, v) = l(v, u) = -1;
  return l;
}

CharPoly char_poly(const IntMatrix& mat) {
  const int n = mat.order();
  if (n == 0) return CharPoly{{BigInt(1)}};
  // p holds det(xI - B) of the trailing principal block B, highest degree first.
  std::vector<BigInt> p{BigInt(1), BigInt(-mat(n - 1, n - 1))};
  for (int k = n - 2; k >= 0; --k) {
    const int s = n - 1 - k;  // size of trailing block
    // t = (1, -a_kk, -R C, -R B C, ..., -R B^{s-1} C)
    std::vector<BigInt> t(s + 2);
    t[0] = 1;
    t[1] = -mat(k, k);
    std::vector<BigInt> v(s);  // B^j C
    for (int i = 0; i < s; ++i) v[i] = mat(k + 1 + i, k);
    for (int j = 0; j < s; ++j) {
      BigInt rc = 0;
      for (int i = 0; i < s; ++i) mpz_addmul(rc.get_mpz_t(), mat(k, k + 1 + i).get_mpz_t(), v[i].get_mpz_t());
      t[j + 2] = -rc;
      if (j + 1 < s) {
        std::vector<BigInt> w(s);
        for (int r = 0; r < s; ++r) {
          for (int c = 0; c < s; ++c) {
            mpz_addmul(w[r].get_mpz_t(), mat(k + 1 + r, k + 1 + c).get_mpz_t(), v[c].get_mpz_t());
          }
        }
        v = std::move(w);
      }
    }
    std::vector<BigInt> next(s + 2);
    for (int i = 0; i < s + 2; ++i) {
      for (int j = 0; j <= std::min(i, s); ++j) {
        mpz_addmul(next[i].get_mpz_t(), t[i - j].get_mpz_t(), p[j].get_mpz_t());
      }
    }
    p = std::move(next);
  }
  CharPoly out;
  out.coeffs.assign(p.rbegin(), p.rend());
  return out;
}

BigInt determinant(const IntMatrix& mat) {
  const int n = mat.order();
  if (n == 0) return 1;
  IntMatrix m = mat;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(m(k, k)) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r) {
        if (sgn(m(r, k)) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt spanning_tree_count(const Graph& g) {
  if (g.order() == 1) return 1;
  return determinant(laplacian(g).without(g.order() - 1));
}

BigInt tree_count_via_complement(const Graph& g) {
  const BigInt n = g.order();
  const BigInt value = char_poly(laplacian(complement(g))).eval(n);
  const BigInt n2 = n * n;
  BigInt q;
  BigInt r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), n2.get_mpz_t());
  if (sgn(r) != 0) {
    throw InternalFault("complement characteristic polynomial at n not divisible by n^2");
  }
  return q;
}

std::vector<BigInt> trace_powers(const IntMatrix& mat, int kmax) {
  if (kmax < 1) throw ArgumentError("trace_powers needs kmax >= 1");
  std::vector<BigInt> out;
  out.reserve(kmax);
  out.push_back(mat.trace());
  IntMatrix power = mat;
  for (int k = 2; k <= kmax; ++k) {
    if (k == kmax) {
      out.push_back(trace_of_product(power, mat));
    } else {
      power = power * mat;
      out.push_back(power.trace());
    }
  }
  return out;
}

CharPoly char_poly_from_power_sums(std::span<const BigInt> power_sums) {
  // e_k = (1/k) sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i; det(xI - M) = sum_k (-1)^k e_k x^{n-k}.
  const int n = static_cast<int>(power_sums.size());
  std::vector<BigInt> e(n + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) {
      BigInt term = e[k - i] * power_sums[i - 1];
      if (i % 2 == 0) acc -= term; else acc += term;
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), k)) {
      throw ArgumentError("power sums are not those of an integer matrix");
    }
    mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(), k);
  }
  CharPoly out;
  out.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) out.coeffs[n - k] = (k % 2 == 0) ? e[k] : BigInt(-e[k]);
  return out;
}

std::vector<BigInt> power_sums_from_char_poly(const CharPoly& poly, int kmax) {
  // With poly = x^n + c_{n-1} x^{n-1} + ... : p_k = -k c_{n-k} - sum_{i=1}^{k-1} c_{n-i} p_{k-i}.
  const int n = poly.degree();
  auto c = [&](int i) -> BigInt { return (i >= 1 && i <= n) ? poly.coeffs[n - i] : BigInt(0); };
  std::vector<BigInt> p(kmax + 1);
  for (int k = 1; k <= kmax; ++k) {
    BigInt acc = -BigInt(k) * c(k);
    for (int i = 1; i < k; ++i) acc -= c(i) * p[k - i];
    p[k] = acc;
  }
  return {p.begin() + 1, p.end()};
}

namespace {

using RatPoly = std::vector<BigRational>;  // ascending, no trailing zeros

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder and quotient of a by b (b nonzero).
RatPoly divide(RatPoly a, const RatPoly& b, RatPoly* quotient = nullptr) {
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const BigRational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  if (quotient) *quotient = q;
  return a;
}

BigRational eval_rat(const RatPoly& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_changes(const std::vector<RatPoly>& chain, const BigRational& x) {
  int changes = 0;
  int last = 0;
  for (const RatPoly& q : chain) {
    const int s = sgn(eval_rat(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

bool roots_real_in(const CharPoly& poly, const BigInt& lo, const BigInt& hi) {
  RatPoly p(poly.coeffs.begin(), poly.coeffs.end());
  trim(p);
  if (p.size() <= 1) return true;
  // Square-free part: distinct roots, multiplicities dropped.
  RatPoly g = p;
  RatPoly h = derivative(p);
  while (!h.empty()) {
    RatPoly r = divide(g, h);
    g = std::move(h);
    h = std::move(r);
  }
  RatPoly squarefree;
  divide(p, g, &squarefree);
  trim(squarefree);
  const int distinct = static_cast<int>(squarefree.size()) - 1;
  std::vector<RatPoly> chain{squarefree, derivative(squarefree)};
  while (chain.back().size() > 1) {
    RatPoly r = divide(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  // For a square-free polynomial V(lo) - V(hi) counts the roots in (lo, hi].
  const int inside = sign_changes(chain, BigRational(lo)) - sign_changes(chain, BigRational(hi)) +
                     (eval_rat(squarefree, BigRational(lo)) == 0 ? 1 : 0);
  return inside == distinct;
}

std::string to_decimal(const BigInt& x) { return x.get_str(); }
std::string to_decimal(const BigRational& x) { return x.get_str(); }

}  // namespace treeopt
