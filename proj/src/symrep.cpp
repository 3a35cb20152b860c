#include "latbend/symrep.hpp"

#include "latbend/finitefield.hpp"

namespace latbend {

namespace {

// coefficients of (aX + cY)^s (bX + dY)^t on X^{s+t}, ..., Y^{s+t}
std::vector<FElem> binom_expand(const FElem& a, const FElem& c, int s, const FElem& b,
                                const FElem& d, int t) {
  std::vector<FElem> f{FElem(1)};
  auto mul_linear = [&](const FElem& x, const FElem& y, int times) {
    for (int r = 0; r < times; ++r) {
      std::vector<FElem> g(f.size() + 1);
      for (size_t i = 0; i < f.size(); ++i) {
        g[i] += f[i] * x;
        g[i + 1] += f[i] * y;
      }
      f = std::move(g);
    }
  };
  mul_linear(a, c, s);
  mul_linear(b, d, t);
  return f;
}

}  // namespace

FMat tau(int n, const FMat& M) {
  if (n < 2) fail(Err::BadInput, "tau needs n >= 2");
  if (M.rows() != 2 || M.cols() != 2) fail(Err::BadInput, "tau expects a 2x2 matrix");
  if (M.det().is_zero()) fail(Err::NotInvertible, "tau of a singular matrix");
  const FElem &a = M.at(0, 0), &b = M.at(0, 1), &c = M.at(1, 0), &d = M.at(1, 1);
  FMat T(n, n);
  for (int j = 0; j < n; ++j) {
    auto col = binom_expand(a, c, n - 1 - j, b, d, j);
    for (int i = 0; i < n; ++i) T.at(i, j) = col[i];
  }
  return T;
}

FMat j_form(int n) {
  if (n < 3) fail(Err::BadInput, "j_form needs n >= 3");
  FMat J(n, n);
  Int fact[32];
  fact[0] = 1;
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  for (int i = 1; i <= n; ++i) {
    Int v = fact[n - i] * fact[i - 1];
    if (i % 2 == 0) v = -v;
    J.at(i - 1, n - i) = FElem(Rat(v));
  }
  return J;
}

bool check_invariance(int n, const FMat& M) {
  FMat T = tau(n, M);
  FMat J = j_form(n);
  return T.transpose() * J * T == J;
}

std::vector<Int> trace_poly(int n) {
  if (n < 2) fail(Err::BadInput, "trace_poly needs n >= 2");
  // Phi_2 = t, Phi_3 = t^2 - 1, Phi_{k+1} = t Phi_k - Phi_{k-1}
  std::vector<Int> prev{1};    // the n=1 trace is 1
  std::vector<Int> cur{0, 1};  // Phi_2 = t
  if (n == 2) return cur;
  for (int k = 2; k < n; ++k) {
    std::vector<Int> next(cur.size() + 1);
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FElem phi_eval(int n, const FElem& t) {
  auto c = trace_poly(n);
  FElem acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * t + FElem(Rat(c[i]));
  return acc;
}

Fq phi_eval_fq(int n, const Fq& t) {
  auto c = trace_poly(n);
  Fq acc(0);
  for (size_t i = c.size(); i-- > 0;) {
    long ci = static_cast<long>(mpz_fdiv_ui(c[i].get_mpz_t(), t.spec().p));
    acc = acc * t + Fq::make(t.spec(), ci);
  }
  return acc;
}

}  // namespace latbend
