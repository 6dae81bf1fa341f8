#pragma once

#include <sstream>
#include <string>

#include "fracineq/error.hpp"

namespace fracineq {

/// Exponent relations between n, s, s1, beta, p and frak_p. Each function is a
/// template over the scalar type so the consistency scan can run them in exact
/// rational arithmetic (boost::rational) as well as in double. Violated
/// admissibility conditions raise GateError naming the condition.
namespace relations {

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// q = n p / (n - s p), i.e. 1/q = 1/p - s/n. Gate: 1 < p, 0 < s < n/p.
template <class T>
T sobolev_conjugate(const T& n, const T& s, const T& p) {
  if (!(p > T(1))) throw GateError("sobolev-conjugate", "1 < p (got p = " + show(p) + ")");
  if (!(s > T(0) && s * p < n)) {
    throw GateError("sobolev-conjugate", "0 < s < n/p (got s = " + show(s) + ", n/p = " + show(n / p) + ")");
  }
  return n * p / (n - s * p);
}

/// theta = (s - s1) / (beta + s). Gate: 0 <= s1 < s, beta > 0.
template <class T>
T hedberg_theta(const T& s, const T& s1, const T& beta) {
  if (!(s1 >= T(0) && s1 < s)) {
    throw GateError("hedberg-theta", "0 <= s1 < s (got s1 = " + show(s1) + ", s = " + show(s) + ")");
  }
  if (!(beta > T(0))) throw GateError("hedberg-theta", "beta > 0 (got beta = " + show(beta) + ")");
  return (s - s1) / (beta + s);
}

/// r = n / (n - s): K_s = |x|^{s-n} lies in the weak Lebesgue space L^{r,inf}.
/// Gate: 0 < s < n.
template <class T>
T lorentz_exponent(const T& n, const T& s) {
  if (!(s > T(0) && s < n)) {
    throw GateError("lorentz-exponent", "0 < s < n (got s = " + show(s) + ", n = " + show(n) + ")");
  }
  return n / (n - s);
}

/// q from 1 + 1/q = 1/r + 1/p with r = lorentz_exponent(n, s).
/// Gate: 1 < p and 1/r + 1/p > 1.
template <class T>
T young_oneil_exponent(const T& n, const T& s, const T& p) {
  const T r = lorentz_exponent(n, s);
  if (!(p > T(1))) throw GateError("young-oneil", "1 < p (got p = " + show(p) + ")");
  const T inv_q = T(1) / r + T(1) / p - T(1);
  if (!(inv_q > T(0))) {
    throw GateError("young-oneil", "1/r + 1/p > 1 (got 1/r + 1/p = " + show(T(1) / r + T(1) / p) + ")");
  }
  return T(1) / inv_q;
}

/// sigma = n p / (n - s frak_p) for one value p of p(.). Gate: 0 < s < n/frak_p, p > 1.
template <class T>
T sigma_exponent(const T& n, const T& s, const T& frak_p, const T& p) {
  if (!(frak_p > T(1))) throw GateError("mixed-sigma", "1 < frak_p (got " + show(frak_p) + ")");
  if (!(s > T(0) && s * frak_p < n)) {
    throw GateError("mixed-sigma", "0 < s < n/frak_p (got s = " + show(s) + ", n/frak_p = " + show(n / frak_p) + ")");
  }
  if (!(p > T(1))) throw GateError("mixed-sigma", "1 < p (got p = " + show(p) + ")");
  return n * p / (n - s * frak_p);
}

/// q(x) from 1/q(x) = 1/p(x) - s/n for one value p. Gate: 1 < p, 0 < s < n/p.
template <class T>
T q_pointwise(const T& p, const T& s, const T& n) {
  if (!(p > T(1))) throw GateError("variable-hls", "1 < p(x) (got " + show(p) + ")");
  if (!(s > T(0) && s * p < n)) {
    throw GateError("variable-hls", "0 < s < n/p(x) (got s = " + show(s) + ", p = " + show(p) + ")");
  }
  return T(1) / (T(1) / p - s / n);
}

/// beta = n/frak_p - s, the Besov index used for the mixed inequalities.
template <class T>
T mixed_beta(const T& n, const T& s, const T& frak_p) {
  if (!(s > T(0) && s * frak_p < n)) {
    throw GateError("mixed-beta", "0 < s < n/frak_p (got s = " + show(s) + ")");
  }
  return n / frak_p - s;
}

/// theta = s frak_p / n.
template <class T>
T mixed_theta(const T& n, const T& s, const T& frak_p) {
  (void)mixed_beta(n, s, frak_p);
  return s * frak_p / n;
}

}  // namespace relations
}  // namespace fracineq
