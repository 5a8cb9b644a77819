#include "monocat/ring.hpp"

namespace monocat {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Ring::Ring(int p, int n) : p_(p), n_(n), mod_(1) {
  if (!is_prime(p)) fail_input("ring: p = " + std::to_string(p) + " is not prime");
  if (n < 1 || n > 6) fail_input("ring: exponent n must lie in [1, 6]");
  for (int i = 0; i < n; ++i) {
    mod_ *= p;
    if (mod_ > (Int{1} << 31)) fail_input("ring: p^n exceeds 2^31");
  }
}

Int Ring::pow(int k) const {
  if (k < 0 || k > n_) fail_input("ring: power out of range");
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= p_;
  return r;
}

Int Ring::reduce(Int x, int k) const {
  const Int m = pow(k);
  Int r = x % m;
  return r < 0 ? r + m : r;
}

int Ring::valuation(Int x) const {
  x = reduce(x);
  if (x == 0) return n_;
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

Int Ring::unit_inverse(Int u) const {
  u = reduce(u);
  if (u % p_ == 0) fail_input("ring: element is not a unit");
  // extended Euclid on (u, p^n)
  Int old_r = u, r = mod_, old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return reduce(old_s);
}

}  // namespace monocat
