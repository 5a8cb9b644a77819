#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monocat {

using Int = std::int64_t;

/// Malformed or out-of-contract input (bad shapes, non-reduced entries, wrong quiver, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A postcondition that the library checks on its own output failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_input(const std::string& what) { throw InputError(what); }
[[noreturn]] inline void fail_internal(const std::string& what) { throw InternalError(what); }

/// The coefficient ring Z/(p^n).
///
/// p must be prime and p^n must not exceed 2^31, so that products of two
/// reduced residues fit in a signed 64-bit integer.
class Ring {
 public:
  Ring(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  Int modulus() const { return mod_; }

  /// p^k for 0 <= k <= n.
  Int pow(int k) const;

  /// Representative of x in [0, p^n).
  Int reduce(Int x) const { return reduce(x, n_); }
  /// Representative of x in [0, p^k).
  Int reduce(Int x, int k) const;

  Int add(Int a, Int b) const { return reduce(a + b); }
  Int sub(Int a, Int b) const { return reduce(a - b); }
  Int mul(Int a, Int b) const { return reduce(reduce(a) * reduce(b)); }

  /// p-adic valuation of x mod p^n; n for zero.
  int valuation(Int x) const;

  /// Inverse of a unit modulo p^n.
  Int unit_inverse(Int u) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.p_ == b.p_ && a.n_ == b.n_; }

 private:
  int p_;
  int n_;
  Int mod_;
};

bool is_prime(int p);

}  // namespace monocat
