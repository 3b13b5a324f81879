#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace dijlat {

/// Arbitrary-precision integer and canonical rational scalar types.
/// Rat values are kept normalized: gcd(|num|, den) = 1 and den >= 1.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Serialized form used in all I/O: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

/// True iff the denominator of q is a power of p (p >= 2).
inline bool is_p_adic(const Rat& q, const Int& p) {
  Int den = q.get_den();
  while (den > 1) {
    if (!mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) return false;
    den /= p;
  }
  return true;
}

/// Nearest rational of the form r/p^k within distance eps of c (eps > 0).
/// Uses the smallest k with 1/(2 p^k) <= eps, then rounds c*p^k to the
/// nearest integer.
inline Rat round_to_p_adic(const Rat& c, const Int& p, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("round_to_p_adic: eps must be positive");
  Int pk = 1;
  while (Rat(1, 2 * pk) > eps) pk *= p;
  Rat scaled = c * pk;
  // round half up, deterministically
  Rat shifted = scaled + Rat(1, 2);
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  return make_rat(r, pk);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace dijlat
