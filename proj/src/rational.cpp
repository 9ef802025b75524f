#include "occ/rational.hpp"

namespace occ {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  q.canonicalize();
  return Rational(q);
}

std::uint64_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::uint64_t h = static_cast<std::uint64_t>(mpz_sgn(p)) + 0x51ed270b0a1ce287ull;
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = hash_mix(h, static_cast<std::uint64_t>(mpz_getlimbn(p, i)));
  }
  return h;
}

}  // namespace occ
