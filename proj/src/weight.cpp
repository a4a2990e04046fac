#include "um/weight.hpp"

#include <cctype>
#include <ostream>

namespace um {

std::optional<Weight> Weight::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string digits;
  digits.reserve(text.size());
  std::size_t frac_len = 0;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    digits.push_back(c);
    if (seen_dot) ++frac_len;
  }
  if (digits.empty()) return std::nullopt;
  if (seen_dot && frac_len == 0) return std::nullopt;  // trailing dot
  mpz_class num(digits, 10);
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  return Weight(std::move(q));
}

Weight Weight::from_int(long n) {
  return Weight(mpq_class(n));
}

std::string Weight::str() const {
  const mpz_class& num = value_.get_num();
  mpz_class den = value_.get_den();
  if (den == 1) return num.get_str();

  // Strip factors of 2 and 5; a clean strip means the value has a finite
  // decimal expansion.
  unsigned long twos = 0, fives = 0;
  mpz_class rest = den;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    rest /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  unsigned long k = std::max(twos, fives);
  mpz_class pow10 = 1;
  for (unsigned long i = 0; i < k; ++i) pow10 *= 10;
  mpz_class scaled = num * (pow10 / den);  // exact by construction
  std::string s = scaled.get_str();
  if (s.size() <= k) s.insert(0, k + 1 - s.size(), '0');
  s.insert(s.size() - k, ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.str();
}

}  // namespace um
