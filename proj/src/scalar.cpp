#include "hlab/scalar.hpp"

#include <cctype>

#include "hlab/error.hpp"

namespace hlab {

Scalar rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw InputError("not a rational numeral: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

std::string to_fixed(const Scalar& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Scalar scaled = value * scale;
  // floor, then round half to even
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const mpz_class twice = 2 * r;
  const mpz_class& den = scaled.get_den();
  if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) q += 1;

  const bool negative = q < 0;
  mpz_class mag = negative ? mpz_class(-q) : q;
  std::string digits_str = mag.get_str(10);
  if (digits > 0) {
    if (static_cast<int>(digits_str.size()) <= digits) {
      digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
    }
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
    while (digits_str.back() == '0') digits_str.pop_back();
    if (digits_str.back() == '.') digits_str.pop_back();
  }
  if (negative && digits_str != "0") digits_str.insert(0, "-");
  return digits_str;
}

}  // namespace hlab
