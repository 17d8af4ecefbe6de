#include "cherw/scalar.hpp"

namespace cherw {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
  Scalar out;
  if (text.empty() || out.set_str(text, 10) != 0 || out.get_den() == 0)
    throw Error("bad scalar literal '" + text + "'");
  out.canonicalize();
  return out;
}

Scalar factorial(long n) {
  if (n < 0) throw Error("factorial of negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(r);
}

Scalar binomial(long n, long k) {
  if (k < 0) return 0;
  // generalized binomial so that negative upper arguments behave like series coefficients
  Scalar r = 1;
  for (long i = 0; i < k; ++i) r = r * Scalar(n - i) / Scalar(i + 1);
  return r;
}

}  // namespace cherw
