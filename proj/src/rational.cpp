#include "flagorder/rational.hpp"

#include "flagorder/errors.hpp"

namespace flagorder {

Rat make_rat(long num, long den) {
  if (den == 0) throw ZeroDivisorError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw ZeroDivisorError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) {
    throw Error("malformed rational '" + s + "'");
  }
  if (r.get_den() == 0) throw ZeroDivisorError("rational with zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace flagorder
