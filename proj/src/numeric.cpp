#include "tkms/numeric.hpp"

namespace tkms {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace tkms
