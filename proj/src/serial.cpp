#include "aag/serial.hpp"

#include <limits>

namespace aag {

using nlohmann::json;

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw FixtureError("parse error: expected integer or rational string, got " + j.dump());
}

json rational_to_json(const Rational& q) {
  if (is_integral(q)) {
    const Integer n = numerator(q);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return static_cast<long long>(n);
  }
  return q.str();
}

VecQ vector_from_json(const json& j, Index expected_len, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != expected_len)
    throw FixtureError(std::string("parse error: ") + what + " must be a vector of length " +
                       std::to_string(expected_len));
  VecQ v(expected_len);
  for (Index i = 0; i < expected_len; ++i) v[i] = rational_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

json vector_to_json(const VecQ& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(rational_to_json(v[i]));
  return arr;
}

}  // namespace aag
