#include "tropint/numeric.hpp"

#include <cctype>
#include <sstream>

namespace tropint {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(errc::parse_error, "denominator zero");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty rational literal");
  auto parse_int = [](const std::string& t) -> Int {
    if (t.empty()) fail(errc::parse_error, "empty integer literal");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) fail(errc::parse_error, "bad integer literal '" + t + "'");
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        fail(errc::parse_error, "bad integer literal '" + t + "'");
    return Int(t, 10);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) fail(errc::parse_error, "denominator zero");
  return make_rat(num, den);
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string ivec_str(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

std::string qvec_str(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

QVec to_qvec(const IVec& v) {
  QVec q;
  q.reserve(v.size());
  for (const auto& x : v) q.emplace_back(x);
  return q;
}

}  // namespace tropint
