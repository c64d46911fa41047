#include "toric/rational.hpp"

#include <sstream>

namespace toric {

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

Rat rat_from_string(const std::string& text) {
  auto bad = [&]() -> Error { return Error("malformed rational: '" + text + "'"); };
  std::string s = text;
  // trim
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw bad();
  auto digits_ok = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!digits_ok(s)) throw bad();
      return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) throw bad();
    Int d(den);
    if (d == 0) throw bad();
    return Rat(Int(num), d);
  } catch (const std::exception&) {
    throw bad();
  }
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string vec_to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace toric
