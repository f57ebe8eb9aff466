#include "tfano/arith.hpp"

#include <sstream>

namespace tfano {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NonPointed: return "NonPointed";
    case ErrorCode::IncompatibleDimension: return "IncompatibleDimension";
    case ErrorCode::Invalid: return "Invalid";
    case ErrorCode::TorsionClassGroup: return "TorsionClassGroup";
    case ErrorCode::FewerThanRequiredSupport: return "FewerThanRequiredSupport";
    case ErrorCode::NotAnticanonical: return "NotAnticanonical";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::TermNotCodimOne: return "TermNotCodimOne";
    case ErrorCode::TooManySlices: return "TooManySlices";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::Parse: return "Parse";
  }
  return "Error";
}

Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer floor(const Rational& q) {
  Integer n = num(q), d = den(q);
  Integer r = n / d;  // truncates toward zero
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

Integer ceil(const Rational& q) { return -floor(-q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer g = gcd(a, b);
  Integer r = a / g * b;
  return r < 0 ? Integer(-r) : r;
}

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t') t.push_back(c);
  auto bad = [&] { return Error(ErrorCode::Parse, "not a rational: '" + std::string(s) + "'"); };
  if (t.empty()) throw bad();
  auto slash = t.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (part.size() > 0 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  if (slash == std::string::npos) {
    check_int(t);
    if (t[0] == '+') t.erase(0, 1);
    return Rational(Integer(t));
  }
  std::string p = t.substr(0, slash), q = t.substr(slash + 1);
  check_int(p);
  check_int(q);
  if (p[0] == '+') p.erase(0, 1);
  if (q[0] == '+') q.erase(0, 1);
  Integer qq(q);
  if (qq == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
  return Rational(Integer(p), qq);
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::IncompatibleDimension, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::IncompatibleDimension, "vector sum");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::IncompatibleDimension, "vector difference");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rational& k, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (den(x) != 1) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (den(x) != 1) throw Error(ErrorCode::Invalid, "non-integral entry " + to_string(x));
    r.push_back(num(x));
  }
  return r;
}

Integer denominator_lcm(const RatVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, den(x));
  return l;
}

IntVec primitive(const RatVec& v) {
  if (is_zero(v)) throw Error(ErrorCode::Invalid, "primitive of zero vector");
  Integer l = denominator_lcm(v);
  IntVec r;
  Integer g = 0;
  for (const auto& x : v) {
    r.push_back(num(x * l));
    g = gcd(g, r.back());
  }
  for (auto& x : r) x /= g;
  return r;
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

}  // namespace tfano
