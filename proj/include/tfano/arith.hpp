#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tfano {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

enum class ErrorCode {
  Unbounded,
  NonPointed,
  IncompatibleDimension,
  Invalid,
  TorsionClassGroup,
  FewerThanRequiredSupport,
  NotAnticanonical,
  NotSmooth,
  TermNotCodimOne,
  TooManySlices,
  NotAdmissible,
  UnsupportedRank,
  InconsistentInput,
  Parse,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

Integer num(const Rational& q);
Integer den(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
// Accepts "p", "p/q", with optional sign and surrounding blanks.
Rational parse_rational(std::string_view s);

RatVec to_rat(const IntVec& v);
Rational dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rational& k, const RatVec& v);
bool is_zero(const RatVec& v);
bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v);  // requires integral entries
// Positive multiple of v with coprime integer entries; v must be nonzero.
IntVec primitive(const RatVec& v);
Integer denominator_lcm(const RatVec& v);
std::string to_string(const RatVec& v);

}  // namespace tfano
