#include "mhs/rational.hpp"

#include <cctype>

#include "mhs/error.hpp"

namespace mhs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::ZeroGerm: return "ZeroGerm";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotIsolatedAtOrigin: return "NotIsolatedAtOrigin";
    case ErrorCode::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SingularBezoutian: return "SingularBezoutian";
    case ErrorCode::NormalizationFailure: return "NormalizationFailure";
    case ErrorCode::NotMorse: return "NotMorse";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::AsymmetricSpectrum: return "AsymmetricSpectrum";
    case ErrorCode::DegenerateLevelForm: return "DegenerateLevelForm";
    case ErrorCode::CalibrationFailure: return "CalibrationFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw Error(ErrorCode::InvalidArgument,
                "malformed rational '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0)
    throw Error(ErrorCode::InvalidArgument,
                "zero denominator in '" + std::string(text) + "'");
  Rational r{Integer{std::string(num)}, d};
  r.canonicalize();
  return r;
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

}  // namespace mhs
