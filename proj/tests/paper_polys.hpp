#pragma once

// Reference polynomials with exact machine coefficients (integer * 2^k),
// used as fixed known-good inputs across the test suites.

#include "cfpoly/basis.hpp"

namespace cfpoly::testpolys {

// Degree-9 approximation of exp(sin(x) - cos(x^2)) on [-2^-8, 2^-8],
// basis {x^0,x^1,x^2,x^4,...,x^9}; relative error below 2^-90.
inline Poly exp_sin_cos_poly() {
  return Poly(
      MonomialBasis({0, 1, 2, 4, 5, 6, 7, 8, 9}),
      {
          BigNum::from_int2k("119383704169626743428469396878343", -108),
          BigNum::from_int2k("29845926042406685857117349204375", -106),
          BigNum::from_int2k("119383704169626743428436621385363", -109),
          BigNum::from_int2k("4970345142530923", -55),
          BigNum::from_int2k("358969371405011", -51),
          BigNum::from_int2k("6516674741954513", -56),
          BigNum::from_int2k("589077943038783", -57),
          BigNum::from_int2k("5559725200690211", -59),
          BigNum::from_int2k("5320394595779079", -58),
      });
}

// Degree-19 odd approximation of argerf on [-1/4, 1/4]; relative error
// below 2^-62.
inline Poly argerf_poly() {
  return Poly(
      MonomialBasis({1, 3, 5, 7, 9, 11, 13, 15, 17, 19}),
      {
          BigNum::from_int2k("71899270015270848535577833907197", -106),
          BigNum::from_int2k("37646369746407330411070885976913", -107),
          BigNum::from_int2k("2297847774298601", -54),
          BigNum::from_int2k("3118369096730189", -55),
          BigNum::from_int2k("2340416807028733", -55),
          BigNum::from_int2k("7455281238343373", -57),
          BigNum::from_int2k("3086390951797773", -56),
          BigNum::from_int2k("5269462590206135", -57),
          BigNum::from_int2k("8758767795225423", -58),
          BigNum::from_int2k("5369190506948897", -57),
      });
}

}  // namespace cfpoly::testpolys
