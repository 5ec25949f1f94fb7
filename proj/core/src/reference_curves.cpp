#include <cmath>
#include <string>
#include <vector>

#include "annv/amplitude.hpp"
#include "annv/errors.hpp"

namespace annv {
namespace {

double E(double x) { return std::exp(x); }
double sq(double x) { return x * x; }

const double a1 = std::pow(3.0 / 13.0, 3.0 / 8.0);
const double a2 = std::pow(13.0 / 3.0, 1.0 / 4.0);
const double a3 = std::pow(3.0 / 13.0, 1.0 / 8.0);
const double a4 = std::pow(13.0 / 3.0, 1.0 / 8.0);
const double a5 = std::pow(39.0, 1.0 / 8.0);
const double a6 = std::sqrt(15.0);
const double a7 = std::cbrt(15.0);
const double a8 = std::pow(15.0, 1.0 / 6.0);
const double b1 = std::pow(13.0, 3.0 / 4.0) * std::pow(3.0, 1.0 / 4.0);
const double b2 = std::pow(13.0, 1.0 / 8.0) * std::pow(3.0, 7.0 / 8.0);
const double b3 = std::pow(13.0, 3.0 / 8.0) * std::pow(3.0, 5.0 / 8.0);
const double g1 = std::pow(3.0, 3.0 / 8.0) * std::pow(13.0, 5.0 / 8.0);
const double g2 = std::pow(3.0, 7.0 / 8.0) * std::pow(13.0, 1.0 / 8.0);
const double g3 = std::pow(3.0, 1.0 / 4.0) * std::pow(13.0, 3.0 / 4.0);
const double g4 = std::sqrt(39.0);

// Transcribed closed forms. The second argument is always t; amplitude curves ignore the first.
double cross31a(double y, double t) {
  return -13.0/2.0*(51.0*E(15.0*t/2.0+11.0*y/3.0)+48.0*E(15.0*t/2.0+17.0*y/6.0)+117.0*E(5.0*t+3.0*y)+192.0*E(5.0*t+13.0*y/6.0)+221.0*E(5.0*t/2.0+3.0*y/2.0)+13.0*E(5.0*t/2.0+2.0*y/3.0))/sq(3.0*E(5.0*t+13.0*y/6.0)+26.0*E(5.0*t/2.0+3.0*y/2.0)+13.0*E(5.0*t/2.0+2.0*y/3.0)+13.0);
}

double cross31b(double x, double t) {
  return -13.0/2.0*(96.0*E(3.0*x-33.0*t/4.0)+3.0*E(9.0*x/2.0-129.0*t/8.0)+309.0*E(5.0*x/2.0-65.0*t/8.0)+26.0*E(x/2.0-t/8.0)+208.0*E(2.0*x-8.0*t))/sq(3.0*E(5.0*x/2.0-65.0*t/8.0)+26.0*E(x/2.0-t/8.0)+13.0*E(2.0*x-8.0*t)+13.0);
}

double cross32a(double x, double t) {
  return -30.0*(2.0*E(5.0*x-17.0*t)+4.0*E(4.0*x-10.0*t)+39.0*E(3.0*x-9.0*t)+120.0*E(2.0*x-8.0*t)+15.0*E(x-t))/sq(E(3.0*x-9.0*t)+30.0*E(2.0*x-8.0*t)+15.0*E(x-t)+15.0);
}

double cross32b(double y, double t) {
  return -30.0*(5.0*E(7.0*y/2.0+18.0*t)+E(4.0*y+18.0*t)+15.0*E(2.0*y+12.0*t)+24.0*E(5.0*y/2.0+12.0*t)+75.0*E(y+6.0*t)+60.0*E(3.0*y/2.0+6.0*t))/sq(E(5.0*y/2.0+12.0*t)+30.0*E(y+6.0*t)+15.0*E(3.0*y/2.0+6.0*t)+15.0);
}

double cross33a(double y, double t) {
  return -169.0*(48.0*std::sqrt(39.0)*E(15.0*t/4.0+y/2.0)+13.0*b1*E(15.0*t/8.0+7.0*y/2.0)+205.0*b1*E(15.0*t/8.0+4.0*y/3.0)+78.0*b1*E(15.0*t/8.0-5.0*y/6.0)+2704.0*E(13.0*y/6.0)+2704.0)/(2.0*sq(13.0*b1*E(15.0*t/8.0+4.0*y/3.0)+3.0*b1*E(15.0*t/8.0-5.0*y/6.0)+169.0*E(13.0*y/6.0)+338.0));
}

double cross33b(double x, double t) {
  return -(1200.0*E(-143.0*t/18.0+16.0*x/9.0)+39.0*E(-1157.0*t/72.0+77.0*x/18.0)+624.0*E(-559.0*t/72.0+19.0*x/18.0)+369.0*E(-65.0*t/8.0+5.0*x/2.0)+9.0*E(13.0*t/72.0-13.0*x/18.0)+9.0)/(2.0*sq(3.0*E(-65.0*t/8.0+5.0*x/2.0)+3.0*E(13.0*t/72.0-13.0*x/18.0)+13.0*E(-143.0*t/18.0+16.0*x/9.0)+6.0));
}

double cross34a(double y, double t) {
  return -18.0*(59049.0*E(12.0*t+6.0*y)+59049.0*E(12.0*t+9.0*y)+1053.0*E(6.0*t)+4374.0*E(6.0*t+3.0*y)+2916.0*E(6.0*t+6.0*y)+E(-3.0*y))/sq(9.0+1458.0*E(6.0*t+3.0*y)+729.0*E(6.0*t+6.0*y)+E(-3.0*y));
}

double cross34b(double x, double t) {
  return -(54.0*E(15.0*t-3.0*x)+18.0*E(39.0*t-9.0*x)+72.0*E(6.0*t)+8.0*E(24.0*t-6.0*x)+20.0*E(-9.0*t+3.0*x)+8.0)/sq(2.0+E(24.0*t-6.0*x)+E(-9.0*t+3.0*x)+9.0*E(15.0*t-3.0*x));
}

double amplocal1a(double, double t) {
  return -(208.0*a1*E(425.0*t/144.0)+221.0*a1*E(25.0*t/16.0)+192.0*a5*E(325.0*t/144.0)+221.0*a2*E(25.0*t/36.0)+3.0*E(275.0*t/72.0)-507.0*a2)/(2.0*std::sqrt(39.0)*sq(a3*E(425.0*t/144.0)+E(325.0*t/144.0)+3.0/std::sqrt(39.0)*E(25.0*t/16.0)+26.0*a1/3.0));
}

double amplocal1b(double, double t) {
  return -(3744.0*a2*E(45.0*t/8.0)+1205.0*a4*E(75.0*t/16.0)+8112.0*E(15.0*t/4.0)+1014.0*a1*E(135.0*t/16.0)+507.0*a1*E(15.0*t/16.0))/(2.0*std::sqrt(39.0)*sq(26.0*a1*E(75.0*t/16.0)+3.0*a4*E(15.0*t/16.0)+std::sqrt(39.0)*E(15.0/4.0)+13.0));
}

double amplocal2a(double, double t) {
  return -a6*(2.0*E(15.0*t/2.0)+30.0*E(9.0*t/2.0)+6.0*a6*E(6.0*t)+10.0*a6*E(3.0*t)+75.0)/sq(a6*E(9.0*t/2.0)+a6*E(3.0*t/2.0)+E(3.0*t)+30.0);
}

double amplocal2b(double, double t) {
  return -225.0*(2.0*a6*a7*E(5.0*t/2.0)+6.0*a7*E(4.0*t)+9.0*a8*E(7.0*t/2.0)+6.0*a6*E(3.0*t/2.0)+2.0*a7*E(t))/sq(a6*a7*E(t)+30.0*a7*E(5.0*t/2.0)+15.0*E(3.0*t/2.0)+15.0*std::sqrt(15.0));
}

double amplocal3a(double, double t) {
  return -13.0*(9.0*b2*E(93.0*t/16.0)+624.0*b2*E(69.0*t/16.0)+615.0*b1*E(27.0*t/8.0)+624.0*b3*E(39.0*t/16.0)+4394.0*b3*E(15.0*t/16.0)+35152.0)/(2.0*sq(3.0*b1*E(27.0*t/8.0)+3.0*b3*E(39.0*t/16.0)+13.0*b3*E(15.0*t/16.0)+338.0));
}

double amplocal3b(double, double t) {
  return -3.0*(13.0*E(-103.0*t/12.0)+208.0*E(-71.0*t/12.0)+400.0*E(-29.0*t/6.0)+123.0*E(-15.0*t/4.0)+3.0*E(-13.0*t/12.0)+3.0)/(2.0*sq(6.0+3.0*E(-15.0*t/4.0)+3.0*E(-13.0*t/12.0)+13.0*E(-29.0*t/6.0)));
}

double amplocal4a(double, double t) {
  return -6.0*E(3.0*t/2.0)*(81.0*std::sqrt(3.0)*E(6.0*t)+729.0*E(15.0*t/2.0)+162.0*std::sqrt(3.0)*E(3.0*t)+351.0*E(9.0*t/2.0)+std::sqrt(3.0)+36.0*E(3.0*t/2.0))/sq(54.0*std::sqrt(3.0)*E(9.0*t/2.0)+std::sqrt(3.0)*E(3.0*t/2.0)+9.0*E(3.0*t)+3.0);
}

double amplocal4b(double, double t) {
  return -(18.0*E(15.0*t/2.0)+72.0*E(6.0*t)+54.0*E(9.0*t/2.0)+8.0*E(3.0*t)+20.0*E(3.0*t/2.0)+8.0)/sq(2.0+E(3.0*t)+E(3.0*t/2.0)+9.0*E(9.0*t/2.0));
}

double crossadd1a(double y, double t) {
  return -13.0/6.0*(60.0*E(15.0*t/2.0+11.0*y/3.0)+108.0*E(15.0*t/2.0+17.0*y/6.0)+390.0*E(5.0*t+13.0*y/6.0)+585.0*E(5.0*t/2.0+3.0*y/2.0)+52.0*E(5.0*t/2.0+2.0*y/3.0))/sq(3.0*E(5.0*t+13.0*y/6.0)+26.0*E(5.0*t/2.0+3.0*y/2.0)+13.0*E(5.0*t/2.0+2.0*y/3.0)+13.0);
}

double crossadd1b(double x, double t) {
  return -13.0/6.0*(156.0*E(3.0*x-33.0*t/4.0)+12.0*E(9.0*x/2.0-129.0*t/8.0)+390.0*E(5.0*x/2.0-65.0*t/8.0)+169.0*E(x/2.0-t/8.0)+468.0*E(2.0*x-8.0*t))/sq(3.0*E(5.0*x/2.0-65.0*t/8.0)+26.0*E(x/2.0-t/8.0)+13.0*E(2.0*x-8.0*t)+13.0);
}

double amplocaladd1a(double, double t) {
  return -3.0/2.0*(468.0*g2*E(325.0*t/144.0)+585.0*g2*E(125.0*t/144.0)+12.0*g4*E(25.0*t/8.0)+390.0*g1*E(25.0*t/16.0)+260.0*g3)/sq(3.0*g4*E(325.0*t/144.0)+3.0*g1*E(25.0*t/36.0)+9.0*E(25.0*t/16.0)+26.0*g2);
}

double amplocaladd1b(double, double t) {
  return -(2197.0*g4*E(75.0*t/16.0)+2028.0*g3*E(45.0*t/8.0)+5070.0*g1*E(75.0*t/16.0)+6084.0*g4*E(60.0*t/16.0)+676.0*g2*E(15.0*t/16.0))/(2.0*sq(26.0*g2*E(75.0*t/16.0)+39.0*E(15.0*t/4.0)+3.0*g1*E(15.0*t/16.0)+13.0*g4));
}

double crossadd2a(double x, double t) {
  return -(75.0*E(5.0*x-17.0*t)+90.0*E(4.0*x-10.0*t)+450.0*E(3.0*x-9.0*t)+2250.0*E(2.0*x-8.0*t)+450.0*E(x-t))/sq(E(3.0*x-9.0*t)+30.0*E(2.0*x-8.0*t)+15.0*E(x-t)+15.0);
}

double amplocaladd2a(double, double t) {
  return -(90.0*E(6.0*t)+2.0*a6*E(15.0*t/2.0)+30.0*a6*E(9.0*t/2.0)+150.0*E(3.0*t)+75.0*a6*E(3.0*t/2.0))/sq(a6*E(9.0*t/2.0)+a6*E(3.0*t/2.0)+E(3.0*t)+30.0);
}

double amplocaladd2b(double, double t) {
  return -225.0*(9.0*a8*E(7.0*t/2.0)+6.0*a7*E(4.0*t)+2.0*a6*a7*E(5.0*t/2.0)+6.0*a6*E(3.0*t/2.0)+2.0*a7*E(t))/sq(30.0*a7*E(5.0*t/2.0)+a6*a7*E(t)+15.0*E(3.0*t/2.0)+15.0*a6);
}

double crossadd3a(double y, double t) {
  return 169.0*(108.0*std::sqrt(39.0)*E(15.0*t/4.0+y/2.0)+52.0*b1*E(15.0*t/8.0+7.0*y/2.0)+273.0*b1*E(15.0*t/8.0+4.0*y/3.0)+12.0*b1*E(15.0*t/8.0-5.0*y/6.0)+6084.0*E(13.0*y/6.0)-2704.0)/(6.0*sq(13.0*b1*E(15.0*t/8.0+4.0*y/3.0)+3.0*b1*E(15.0*t/8.0-5.0*y/6.0)+169.0*E(13.0*y/6.0)+338.0));
}

double crossadd3b(double x, double t) {
  return (108.0*E(-65.0*t/8.0+5.0*x/2.0)+468.0*E(-559.0*t/72.0+19.0*x/18.0)+182.0*E(-143.0*t/18.0+16.0*x/9.0)+52.0*E(-1157.0*t/72.0+77.0*x/18.0)+12.0*E(13.0*t/72.0-13.0*x/18.0)-27.0)/(2.0*sq(3.0*E(-65.0*t/8.0+5.0*x/2.0)+13.0*E(-143.0*t/18.0+16.0*x/9.0)+3.0*E(13.0*t/72.0-13.0*x/18.0)+6.0));
}

double amplocaladd3a(double, double t) {
  return 13.0*(36.0*b2*E(93.0*t/16.0)+1404.0*b2*E(69.0*t/16.0)+819.0*b1*E(27.0*t/8.0)+1404.0*b3*E(39.0*t/16.0)+676.0*b3*E(15.0*t/16.0)-35152.0)/(6.0*sq(3.0*b1*E(27.0*t/8.0)+3.0*b3*E(39.0*t/16.0)+13.0*b3*E(15.0*t/16.0)+338.0));
}

double amplocaladd3b(double, double t) {
  return (108.0*E(-15.0*t/4.0)+468.0*E(-71.0*t/12.0)+182.0*E(-29.0*t/6.0)+52.0*E(-103.0*t/12.0)+12.0*E(-13.0*t/12.0)-27.0)/(2.0*sq(3.0*E(-15.0*t/4.0)+13.0*E(-29.0*t/6.0)+3.0*E(-13.0*t/12.0)+6.0));
}

double crossadd4a(double y, double t) {
  return (59049.0*E(3.0*y)+E(-12.0*t-9.0*y)+324.0*E(-6.0*t-6.0*y)+2916.0*E(-6.0*t)-118098.0)/sq(E(-6.0*t-6.0*y)+9.0*E(-6.0*t-3.0*y)+729.0*E(3.0*y)+1458.0);
}

double amplocaladd4a(double, double t) {
  return (2.0*std::sqrt(3.0)*E(-15.0*t/2.0)+72.0*E(-6.0*t)+216.0*E(-3.0*t)+162.0*std::sqrt(3.0)*E(-3.0*t/2.0)-2916.0)/sq(std::sqrt(3.0)*E(-9.0*t/2.0)+3.0*std::sqrt(3.0)*E(-3.0*t/2.0)+E(-3.0*t)+54.0);
}

double amplocaladd4b(double, double t) {
  return (72.0*E(6.0*t)+18.0*E(15.0*t/2.0)+9.0*E(9.0*t/2.0)+8.0*E(3.0*t)+2.0*E(3.0*t/2.0)-4.0)/sq(9.0*E(9.0*t/2.0)+E(3.0*t)+E(3.0*t/2.0)+2.0);
}

}  // namespace

const std::vector<ReferenceCurve>& reference_curves() {
  using K = CurveKind;
  using P = CurveParam;
  constexpr auto U = Component::U;
  constexpr auto V = Component::V;
  static const std::vector<ReferenceCurve> curves = {
      {"cross31", "a", Case::Weak1, K::Cross, V, "l1-2", P::Y, cross31a},
      {"cross31", "b", Case::Weak1, K::Cross, V, "l1-3", P::X, cross31b},
      {"cross32", "a", Case::Weak2, K::Cross, V, "l1-2", P::X, cross32a},
      {"cross32", "b", Case::Weak2, K::Cross, V, "l1-3", P::Y, cross32b},
      {"cross33", "a", Case::Strong1, K::Cross, V, "^l1+2+3", P::Y, cross33a},
      {"cross33", "b", Case::Strong1, K::Cross, V, "l1", P::X, cross33b},
      {"cross34", "a", Case::Strong2, K::Cross, V, "l1", P::Y, cross34a},
      {"cross34", "b", Case::Strong2, K::Cross, V, "^l1+2+3", P::X, cross34b},
      {"amplocal1", "a", Case::Weak1, K::Amplitude, V, "R1", P::T, amplocal1a},
      {"amplocal1", "b", Case::Weak1, K::Amplitude, V, "R2", P::T, amplocal1b},
      {"amplocal2", "a", Case::Weak2, K::Amplitude, V, "R3", P::T, amplocal2a},
      {"amplocal2", "b", Case::Weak2, K::Amplitude, V, "R4", P::T, amplocal2b},
      {"amplocal3", "a", Case::Strong1, K::Amplitude, V, "R5", P::T, amplocal3a},
      {"amplocal3", "b", Case::Strong1, K::Amplitude, V, "R6", P::T, amplocal3b},
      {"amplocal4", "a", Case::Strong2, K::Amplitude, V, "R7", P::T, amplocal4a},
      {"amplocal4", "b", Case::Strong2, K::Amplitude, V, "R8", P::T, amplocal4b},
      {"crossadd1", "a", Case::Weak1, K::Cross, U, "l1-2", P::Y, crossadd1a},
      {"crossadd1", "b", Case::Weak1, K::Cross, U, "l1-3", P::X, crossadd1b},
      // The two printed expressions are identical, both in x.
      {"crossadd2", "a", Case::Weak2, K::Cross, U, "l1-2", P::X, crossadd2a},
      {"crossadd2", "b", Case::Weak2, K::Cross, U, "l1-3", P::X, crossadd2a},
      {"crossadd3", "a", Case::Strong1, K::Cross, U, "^l1+2+3", P::Y, crossadd3a},
      {"crossadd3", "b", Case::Strong1, K::Cross, U, "l1", P::X, crossadd3b},
      // Also printed twice, both in y.
      {"crossadd4", "a", Case::Strong2, K::Cross, U, "l1", P::Y, crossadd4a},
      {"crossadd4", "b", Case::Strong2, K::Cross, U, "^l1+2+3", P::Y, crossadd4a},
      {"amplocaladd1", "a", Case::Weak1, K::Amplitude, U, "R1", P::T, amplocaladd1a},
      {"amplocaladd1", "b", Case::Weak1, K::Amplitude, U, "R2", P::T, amplocaladd1b},
      {"amplocaladd2", "a", Case::Weak2, K::Amplitude, U, "R3", P::T, amplocaladd2a},
      {"amplocaladd2", "b", Case::Weak2, K::Amplitude, U, "R4", P::T, amplocaladd2b},
      {"amplocaladd3", "a", Case::Strong1, K::Amplitude, U, "R5", P::T, amplocaladd3a},
      {"amplocaladd3", "b", Case::Strong1, K::Amplitude, U, "R6", P::T, amplocaladd3b},
      {"amplocaladd4", "a", Case::Strong2, K::Amplitude, U, "R7", P::T, amplocaladd4a},
      {"amplocaladd4", "b", Case::Strong2, K::Amplitude, U, "R8", P::T, amplocaladd4b},
  };
  return curves;
}

std::vector<std::string> reference_equation_ids() {
  return {"cross31",   "cross32",   "cross33",   "cross34",   "amplocal1",    "amplocal2",
          "amplocal3", "amplocal4", "crossadd1", "crossadd2", "crossadd3",    "crossadd4",
          "amplocaladd1", "amplocaladd2", "amplocaladd3", "amplocaladd4"};
}

}  // namespace annv
