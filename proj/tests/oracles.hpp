#pragma once
// Reference values for the regression models, frozen from independent
// high-precision evaluations (multi-hundred-digit arithmetic, summation and
// quadrature performed with methods unrelated to the implementation under
// test).  Digits are quoted beyond double precision on purpose.

#include <complex>

namespace oracle {

// --- principal-branch log-gamma reference points ---------------------------
struct LogGammaPoint {
  double re_in, im_in, re_out, im_out;
};
inline constexpr LogGammaPoint kLogGamma[] = {
    {1.0, 0.0, 0.0, 0.0},
    {0.5, 0.0, 0.5723649429247000870717, 0.0},
    {12.3, 0.0, 18.23898340709224194193, 0.0},
    {0.001, 0.0, 6.907178885383853682512, 0.0},
    {9999.5, 0.0, 82095.11236375763922816, 0.0},
    {0.5, 10.0, -14.78902473474429345053, 13.03002003491108985081},
    {3000.0, 4000.0, 18839.05905417975992508, 32850.19475872745227228},
    {-3.2, 4.1, -11.1491146438215535245, -5.61640994828848152548},
    {-7.7, 0.4, -9.404320802157028521469, -24.84398518098432957056},
    {-7.7, -0.4, -9.404320802157028521469, 24.84398518098432957056},
    {0.4, 300.0, -470.8903377082854037503, 1410.977784986477947767},
    {-200.3, 1.7, -868.3180975320123629413, -621.8178786608866041514},
    {-0.5, 0.0001, 1.265512078810635199637, -3.141589004592257248037},
    {2.5, -7.5, -6.81040022156194886816, -10.49496293375685792514},
    {0.001, 0.001, 6.560604473837552639565, -0.785973734929653434836},
    {-15.2, -22.7, -84.86265353404506468732, -18.45459929650675861404},
};

// --- two-row model D=(1,-1), alpha=(0.3,0.4) -------------------------------
inline constexpr double kBarnesZPlus = -0.651822912072347669002;    // theta = +2
inline constexpr double kBarnesZMinus = -0.5336674636744763597269;  // theta = -2

// --- conifold D=(1,1,-1,-1), alpha=(0.11,0.13,0.17,0.19) -------------------
inline constexpr double kConifoldZPlus = -55.66888876571292142178;   // zeta = +3
inline constexpr double kConifoldZMinus = -46.49856448836761784828;  // zeta = -3
inline constexpr double kConifoldZWall = -54.04765757021401380816;   // zeta = 0, contour
inline constexpr double kConifoldLineP024 = -11.61284006642064930978;  // base point p = 0.24

// --- quintic D=(1,1,1,1,1,-5), alpha=(.013,.029,.041,.053,.067,1.019) ------
inline constexpr double kQuinticZPlus = -869.6390425400950538477;   // zeta = +10
inline constexpr double kQuinticZMinus = -18.58408021265313485083;  // zeta = -10

// --- K over P1xP1: rows (1,0),(1,0),(0,1),(0,1),(-2,-2);
//     alpha=(.0137,.0299,.0413,.0531,1.0167) ------------------------------
inline constexpr double kKp1p1ZGeom = 12.96084659839470576376;  // zeta = (4,4)
// line integral block J={1}, m1=0, offset 0.3, direction (0,1):
inline constexpr double kKp1p1LineJ1 = -167.2471791538647675831;
// residue slice sums over the completions of J={1}:
inline constexpr double kKp1p1Slice13 = 4072.591000171619840421;
inline constexpr double kKp1p1Slice14 = -3905.343821017755072837;

}  // namespace oracle
