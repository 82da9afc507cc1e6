#pragma once

// Reference values used across the tests.
//
// kRef*: computed independently in 30-digit arithmetic (mpmath) from the
// model equations, or by brute-force integration in a separate
// implementation, and frozen here.
// kPub*: reference values, rounded as printed.

namespace oracle {

inline constexpr double kRefT2 = 3.81209179509296598;
inline constexpr double kRefAlphaT2 = -1.04520286496152707;
inline constexpr double kRefAlphaPi = -1.09033141072736823;

inline constexpr double kRefM[2][2] = {{-5.0707519287, -5.8082044474}, {5.8082044474, 6.5570116024}};
inline constexpr double kRefRho = 0.4862596736;
inline constexpr double kRefDTdState[2] = {16.8032361946, 16.0765309376};
inline constexpr double kRefZ[2] = {-0.6913095497, -0.7225587219};
inline constexpr double kRefY[2] = {15.6467841004, -16.3540635692};

// P_delta on the family at theta = 0.5, 1, 1.5
inline constexpr double kRefPdelta[3][3] = {
    {0.5, 5.897858780, -7.294991985},
    {1.0, 6.2030254806, -5.7578558426},
    {1.5, 7.0313350965, -1.5856291700},
};

inline constexpr double kRefFn0 = 1.3826190993;
inline constexpr double kRefCubic = -1.5104408924;
inline constexpr double kRefTheta0 = 0.970956124938809557;

// h(T2) and f(T2) coefficients: 1, theta^3, theta^2 omega, theta omega^2, omega^3
inline constexpr double kRefHT2[5] = {-21.6335425399527, -246.470958380672, -726.524052740931, -717.863653305342,
                                      -236.868875816276};
inline constexpr double kRefFT2[5] = {-11.7085270741629, 458.154738563831, 1582.73455540093, 1793.59868713479,
                                      669.090970403188};

inline constexpr double kRefTdeltaAt1 = -15.5966985830;

// d^2 P / d delta d(theta, omega) at (1, alpha): total derivative, and the
// variant that differentiates T_delta at fixed t = T2.
inline constexpr double kRefMixedTotal[2][2] = {{333.5676, 318.1405}, {-362.5503, -351.9130}};
inline constexpr double kRefMixedFrozen[2][2] = {{214.6497, 204.3655}, {-248.7754, -243.0586}};
inline constexpr double kRefMelnikovSlope = -66.84197766809;
// Independent brute-force estimates (scipy DOP853, finite differences in delta at 1e-4).
inline constexpr double kBruteMelnikovSlope = -66.936;

// Fixed points of the expanded map (Newton on a separate implementation).
inline constexpr double kRefFixed1e3[2] = {0.97071872, -1.01353505};
inline constexpr double kRefFixed1e2[2] = {0.96858398, -1.0017331};
inline constexpr double kRefFixedFull1e2[2] = {0.96909675, -1.00228215};

// ---------------------------------------------------------------------------
// Reference values.

inline constexpr double kPubT2 = 3.81209;
inline constexpr double kPubAlphaT2 = -1.0452;
inline constexpr double kPubM[2][2] = {{-5.07075, -5.8082}, {5.8082, 6.55701}};
inline constexpr double kPubRho = 0.48626;
inline constexpr double kPubDTdState[2] = {16.8032, 16.0765};
inline constexpr double kPubZ[2] = {-0.69131, -0.722559};
inline constexpr double kPubY[2] = {15.6468, -16.3541};
inline constexpr double kPubFn0 = 1.38262;
inline constexpr double kPubCubic = -1.51044;
inline constexpr double kPubTheta0 = 0.970956;
inline constexpr double kPubHT2[5] = {-21.6335, -246.471, -726.524, -717.864, -236.869};
inline constexpr double kPubPdeltaConst[2] = {5.85426, -7.51458};
inline constexpr double kPubPdeltaCubic[2] = {0.348762, 1.75673};
inline constexpr double kPubMixedAt1[2][2] = {{214.649, 204.365}, {-116.234, -116.250}};
inline constexpr double kPubMelnikovSlope = -2.95323;
inline constexpr double kPubSymmetricGait[4] = {-1.5339, 0.0339021, 1.5, 0.522601};

/// Reference closed form of T_delta(theta, omega, 0).
inline double pub_t_delta(double th, double om) {
    return (0.940403 + 34.0548 * om * om * om + 96.2296 * om * om * th + 90.4622 * om * th * th +
            28.3414 * th * th * th) /
           (om + 0.982912 * th);
}

}  // namespace oracle
