#pragma once

namespace gingap {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtPi = 1.77245385090551602730;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;   // bulk real-Ginibre density
inline constexpr double kSqrt2OverPi = 0.79788456080286535588;  // 2x the bulk density

}  // namespace gingap
