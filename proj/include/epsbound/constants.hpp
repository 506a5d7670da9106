#pragma once

namespace epsbound {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.57721566490153286061;

} // namespace epsbound
