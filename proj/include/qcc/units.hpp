// units.hpp: unit conventions and SI conversion factors.
//
// Internally everything is expressed in angular-frequency units with
// hbar = kB = 1: energies, temperatures and rates all carry rad/s.
// SI values enter only at tool boundaries through the helpers below.
#pragma once

namespace qcc {

inline constexpr double two_pi = 6.283185307179586;

// kB/hbar, kelvin to rad/s.
inline constexpr double kb_over_hbar = 1.309e11;

// hbar in J*s, used to quote powers in watts.
inline constexpr double hbar_si = 1.054571817e-34;

inline constexpr double angular_from_hz(double f) { return two_pi * f; }
inline constexpr double hz_from_angular(double w) { return w / two_pi; }
inline constexpr double angular_from_kelvin(double t) { return kb_over_hbar * t; }
inline constexpr double kelvin_from_angular(double w) { return w / kb_over_hbar; }

}  // namespace qcc
