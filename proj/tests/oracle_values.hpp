#pragma once

// Generated by tests/oracles.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace oracle {

inline const std::complex<double> qq_inf_half{0.28878809508660242128, 0.0};
inline const std::complex<double> qq_inf_03{0.61264815421325652412, 0.0};
inline const std::complex<double> qpoch_inf_complex{-0.25451284943490269695, 0.68504185703085739716};
inline const std::complex<double> phi10_direct{1.995164350820907646, 0.0};
inline const std::complex<double> phi21_direct{2.7690871179678866599, 0.0};
inline const std::complex<double> dq3_ratio{0.026570565906492054692, 0.0};
inline const std::complex<double> op_cauchy_series{2.6667159214594856214, 0.0};
inline const std::complex<double> biv_gf_direct{3.0677565069201529541, 0.0};
inline const std::complex<double> mehler_direct{18.649829014980432482, 0.0};
inline const std::complex<double> askey_wilson_quad{11.143482213291967929, 0.23044633733788120701};
inline const std::complex<double> askey_roy_quad{0.36395748429108394021, -0.40058171629385797994};
inline const std::complex<double> sears_jackson{1.0454327132992697415, -0.15857098207294240242};
inline const std::complex<double> barnes1_quad{0.65113557901315286397, -2.254515076750386984e-49};
inline const std::complex<double> barnes2_quad{-1.521779609404057326, 4.0127394826807724768e-49};

} // namespace oracle
