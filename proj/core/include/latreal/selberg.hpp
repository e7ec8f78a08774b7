#pragma once

#include "latreal/rational.hpp"

#include <complex>

namespace latreal {

// The Gamma-product closed form
//   Sel(a-1, b-1, 2c) = Π_{k=0}^{n-1} Γ(a+kc) Γ(b+kc) Γ(1+(k+1)c)
//                                   / (Γ(a+b+(n+k-1)c) Γ(1+c)).
// Returns pole = true when a numerator argument sits on a non-positive
// integer (within 1e-9); a denominator pole just sends the value to zero.
struct SelbergResult {
    bool pole = false;
    double value = 0.0;
};
SelbergResult selberg(double a, double b, double c, int n);

// F̃(m_vλ; m_vv) = Π_{s=0}^{n-1} (e^{iπ m_vv s} e^{2πi m_vλ} - 1) · Sel
// with a = m_vλ + 1, b = 1, 2c = m_vv.  Simple poles of the a-chain are
// cancelled by vanishing prefactor factors and resolved by the limit
// 2πi·(-1)^p/p!.  Pole positions are decided on the exact rationals.
struct FTildeResult {
    enum class Status { Finite, FiniteByCancellation, Zero, Pole };
    Status status = Status::Finite;
    std::complex<double> value{0.0, 0.0};
};
FTildeResult f_tilde(const Rational& m_vlambda, const Rational& m_vv, int n);

} // namespace latreal
