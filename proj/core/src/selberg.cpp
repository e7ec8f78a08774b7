#include "latreal/selberg.hpp"

#include <cmath>

namespace latreal {

namespace {

constexpr double kPoleTolerance = 1e-9;

bool near_nonpositive_integer(double x) {
    double r = std::round(x);
    return std::abs(x - r) < kPoleTolerance && r <= 0.0;
}

// sign of Γ(x) away from poles: positive for x > 0, alternating on the
// negative unit intervals
int gamma_sign(double x) {
    if (x > 0) return 1;
    long long k = static_cast<long long>(std::floor(-x));
    return (k % 2 == 0) ? -1 : 1;
}

} // namespace

SelbergResult selberg(double a, double b, double c, int n) {
    SelbergResult res;
    double log_mag = 0.0;
    int sign = 1;
    bool zero = false;
    auto numerator = [&](double x) {
        if (near_nonpositive_integer(x)) {
            res.pole = true;
            return;
        }
        log_mag += std::lgamma(x);
        sign *= gamma_sign(x);
    };
    auto denominator = [&](double x) {
        if (near_nonpositive_integer(x)) {
            zero = true; // 1/Γ vanishes
            return;
        }
        log_mag -= std::lgamma(x);
        sign *= gamma_sign(x);
    };
    for (int k = 0; k < n; ++k) {
        numerator(a + k * c);
        numerator(b + k * c);
        numerator(1 + (k + 1) * c);
        denominator(a + b + (n + k - 1) * c);
        denominator(1 + c);
    }
    if (res.pole) return res;
    res.value = zero ? 0.0 : sign * std::exp(log_mag);
    return res;
}

FTildeResult f_tilde(const Rational& m_vlambda, const Rational& m_vv, int n) {
    FTildeResult out;
    const Rational c = m_vv / 2;
    const Rational a = m_vlambda + 1;

    // uncancelled poles, decided exactly: the b-chain and trailing chain
    // arguments 1 + kc hit -ℕ₀ iff k·m_vv/2 ∈ -ℕ for some k = 1..n
    for (int k = 1; k <= n; ++k) {
        if (is_negative_integer(k * c)) {
            out.status = FTildeResult::Status::Pole;
            return out;
        }
    }

    std::complex<double> value(1.0, 0.0);
    bool cancelled = false, zero = false;
    const double pi = 3.14159265358979323846;

    // prefactor factors paired with the a-chain numerators
    for (int k = 0; k < n; ++k) {
        Rational u = m_vlambda + k * c; // a + kc = u + 1
        Rational arg = a + k * c;
        bool arg_pole = is_integer(arg) && arg <= 0;
        if (arg_pole) {
            // (e^{2πiu} - 1) Γ(u+1) -> 2πi (-1)^p / p! at u+1 = -p
            long long p = (-floor_int(arg)).convert_to<long long>();
            double mag = 2 * pi;
            for (long long t = 2; t <= p; ++t) mag /= static_cast<double>(t);
            int sgn = (p % 2 == 0) ? 1 : -1;
            value *= std::complex<double>(0.0, sgn * mag);
            cancelled = true;
            continue;
        }
        if (is_integer(u)) {
            zero = true; // prefactor factor is exactly zero, Γ finite
            continue;
        }
        double ud = to_double(u);
        std::complex<double> pref = std::exp(std::complex<double>(0.0, 2 * pi * ud)) - 1.0;
        double x = to_double(arg);
        value *= pref * std::exp(std::lgamma(x)) * static_cast<double>(gamma_sign(x));
    }
    if (zero) {
        out.status = FTildeResult::Status::Zero;
        out.value = {0.0, 0.0};
        return out;
    }
    // remaining Gamma chains (all real)
    double log_mag = 0.0;
    int sign = 1;
    bool denom_zero = false;
    auto gamma_num = [&](const Rational& x) {
        double xd = to_double(x);
        log_mag += std::lgamma(xd);
        sign *= gamma_sign(xd);
    };
    auto gamma_den = [&](const Rational& x) {
        if (is_integer(x) && x <= 0) {
            denom_zero = true;
            return;
        }
        double xd = to_double(x);
        log_mag -= std::lgamma(xd);
        sign *= gamma_sign(xd);
    };
    for (int k = 0; k < n; ++k) {
        gamma_num(Rational(1) + k * c);       // b-chain with b = 1
        gamma_num(Rational(1) + (k + 1) * c); // trailing chain
        gamma_den(a + 1 + (n + k - 1) * c);   // a + b + (n+k-1)c
        gamma_den(Rational(1) + c);
    }
    if (denom_zero)
        value = 0.0;
    else
        value *= sign * std::exp(log_mag);
    out.value = value;
    out.status = cancelled ? FTildeResult::Status::FiniteByCancellation
                           : FTildeResult::Status::Finite;
    return out;
}

} // namespace latreal
