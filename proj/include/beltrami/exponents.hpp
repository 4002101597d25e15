// exponents.hpp — exact exponent arithmetic for the regularity theory.
//
// Everything here is rational arithmetic: the theorems' thresholds are
// strict inequalities, and verdicts near the boundary must not depend on
// float rounding.  p_κ = 1 + 1/κ may be ∞ (the critical-case convention),
// so thresholds live in an extended rational type.
//
// Dimension is fixed to d = 2 throughout.

#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace beltrami {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    // Parse "3/10", "0.3", "4" exactly (decimals via powers of ten).
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            return Rational(std::stoll(text.substr(0, slash)),
                            std::stoll(text.substr(slash + 1)));
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(text));
        const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.size() > 15) throw std::invalid_argument("Rational::parse: too many digits");
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        long long w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        const bool neg = !whole.empty() && whole[0] == '-';
        long long f = frac.empty() ? 0 : std::stoll(frac);
        long long num = (neg ? -1 : 1) * ((w < 0 ? -w : w) * den + f);
        return Rational(num, den);
    }
};

inline Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
inline Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
inline Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
}
inline bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(Rational a, Rational b) { return !(a == b); }
inline bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
inline bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }
inline bool operator>(Rational a, Rational b) { return b < a; }
inline bool operator>=(Rational a, Rational b) { return b <= a; }

/// A rational or +∞ (the extremal exponent in the critical convention).
struct ExtRational {
    Rational value;
    bool infinite = false;

    static ExtRational infinity() { return {Rational(0), true}; }
    static ExtRational of(Rational r) { return {r, false}; }

    /// 1/x, with 1/∞ = 0.
    Rational reciprocal() const {
        if (infinite) return Rational(0);
        return Rational(value.den, value.num);
    }
    double to_double() const {
        return infinite ? std::numeric_limits<double>::infinity() : value.to_double();
    }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

/// p_κ = 1 + 1/κ  (> 2), or ∞ under the critical-case convention.
inline ExtRational extremal_exponent(Rational kappa, bool critical = false) {
    if (!(Rational(0) < kappa && kappa < Rational(1)))
        throw std::invalid_argument("extremal_exponent: kappa must lie in (0,1)");
    if (critical) return ExtRational::infinity();
    return ExtRational::of(Rational(1) + Rational(1) / kappa);
}

enum class Criticality { supercritical, critical, subcritical };

inline const char* to_string(Criticality c) {
    switch (c) {
        case Criticality::supercritical: return "supercritical";
        case Criticality::critical: return "critical";
        case Criticality::subcritical: return "subcritical";
    }
    return "?";
}

/// Sign of the differential dimension s - d/p (d = 2); exact tie = critical.
inline Criticality classify(Rational s, Rational p) {
    const Rational dd = s - Rational(2) / p;
    if (dd > Rational(0)) return Criticality::supercritical;
    if (dd == Rational(0)) return Criticality::critical;
    return Criticality::subcritical;
}

struct QThreshold {
    Rational inv_q_threshold;  // admissible iff 1/q strictly exceeds this
    bool applicable = false;   // hypothesis 1/p < (1-κ)/(1+κ) (subcritical only)
    Criticality regime = Criticality::subcritical;

    bool admits_inv_q(Rational inv_q) const { return applicable && inv_q > inv_q_threshold; }
};

/// Threshold on 1/q for ∂̄f ∈ W^{s,q}: the critical case gives 1/q > 1/p,
/// the subcritical case 1/q > 1/p + 1/p_κ under 1/p < (1-κ)/(1+κ).
/// Boundary equality counts as hypothesis-violated (strict inequalities).
inline QThreshold admissible_q_threshold(Rational s, Rational p, Rational kappa) {
    if (!(Rational(0) < kappa && kappa < Rational(1)))
        throw std::invalid_argument("admissible_q_threshold: kappa must lie in (0,1)");
    if (!(p > Rational(1)))
        throw std::invalid_argument("admissible_q_threshold: p must exceed 1");
    const Criticality c = classify(s, p);
    if (c == Criticality::supercritical)
        throw std::invalid_argument(
            "admissible_q_threshold: supercritical index is outside the theorem");
    QThreshold out;
    out.regime = c;
    const Rational inv_p = Rational(1) / p;
    if (c == Criticality::critical) {
        out.inv_q_threshold = inv_p;
        out.applicable = true;
        return out;
    }
    const ExtRational pk = extremal_exponent(kappa, false);
    out.inv_q_threshold = inv_p + pk.reciprocal();
    out.applicable = inv_p < (Rational(1) - kappa) / (Rational(1) + kappa);
    return out;
}

struct CorollaryExponents {
    Rational smoothness;        // Θ·s
    Rational inv_q_threshold;   // Θ/p + 1/p_κ
    bool applicable = false;    // Θ/p < (1-κ)/(1+κ)
};

/// Corollary trade-off: give up smoothness (Θs instead of s) to relax the
/// integrability restriction to Θ/p < (1-κ)/(1+κ).
inline CorollaryExponents corollary_exponents(Rational s, Rational p, Rational kappa,
                                              Rational theta) {
    if (!(Rational(0) < theta && theta <= Rational(1)))
        throw std::invalid_argument("corollary_exponents: theta must lie in (0,1]");
    if (!(Rational(0) < kappa && kappa < Rational(1)))
        throw std::invalid_argument("corollary_exponents: kappa must lie in (0,1)");
    if (!(s < Rational(2) / p))
        throw std::invalid_argument("corollary_exponents: requires the subcritical range s < 2/p");
    CorollaryExponents out;
    out.smoothness = theta * s;
    const ExtRational pk = extremal_exponent(kappa, false);
    out.inv_q_threshold = theta / p + pk.reciprocal();
    out.applicable = theta / p < (Rational(1) - kappa) / (Rational(1) + kappa);
    return out;
}

// ---- embeddings -------------------------------------------------------------

struct SpaceIndex {
    Rational s, p, q; // q.num < 0 encodes q = ∞
    static SpaceIndex make(Rational s, Rational p, Rational q) { return {s, p, q}; }
    bool q_infinite() const { return q.num < 0; }
};

enum class EmbeddingVerdict { holds, not_derivable };

struct EmbeddingFlags {
    bool compact_support = false;
    bool bounded = false;
};

/// Sufficient conditions only, exactly the ones stated for F-spaces:
///   (1) same p: higher s embeds (any q); equal s embeds into larger q,
///   (2) Sobolev slope: s0 - d/p0 = s1 - d/p1 with p0 < p1, s1 < s0,
///   (3) compact support: p may decrease at fixed (s, q), as long as the
///       target p stays above d/(d+s),
///   (4) compact support and bounded: s2 < s and s2·p2 ≤ s·p.
/// A trivial q/s relaxation (1) may follow a primary rule.  Anything not
/// reachable this way returns not_derivable (never "false").
inline EmbeddingVerdict embedding_holds(const SpaceIndex& src, const SpaceIndex& dst,
                                        const EmbeddingFlags& flags = {}) {
    const Rational d(2);
    auto q_le = [&](const SpaceIndex& a, const SpaceIndex& b) {
        if (b.q_infinite()) return true;
        if (a.q_infinite()) return false;
        return a.q <= b.q;
    };
    // (1) trivial relaxations at fixed p
    auto trivially = [&](const SpaceIndex& a, const SpaceIndex& b) {
        if (a.p != b.p) return false;
        if (a.s > b.s) return true;                 // any q after a true smoothness drop
        return a.s == b.s && q_le(a, b);
    };
    if (trivially(src, dst)) return EmbeddingVerdict::holds;
    // (2) Sobolev slope rule, then relax
    if (src.p < dst.p && dst.s < src.s &&
        src.s - d / src.p == dst.s - d / dst.p)
        return EmbeddingVerdict::holds;
    if (flags.compact_support) {
        // (3) integrability drop at fixed s, q
        if (dst.p <= src.p && dst.p > d / (d + src.s) && dst.s <= src.s &&
            (dst.s < src.s || q_le(src, dst)))
            return EmbeddingVerdict::holds;
        // (4) bounded ∩ compact interpolation
        if (flags.bounded && dst.s < src.s && dst.s > Rational(0) &&
            dst.s * dst.p <= src.s * src.p)
            return EmbeddingVerdict::holds;
    }
    return EmbeddingVerdict::not_derivable;
}

} // namespace beltrami
