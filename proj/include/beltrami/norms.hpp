// norms.hpp — Triebel–Lizorkin and Besov quasi-norm estimators.
//
//   TL:    ‖ ‖{2^{sj} (ψ_j f̂)ˇ}‖_{l^q} ‖_{L^p}      (p < ∞, q < ∞)
//   Besov: ‖ {2^{sj} ‖(ψ_j f̂)ˇ‖_{L^p}} ‖_{l^q}      (q = ∞ allowed)
//
// L^p norms are Riemann sums with cell weight spacing².  Totals are raw
// (no normalization); cross-estimator comparisons go through the frozen
// calibration constants produced by the calibration sweep.

#pragma once

#include "beltrami/fft.hpp"
#include "beltrami/littlewood_paley.hpp"

#include "json.hpp"

namespace beltrami {

struct SobolevIndex {
    double s = 0.0;  // smoothness
    double p = 2.0;  // integrability, d/(d+s) < p (Banach semantics need p > 1)
    double q = 2.0;  // fine index, may be infinity
    static constexpr int dim = 2;

    SobolevIndex() = default;
    SobolevIndex(double s_, double p_, double q_) : s(s_), p(p_), q(q_) {
        if (!(p > 0.0) || std::isinf(p))
            throw std::invalid_argument("SobolevIndex: p must be finite and positive");
        if (s >= 0.0 && !(p > dim / (dim + s)))
            throw std::invalid_argument("SobolevIndex: p must exceed d/(d+s)");
        if (!(q > 0.0)) throw std::invalid_argument("SobolevIndex: q must be positive");
    }

    double differential_dimension() const { return s - static_cast<double>(dim) / p; }
    bool q_infinite() const { return std::isinf(q); }
};

/// Exact sign comparison; tie tolerance is 0 (equality means critical).
inline Criticality classify(const SobolevIndex& idx) {
    const double dd = idx.s - static_cast<double>(SobolevIndex::dim) / idx.p;
    if (dd > 0.0) return Criticality::supercritical;
    if (dd == 0.0) return Criticality::critical;
    return Criticality::subcritical;
}

enum class NormKind { triebel_lizorkin, besov, difference };

inline const char* to_string(NormKind k) {
    switch (k) {
        case NormKind::triebel_lizorkin: return "triebel-lizorkin";
        case NormKind::besov: return "besov";
        case NormKind::difference: return "difference";
    }
    return "?";
}

struct NormReport {
    NormKind kind = NormKind::triebel_lizorkin;
    SobolevIndex index;
    double total = 0.0;
    // (j, contribution): per-band L^p mass for TL/Besov, per-t-node mass for
    // the difference norm.
    std::vector<std::pair<int, double>> band_contributions;
    bool truncation_flag = false;

    nlohmann::json to_json() const {
        nlohmann::json bands = nlohmann::json::array();
        for (const auto& [j, v] : band_contributions) bands.push_back({j, v});
        return {{"kind", to_string(kind)}, {"s", index.s},        {"p", index.p},
                {"q", index.q},            {"total", total},      {"bands", bands},
                {"truncation_flag", truncation_flag}};
    }

    std::string to_csv() const {
        std::string out = "band,contribution\n";
        for (const auto& [j, v] : band_contributions) {
            char line[64];
            std::snprintf(line, sizeof(line), "%d,%.17g\n", j, v);
            out += line;
        }
        return out;
    }
};

namespace detail {

inline std::vector<GridField> band_decompose(const GridField& f, const DyadicPartition& part) {
    if (!(f.grid == part.grid))
        throw std::invalid_argument("band_decompose: field and partition grids differ");
    GridField spectrum = forward_fft(f);
    std::vector<GridField> bands;
    bands.reserve(part.band_count());
    for (int b = 0; b < part.band_count(); ++b) {
        GridField s(f.grid);
        for (int i = 0; i < f.size(); ++i) s.values[i] = spectrum.values[i] * part.windows[b][i];
        bands.push_back(inverse_fft(s));
    }
    return bands;
}

// Top two bands carrying > 5% of the q-th-power mass means the frequency
// cutoff is biting; the report flags it.
inline bool truncation_biting(const std::vector<std::pair<int, double>>& contributions,
                              double q) {
    if (contributions.size() < 3) return false;
    const double qq = std::isinf(q) ? 1.0 : q;
    double total = 0.0, top = 0.0;
    for (std::size_t i = 0; i < contributions.size(); ++i) {
        const double m = std::pow(contributions[i].second, qq);
        total += m;
        if (i + 2 >= contributions.size()) top += m;
    }
    return total > 0.0 && top > 0.05 * total;
}

} // namespace detail

inline NormReport tl_norm(const GridField& f, const SobolevIndex& idx,
                          const DyadicPartition& part) {
    if (std::isinf(idx.p))
        throw std::invalid_argument("tl_norm: p = infinity is outside the TL definition here");
    if (idx.q_infinite())
        throw std::invalid_argument("tl_norm: q = infinity unsupported (use besov_norm)");
    const auto bands = detail::band_decompose(f, part);
    NormReport rep;
    rep.kind = NormKind::triebel_lizorkin;
    rep.index = idx;
    std::vector<double> lq_pow(f.size(), 0.0);
    for (int b = 0; b < part.band_count(); ++b) {
        const double w = std::pow(2.0, idx.s * b);
        double band_lp = 0.0;
        for (int i = 0; i < f.size(); ++i) {
            const double a = w * std::abs(bands[b].values[i]);
            lq_pow[i] += std::pow(a, idx.q);
            band_lp += std::pow(a, idx.p);
        }
        const double cell = f.grid.spacing * f.grid.spacing;
        rep.band_contributions.emplace_back(b, std::pow(band_lp * cell, 1.0 / idx.p));
    }
    double acc = 0.0;
    for (double v : lq_pow) acc += std::pow(v, idx.p / idx.q);
    const double cell = f.grid.spacing * f.grid.spacing;
    rep.total = std::pow(acc * cell, 1.0 / idx.p);
    rep.truncation_flag = detail::truncation_biting(rep.band_contributions, idx.q);
    return rep;
}

inline NormReport besov_norm(const GridField& f, const SobolevIndex& idx,
                             const DyadicPartition& part) {
    if (std::isinf(idx.p))
        throw std::invalid_argument("besov_norm: p = infinity unsupported");
    const auto bands = detail::band_decompose(f, part);
    NormReport rep;
    rep.kind = NormKind::besov;
    rep.index = idx;
    for (int b = 0; b < part.band_count(); ++b) {
        const double w = std::pow(2.0, idx.s * b);
        rep.band_contributions.emplace_back(b, w * lp_norm(bands[b], idx.p));
    }
    if (idx.q_infinite()) {
        double m = 0.0;
        for (const auto& [j, v] : rep.band_contributions) m = std::max(m, v);
        rep.total = m;
    } else {
        double acc = 0.0;
        for (const auto& [j, v] : rep.band_contributions) acc += std::pow(v, idx.q);
        rep.total = std::pow(acc, 1.0 / idx.q);
    }
    rep.truncation_flag = detail::truncation_biting(rep.band_contributions, idx.q);
    return rep;
}

} // namespace beltrami
