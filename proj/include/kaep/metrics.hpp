// Quality indicators for approximation fronts and per-change bookkeeping.
// Fronts here are small (hundreds of points), so nearest-neighbour scans are
// brute force and hypervolume is computed exactly: a sweep in 2D, slicing
// over the third axis in 3D.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kaep/core.hpp"

namespace kaep {

namespace detail {

inline void check_same_dim(const std::vector<ObjectiveVector>& a,
                           const std::vector<ObjectiveVector>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("metric: empty point set");
    const std::size_t m = a.front().size();
    for (const auto& p : a)
        if (p.size() != m) throw std::invalid_argument("metric: ragged point set");
    for (const auto& p : b)
        if (p.size() != m) throw std::invalid_argument("metric: dimension mismatch");
}

inline double nearest_euclidean(const ObjectiveVector& p,
                                const std::vector<ObjectiveVector>& set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : set) {
        double s = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            const double d = p[k] - q[k];
            s += d * d;
        }
        best = std::min(best, s);
    }
    return std::sqrt(best);
}

// Exact 2D hypervolume of points strictly inside ref, by descending-staircase sweep.
inline double hv2d(std::vector<std::pair<double, double>> pts, double r1, double r2) {
    std::erase_if(pts, [&](const auto& p) { return p.first >= r1 || p.second >= r2; });
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double ceiling = r2;
    for (const auto& [x, y] : pts) {
        if (y < ceiling) {
            area += (r1 - x) * (ceiling - y);
            ceiling = y;
        }
    }
    return area;
}

}  // namespace detail

// Mean distance from each reference point to its nearest approximation point.
inline double igd(const std::vector<ObjectiveVector>& reference,
                  const std::vector<ObjectiveVector>& approx) {
    detail::check_same_dim(reference, approx);
    double s = 0.0;
    for (const auto& p : reference) s += detail::nearest_euclidean(p, approx);
    return s / static_cast<double>(reference.size());
}

// Mean distance from each approximation point to its nearest reference point.
inline double gd(const std::vector<ObjectiveVector>& reference,
                 const std::vector<ObjectiveVector>& approx) {
    detail::check_same_dim(reference, approx);
    double s = 0.0;
    for (const auto& p : approx) s += detail::nearest_euclidean(p, reference);
    return s / static_cast<double>(approx.size());
}

// Exact hypervolume dominated by `approx` relative to `ref_point`, for two or
// three objectives. Points not strictly better than the reference in every
// coordinate contribute nothing.
inline double hv(const std::vector<ObjectiveVector>& approx, const ObjectiveVector& ref_point) {
    if (ref_point.size() < 2 || ref_point.size() > 3)
        throw std::invalid_argument("hv: only 2 or 3 objectives supported");
    for (const auto& p : approx)
        if (p.size() != ref_point.size())
            throw std::invalid_argument("hv: dimension mismatch");
    if (approx.empty()) return 0.0;

    if (ref_point.size() == 2) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(approx.size());
        for (const auto& p : approx) pts.emplace_back(p[0], p[1]);
        return detail::hv2d(std::move(pts), ref_point[0], ref_point[1]);
    }

    std::vector<ObjectiveVector> pts;
    for (const auto& p : approx)
        if (p[0] < ref_point[0] && p[1] < ref_point[1] && p[2] < ref_point[2])
            pts.push_back(p);
    if (pts.empty()) return 0.0;
    std::vector<double> zs;
    zs.reserve(pts.size());
    for (const auto& p : pts) zs.push_back(p[2]);
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    double volume = 0.0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const double z = zs[i];
        const double znext = (i + 1 < zs.size()) ? zs[i + 1] : ref_point[2];
        std::vector<std::pair<double, double>> slice;
        for (const auto& p : pts)
            if (p[2] <= z) slice.emplace_back(p[0], p[1]);
        volume += (znext - z) * detail::hv2d(std::move(slice), ref_point[0], ref_point[1]);
    }
    return volume;
}

// Componentwise maximum of the true front, nudged outward by 0.1.
inline ObjectiveVector reference_point(const std::vector<ObjectiveVector>& true_pof) {
    if (true_pof.empty()) throw std::invalid_argument("reference_point: empty front");
    ObjectiveVector r = true_pof.front();
    for (const auto& p : true_pof) {
        if (p.size() != r.size())
            throw std::invalid_argument("reference_point: ragged front");
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = std::max(r[k], p[k]);
    }
    for (auto& v : r) v += 0.1;
    return r;
}

// Schott spacing: standard deviation of nearest-neighbour Manhattan distances.
inline double sp(const std::vector<ObjectiveVector>& approx) {
    if (approx.size() < 2) throw std::invalid_argument("sp: needs at least two points");
    const std::size_t m = approx.front().size();
    std::vector<double> d(approx.size());
    for (std::size_t i = 0; i < approx.size(); ++i) {
        if (approx[i].size() != m) throw std::invalid_argument("sp: ragged point set");
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < approx.size(); ++j) {
            if (i == j) continue;
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k) s += std::fabs(approx[i][k] - approx[j][k]);
            best = std::min(best, s);
        }
        d[i] = best;
    }
    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= static_cast<double>(d.size());
    double var = 0.0;
    for (double v : d) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(d.size() - 1));
}

struct ChangeRecord {
    int change_index = 0;
    double t = 0.0;
    double igd = 0.0;
    double hv = 0.0;
    double gd = 0.0;
    double sp = 0.0;
    int fallbacks = 0;
};

struct RunSummary {
    double migd = 0.0;
    double mhv = 0.0;
    double mgd = 0.0;
    double msp = 0.0;
    std::uint64_t seed = 0;
    std::vector<ChangeRecord> per_change;
};

inline RunSummary summarize(std::vector<ChangeRecord> records) {
    if (records.empty()) throw std::invalid_argument("summarize: no change records");
    RunSummary s;
    for (const auto& r : records) {
        s.migd += r.igd;
        s.mhv += r.hv;
        s.mgd += r.gd;
        s.msp += r.sp;
    }
    const double n = static_cast<double>(records.size());
    s.migd /= n;
    s.mhv /= n;
    s.mgd /= n;
    s.msp /= n;
    s.per_change = std::move(records);
    return s;
}

}  // namespace kaep
