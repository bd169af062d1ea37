#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wedgescatt/fourvector.hpp"
#include "wedgescatt/lorentz.hpp"
#include "wedgescatt/wedge.hpp"

namespace wedgescatt {
namespace detail {

/// Phase-1 simplex feasibility test for v in conv{points}. Bland's rule, so
/// termination is guaranteed; sizes here are tiny (m = d+1 rows).
inline bool in_convex_hull(const FourVector& v, const std::vector<FourVector>& points,
                           double tol = 1e-9) {
    if (points.empty()) return false;
    const int d = v.dim();
    const int m = d + 1;
    const int n = static_cast<int>(points.size());
    const int cols = n + m;  // lambda vars then artificials

    std::vector<std::vector<double>> a(m, std::vector<double>(cols, 0.0));
    std::vector<double> b(m, 0.0);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < n; ++c) a[r][c] = points[c][r];
        b[r] = v[r];
    }
    for (int c = 0; c < n; ++c) a[d][c] = 1.0;
    b[d] = 1.0;
    for (int r = 0; r < m; ++r) {
        if (b[r] < 0) {
            for (int c = 0; c < n; ++c) a[r][c] = -a[r][c];
            b[r] = -b[r];
        }
        a[r][n + r] = 1.0;
    }

    std::vector<int> basis(m);
    std::vector<double> red(cols, 0.0);  // reduced costs for cost = sum of artificials
    for (int r = 0; r < m; ++r) basis[r] = n + r;
    for (int c = 0; c < cols; ++c) {
        double colsum = 0.0;
        for (int r = 0; r < m; ++r) colsum += a[r][c];
        red[c] = (c < n ? 0.0 : 1.0) - colsum;
    }

    const double eps = 1e-11;
    for (int iter = 0; iter < 10000; ++iter) {
        int enter = -1;
        for (int c = 0; c < cols; ++c) {
            if (red[c] < -eps) {
                enter = c;
                break;  // Bland: lowest index
            }
        }
        if (enter < 0) break;
        int leave = -1;
        double best = 0.0;
        for (int r = 0; r < m; ++r) {
            if (a[r][enter] > eps) {
                double ratio = b[r] / a[r][enter];
                if (leave < 0 || ratio < best - 1e-15 ||
                    (std::abs(ratio - best) <= 1e-15 && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
        }
        if (leave < 0) break;  // unbounded cannot happen with sum(lambda)=1 present
        const double piv = a[leave][enter];
        for (int c = 0; c < cols; ++c) a[leave][c] /= piv;
        b[leave] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave) continue;
            const double f = a[r][enter];
            if (f == 0.0) continue;
            for (int c = 0; c < cols; ++c) a[r][c] -= f * a[leave][c];
            b[r] -= f * b[leave];
        }
        const double fo = red[enter];
        for (int c = 0; c < cols; ++c) red[c] -= fo * a[leave][c];
        basis[leave] = enter;
    }
    double residual = 0.0;  // leftover artificial mass = infeasibility
    for (int r = 0; r < m; ++r)
        if (basis[r] >= n) residual += b[r];
    return residual < tol;
}

}  // namespace detail

/// Compact convex region given as the hull of finitely many points. The
/// constructor reduces the list to extreme points.
class ConvexRegion {
public:
    explicit ConvexRegion(std::vector<FourVector> vertices) {
        if (vertices.empty()) throw std::invalid_argument("ConvexRegion: empty vertex list");
        const int d = vertices.front().dim();
        for (const auto& v : vertices)
            if (v.dim() != d) throw std::invalid_argument("ConvexRegion: mixed dimensions");
        // drop exact duplicates first, then non-extreme points
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t j = vertices.size(); j-- > i + 1;) {
                if ((vertices[i] - vertices[j]).euclidean_norm() <= 1e-12)
                    vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(j));
            }
        }
        for (std::size_t i = 0; i < vertices.size() && vertices.size() > 1;) {
            std::vector<FourVector> others;
            others.reserve(vertices.size() - 1);
            for (std::size_t j = 0; j < vertices.size(); ++j)
                if (j != i) others.push_back(vertices[j]);
            if (detail::in_convex_hull(vertices[i], others))
                vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }
        vertices_ = std::move(vertices);
    }

    const std::vector<FourVector>& vertices() const { return vertices_; }
    int dim() const { return vertices_.front().dim(); }

    ConvexRegion translated(const FourVector& a) const {
        std::vector<FourVector> vs = vertices_;
        for (auto& v : vs) v += a;
        return ConvexRegion(std::move(vs));
    }

    ConvexRegion transformed(const LorentzMap& l) const {
        std::vector<FourVector> vs;
        vs.reserve(vertices_.size());
        for (const auto& v : vertices_) vs.push_back(l.apply(v));
        return ConvexRegion(std::move(vs));
    }

private:
    std::vector<FourVector> vertices_;
};

/// Precursor relation left <_W right: every vertex difference r - l lies in
/// the open centered wedge W_c with clearance > margin. Convexity of W_c
/// makes the vertex test certify right - left subset of W_c.
inline bool precursor(const ConvexRegion& left, const ConvexRegion& right, const Wedge& w,
                      double margin) {
    if (margin < 0) throw std::invalid_argument("precursor: margin must be >= 0");
    for (const auto& r : right.vertices())
        for (const auto& l : left.vertices())
            if (!w.contains_centered(r - l, margin)) return false;
    return true;
}

/// Poincare covariance of the precursor ordering: evaluates the relation
/// before and after applying (L, t) to the regions and L to the wedge.
/// Always true up to boundary roundoff; used as a property check.
inline bool precursor_covariance_check(const ConvexRegion& left, const ConvexRegion& right,
                                       const Wedge& w, const LorentzMap& l, const FourVector& t,
                                       double margin) {
    const bool before = precursor(left, right, w, margin);
    const bool after =
        precursor(left.transformed(l).translated(t), right.transformed(l).translated(t),
                  w.transformed(l, t), margin);
    return before == after;
}

}  // namespace wedgescatt
