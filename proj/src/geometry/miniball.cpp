#include "ecp/geometry/miniball.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

bool contains(const Ball& b, const Point& p, int dim) {
    if (b.radius < 0) return false;
    const double d2 = dist2(b.center, p, dim);
    const double r2 = b.radius * b.radius;
    return d2 <= r2 + 1e-13 * std::max(r2, 1e-30);
}

Ball diametral(const Point& a, const Point& b, int dim) {
    Ball out;
    for (int j = 0; j < dim; ++j) out.center[j] = 0.5 * (a[j] + b[j]);
    out.radius = 0.5 * std::sqrt(dist2(a, b, dim));
    return out;
}

// ball with all k supports on the boundary, center in their affine hull;
// radius < 0 when the supports are affinely dependent
Ball circumball(const Point* const* s, int k, int dim) {
    const int m = k - 1;
    double u[3][3] = {};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < dim; ++j) u[i][j] = (*s[i + 1])[j] - (*s[0])[j];

    double g[3][4];
    double scale = 0;
    for (int i = 0; i < m; ++i) {
        for (int c = 0; c < m; ++c) {
            double acc = 0;
            for (int j = 0; j < dim; ++j) acc += u[i][j] * u[c][j];
            g[i][c] = acc;
            scale = std::max(scale, std::fabs(acc));
        }
        g[i][m] = g[i][i] / 2;
    }

    // gaussian elimination with partial pivoting
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(g[r][col]) > std::fabs(g[piv][col])) piv = r;
        if (std::fabs(g[piv][col]) <= 1e-12 * std::max(scale, 1e-300))
            return Ball{};
        if (piv != col)
            for (int c = col; c <= m; ++c) std::swap(g[piv][c], g[col][c]);
        for (int r = col + 1; r < m; ++r) {
            const double f = g[r][col] / g[col][col];
            for (int c = col; c <= m; ++c) g[r][c] -= f * g[col][c];
        }
    }
    double x[3] = {};
    for (int r = m - 1; r >= 0; --r) {
        double acc = g[r][m];
        for (int c = r + 1; c < m; ++c) acc -= g[r][c] * x[c];
        x[r] = acc / g[r][r];
    }

    Ball out;
    double r2 = 0;
    for (int j = 0; j < dim; ++j) {
        double off = 0;
        for (int i = 0; i < m; ++i) off += x[i] * u[i][j];
        out.center[j] = (*s[0])[j] + off;
        r2 += off * off;
    }
    out.radius = std::sqrt(r2);
    return out;
}

// exact small case: smallest ball covering up to 4 points, by trying every
// candidate support subset
Ball meb_of_supports(const Point* const* s, int k, int dim) {
    Ball best;
    auto consider = [&](const Ball& b) {
        if (b.radius < 0) return;
        for (int i = 0; i < k; ++i)
            if (!contains(b, *s[i], dim)) return;
        if (best.radius < 0 || b.radius < best.radius) best = b;
    };
    for (int i = 0; i < k; ++i) {
        Ball b;
        b.center = *s[i];
        b.radius = 0;
        consider(b);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) consider(diametral(*s[i], *s[j], dim));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                const Point* t[3] = {s[i], s[j], s[l]};
                consider(circumball(t, 3, dim));
            }
    if (k == 4 && dim == 3) consider(circumball(s, 4, dim));
    return best;
}

Ball ball_from_support(const Point* const* s, int k, int dim) {
    if (k == 0) return Ball{};
    if (k == 1) return Ball{*s[0], 0.0};
    if (k == 2) return diametral(*s[0], *s[1], dim);
    Ball b = circumball(s, k, dim);
    if (b.radius < 0) b = meb_of_supports(s, k, dim);
    return b;
}

Ball welzl(const std::vector<Point>& pts, int n, const Point** support,
           int sn, int dim) {
    if (n == 0 || sn == dim + 1) return ball_from_support(support, sn, dim);
    Ball b = welzl(pts, n - 1, support, sn, dim);
    if (contains(b, pts[n - 1], dim)) return b;
    support[sn] = &pts[n - 1];
    return welzl(pts, n - 1, support, sn + 1, dim);
}

}  // namespace

Ball meb(const std::vector<Point>& pts, int dim) {
    if (dim != 2 && dim != 3)
        throw DimensionUnsupported("meb supports dimensions 2 and 3");
    if (pts.empty()) throw TooFewPoints("meb needs at least one point");
    if (pts.size() > 31)
        throw TooManyPoints("meb accepts at most 31 points");
    const Point* support[4] = {};
    return welzl(pts, static_cast<int>(pts.size()), support, 0, dim);
}

double meb_radius(const std::vector<Point>& pts, int dim) {
    return meb(pts, dim).radius;
}

}  // namespace ecp
