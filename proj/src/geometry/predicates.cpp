#include "ecp/geometry/predicates.hpp"

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>

namespace ecp {

namespace {

constexpr double kEps = 2.220446049250313e-16;  // 2^-52

inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int sign_of(const mpq_class& v) { return sgn(v); }

/* Exact determinant helpers on rationals.  Doubles convert to mpq_class
   without rounding, so the sign computed here is the true sign. */

mpq_class det2(const mpq_class& a, const mpq_class& b, const mpq_class& c,
               const mpq_class& d) {
    return a * d - b * c;
}

mpq_class det3(const mpq_class m[3][3]) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

mpq_class det4(const mpq_class m[4][4]) {
    mpq_class r = 0;
    for (int c = 0; c < 4; ++c) {
        mpq_class minor[3][3];
        for (int i = 1; i < 4; ++i) {
            int cc = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == c) continue;
                minor[i - 1][cc++] = m[i][j];
            }
        }
        mpq_class term = m[0][c] * det3(minor);
        r += (c % 2 == 0) ? term : -term;
    }
    return r;
}

int orient2d_exact(const Point& a, const Point& b, const Point& c) {
    mpq_class ax(a[0]), ay(a[1]), bx(b[0]), by(b[1]), cx(c[0]), cy(c[1]);
    return sign_of(det2(bx - ax, by - ay, cx - ax, cy - ay));
}

int incircle2d_exact(const Point& a, const Point& b, const Point& c,
                     const Point& d) {
    mpq_class m[3][3];
    const Point* p[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        mpq_class dx = mpq_class((*p[i])[0]) - mpq_class(d[0]);
        mpq_class dy = mpq_class((*p[i])[1]) - mpq_class(d[1]);
        m[i][0] = dx;
        m[i][1] = dy;
        m[i][2] = dx * dx + dy * dy;
    }
    return sign_of(det3(m));
}

int orient3d_exact(const Point& a, const Point& b, const Point& c,
                   const Point& d) {
    mpq_class m[3][3];
    const Point* p[3] = {&b, &c, &d};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            m[i][j] = mpq_class((*p[i])[j]) - mpq_class(a[j]);
    }
    return sign_of(det3(m));
}

int insphere3d_exact(const Point& a, const Point& b, const Point& c,
                     const Point& d, const Point& e) {
    mpq_class m[4][4];
    const Point* p[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i) {
        mpq_class sq = 0;
        for (int j = 0; j < 3; ++j) {
            mpq_class diff = mpq_class((*p[i])[j]) - mpq_class(e[j]);
            m[i][j] = diff;
            sq += diff * diff;
        }
        m[i][3] = sq;
    }
    // the lifted determinant is negative for interior points when the tet
    // is positively oriented under this file's orient3d
    return -sign_of(det4(m));
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
    const double detl = (b[0] - a[0]) * (c[1] - a[1]);
    const double detr = (b[1] - a[1]) * (c[0] - a[0]);
    const double det = detl - detr;
    const double bound = 8.0 * kEps * (std::fabs(detl) + std::fabs(detr));
    if (std::fabs(det) > bound) return sign_of(det);
    return orient2d_exact(a, b, c);
}

int incircle2d(const Point& a, const Point& b, const Point& c,
               const Point& d) {
    const double adx = a[0] - d[0], ady = a[1] - d[1];
    const double bdx = b[0] - d[0], bdy = b[1] - d[1];
    const double cdx = c[0] - d[0], cdy = c[1] - d[1];
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdx * cdy - bdy * cdx) -
                       blift * (adx * cdy - ady * cdx) +
                       clift * (adx * bdy - ady * bdx);
    const double mag = alift * (std::fabs(bdx * cdy) + std::fabs(bdy * cdx)) +
                       blift * (std::fabs(adx * cdy) + std::fabs(ady * cdx)) +
                       clift * (std::fabs(adx * bdy) + std::fabs(ady * bdx));
    const double bound = 64.0 * kEps * mag;
    if (std::fabs(det) > bound) return sign_of(det);
    return incircle2d_exact(a, b, c, d);
}

int orient3d(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    const double wx = d[0] - a[0], wy = d[1] - a[1], wz = d[2] - a[2];

    const double det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) +
                       uz * (vx * wy - vy * wx);
    const double mag = std::fabs(ux) * (std::fabs(vy * wz) + std::fabs(vz * wy)) +
                       std::fabs(uy) * (std::fabs(vx * wz) + std::fabs(vz * wx)) +
                       std::fabs(uz) * (std::fabs(vx * wy) + std::fabs(vy * wx));
    const double bound = 32.0 * kEps * mag;
    if (std::fabs(det) > bound) return sign_of(det);
    return orient3d_exact(a, b, c, d);
}

int insphere3d(const Point& a, const Point& b, const Point& c, const Point& d,
               const Point& e) {
    double m[4][4];
    const Point* p[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i) {
        double sq = 0;
        for (int j = 0; j < 3; ++j) {
            const double diff = (*p[i])[j] - e[j];
            m[i][j] = diff;
            sq += diff * diff;
        }
        m[i][3] = sq;
    }

    // det and permanent (absolute-product sum) of the minor skipping row `skip`
    auto minor3 = [&](int skip, double& perm) {
        double r[3][3];
        int ri = 0;
        for (int i = 0; i < 4; ++i) {
            if (i == skip) continue;
            r[ri][0] = m[i][0];
            r[ri][1] = m[i][1];
            r[ri][2] = m[i][2];
            ++ri;
        }
        perm = std::fabs(r[0][0] * r[1][1] * r[2][2]) +
               std::fabs(r[0][0] * r[1][2] * r[2][1]) +
               std::fabs(r[0][1] * r[1][0] * r[2][2]) +
               std::fabs(r[0][1] * r[1][2] * r[2][0]) +
               std::fabs(r[0][2] * r[1][0] * r[2][1]) +
               std::fabs(r[0][2] * r[1][1] * r[2][0]);
        return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
               r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
               r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    };

    // expand along the lifted column
    double det = 0, mag = 0;
    for (int i = 0; i < 4; ++i) {
        double perm = 0;
        const double term = m[i][3] * minor3(i, perm);
        det += (i % 2 == 0) ? -term : term;
        mag += m[i][3] * perm;  // m[i][3] >= 0
    }
    const double bound = 256.0 * kEps * mag;
    if (std::fabs(det) > bound) return -sign_of(det);
    return insphere3d_exact(a, b, c, d, e);
}

bool collinear3d(const Point& a, const Point& b, const Point& c) {
    // collinear iff all three coordinate-plane projections are
    const Point axy{a[0], a[1], 0}, bxy{b[0], b[1], 0}, cxy{c[0], c[1], 0};
    const Point axz{a[0], a[2], 0}, bxz{b[0], b[2], 0}, cxz{c[0], c[2], 0};
    const Point ayz{a[1], a[2], 0}, byz{b[1], b[2], 0}, cyz{c[1], c[2], 0};
    return orient2d(axy, bxy, cxy) == 0 && orient2d(axz, bxz, cxz) == 0 &&
           orient2d(ayz, byz, cyz) == 0;
}

int incircle3d_coplanar(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
    // dominant axis of the (double) normal; any axis with a nonzero component works
    const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    const double nx = uy * vz - uz * vy;
    const double ny = uz * vx - ux * vz;
    const double nz = ux * vy - uy * vx;
    int drop = 2;
    if (std::fabs(nx) >= std::fabs(ny) && std::fabs(nx) >= std::fabs(nz))
        drop = 0;
    else if (std::fabs(ny) >= std::fabs(nz))
        drop = 1;

    auto proj = [drop](const Point& p) -> Point {
        if (drop == 0) return Point{p[1], p[2], 0};
        if (drop == 1) return Point{p[0], p[2], 0};
        return Point{p[0], p[1], 0};
    };
    const Point pa = proj(a), pb = proj(b), pc = proj(c), pd = proj(d);
    const int o = orient2d(pa, pb, pc);
    if (o == 0) return 0;  // degenerate facet; caller treats as tie
    return o * incircle2d(pa, pb, pc, pd);
}

}  // namespace ecp
