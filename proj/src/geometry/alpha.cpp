#include "ecp/geometry/alpha.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <ostream>

#include "ecp/geometry/delaunay.hpp"

namespace ecp {

namespace {

using Rat = mpq_class;

// circumball of 2..4 affinely independent vertices, center in their affine
// hull; exact in rational arithmetic so equal inputs give bitwise equal
// filtration values
struct RatBall {
    std::array<Rat, 3> center{};
    Rat r2{};
    bool finite = false;
};

Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return a * d - b * c;
}

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

RatBall circumball(const std::vector<Point>& pts, const int* vs, int nverts,
                   int dim) {
    const int m = nverts - 1;  // unknowns
    std::array<std::array<Rat, 3>, 3> u{};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < dim; ++j)
            u[i][j] = Rat(pts[vs[i + 1]][j]) - Rat(pts[vs[0]][j]);

    std::array<std::array<Rat, 3>, 3> g{};
    std::array<Rat, 3> rhs{};
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            Rat s = 0;
            for (int j = 0; j < dim; ++j) s += u[i][j] * u[k][j];
            g[i][k] = s;
        }
        rhs[i] = g[i][i] / 2;
    }

    Rat det;
    std::array<Rat, 3> x{};
    if (m == 1) {
        det = g[0][0];
        if (det == 0) return {};
        x[0] = rhs[0] / det;
    } else if (m == 2) {
        det = det2(g[0][0], g[0][1], g[1][0], g[1][1]);
        if (det == 0) return {};
        x[0] = det2(rhs[0], g[0][1], rhs[1], g[1][1]) / det;
        x[1] = det2(g[0][0], rhs[0], g[1][0], rhs[1]) / det;
    } else {
        det = det3(g);
        if (det == 0) return {};
        for (int col = 0; col < 3; ++col) {
            auto gc = g;
            for (int row = 0; row < 3; ++row) gc[row][col] = rhs[row];
            x[col] = det3(gc) / det;
        }
    }

    RatBall out;
    out.finite = true;
    out.r2 = 0;
    for (int j = 0; j < dim; ++j) {
        Rat off = 0;
        for (int i = 0; i < m; ++i) off += x[i] * u[i][j];
        out.center[j] = Rat(pts[vs[0]][j]) + off;
        out.r2 += off * off;
    }
    return out;
}

bool strictly_inside(const RatBall& b, const Point& p, int dim) {
    if (!b.finite) return false;
    Rat d2 = 0;
    for (int j = 0; j < dim; ++j) {
        Rat d = Rat(p[j]) - b.center[j];
        d2 += d * d;
    }
    return d2 < b.r2;
}

double ball_radius(const RatBall& b) {
    if (!b.finite) return std::numeric_limits<double>::infinity();
    return std::sqrt(b.r2.get_d());
}

}  // namespace

Filtration alpha_filtration(const PointCloud& cloud) {
    DelaunayResult del = delaunay(cloud);
    const int dim = cloud.dim;
    const auto& pts = del.points;

    Filtration out;
    out.points = del.points;
    out.multiplicity = del.multiplicity;
    out.merged_away = del.merged_away;
    out.jittered = del.jittered;
    out.rank = del.rank;

    const auto& tris = del.triangles;
    const auto& edges = del.edges;

    std::map<std::array<int, 3>, int> tri_at;
    for (int i = 0; i < static_cast<int>(tris.size()); ++i) tri_at[tris[i]] = i;
    std::map<std::array<int, 2>, int> edge_at;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        edge_at[edges[i]] = i;

    const double unset = -1.0;
    std::vector<double> tri_val(tris.size(), unset);
    std::vector<double> edge_val(edges.size(), unset);

    std::vector<std::optional<RatBall>> tri_ball(tris.size());
    std::vector<std::optional<RatBall>> edge_ball(edges.size());
    auto ball_of_tri = [&](int i) -> const RatBall& {
        if (!tri_ball[i]) tri_ball[i] = circumball(pts, tris[i].data(), 3, dim);
        return *tri_ball[i];
    };
    auto ball_of_edge = [&](int i) -> const RatBall& {
        if (!edge_ball[i])
            edge_ball[i] = circumball(pts, edges[i].data(), 2, dim);
        return *edge_ball[i];
    };

    std::vector<double> tet_val(del.tetrahedra.size());
    if (dim == 3) {
        for (std::size_t t = 0; t < del.tetrahedra.size(); ++t) {
            const auto& tet = del.tetrahedra[t];
            const double vt =
                ball_radius(circumball(pts, tet.data(), 4, 3));
            tet_val[t] = vt;
            for (int f = 0; f < 4; ++f) {
                std::array<int, 3> face;
                int k = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != f) face[k++] = tet[j];
                const int ti = tri_at.at(face);
                if (tri_val[ti] != unset) {
                    tri_val[ti] = std::min(tri_val[ti], vt);
                } else if (strictly_inside(ball_of_tri(ti), pts[tet[f]], 3)) {
                    tri_val[ti] = vt;
                }
            }
        }
    }

    for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) {
        if (tri_val[ti] == unset) tri_val[ti] = ball_radius(ball_of_tri(ti));
        for (int f = 0; f < 3; ++f) {
            std::array<int, 2> face;
            int k = 0;
            for (int j = 0; j < 3; ++j)
                if (j != f) face[k++] = tris[ti][j];
            const int ei = edge_at.at(face);
            if (edge_val[ei] != unset) {
                edge_val[ei] = std::min(edge_val[ei], tri_val[ti]);
            } else if (strictly_inside(ball_of_edge(ei), pts[tris[ti][f]],
                                       dim)) {
                edge_val[ei] = tri_val[ti];
            }
        }
    }

    for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
        if (edge_val[ei] == unset) edge_val[ei] = ball_radius(ball_of_edge(ei));
    }

    out.entries.reserve(pts.size() + edges.size() + tris.size() +
                        del.tetrahedra.size());
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
        out.entries.push_back({Simplex{{i}}, 0.0});
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        out.entries.push_back(
            {Simplex{{edges[i][0], edges[i][1]}}, edge_val[i]});
    for (int i = 0; i < static_cast<int>(tris.size()); ++i)
        out.entries.push_back(
            {Simplex{{tris[i][0], tris[i][1], tris[i][2]}}, tri_val[i]});
    if (dim == 3) {
        for (std::size_t t = 0; t < del.tetrahedra.size(); ++t) {
            const auto& tet = del.tetrahedra[t];
            out.entries.push_back(
                {Simplex{{tet[0], tet[1], tet[2], tet[3]}}, tet_val[t]});
        }
    }

    std::sort(out.entries.begin(), out.entries.end(),
              [](const FiltrationEntry& a, const FiltrationEntry& b) {
                  if (a.value != b.value) return a.value < b.value;
                  if (a.simplex.dim() != b.simplex.dim())
                      return a.simplex.dim() < b.simplex.dim();
                  return a.simplex.vertices < b.simplex.vertices;
              });
    return out;
}

void filtration_csv(const Filtration& f, std::ostream& os) {
    os << "simplex,value\n";
    char buf[40];
    for (const auto& e : f.entries) {
        for (std::size_t i = 0; i < e.simplex.vertices.size(); ++i) {
            if (i) os << ';';
            os << e.simplex.vertices[i];
        }
        std::snprintf(buf, sizeof buf, "%.17g", e.value);
        os << ',' << buf << '\n';
    }
}

}  // namespace ecp
