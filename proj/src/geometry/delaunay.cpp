#include "ecp/geometry/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

#include "ecp/errors.hpp"
#include "ecp/geometry/predicates.hpp"
#include "ecp/rng.hpp"

namespace ecp {

namespace {

// thrown when an insertion would create a zero-volume simplex; the caller
// retries once with a deterministic jitter
struct InternalDegeneracy {};

constexpr int kGhost = -1;

bool strictly_between_on_dominant_axis(const Point& u, const Point& v,
                                       const Point& p) {
    int ax = 0;
    double best = std::fabs(v[0] - u[0]);
    for (int j = 1; j < 3; ++j) {
        const double m = std::fabs(v[j] - u[j]);
        if (m > best) {
            best = m;
            ax = j;
        }
    }
    return (u[ax] < p[ax] && p[ax] < v[ax]) || (v[ax] < p[ax] && p[ax] < u[ax]);
}

/* ---- 2D Bowyer-Watson ------------------------------------------------- */

struct Tri {
    std::array<int, 3> v;
    bool alive = true;
};

class Builder2D {
public:
    Builder2D(const std::vector<Point>& pts, int i2) : pts_(pts) {
        std::array<int, 3> t{0, 1, i2};
        if (orient2d(pts_[t[0]], pts_[t[1]], pts_[t[2]]) < 0)
            std::swap(t[1], t[2]);
        ref_ = Point{(pts_[t[0]][0] + pts_[t[1]][0] + pts_[t[2]][0]) / 3.0,
                     (pts_[t[0]][1] + pts_[t[1]][1] + pts_[t[2]][1]) / 3.0, 0.0};
        tris_.push_back({t, true});
        // ghost per edge, directed so the exterior is to the left
        add_ghost(t[1], t[0]);
        add_ghost(t[2], t[1]);
        add_ghost(t[0], t[2]);
        used_.assign(pts_.size(), false);
        used_[t[0]] = used_[t[1]] = used_[t[2]] = true;
    }

    void run() {
        for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
            if (!used_[i]) insert(i);
        }
    }

    std::vector<std::array<int, 3>> finite_triangles() const {
        std::vector<std::array<int, 3>> out;
        for (const auto& t : tris_) {
            if (!t.alive || t.v[0] == kGhost || t.v[1] == kGhost ||
                t.v[2] == kGhost)
                continue;
            std::array<int, 3> s = t.v;
            std::sort(s.begin(), s.end());
            out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void add_ghost(int u, int v) { tris_.push_back({{u, v, kGhost}, true}); }

    bool in_conflict(const Tri& t, const Point& p) const {
        if (t.v[2] == kGhost) {
            // stored so that the exterior lies to the left of v0 -> v1
            const int o = orient2d(pts_[t.v[0]], pts_[t.v[1]], p);
            if (o > 0) return true;
            if (o < 0) return false;
            return strictly_between_on_dominant_axis(pts_[t.v[0]], pts_[t.v[1]],
                                                     p);
        }
        return incircle2d(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p) > 0;
    }

    void insert(int pi) {
        const Point& p = pts_[pi];
        std::vector<int> cavity;
        for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
            if (tris_[ti].alive && in_conflict(tris_[ti], p)) cavity.push_back(ti);
        }
        if (cavity.empty()) throw InternalDegeneracy{};

        // facets seen once bound the cavity
        std::map<std::array<int, 2>, int> facet_count;
        for (int ti : cavity) {
            const auto& v = tris_[ti].v;
            for (int e = 0; e < 3; ++e) {
                int a = v[(e + 1) % 3], b = v[(e + 2) % 3];
                ++facet_count[{std::min(a, b), std::max(a, b)}];
            }
        }
        for (int ti : cavity) tris_[ti].alive = false;

        for (const auto& [key, count] : facet_count) {
            if (count != 1) continue;
            const int a = key[0], b = key[1];
            if (a == kGhost) {
                // hull grows: new ghost with edge (b, pi)
                make_ghost(b, pi);
            } else {
                const int o = orient2d(pts_[a], pts_[b], p);
                if (o == 0) throw InternalDegeneracy{};
                if (o > 0)
                    tris_.push_back({{a, b, pi}, true});
                else
                    tris_.push_back({{b, a, pi}, true});
            }
        }
        used_[pi] = true;
    }

    void make_ghost(int a, int b) {
        const int o = orient2d(pts_[a], pts_[b], ref_);
        if (o == 0) throw InternalDegeneracy{};
        if (o < 0)
            add_ghost(a, b);  // exterior left of a->b
        else
            add_ghost(b, a);
    }

    const std::vector<Point>& pts_;
    std::vector<Tri> tris_;
    std::vector<bool> used_;
    Point ref_{};
};

/* ---- 3D Bowyer-Watson ------------------------------------------------- */

struct Tet {
    std::array<int, 4> v;
    bool alive = true;
};

class Builder3D {
public:
    Builder3D(const std::vector<Point>& pts, int i2, int i3) : pts_(pts) {
        std::array<int, 4> t{0, 1, i2, i3};
        if (orient3d(pts_[t[0]], pts_[t[1]], pts_[t[2]], pts_[t[3]]) < 0)
            std::swap(t[2], t[3]);
        ref_ = Point{};
        for (int j = 0; j < 3; ++j)
            ref_[j] = (pts_[t[0]][j] + pts_[t[1]][j] + pts_[t[2]][j] +
                       pts_[t[3]][j]) /
                      4.0;
        tets_.push_back({t, true});
        make_ghost(t[0], t[1], t[2]);
        make_ghost(t[0], t[1], t[3]);
        make_ghost(t[0], t[2], t[3]);
        make_ghost(t[1], t[2], t[3]);
        used_.assign(pts_.size(), false);
        used_[t[0]] = used_[t[1]] = used_[t[2]] = used_[t[3]] = true;
    }

    void run() {
        for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
            if (!used_[i]) insert(i);
        }
    }

    std::vector<std::array<int, 4>> finite_tetrahedra() const {
        std::vector<std::array<int, 4>> out;
        for (const auto& t : tets_) {
            if (!t.alive) continue;
            if (t.v[0] == kGhost || t.v[1] == kGhost || t.v[2] == kGhost ||
                t.v[3] == kGhost)
                continue;
            std::array<int, 4> s = t.v;
            std::sort(s.begin(), s.end());
            out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // facet (a,b,c) becomes a hull face: orient it so the interior reference
    // sees negative volume, then a positive orient3d marks exterior points
    void make_ghost(int a, int b, int c) {
        const int o = orient3d(pts_[a], pts_[b], pts_[c], ref_);
        if (o == 0) throw InternalDegeneracy{};
        if (o < 0)
            tets_.push_back({{a, b, c, kGhost}, true});
        else
            tets_.push_back({{b, a, c, kGhost}, true});
    }

    bool in_conflict(const Tet& t, const Point& p) const {
        if (t.v[3] == kGhost) {
            const Point& a = pts_[t.v[0]];
            const Point& b = pts_[t.v[1]];
            const Point& c = pts_[t.v[2]];
            const int o = orient3d(a, b, c, p);
            if (o > 0) return true;
            if (o < 0) return false;
            return incircle3d_coplanar(a, b, c, p) > 0;
        }
        return insphere3d(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]],
                          pts_[t.v[3]], p) > 0;
    }

    void insert(int pi) {
        const Point& p = pts_[pi];
        std::vector<int> cavity;
        for (int ti = 0; ti < static_cast<int>(tets_.size()); ++ti) {
            if (tets_[ti].alive && in_conflict(tets_[ti], p)) cavity.push_back(ti);
        }
        if (cavity.empty()) throw InternalDegeneracy{};

        std::map<std::array<int, 3>, int> facet_count;
        for (int ti : cavity) {
            const auto& v = tets_[ti].v;
            for (int f = 0; f < 4; ++f) {
                std::array<int, 3> key;
                int k = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != f) key[k++] = v[j];
                std::sort(key.begin(), key.end());
                ++facet_count[key];
            }
        }
        for (int ti : cavity) tets_[ti].alive = false;

        for (const auto& [key, count] : facet_count) {
            if (count != 1) continue;
            if (key[0] == kGhost) {
                make_ghost(key[1], key[2], pi);
            } else {
                const int o = orient3d(pts_[key[0]], pts_[key[1]], pts_[key[2]], p);
                if (o == 0) throw InternalDegeneracy{};
                std::array<int, 4> nv{key[0], key[1], key[2], pi};
                if (o < 0) std::swap(nv[0], nv[1]);
                tets_.push_back({nv, true});
            }
        }
        used_[pi] = true;
    }

    const std::vector<Point>& pts_;
    std::vector<Tet> tets_;
    std::vector<bool> used_;
    Point ref_{};
};

/* ---- rank handling ------------------------------------------------------ */

// sorted path along the dominant axis of the direction p1 - p0
void build_collinear_path(const std::vector<Point>& pts, DelaunayResult& out) {
    int ax = 0;
    double best = 0;
    for (int j = 0; j < 3; ++j) {
        const double span = std::fabs(pts[1][j] - pts[0][j]);
        if (span > best) {
            best = span;
            ax = j;
        }
    }
    std::vector<int> order(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pts[a][ax] != pts[b][ax]) return pts[a][ax] < pts[b][ax];
        return a < b;
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        std::array<int, 2> e{order[i], order[i + 1]};
        std::sort(e.begin(), e.end());
        out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.rank = 1;
}

void edges_from_triangles(const std::vector<std::array<int, 3>>& tris,
                          std::vector<std::array<int, 2>>& edges) {
    std::set<std::array<int, 2>> s;
    for (const auto& t : tris) {
        s.insert({t[0], t[1]});
        s.insert({t[0], t[2]});
        s.insert({t[1], t[2]});
    }
    edges.assign(s.begin(), s.end());
}

void triangles_from_tetrahedra(const std::vector<std::array<int, 4>>& tets,
                               std::vector<std::array<int, 3>>& tris) {
    std::set<std::array<int, 3>> s;
    for (const auto& t : tets) {
        s.insert({t[0], t[1], t[2]});
        s.insert({t[0], t[1], t[3]});
        s.insert({t[0], t[2], t[3]});
        s.insert({t[1], t[2], t[3]});
    }
    tris.assign(s.begin(), s.end());
}

// Delaunay of already-merged points; throws InternalDegeneracy
void triangulate_merged(const std::vector<Point>& pts, int dim,
                        DelaunayResult& out) {
    const int n = static_cast<int>(pts.size());
    out.rank = 0;
    if (n == 1) return;

    if (dim == 2) {
        int i2 = -1;
        for (int k = 2; k < n; ++k) {
            if (orient2d(pts[0], pts[1], pts[k]) != 0) {
                i2 = k;
                break;
            }
        }
        if (i2 < 0) {
            build_collinear_path(pts, out);
            return;
        }
        Builder2D b(pts, i2);
        b.run();
        out.triangles = b.finite_triangles();
        edges_from_triangles(out.triangles, out.edges);
        out.rank = 2;
        return;
    }

    int i2 = -1;
    for (int k = 2; k < n; ++k) {
        if (!collinear3d(pts[0], pts[1], pts[k])) {
            i2 = k;
            break;
        }
    }
    if (i2 < 0) {
        build_collinear_path(pts, out);
        return;
    }
    int i3 = -1;
    for (int k = 2; k < n; ++k) {
        if (k == i2) continue;
        if (orient3d(pts[0], pts[1], pts[i2], pts[k]) != 0) {
            i3 = k;
            break;
        }
    }
    if (i3 < 0) {
        /* Coplanar cloud: triangulate inside the plane.  The projection onto
           an orthonormal in-plane basis is an isometry, so circumradii are
           preserved and the 2D complex is the right one. */
        Point u{pts[1][0] - pts[0][0], pts[1][1] - pts[0][1],
                pts[1][2] - pts[0][2]};
        double ul = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
        for (auto& x : u) x /= ul;
        Point w{pts[i2][0] - pts[0][0], pts[i2][1] - pts[0][1],
                pts[i2][2] - pts[0][2]};
        const double wu = w[0] * u[0] + w[1] * u[1] + w[2] * u[2];
        Point v{w[0] - wu * u[0], w[1] - wu * u[1], w[2] - wu * u[2]};
        double vl = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        for (auto& x : v) x /= vl;

        std::vector<Point> flat(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point d{pts[i][0] - pts[0][0], pts[i][1] - pts[0][1],
                          pts[i][2] - pts[0][2]};
            flat[i] = Point{d[0] * u[0] + d[1] * u[1] + d[2] * u[2],
                            d[0] * v[0] + d[1] * v[1] + d[2] * v[2], 0.0};
        }
        DelaunayResult flat_out;
        triangulate_merged(flat, 2, flat_out);
        out.triangles = std::move(flat_out.triangles);
        out.edges = std::move(flat_out.edges);
        out.rank = flat_out.rank;
        return;
    }

    Builder3D b(pts, i2, i3);
    b.run();
    out.tetrahedra = b.finite_tetrahedra();
    triangles_from_tetrahedra(out.tetrahedra, out.triangles);
    edges_from_triangles(out.triangles, out.edges);
    out.rank = 3;
}

}  // namespace

DelaunayResult delaunay(const PointCloud& cloud) {
    if (cloud.dim != 2 && cloud.dim != 3)
        throw DimensionUnsupported("delaunay supports dimensions 2 and 3");
    if (cloud.empty()) throw TooFewPoints("delaunay needs at least one point");

    MergeResult merged = merge_duplicates(cloud.pts, cloud.dim);

    DelaunayResult out;
    out.points = merged.pts;
    out.multiplicity = merged.multiplicity;
    out.merged_away = merged.merged_away;

    try {
        triangulate_merged(out.points, cloud.dim, out);
        return out;
    } catch (const InternalDegeneracy&) {
        // deterministic index-keyed jitter, then one retry
    }

    double lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (int j = 0; j < cloud.dim; ++j) {
        lo[j] = hi[j] = out.points[0][j];
        for (const auto& p : out.points) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    }
    double diag = 0;
    for (int j = 0; j < cloud.dim; ++j)
        diag += (hi[j] - lo[j]) * (hi[j] - lo[j]);
    const double scale = 1e-9 * std::max(std::sqrt(diag), 1.0);

    std::vector<Point> jittered = out.points;
    for (std::size_t i = 0; i < jittered.size(); ++i) {
        SplitMix64 g = SplitMix64::stream(0x9D2C5680u, i);
        for (int j = 0; j < cloud.dim; ++j)
            jittered[i][j] += scale * (2.0 * g.uniform() - 1.0);
    }

    DelaunayResult retry;
    retry.points = jittered;
    retry.multiplicity = merged.multiplicity;
    retry.merged_away = merged.merged_away;
    retry.jittered = true;
    try {
        triangulate_merged(retry.points, cloud.dim, retry);
        return retry;
    } catch (const InternalDegeneracy&) {
        throw DegenerateInput(
            "point configuration remained degenerate after jitter retry");
    }
}

}  // namespace ecp
