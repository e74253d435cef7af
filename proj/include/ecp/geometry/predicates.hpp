#pragma once

#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

/* Signs of the classic geometric determinants, always correct.  Each
   predicate evaluates in double with a conservative forward error bound and
   falls back to exact rational arithmetic when the computed value is too
   close to zero to trust.  Ties (exact zeros) are reported as 0 and resolved
   by the callers' insertion-order rules. */

// > 0 iff c lies strictly left of the directed line a -> b
int orient2d(const Point& a, const Point& b, const Point& c);

// requires (a,b,c) counterclockwise; > 0 iff d lies strictly inside their circumcircle
int incircle2d(const Point& a, const Point& b, const Point& c, const Point& d);

// > 0 iff the tetrahedron (a,b,c,d) is positively oriented
// (d on the side of plane(a,b,c) that makes the vertex sequence right-handed)
int orient3d(const Point& a, const Point& b, const Point& c, const Point& d);

// requires (a,b,c,d) positively oriented; > 0 iff e lies strictly inside their circumsphere
int insphere3d(const Point& a, const Point& b, const Point& c, const Point& d,
               const Point& e);

// true iff a, b, c are exactly collinear in R^3
bool collinear3d(const Point& a, const Point& b, const Point& c);

/* In-circumcircle test for four exactly coplanar points in R^3: > 0 iff d is
   strictly inside the circle through a, b, c within their common plane.
   Projects out the dominant axis of the plane normal (coordinate drop is
   exact) and corrects for the projected orientation. */
int incircle3d_coplanar(const Point& a, const Point& b, const Point& c,
                        const Point& d);

}  // namespace ecp
