#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "twistroot/matrix.hpp"

namespace twistroot {

// Even-sided polygon with sides identified in pairs. Sides and corners are
// numbered 0..sides-1 counterclockwise; side i runs from corner i to corner
// i+1 (mod sides). boundary_reversing means side i traversed forwards is
// matched with its partner traversed backwards (a translation-style
// identification); this is the orientable case, and the only one the
// surface computations accept.
class PolygonGluing {
public:
  PolygonGluing(std::size_t sides, std::vector<std::size_t> partner,
                std::vector<bool> boundary_reversing);

  std::size_t sides() const { return partner_.size(); }
  std::size_t partner(std::size_t side) const { return partner_.at(side); }
  bool boundary_reversing(std::size_t side) const { return reversing_.at(side); }

private:
  std::vector<std::size_t> partner_;
  std::vector<bool> reversing_;
};

// Cell counts of the glued surface (one face: the polygon itself).
struct SurfaceInvariants {
  std::size_t vertex_orbits = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long long euler_characteristic = 0;
  std::size_t genus = 0;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// The rotation by `shift` side positions, as seen on the glued surface.
// fixed_point_rotation_numbers[0] is the counterclockwise corner advance
// at the vertex point x (the class of corner 0); [1] is the clockwise
// advance at the other vertex point y. The handedness flip at y matches
// the construction, which twists left at x and right at y.
struct RotationMap {
  std::size_t shift = 0;
  std::size_t order_on_surface = 0;
  std::array<Rational, 2> fixed_point_rotation_numbers{};

  friend bool operator==(const RotationMap&, const RotationMap&) = default;
};

// The (4g-2)-gon with opposite sides glued by translation. Requires g >= 2.
PolygonGluing build_polygon(std::size_t g);

// Corner classes of the glued surface, each sorted ascending, ordered by
// smallest corner. Walk rule: gluing side v-1 carries corner v (the end of
// side v-1) to the start of its partner, so next(v) = partner(v-1).
// Requires every identification boundary-reversing (throws
// UnsupportedGluing otherwise).
std::vector<std::vector<std::size_t>> vertex_orbit_classes(const PolygonGluing& p);

// V, E = sides/2, F = 1, euler characteristic and genus of the glued
// surface. Throws UnsupportedGluing for non-orientable identifications.
SurfaceInvariants surface_invariants(const PolygonGluing& p);

// Counterclockwise position advance of each vertex class under rotation by
// `shift` sides, as a fraction of the class size, one entry per class in
// vertex_orbit_classes order. Throws UnsupportedGluing if the rotation
// fails to preserve the gluing, moves some class off itself, or advances
// the corners of one class by different amounts.
std::vector<Rational> orbit_advances(const PolygonGluing& p, std::size_t shift);

// The shift-2g rotation of the (4g-2)-gon: order (4g-2)/gcd(4g-2, 2g)
// = 2g-1 on the surface, with the rotation numbers at the two vertex
// points. Requires g >= 2.
RotationMap rotation_map(std::size_t g);

// End-to-end check of the rotation construction: the glued surface has
// genus g-1 and exactly two vertex points, the rotation has order 2g-1,
// the rotation numbers are g/(2g-1) and (g-1)/(2g-1), and the fractional
// twisting ledger nets exactly one full twist after 2g-1 applications.
bool verify_geometric_root(std::size_t g);

}  // namespace twistroot
