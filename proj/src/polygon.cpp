#include "twistroot/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "twistroot/errors.hpp"
#include "twistroot/rootcalc.hpp"

namespace twistroot {

PolygonGluing::PolygonGluing(std::size_t sides, std::vector<std::size_t> partner,
                             std::vector<bool> boundary_reversing)
    : partner_(std::move(partner)), reversing_(std::move(boundary_reversing)) {
  if (sides < 2 || sides % 2 != 0) {
    throw UnsupportedGluing("side count must be a positive even number");
  }
  if (partner_.size() != sides || reversing_.size() != sides) {
    throw UnsupportedGluing("pairing tables must cover every side exactly once");
  }
  for (std::size_t i = 0; i < sides; ++i) {
    if (partner_[i] >= sides) throw UnsupportedGluing("partner index out of range");
    if (partner_[i] == i) throw UnsupportedGluing("a side cannot be glued to itself");
    if (partner_[partner_[i]] != i) throw UnsupportedGluing("pairing is not an involution");
    if (reversing_[partner_[i]] != reversing_[i]) {
      throw UnsupportedGluing("orientation flags must agree across each glued pair");
    }
  }
}

PolygonGluing build_polygon(std::size_t g) {
  if (g < 2) throw UnsupportedRank("polygon construction needs g >= 2");
  const std::size_t m = 4 * g - 2;
  std::vector<std::size_t> partner(m);
  for (std::size_t i = 0; i < m; ++i) partner[i] = (i + m / 2) % m;
  return PolygonGluing(m, std::move(partner), std::vector<bool>(m, true));
}

std::vector<std::vector<std::size_t>> vertex_orbit_classes(const PolygonGluing& p) {
  const std::size_t m = p.sides();
  for (std::size_t i = 0; i < m; ++i) {
    if (!p.boundary_reversing(i)) {
      throw UnsupportedGluing("orientation-preserving identification: surface is non-orientable");
    }
  }
  std::vector<bool> seen(m, false);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t v = 0; v < m; ++v) {
    if (seen[v]) continue;
    std::vector<std::size_t> orbit;
    std::size_t cur = v;
    while (!seen[cur]) {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = p.partner((cur + m - 1) % m);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

SurfaceInvariants surface_invariants(const PolygonGluing& p) {
  SurfaceInvariants out;
  out.vertex_orbits = vertex_orbit_classes(p).size();
  out.edges = p.sides() / 2;
  out.faces = 1;
  out.euler_characteristic = static_cast<long long>(out.vertex_orbits) -
                             static_cast<long long>(out.edges) + 1;
  const long long doubled = 2 - out.euler_characteristic;
  if (doubled < 0 || doubled % 2 != 0) {
    throw UnsupportedGluing("euler characteristic does not fit a closed orientable surface");
  }
  out.genus = static_cast<std::size_t>(doubled / 2);
  return out;
}

std::vector<Rational> orbit_advances(const PolygonGluing& p, std::size_t shift) {
  const std::size_t m = p.sides();
  if (shift == 0 || shift >= m) {
    throw UnsupportedGluing("shift must lie strictly between 0 and the side count");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (p.partner((i + shift) % m) != (p.partner(i) + shift) % m) {
      throw UnsupportedGluing("rotation does not preserve the gluing");
    }
  }
  std::vector<Rational> advances;
  for (const auto& orbit : vertex_orbit_classes(p)) {
    const std::size_t q = orbit.size();
    std::size_t advance = q;  // sentinel: not yet determined
    for (std::size_t idx = 0; idx < q; ++idx) {
      const std::size_t image = (orbit[idx] + shift) % m;
      auto it = std::lower_bound(orbit.begin(), orbit.end(), image);
      if (it == orbit.end() || *it != image) {
        throw UnsupportedGluing("rotation does not fix each vertex class");
      }
      const std::size_t step =
          (static_cast<std::size_t>(it - orbit.begin()) + q - idx) % q;
      if (advance == q) {
        advance = step;
      } else if (advance != step) {
        throw UnsupportedGluing("corner advance is not uniform on a vertex class");
      }
    }
    advances.emplace_back(advance, q);
  }
  return advances;
}

RotationMap rotation_map(std::size_t g) {
  if (g < 2) throw UnsupportedRank("rotation map needs g >= 2");
  const PolygonGluing p = build_polygon(g);
  const std::size_t m = p.sides();
  RotationMap out;
  out.shift = 2 * g;
  out.order_on_surface = m / std::gcd(m, out.shift);
  const auto orbits = vertex_orbit_classes(p);
  const auto advances = orbit_advances(p, out.shift);
  if (orbits.size() != 2) {
    throw ConstructionInconsistency("opposite-side gluing should yield exactly two vertex classes");
  }
  // Class of corner 0 is x; the ccw advance there is the rotation number.
  // At y the construction twists the other way, so report the cw advance.
  out.fixed_point_rotation_numbers[0] = advances[0];
  Rational flipped = 1 - advances[1];
  if (flipped == 1) flipped = 0;
  out.fixed_point_rotation_numbers[1] = flipped;
  return out;
}

bool verify_geometric_root(std::size_t g) {
  if (g < 2) throw UnsupportedRank("geometric construction needs g >= 2");
  const SurfaceInvariants inv = surface_invariants(build_polygon(g));
  if (inv.genus != g - 1 || inv.vertex_orbits != 2) return false;
  const RotationMap rot = rotation_map(g);
  const long long q = 2 * static_cast<long long>(g) - 1;
  if (rot.order_on_surface != static_cast<std::size_t>(q)) return false;
  if (rot.fixed_point_rotation_numbers[0] != Rational(g, q)) return false;
  if (rot.fixed_point_rotation_numbers[1] != Rational(g - 1, q)) return false;
  return ledger_check(geometric_ledger(static_cast<long long>(g)));
}

}  // namespace twistroot
