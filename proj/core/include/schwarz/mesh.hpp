// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "schwarz/common.hpp"

namespace schwarz {

/// Which discretization family the mesh serves.
///
/// Elliptic meshes are simplex meshes with n*m cells per axis (h = 1/(n*m) on
/// the unit box); subdomain interfaces coincide with grid lines. Pwls meshes
/// are axis-aligned quad meshes with n*m+1 elements per axis, so that
/// subdomain interfaces pass through element interiors (cut elements).
enum class MeshConvention { Elliptic, Pwls };

struct Box {
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{1.0, 1.0, 1.0};

  double extent(int axis) const { return hi[axis] - lo[axis]; }
};

/// A mesh face: a (d-1)-dimensional interface between two elements, or a
/// boundary facet. For quad meshes `axis` is the normal axis and
/// `normal_sign` orients the normal from `left` toward `right` (outward on
/// boundary faces). Simplex faces carry axis = -1.
struct Face {
  std::array<Index, 4> v{-1, -1, -1, -1};
  int nv = 0;
  Index left = -1;
  Index right = -1; // -1 on boundary faces
  int axis = -1;
  int normal_sign = 1;

  bool boundary() const { return right < 0; }
};

struct StructuredMesh {
  int dim = 2;
  MeshConvention convention = MeshConvention::Elliptic;
  int n = 0; // subdomains per axis
  int m = 0; // elements per subdomain per axis (see MeshConvention)
  Box box;

  std::array<int, 3> cells{1, 1, 1}; // grid cells per axis
  std::array<double, 3> h{0, 0, 0};  // cell size per axis

  std::vector<std::array<double, 3>> vertices;
  std::vector<Index> elem_verts; // flat, verts_per_elem per element
  int verts_per_elem = 0;
  std::vector<Face> faces;
  std::vector<char> vertex_on_boundary;
  std::vector<std::array<double, 3>> dual_nodes; // element midpoints (pwls)

  // vertex -> incident elements, CSR
  std::vector<Index> v2e_offsets;
  std::vector<Index> v2e_elems;

  Index vertex_count() const { return static_cast<Index>(vertices.size()); }
  Index element_count() const
  {
    return verts_per_elem == 0 ? 0 : static_cast<Index>(elem_verts.size()) / verts_per_elem;
  }

  std::span<const Index> element(Index e) const
  {
    return {elem_verts.data() + e * verts_per_elem, static_cast<std::size_t>(verts_per_elem)};
  }

  std::span<const Index> incident_elements(Index vertex) const
  {
    return {v2e_elems.data() + v2e_offsets[vertex],
            static_cast<std::size_t>(v2e_offsets[vertex + 1] - v2e_offsets[vertex])};
  }

  /// Grid cell that owns element e (elements per cell: 1 quad, 2 triangles, 6 tets).
  Index element_cell(Index e) const;
  std::array<int, 3> cell_coords(Index cell) const;
  Index cell_index(int ix, int iy, int iz) const
  {
    return ix + static_cast<Index>(cells[0]) * (iy + static_cast<Index>(cells[1]) * iz);
  }

  std::array<double, 3> element_centroid(Index e) const;
  double element_volume(Index e) const;
};

/// Builds the structured mesh for one of the two front-end conventions on
/// `box` (default: unit square/cube). Requires n >= 1, m >= 2; dim must be
/// 2 or 3 and the pwls convention is 2D only.
StructuredMesh build_structured_mesh(int dim, int n, int m, MeshConvention convention,
                                     const Box& box = {});

/// Plain uniform quad mesh without the n(m) subdomain structure. Used by
/// tests and tools that only need pwls-style assembly on a small grid.
StructuredMesh build_uniform_quad_mesh(int nx, int ny, const Box& box = {});

/// P1 barycentric basis gradients and measure of a simplex element.
/// `gradients` receives one gradient per element vertex.
double simplex_gradients(const StructuredMesh& mesh, Index e,
                         std::array<std::array<double, 3>, 4>& gradients);

/// Plain-text mesh sidecar: "dim nv ne", vertex coordinates, then 0-based
/// element vertex indices. Debugging aid only.
void write_mesh_text(const StructuredMesh& mesh, std::ostream& out);
void write_mesh_text(const StructuredMesh& mesh, const std::string& path);

} // namespace schwarz
