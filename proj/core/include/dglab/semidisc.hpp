#ifndef DGLAB_SEMIDISC_HPP
#define DGLAB_SEMIDISC_HPP

#include "dglab/basis.hpp"
#include "dglab/equations.hpp"
#include "dglab/field.hpp"
#include "dglab/mesh.hpp"
#include "dglab/viscosity.hpp"

namespace dglab {

// Spatial DG operators. All tendencies are modal, with the reference-map
// Jacobian folded in: first-derivative operators carry a factor 2/h, the
// viscous composition (2/h)^2.

/// Strong-form hyperbolic tendency
///   du/dt = (2/h) [ -D f + M^{-1} R^T B (R f - f_num) ]
/// with nodal flux collocation and the configured interface flux. Boundary
/// interfaces use periodic wrap-around or the mesh's frozen ghost states.
Field hyperbolic_rhs(const Field& field, const ConservationLaw& law,
                     FluxKind flux_kind, const Mesh& mesh,
                     const ReferenceElement& elem, bool parallel = false);

/// Local-DG viscous tendency: two strong-form derivative passes with central
/// (average) interface fluxes, the viscosity multiplying nodally in between:
///   q = eps * u_x,   du/dt = q_x.
/// Non-periodic physical boundaries take the interior trace (zero viscous
/// boundary correction), matching compactly supported eps.
Field viscous_rhs(const Field& field, const ViscosityField& visc,
                  const Mesh& mesh, const ReferenceElement& elem,
                  bool parallel = false);

/// hyperbolic_rhs + viscous_rhs.
Field full_rhs(const Field& field, const ConservationLaw& law,
               FluxKind flux_kind, const ViscosityField& visc,
               const Mesh& mesh, const ReferenceElement& elem,
               bool parallel = false);

}  // namespace dglab

#endif
