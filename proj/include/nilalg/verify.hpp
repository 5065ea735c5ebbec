#pragma once

#include "nilalg/degeneration.hpp"

namespace nilalg {

/// Z^2/B^2/H^2 dimensions and claimed basis elements for every algebra with
/// expected cohomology data (generic parameters).
Report verifyCohomologyTable(const Catalog& cat);

/// Bicommutativity, nilpotency and derivation dimensions for the whole
/// 4-dimensional catalog at generic parameters and at the numeric samples.
Report verifyTableA(const Catalog& cat);

/// Every orbit-normalization case item, plus coverage of the condition
/// patterns within each family.
Report verifyNormalizationAll(const Catalog& cat);

/// Provenance links: the stored parent/cocycle reproduces each algebra, and
/// the annihilator decomposition round-trips through re-extension.
Report verifyExtensionRoundTrips(const Catalog& cat);

/// Everything, in catalog order.
Report reportAll(const Catalog& cat);

} // namespace nilalg
