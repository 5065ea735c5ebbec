#pragma once

#include "nilalg/catalog.hpp"
#include "nilalg/cohomology.hpp"
#include "nilalg/report.hpp"

namespace nilalg {

struct CertFailure {
    size_t i, j, k;   // 1-based structure-constant indices
    bool pole;        // pole at t = 0, otherwise a limit/target mismatch
    std::string detail;
};

struct CertApplication {
    bool pass = false;
    std::string detNote;
    std::vector<CertFailure> failures;
    std::string summary() const;
};

/// Exact certificate check: substitute the parametrized index into the source
/// family, change to the E^t basis, and require every structure constant to be
/// pole-free at t = 0 with limits equal to the target's constants.
/// `familyBinding` optionally fixes remaining family parameters (numeric
/// sampling); declared constraints are enforced on bound values.
CertApplication applyCertificate(const Catalog& cat, const CertificateFile& cert,
                                 const std::map<std::string, Scalar>& familyBinding = {});

struct NecessaryConditionReport {
    bool derOk;   // dim Der(src) < dim Der(tgt)
    bool sqOk;    // dim src^2 >= dim tgt^2
    size_t derSrc, derTgt, sqSrc, sqTgt;
};

NecessaryConditionReport checkNecessaryConditions(const Algebra& src, const Algebra& tgt);

/// All degeneration-table rows, generically and at admissible numeric samples.
/// A row failing as printed is reported with its residual as a suspected typo.
Report verifyDegenerationTable(const Catalog& cat);

/// The component-family constructions targeting the trivial families:
/// the auxiliary basis of the radical family, the intermediate-basis
/// certificate, the radical certificate, their consistency, and a numeric
/// instantiation of the radical parameter.
Report verifyComponentFamilies(const Catalog& cat);

/// The two-component structure of the variety: derivation minimality of the
/// rigid algebra, the square obstruction against the parametric family, and
/// reachability of every catalog target from the two components.
Report verifyComponentTheorem(const Catalog& cat);

} // namespace nilalg
