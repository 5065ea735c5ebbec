#pragma once

#include "nilalg/parse.hpp"

namespace nilalg {

struct ExpectedInvariants {
    std::optional<size_t> z2, b2, h2, der;
    std::vector<Scalar> derExceptions;        // parameter values where the der value
                                              // is reported but not asserted
    std::vector<std::string> z2Span, b2Span, h2Span; // claimed basis elements
};

struct CatalogEntry {
    Algebra algebra;
    std::optional<ExpectedInvariants> expected;
    std::optional<std::string> parentRef;     // provenance: parent algebra reference
    std::vector<std::string> cocycleExprs;    // provenance: representative cocycle
};

struct CertificateEntry {
    enum Kind { Table, ComponentFamily } kind;
    CertificateFile file;
};

/// Fixture-backed catalog: algebras, expected invariants, provenance cocycles,
/// degeneration certificates and normalization case families, in manifest order.
class Catalog {
public:
    explicit Catalog(std::string fixturesDir);

    static std::string defaultFixturesDir();

    const std::string& dir() const { return dir_; }

    const std::vector<std::string>& algebraIds() const { return algebraIds_; }
    const std::vector<std::string>& certificateIds() const { return certificateIds_; }
    const std::vector<std::string>& normalizationIds() const { return normalizationIds_; }

    bool hasAlgebra(const std::string& id) const { return entries_.count(id) > 0; }
    const CatalogEntry& entry(const std::string& id) const;
    const CertificateEntry& certificate(const std::string& id) const;
    const NormalizationFamily& normalization(const std::string& id) const;

    /// Instantiate by id with optional parameter bindings (respecting declared
    /// exclusions). UnknownId when absent.
    Algebra get(const std::string& id, const std::map<std::string, Scalar>& bindings = {}) const;

    /// `Name` or `Name(<expr>)`; the expression binds the first declared
    /// parameter and may use parameters from `extraParams`.
    Algebra resolveRef(const std::string& refText,
                       const std::set<std::string>& extraParams = {}) const;

    /// Fixed numeric sample values for family parameters.
    static std::vector<Scalar> parameterSamples();

    /// Samples allowed for this algebra (exclusions removed).
    std::vector<Scalar> samplesFor(const std::string& id) const;

private:
    std::string dir_;
    std::vector<std::string> algebraIds_;
    std::vector<std::string> certificateIds_;
    std::vector<std::string> normalizationIds_;
    std::map<std::string, CatalogEntry> entries_;
    std::map<std::string, CertificateEntry> certificates_;
    std::map<std::string, NormalizationFamily> normalizations_;
};

} // namespace nilalg
