#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lambekws/formula.hpp"
#include "lambekws/kalgebra.hpp"
#include "lambekws/relation.hpp"

namespace lambekws {

struct EnumLimits {
    /// Upper bound on |F_p^dim| for the enumerations behind dia/box on
    /// non-functional relations (2^16 vectors by default).
    std::uint64_t max_space = 1u << 16;
    /// Dimension bound for subspace-lattice property checks.
    std::size_t max_dim_subspaces = 5;
};

/// U (x) W: the subspace generated by the pairwise products of the two
/// bases (by bilinearity this spans all products u*w).
Subspace tensor(const KAlgebra& a, const Subspace& u, const Subspace& w);

/// Z / W: the largest U with U (x) W included in Z, computed as the solution
/// space of the constraints u*w_j in Z over the basis of W.
Subspace rres(const KAlgebra& a, const Subspace& z, const Subspace& w);

/// U \ Z: the largest W with U (x) W included in Z.
Subspace lres(const KAlgebra& a, const Subspace& u, const Subspace& z);

/// dia U: the closure of the R-preimage of U.
Subspace dia(const ModalRelation& r, const Subspace& u, const EnumLimits& limits = {});

/// box W: the closure of { u | every v with v R u lies in W }.
Subspace box(const ModalRelation& r, const Subspace& w, const EnumLimits& limits = {});

struct RelationReport {
    bool l1r = false, l2r = false, l3r = false;
    std::string violation;  // first violating instance, if any
    bool valid() const { return l1r && l2r && l3r; }
};

/// Exhaustively checks linearity (L1R), the decomposition property (L2R) and
/// zero-preservation (L3R) of a relation by quantifier enumeration.
RelationReport validate_relation(const ModalRelation& r, const CheckOptions& opts = {});

enum class VPlusProperty {
    associative,
    commutative,
    unital,
    contractive,
    expansive,
    monoidal,
    right_associative,
    left_commutative,
};

VPlusProperty vplus_property_from_string(const std::string& name);
std::string to_string(VPlusProperty p);
bool vplus_property_needs_relation(VPlusProperty p);

struct ResiduatedWitness {
    VPlusProperty property;
    bool holds = false;
    std::vector<Subspace> counterexample;
    std::string detail;
};

/// Checks the defining (in)equation of the property over every tuple of
/// subspaces (finite fields only; `max_dim` bounds the ambient dimension).
ResiduatedWitness check_vplus_property(const KAlgebra& a, const ModalRelation* r,
                                       VPlusProperty property, std::size_t max_dim = 5,
                                       const EnumLimits& limits = {});

using Valuation = std::map<std::string, Subspace>;

/// Interprets a formula in the subspace lattice of the algebra. Throws on
/// unbound atoms; `r` may be null when no modal operator occurs.
Subspace eval(const KAlgebra& a, const ModalRelation* r, const Valuation& val,
              const FormulaPtr& formula, const EnumLimits& limits = {});

/// Structural connectives are interpreted by the same operations as their
/// operational counterparts.
Subspace eval(const KAlgebra& a, const ModalRelation* r, const Valuation& val,
              const StructurePtr& structure, const EnumLimits& limits = {});

/// Satisfaction: the interpretation of the left side is included in the
/// interpretation of the right side.
bool holds(const KAlgebra& a, const ModalRelation* r, const Valuation& val, const Sequent& seq,
           const EnumLimits& limits = {});

}  // namespace lambekws
