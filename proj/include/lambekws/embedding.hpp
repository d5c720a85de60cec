#pragma once

#include <string>
#include <vector>

#include "lambekws/complex_algebra.hpp"
#include "lambekws/kalgebra.hpp"
#include "lambekws/poset.hpp"
#include "lambekws/relation.hpp"

namespace lambekws {

/// The finite completeness construction: a valid n-element modal residuated
/// poset embeds into the subspace lattice of an n^2-dimensional algebra over
/// F_2. Basis vectors are indexed e(m, j) = m*n + j for 0-based m, j.
struct Embedding {
    ModalResiduatedPoset source;
    KAlgebra algebra;
    std::vector<Subspace> h;  // image subspace per poset element
    /// nu[k][m][r]: basis index assigned to cell (m, r) of the k-th table.
    std::vector<std::vector<std::vector<std::size_t>>> nu;
    ModalRelation relation;
};

/// Deterministic construction: nu_k maps diagonal cells (m, m) to e(k, m) and
/// fills the remaining cells row-major with the remaining codomain elements,
/// cycling until surjective.
Embedding embed(const ModalResiduatedPoset& p, std::size_t max_n = 4);

struct EmbeddingClause {
    std::string name;
    bool pass = false;
    std::string witness;  // first failing instance
};

struct EmbeddingReport {
    std::vector<EmbeddingClause> clauses;  // order embedding, otimes, lres, rres, dia, box
    bool all_pass() const;
};

/// Machine-checks the six homomorphism clauses of the embedding. The modal
/// clauses enumerate all 2^(n^2) vectors and are bounded accordingly.
EmbeddingReport verify_embedding(const Embedding& e, const EnumLimits& limits = {});

}  // namespace lambekws
