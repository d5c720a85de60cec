#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lambekws/linalg.hpp"

namespace lambekws {

/// Tables of a finite modal residuated poset; also the payload behind
/// embedding relations. Indices are 0-based positions in the enumeration
/// p_1..p_n of the carrier.
struct ModalResiduatedPoset {
    std::size_t n = 0;
    std::vector<std::vector<bool>> leq;          // leq[x][y] <=> p_x <= p_y
    std::vector<std::vector<std::size_t>> otimes;
    std::vector<std::vector<std::size_t>> lres;  // lres[x][z] = x \ z
    std::vector<std::vector<std::size_t>> rres;  // rres[z][y] = z / y
    std::vector<std::size_t> dia;
    std::vector<std::size_t> box;
};

/// A binary relation R on a vector space, in one of four presentations:
///  - extensional: a literal list of pairs (plus the implicit pair (0,0));
///  - functional: v R u iff v = f(u) for a total linear map f;
///  - graph_subspace: v R u iff (v,u) lies in a given subspace of V + V;
///  - embedding: the relation of the poset-to-subspace-lattice embedding,
///    decided by a support-partition condition over F_2.
class ModalRelation {
public:
    enum class Kind { extensional, functional, graph_subspace, embedding };

    static ModalRelation extensional(const Field& f, std::size_t dim,
                                     std::vector<std::pair<Vec, Vec>> pairs);
    static ModalRelation functional(LinearMap f);
    static ModalRelation graph(const Field& f, std::size_t dim, Subspace graph_space);
    /// v R u iff u is a nonzero sum of distinct basis vectors e(m_i, j_i) and
    /// the support of v splits into nonempty groups, one per i, each made of
    /// basis vectors e(k, l) with p_k <= dia(p_{m_i}); and 0 R 0.
    static ModalRelation embedding(ModalResiduatedPoset poset);

    Kind kind() const { return kind_; }
    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    bool related(const Vec& v, const Vec& u) const;

    const std::vector<std::pair<Vec, Vec>>& pairs() const { return pairs_; }
    const LinearMap& map() const;
    const Subspace& graph_space() const;
    const ModalResiduatedPoset& poset() const;

    std::string describe() const;

private:
    ModalRelation(Kind k, const Field& f, std::size_t dim);
    bool embedding_related(std::uint64_t v_mask, std::uint64_t u_mask) const;

    Kind kind_;
    Field field_;
    std::size_t dim_;
    std::vector<std::pair<Vec, Vec>> pairs_;
    std::vector<LinearMap> map_;      // 0 or 1 entries
    std::vector<Subspace> graph_;     // 0 or 1 entries
    ModalResiduatedPoset poset_;      // embedding kind only
};

}  // namespace lambekws
