#include "lambekws/relation.hpp"

#include <bit>
#include <stdexcept>

namespace lambekws {

ModalRelation::ModalRelation(Kind k, const Field& f, std::size_t dim)
    : kind_(k), field_(f), dim_(dim) {}

ModalRelation ModalRelation::extensional(const Field& f, std::size_t dim,
                                         std::vector<std::pair<Vec, Vec>> pairs) {
    ModalRelation r(Kind::extensional, f, dim);
    for (const auto& [v, u] : pairs) {
        if (!(v.field() == f) || !(u.field() == f) || v.dim() != dim || u.dim() != dim) {
            throw std::invalid_argument("relation pair dimension mismatch");
        }
    }
    r.pairs_ = std::move(pairs);
    return r;
}

ModalRelation ModalRelation::functional(LinearMap f) {
    ModalRelation r(Kind::functional, f.field(), f.dim());
    r.map_.push_back(std::move(f));
    return r;
}

ModalRelation ModalRelation::graph(const Field& f, std::size_t dim, Subspace graph_space) {
    if (graph_space.ambient_dim() != 2 * dim || !(graph_space.field() == f)) {
        throw std::invalid_argument("graph relation needs a subspace of the doubled space");
    }
    ModalRelation r(Kind::graph_subspace, f, dim);
    r.graph_.push_back(std::move(graph_space));
    return r;
}

ModalRelation ModalRelation::embedding(ModalResiduatedPoset poset) {
    ModalRelation r(Kind::embedding, Field::f2(), poset.n * poset.n);
    r.poset_ = std::move(poset);
    return r;
}

const LinearMap& ModalRelation::map() const {
    if (kind_ != Kind::functional) throw std::logic_error("relation is not functional");
    return map_[0];
}

const Subspace& ModalRelation::graph_space() const {
    if (kind_ != Kind::graph_subspace) throw std::logic_error("relation is not a graph subspace");
    return graph_[0];
}

const ModalResiduatedPoset& ModalRelation::poset() const {
    if (kind_ != Kind::embedding) throw std::logic_error("relation is not an embedding relation");
    return poset_;
}

// Is there a surjective assignment of the elements of `elem_allowed` (bitmask
// of allowed groups per element) onto all `group_count` groups? Equivalent to
// a bipartite matching saturating the groups, with every element allowed
// somewhere.
static bool groups_saturable(const std::vector<std::uint32_t>& elem_allowed,
                             std::size_t group_count) {
    for (std::uint32_t mask : elem_allowed) {
        if (mask == 0) return false;
    }
    if (elem_allowed.size() < group_count) return false;

    std::vector<int> matched_elem(group_count, -1);
    std::vector<int> owner_of_elem(elem_allowed.size(), -1);

    // Augmenting-path matching from the group side.
    std::vector<bool> seen;
    auto try_match = [&](auto&& self, std::size_t g) -> bool {
        for (std::size_t e = 0; e < elem_allowed.size(); ++e) {
            if (seen[e] || !(elem_allowed[e] >> g & 1u)) continue;
            seen[e] = true;
            if (owner_of_elem[e] < 0 ||
                self(self, static_cast<std::size_t>(owner_of_elem[e]))) {
                owner_of_elem[e] = static_cast<int>(g);
                matched_elem[g] = static_cast<int>(e);
                return true;
            }
        }
        return false;
    };
    for (std::size_t g = 0; g < group_count; ++g) {
        seen.assign(elem_allowed.size(), false);
        if (!try_match(try_match, g)) return false;
    }
    return true;
}

bool ModalRelation::embedding_related(std::uint64_t v_mask, std::uint64_t u_mask) const {
    if (u_mask == 0) return v_mask == 0;
    if (v_mask == 0) return false;

    const std::size_t n = poset_.n;
    std::vector<std::size_t> group_upper;  // m index per support element of u
    for (std::uint64_t rest = u_mask; rest; rest &= rest - 1) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(rest));
        group_upper.push_back(b / n);
    }
    if (group_upper.size() > 32) return false;  // more groups than elements could ever cover

    std::vector<std::uint32_t> elem_allowed;
    for (std::uint64_t rest = v_mask; rest; rest &= rest - 1) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(rest));
        std::size_t k = b / n;
        std::uint32_t allowed = 0;
        for (std::size_t i = 0; i < group_upper.size(); ++i) {
            if (poset_.leq[k][poset_.dia[group_upper[i]]]) allowed |= 1u << i;
        }
        if (allowed == 0) return false;
        elem_allowed.push_back(allowed);
    }
    return groups_saturable(elem_allowed, group_upper.size());
}

bool ModalRelation::related(const Vec& v, const Vec& u) const {
    if (!(v.field() == field_) || !(u.field() == field_) || v.dim() != dim_ || u.dim() != dim_) {
        throw std::invalid_argument("relation argument dimension mismatch");
    }
    switch (kind_) {
        case Kind::extensional: {
            if (v.is_zero() && u.is_zero()) return true;
            for (const auto& [a, b] : pairs_) {
                if (a == v && b == u) return true;
            }
            return false;
        }
        case Kind::functional:
            return v == map_[0].apply(u);
        case Kind::graph_subspace: {
            std::vector<Scalar> joint;
            joint.reserve(2 * dim_);
            for (std::size_t i = 0; i < dim_; ++i) joint.push_back(v[i]);
            for (std::size_t i = 0; i < dim_; ++i) joint.push_back(u[i]);
            return graph_[0].contains(Vec(field_, std::move(joint)));
        }
        case Kind::embedding:
            return embedding_related(pack_vector(v), pack_vector(u));
    }
    return false;
}

std::string ModalRelation::describe() const {
    switch (kind_) {
        case Kind::extensional:
            return "extensional relation with " + std::to_string(pairs_.size()) + " listed pairs";
        case Kind::functional:
            return "functional relation (total linear map)";
        case Kind::graph_subspace:
            return "graph-subspace relation of rank " + std::to_string(graph_[0].rank());
        case Kind::embedding:
            return "embedding relation of a poset with " + std::to_string(poset_.n) + " elements";
    }
    return "";
}

}  // namespace lambekws
