#include "lambekws/complex_algebra.hpp"

#include <stdexcept>
#include <unordered_map>

#include "dense_space.hpp"

namespace lambekws {

namespace {

void check_space(const KAlgebra& a, const Subspace& s, const char* what) {
    if (!(s.field() == a.field()) || s.ambient_dim() != a.dim()) {
        throw std::invalid_argument(std::string(what) + ": subspace does not live on the algebra");
    }
}

}  // namespace

Subspace tensor(const KAlgebra& a, const Subspace& u, const Subspace& w) {
    check_space(a, u, "tensor");
    check_space(a, w, "tensor");
    std::vector<Vec> products;
    products.reserve(u.rank() * w.rank());
    for (const Vec& b : u.basis()) {
        for (const Vec& c : w.basis()) products.push_back(a.star(b, c));
    }
    return Subspace::span(a.field(), a.dim(), products);
}

Subspace rres(const KAlgebra& a, const Subspace& z, const Subspace& w) {
    check_space(a, z, "rres");
    check_space(a, w, "rres");
    // u*w_j is linear in u; one membership constraint per basis vector of W.
    std::vector<std::pair<LinearMap, Subspace>> constraints;
    for (const Vec& wj : w.basis()) {
        std::vector<Vec> cols;
        cols.reserve(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(a.star(a.basis_vec(i), wj));
        constraints.emplace_back(LinearMap::from_columns(a.field(), cols), z);
    }
    return solve_membership_constraints(a.field(), a.dim(), constraints);
}

Subspace lres(const KAlgebra& a, const Subspace& u, const Subspace& z) {
    check_space(a, u, "lres");
    check_space(a, z, "lres");
    std::vector<std::pair<LinearMap, Subspace>> constraints;
    for (const Vec& ui : u.basis()) {
        std::vector<Vec> cols;
        cols.reserve(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(a.star(ui, a.basis_vec(i)));
        constraints.emplace_back(LinearMap::from_columns(a.field(), cols), z);
    }
    return solve_membership_constraints(a.field(), a.dim(), constraints);
}

Subspace dia(const ModalRelation& r, const Subspace& u, const EnumLimits& limits) {
    if (!(u.field() == r.field()) || u.ambient_dim() != r.dim()) {
        throw std::invalid_argument("dia: subspace does not live on the relation's space");
    }
    const Field& f = r.field();
    const std::size_t dim = r.dim();
    switch (r.kind()) {
        case ModalRelation::Kind::functional: {
            std::vector<Vec> images;
            for (const Vec& b : u.basis()) images.push_back(r.map().apply(b));
            return Subspace::span(f, dim, images);
        }
        case ModalRelation::Kind::extensional: {
            std::vector<Vec> firsts;
            for (const auto& [v, x] : r.pairs()) {
                if (u.contains(x)) firsts.push_back(v);
            }
            return Subspace::span(f, dim, firsts);
        }
        case ModalRelation::Kind::graph_subspace: {
            // First projections of graph  cap (V x U).
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < dim; ++i) {
                std::vector<Scalar> c(2 * dim, Scalar::zero(f));
                c[i] = Scalar::one(f);
                rows.emplace_back(f, std::move(c));
            }
            for (const Vec& b : u.basis()) {
                std::vector<Scalar> c(2 * dim, Scalar::zero(f));
                for (std::size_t i = 0; i < dim; ++i) c[dim + i] = b[i];
                rows.emplace_back(f, std::move(c));
            }
            Subspace v_times_u = Subspace::span(f, 2 * dim, rows);
            Subspace meet = r.graph_space().intersect(v_times_u);
            std::vector<Vec> firsts;
            for (const Vec& g : meet.basis()) {
                std::vector<Scalar> c;
                c.reserve(dim);
                for (std::size_t i = 0; i < dim; ++i) c.push_back(g[i]);
                firsts.emplace_back(f, std::move(c));
            }
            return Subspace::span(f, dim, firsts);
        }
        case ModalRelation::Kind::embedding: {
            std::vector<Vec> space = all_vectors(f, dim, limits.max_space);
            std::vector<Vec> members = u.elements();
            std::vector<Vec> preimage;
            for (const Vec& v : space) {
                for (const Vec& x : members) {
                    if (r.related(v, x)) {
                        preimage.push_back(v);
                        break;
                    }
                }
            }
            return Subspace::span(f, dim, preimage);
        }
    }
    throw std::logic_error("unreachable");
}

Subspace box(const ModalRelation& r, const Subspace& w, const EnumLimits& limits) {
    if (!(w.field() == r.field()) || w.ambient_dim() != r.dim()) {
        throw std::invalid_argument("box: subspace does not live on the relation's space");
    }
    const Field& f = r.field();
    const std::size_t dim = r.dim();
    switch (r.kind()) {
        case ModalRelation::Kind::functional:
            return solve_membership_constraints(f, dim, {{r.map(), w}});
        case ModalRelation::Kind::extensional: {
            std::vector<Vec> qualifying;
            for (const Vec& u : all_vectors(f, dim, limits.max_space)) {
                bool ok = true;
                for (const auto& [v, x] : r.pairs()) {
                    if (x == u && !w.contains(v)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) qualifying.push_back(u);
            }
            return Subspace::span(f, dim, qualifying);
        }
        case ModalRelation::Kind::graph_subspace: {
            if (std::uint64_t(1) << r.graph_space().rank() > limits.max_space) {
                throw std::domain_error("box: graph subspace enumeration bound exceeded");
            }
            std::vector<Vec> graph_elems = r.graph_space().elements();
            std::vector<Vec> qualifying;
            for (const Vec& u : all_vectors(f, dim, limits.max_space)) {
                bool ok = true;
                for (const Vec& g : graph_elems) {
                    bool second_is_u = true;
                    for (std::size_t i = 0; i < dim && second_is_u; ++i) {
                        if (g[dim + i] != u[i]) second_is_u = false;
                    }
                    if (!second_is_u) continue;
                    std::vector<Scalar> c;
                    c.reserve(dim);
                    for (std::size_t i = 0; i < dim; ++i) c.push_back(g[i]);
                    if (!w.contains(Vec(f, std::move(c)))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) qualifying.push_back(u);
            }
            return Subspace::span(f, dim, qualifying);
        }
        case ModalRelation::Kind::embedding: {
            std::vector<Vec> space = all_vectors(f, dim, limits.max_space);
            std::vector<Vec> qualifying;
            for (const Vec& u : space) {
                bool ok = true;
                for (const Vec& v : space) {
                    if (r.related(v, u) && !w.contains(v)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) qualifying.push_back(u);
            }
            return Subspace::span(f, dim, qualifying);
        }
    }
    throw std::logic_error("unreachable");
}

RelationReport validate_relation(const ModalRelation& r, const CheckOptions& opts) {
    RelationReport report;
    detail::DenseSpace ds =
        detail::DenseSpace::build(r.field(), r.dim(), nullptr, opts.max_space_pairs);
    const std::uint32_t size = static_cast<std::uint32_t>(ds.size);

    std::vector<char> rel(ds.size * ds.size);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel_pairs;
    for (std::uint32_t v = 0; v < size; ++v) {
        for (std::uint32_t u = 0; u < size; ++u) {
            bool rr = r.related(ds.vecs[v], ds.vecs[u]);
            rel[v * size + u] = rr;
            if (rr) rel_pairs.emplace_back(v, u);
        }
    }

    // L3R: x R 0 iff x = 0.
    report.l3r = true;
    for (std::uint32_t x = 0; x < size; ++x) {
        bool expected = (x == 0);
        if (bool(rel[x * size + 0]) != expected) {
            report.l3r = false;
            report.violation = "L3R at x = " + ds.vecs[x].to_string();
            break;
        }
    }

    // L1R: v R u and z R w imply that every combination gv + dz is related to
    // some combination au + bw.
    report.l1r = true;
    for (const auto& [v, u] : rel_pairs) {
        for (const auto& [z, w] : rel_pairs) {
            for (std::uint64_t g = 0; g < ds.p && report.l1r; ++g) {
                for (std::uint64_t d = 0; d < ds.p && report.l1r; ++d) {
                    std::uint32_t lhs = ds.add(ds.scale(g, v), ds.scale(d, z));
                    bool found = false;
                    for (std::uint64_t aa = 0; aa < ds.p && !found; ++aa) {
                        for (std::uint64_t bb = 0; bb < ds.p && !found; ++bb) {
                            std::uint32_t rhs = ds.add(ds.scale(aa, u), ds.scale(bb, w));
                            if (rel[lhs * size + rhs]) found = true;
                        }
                    }
                    if (!found) {
                        report.l1r = false;
                        if (report.violation.empty()) {
                            report.violation = "L1R at v=" + ds.vecs[v].to_string() +
                                               " u=" + ds.vecs[u].to_string() +
                                               " z=" + ds.vecs[z].to_string() +
                                               " w=" + ds.vecs[w].to_string();
                        }
                    }
                }
            }
            if (!report.l1r) break;
        }
        if (!report.l1r) break;
    }

    // L2R: t R (au + bv) implies t decomposes as lz + mw with z R u and w R v.
    report.l2r = true;
    for (std::uint32_t u = 0; u < size && report.l2r; ++u) {
        for (std::uint32_t v = 0; v < size && report.l2r; ++v) {
            for (std::uint64_t aa = 0; aa < ds.p && report.l2r; ++aa) {
                for (std::uint64_t bb = 0; bb < ds.p && report.l2r; ++bb) {
                    std::uint32_t comb = ds.add(ds.scale(aa, u), ds.scale(bb, v));
                    for (std::uint32_t t = 0; t < size; ++t) {
                        if (!rel[t * size + comb]) continue;
                        bool found = false;
                        for (std::uint32_t z = 0; z < size && !found; ++z) {
                            if (!rel[z * size + u]) continue;
                            for (std::uint32_t w = 0; w < size && !found; ++w) {
                                if (!rel[w * size + v]) continue;
                                for (std::uint64_t l = 0; l < ds.p && !found; ++l) {
                                    for (std::uint64_t m = 0; m < ds.p && !found; ++m) {
                                        if (ds.add(ds.scale(l, z), ds.scale(m, w)) == t) {
                                            found = true;
                                        }
                                    }
                                }
                            }
                        }
                        if (!found) {
                            report.l2r = false;
                            if (report.violation.empty()) {
                                report.violation = "L2R at t=" + ds.vecs[t].to_string() +
                                                   " u=" + ds.vecs[u].to_string() +
                                                   " v=" + ds.vecs[v].to_string();
                            }
                            break;
                        }
                    }
                }
            }
        }
    }
    return report;
}

VPlusProperty vplus_property_from_string(const std::string& name) {
    if (name == "associative") return VPlusProperty::associative;
    if (name == "commutative") return VPlusProperty::commutative;
    if (name == "unital") return VPlusProperty::unital;
    if (name == "contractive") return VPlusProperty::contractive;
    if (name == "expansive") return VPlusProperty::expansive;
    if (name == "monoidal") return VPlusProperty::monoidal;
    if (name == "right-associative" || name == "right_associative") {
        return VPlusProperty::right_associative;
    }
    if (name == "left-commutative" || name == "left_commutative") {
        return VPlusProperty::left_commutative;
    }
    throw std::invalid_argument("unknown property: " + name);
}

std::string to_string(VPlusProperty p) {
    switch (p) {
        case VPlusProperty::associative: return "associative";
        case VPlusProperty::commutative: return "commutative";
        case VPlusProperty::unital: return "unital";
        case VPlusProperty::contractive: return "contractive";
        case VPlusProperty::expansive: return "expansive";
        case VPlusProperty::monoidal: return "monoidal";
        case VPlusProperty::right_associative: return "right-associative";
        case VPlusProperty::left_commutative: return "left-commutative";
    }
    return "";
}

bool vplus_property_needs_relation(VPlusProperty p) {
    return p == VPlusProperty::right_associative || p == VPlusProperty::left_commutative;
}

ResiduatedWitness check_vplus_property(const KAlgebra& a, const ModalRelation* r,
                                       VPlusProperty property, std::size_t max_dim,
                                       const EnumLimits& limits) {
    if (!a.field().finite()) {
        throw std::domain_error("subspace-lattice checks require a finite field");
    }
    if (a.dim() > max_dim) {
        throw std::domain_error("subspace enumeration bound exceeded: dim " +
                                std::to_string(a.dim()) + " > " + std::to_string(max_dim));
    }
    if (vplus_property_needs_relation(property) && !r) {
        throw std::invalid_argument(to_string(property) + " needs a modal relation");
    }

    std::vector<Subspace> spaces = all_subspaces(a.field(), a.dim(), max_dim);
    const std::size_t count = spaces.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i) index[spaces[i].key()] = i;
    auto idx_of = [&](const Subspace& s) { return index.at(s.key()); };

    std::vector<std::size_t> tens(count * count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            tens[i * count + j] = idx_of(tensor(a, spaces[i], spaces[j]));
        }
    }
    std::vector<std::size_t> dia_idx;
    if (vplus_property_needs_relation(property)) {
        dia_idx.resize(count);
        for (std::size_t i = 0; i < count; ++i) dia_idx[i] = idx_of(dia(*r, spaces[i], limits));
    }

    ResiduatedWitness out{property, true, {}, ""};
    auto fail = [&](std::vector<Subspace> ce, std::string detail) {
        out.holds = false;
        out.counterexample = std::move(ce);
        out.detail = std::move(detail);
    };

    switch (property) {
        case VPlusProperty::commutative:
            for (std::size_t i = 0; i < count && out.holds; ++i) {
                for (std::size_t j = 0; j < count && out.holds; ++j) {
                    if (tens[i * count + j] != tens[j * count + i]) {
                        fail({spaces[i], spaces[j]}, "U(x)W != W(x)U");
                    }
                }
            }
            break;
        case VPlusProperty::associative:
            for (std::size_t i = 0; i < count && out.holds; ++i) {
                for (std::size_t j = 0; j < count && out.holds; ++j) {
                    for (std::size_t k = 0; k < count && out.holds; ++k) {
                        if (tens[tens[i * count + j] * count + k] !=
                            tens[i * count + tens[j * count + k]]) {
                            fail({spaces[i], spaces[j], spaces[k]},
                                 "(U(x)W)(x)Z != U(x)(W(x)Z)");
                        }
                    }
                }
            }
            break;
        case VPlusProperty::unital: {
            bool found = false;
            for (std::size_t e = 0; e < count && !found; ++e) {
                if (spaces[e].rank() != 1) continue;
                bool ok = true;
                for (std::size_t i = 0; i < count && ok; ++i) {
                    if (tens[i * count + e] != i || tens[e * count + i] != i) ok = false;
                }
                if (ok) {
                    found = true;
                    out.detail = "unit subspace " + spaces[e].to_string();
                }
            }
            if (!found) fail({}, "no 1-dimensional subspace is a two-sided unit");
            break;
        }
        case VPlusProperty::contractive:
            for (std::size_t i = 0; i < count && out.holds; ++i) {
                if (!spaces[tens[i * count + i]].contains(spaces[i])) {
                    fail({spaces[i]}, "U not included in U(x)U");
                }
            }
            break;
        case VPlusProperty::expansive:
            for (std::size_t i = 0; i < count && out.holds; ++i) {
                if (!spaces[i].contains(spaces[tens[i * count + i]])) {
                    fail({spaces[i]}, "U(x)U not included in U");
                }
            }
            break;
        case VPlusProperty::monoidal: {
            ResiduatedWitness assoc =
                check_vplus_property(a, r, VPlusProperty::associative, max_dim, limits);
            if (!assoc.holds) {
                fail(std::move(assoc.counterexample), "not associative: " + assoc.detail);
                break;
            }
            ResiduatedWitness unital =
                check_vplus_property(a, r, VPlusProperty::unital, max_dim, limits);
            if (!unital.holds) {
                fail(std::move(unital.counterexample), "not unital: " + unital.detail);
                break;
            }
            out.detail = unital.detail;
            break;
        }
        case VPlusProperty::right_associative:
            for (std::size_t i = 0; i < count && out.holds; ++i) {
                for (std::size_t j = 0; j < count && out.holds; ++j) {
                    for (std::size_t k = 0; k < count && out.holds; ++k) {
                        std::size_t lhs = tens[tens[i * count + j] * count + dia_idx[k]];
                        std::size_t rhs = tens[i * count + tens[j * count + dia_idx[k]]];
                        if (!spaces[rhs].contains(spaces[lhs])) {
                            fail({spaces[i], spaces[j], spaces[k]},
                                 "(U(x)W)(x)diaZ not included in U(x)(W(x)diaZ)");
                        }
                    }
                }
            }
            break;
        case VPlusProperty::left_commutative:
            for (std::size_t i = 0; i < count && out.holds; ++i) {
                for (std::size_t j = 0; j < count && out.holds; ++j) {
                    for (std::size_t k = 0; k < count && out.holds; ++k) {
                        std::size_t lhs = tens[tens[i * count + j] * count + dia_idx[k]];
                        std::size_t rhs = tens[tens[i * count + dia_idx[k]] * count + j];
                        if (!spaces[rhs].contains(spaces[lhs])) {
                            fail({spaces[i], spaces[j], spaces[k]},
                                 "(U(x)V)(x)diaW not included in (U(x)diaW)(x)V");
                        }
                    }
                }
            }
            break;
    }
    return out;
}

namespace {

Subspace eval_formula(const KAlgebra& a, const ModalRelation* r, const Valuation& val,
                      const FormulaPtr& f, const EnumLimits& limits) {
    switch (f->kind()) {
        case Formula::Kind::atom: {
            auto it = val.find(f->atom_name());
            if (it == val.end()) throw std::invalid_argument("unbound atom: " + f->atom_name());
            return it->second;
        }
        case Formula::Kind::tensor:
            return tensor(a, eval_formula(a, r, val, f->left(), limits),
                          eval_formula(a, r, val, f->right(), limits));
        case Formula::Kind::lres:
            return lres(a, eval_formula(a, r, val, f->left(), limits),
                        eval_formula(a, r, val, f->right(), limits));
        case Formula::Kind::rres:
            return rres(a, eval_formula(a, r, val, f->left(), limits),
                        eval_formula(a, r, val, f->right(), limits));
        case Formula::Kind::dia:
        case Formula::Kind::box: {
            if (!r) throw std::invalid_argument("modal operator needs a relation");
            Subspace arg = eval_formula(a, r, val, f->child(), limits);
            return f->kind() == Formula::Kind::dia ? dia(*r, arg, limits) : box(*r, arg, limits);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Subspace eval(const KAlgebra& a, const ModalRelation* r, const Valuation& val,
              const FormulaPtr& formula, const EnumLimits& limits) {
    return eval_formula(a, r, val, formula, limits);
}

Subspace eval(const KAlgebra& a, const ModalRelation* r, const Valuation& val,
              const StructurePtr& s, const EnumLimits& limits) {
    switch (s->kind()) {
        case Structure::Kind::leaf: return eval_formula(a, r, val, s->formula(), limits);
        case Structure::Kind::fusion:
            return tensor(a, eval(a, r, val, s->left(), limits),
                          eval(a, r, val, s->right(), limits));
        case Structure::Kind::sldiv:
            return lres(a, eval(a, r, val, s->left(), limits),
                        eval(a, r, val, s->right(), limits));
        case Structure::Kind::srdiv:
            return rres(a, eval(a, r, val, s->left(), limits),
                        eval(a, r, val, s->right(), limits));
        case Structure::Kind::sdia:
        case Structure::Kind::sbox: {
            if (!r) throw std::invalid_argument("structural modality needs a relation");
            Subspace arg = eval(a, r, val, s->child(), limits);
            return s->kind() == Structure::Kind::sdia ? dia(*r, arg, limits)
                                                      : box(*r, arg, limits);
        }
    }
    throw std::logic_error("unreachable");
}

bool holds(const KAlgebra& a, const ModalRelation* r, const Valuation& val, const Sequent& seq,
           const EnumLimits& limits) {
    return eval(a, r, val, seq.rhs, limits).contains(eval(a, r, val, seq.lhs, limits));
}

}  // namespace lambekws
