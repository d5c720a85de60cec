#include "lambekws/poset.hpp"

#include <stdexcept>

namespace lambekws {

namespace {

std::string elem(std::size_t i) { return "p" + std::to_string(i + 1); }

}  // namespace

PosetReport validate_poset(const ModalResiduatedPoset& p) {
    const std::size_t n = p.n;
    if (p.leq.size() != n || p.otimes.size() != n || p.lres.size() != n || p.rres.size() != n ||
        p.dia.size() != n || p.box.size() != n) {
        return {false, "tables are not total"};
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.leq[i][i]) return {false, "reflexivity fails at " + elem(i)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && p.leq[i][j] && p.leq[j][i]) {
                return {false, "antisymmetry fails at " + elem(i) + "," + elem(j)};
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k]) {
                    return {false,
                            "transitivity fails at " + elem(i) + "," + elem(j) + "," + elem(k)};
                }
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                bool prod = p.leq[p.otimes[x][y]][z];
                bool viaR = p.leq[x][p.rres[z][y]];
                bool viaL = p.leq[y][p.lres[x][z]];
                if (prod != viaR || prod != viaL) {
                    return {false, "residuation fails at x=" + elem(x) + " y=" + elem(y) +
                                       " z=" + elem(z)};
                }
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (p.leq[p.dia[x]][y] != p.leq[x][p.box[y]]) {
                return {false, "adjunction fails at x=" + elem(x) + " y=" + elem(y)};
            }
        }
    }
    return {true, ""};
}

std::size_t poset_eval(const ModalResiduatedPoset& p, const PosetValuation& val,
                       const FormulaPtr& f) {
    switch (f->kind()) {
        case Formula::Kind::atom: {
            auto it = val.find(f->atom_name());
            if (it == val.end()) throw std::invalid_argument("unbound atom: " + f->atom_name());
            if (it->second >= p.n) throw std::invalid_argument("valuation index out of range");
            return it->second;
        }
        case Formula::Kind::tensor:
            return p.otimes[poset_eval(p, val, f->left())][poset_eval(p, val, f->right())];
        case Formula::Kind::lres:
            return p.lres[poset_eval(p, val, f->left())][poset_eval(p, val, f->right())];
        case Formula::Kind::rres:
            return p.rres[poset_eval(p, val, f->left())][poset_eval(p, val, f->right())];
        case Formula::Kind::dia: return p.dia[poset_eval(p, val, f->child())];
        case Formula::Kind::box: return p.box[poset_eval(p, val, f->child())];
    }
    throw std::logic_error("unreachable");
}

std::size_t poset_eval(const ModalResiduatedPoset& p, const PosetValuation& val,
                       const StructurePtr& s) {
    switch (s->kind()) {
        case Structure::Kind::leaf: return poset_eval(p, val, s->formula());
        case Structure::Kind::fusion:
            return p.otimes[poset_eval(p, val, s->left())][poset_eval(p, val, s->right())];
        case Structure::Kind::sldiv:
            return p.lres[poset_eval(p, val, s->left())][poset_eval(p, val, s->right())];
        case Structure::Kind::srdiv:
            return p.rres[poset_eval(p, val, s->left())][poset_eval(p, val, s->right())];
        case Structure::Kind::sdia: return p.dia[poset_eval(p, val, s->child())];
        case Structure::Kind::sbox: return p.box[poset_eval(p, val, s->child())];
    }
    throw std::logic_error("unreachable");
}

bool poset_holds(const ModalResiduatedPoset& p, const PosetValuation& val, const Sequent& seq) {
    return p.leq[poset_eval(p, val, seq.lhs)][poset_eval(p, val, seq.rhs)];
}

ModalResiduatedPoset chain_poset(std::size_t n) {
    if (n == 0) throw std::invalid_argument("empty poset");
    ModalResiduatedPoset p;
    p.n = n;
    p.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) p.leq[i][j] = true;
    }
    p.otimes.assign(n, std::vector<std::size_t>(n, 0));
    p.lres.assign(n, std::vector<std::size_t>(n, 0));
    p.rres.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            p.otimes[x][y] = std::min(x, y);
            // Relative implication on a chain: top if x <= z, else z.
            p.lres[x][y] = x <= y ? n - 1 : y;
            p.rres[x][y] = y <= x ? n - 1 : x;
        }
    }
    p.dia.resize(n);
    p.box.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.dia[i] = p.box[i] = i;
    return p;
}

namespace {

// Enumeration of valid modal residuated posets: reflexive antisymmetric
// transitive leq patterns, then otimes tables whose residuals exist, then dia
// tables whose adjoint exists. Deterministic lexicographic order throughout.

std::vector<std::vector<std::vector<bool>>> all_partial_orders(std::size_t n) {
    std::vector<std::vector<std::vector<bool>>> out;
    std::size_t off_diag = n * n - n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << off_diag); ++bits) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        std::size_t b = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) {
                    leq[i][j] = true;
                } else {
                    leq[i][j] = bits >> b & 1;
                    ++b;
                }
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (i != j && leq[i][j] && leq[j][i]) ok = false;
                for (std::size_t k = 0; k < n && ok; ++k) {
                    if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;
                }
            }
        }
        if (ok) out.push_back(std::move(leq));
    }
    return out;
}

// max of {x | pred(x)} if that set is a nonempty down-set with a greatest
// element; nullopt otherwise.
template <typename Pred>
std::optional<std::size_t> downset_max(const std::vector<std::vector<bool>>& leq, std::size_t n,
                                       Pred pred) {
    std::optional<std::size_t> best;
    for (std::size_t x = 0; x < n; ++x) {
        if (!pred(x)) continue;
        if (!best || leq[*best][x]) best = x;
    }
    if (!best) return std::nullopt;
    for (std::size_t x = 0; x < n; ++x) {
        if (pred(x)) {
            if (!leq[x][*best]) return std::nullopt;  // no greatest element
        } else {
            for (std::size_t y = 0; y < n; ++y) {
                if (pred(y) && leq[x][y]) return std::nullopt;  // not a down-set
            }
        }
    }
    return best;
}

template <typename Visit>
void enumerate_valid_posets(std::size_t n, Visit visit) {
    for (const auto& leq : all_partial_orders(n)) {
        std::vector<std::vector<std::size_t>> otimes(n, std::vector<std::size_t>(n, 0));
        while (true) {
            ModalResiduatedPoset p;
            p.n = n;
            p.leq = leq;
            p.otimes = otimes;
            bool residuated = true;
            p.rres.assign(n, std::vector<std::size_t>(n, 0));
            p.lres.assign(n, std::vector<std::size_t>(n, 0));
            for (std::size_t z = 0; z < n && residuated; ++z) {
                for (std::size_t y = 0; y < n && residuated; ++y) {
                    auto m = downset_max(leq, n,
                                         [&](std::size_t x) { return leq[otimes[x][y]][z]; });
                    if (!m) residuated = false;
                    else p.rres[z][y] = *m;
                }
            }
            for (std::size_t x = 0; x < n && residuated; ++x) {
                for (std::size_t z = 0; z < n && residuated; ++z) {
                    auto m = downset_max(leq, n,
                                         [&](std::size_t y) { return leq[otimes[x][y]][z]; });
                    if (!m) residuated = false;
                    else p.lres[x][z] = *m;
                }
            }

            if (residuated) {
                std::vector<std::size_t> dia(n, 0);
                while (true) {
                    p.dia = dia;
                    bool adjoint = true;
                    p.box.assign(n, 0);
                    for (std::size_t y = 0; y < n && adjoint; ++y) {
                        auto m = downset_max(leq, n,
                                             [&](std::size_t x) { return leq[dia[x]][y]; });
                        if (!m) adjoint = false;
                        else p.box[y] = *m;
                    }
                    if (adjoint && validate_poset(p).valid) {
                        if (visit(p)) return;
                    }
                    std::size_t d = 0;
                    while (d < n && ++dia[d] == n) {
                        dia[d] = 0;
                        ++d;
                    }
                    if (d == n) break;
                }
            }

            std::size_t i = 0, j = 0;
            bool carried = false;
            for (i = 0; i < n && !carried; ++i) {
                for (j = 0; j < n; ++j) {
                    if (++otimes[i][j] < n) {
                        carried = true;
                        break;
                    }
                    otimes[i][j] = 0;
                }
            }
            if (!carried) break;
        }
    }
}

}  // namespace

std::optional<Countermodel> search_countermodel(const Sequent& seq, std::size_t max_size) {
    if (max_size > 3) {
        throw std::domain_error("countermodel search is bounded at size 3");
    }
    std::vector<std::string> atoms = seq.atoms();
    std::optional<Countermodel> found;
    for (std::size_t n = 1; n <= max_size && !found; ++n) {
        enumerate_valid_posets(n, [&](const ModalResiduatedPoset& p) {
            std::vector<std::size_t> pick(atoms.size(), 0);
            while (true) {
                PosetValuation val;
                for (std::size_t i = 0; i < atoms.size(); ++i) val[atoms[i]] = pick[i];
                if (!poset_holds(p, val, seq)) {
                    found = Countermodel{p, val};
                    return true;
                }
                std::size_t d = 0;
                while (d < pick.size() && ++pick[d] == n) {
                    pick[d] = 0;
                    ++d;
                }
                if (d == pick.size()) break;
            }
            return false;
        });
    }
    return found;
}

}  // namespace lambekws
