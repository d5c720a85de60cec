#include "lambekws/embedding.hpp"

#include <stdexcept>

namespace lambekws {

namespace {

std::size_t basis_index(std::size_t n, std::size_t m, std::size_t j) { return m * n + j; }

std::string basis_name(std::size_t m, std::size_t j) {
    return "e_" + std::to_string(m + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

Embedding embed(const ModalResiduatedPoset& p, std::size_t max_n) {
    PosetReport rep = validate_poset(p);
    if (!rep.valid) throw std::invalid_argument("invalid poset: " + rep.violation);
    if (p.n > max_n) {
        throw std::domain_error("embedding bound exceeded: " + std::to_string(p.n) + " > " +
                                std::to_string(max_n));
    }
    const std::size_t n = p.n;
    const std::size_t dim = n * n;
    const Field f2 = Field::f2();

    // Codomain of nu_k: all e(m, j) with p_m <= p_k, ordered by (m, j).
    std::vector<std::vector<std::size_t>> codomain(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
            if (!p.leq[m][k]) continue;
            for (std::size_t j = 0; j < n; ++j) codomain[k].push_back(basis_index(n, m, j));
        }
    }

    std::vector<std::vector<std::vector<std::size_t>>> nu(
        n, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0)));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) nu[k][m][m] = basis_index(n, k, m);
        // Remaining codomain elements (everything below k, excluding the k-th
        // block already placed on the diagonal), row-major over off-diagonal
        // cells, cycling for surjectivity.
        std::vector<std::size_t> remaining;
        for (std::size_t b : codomain[k]) {
            if (b / n != k) remaining.push_back(b);
        }
        const std::vector<std::size_t>& cycle = remaining.empty() ? codomain[k] : remaining;
        std::size_t t = 0;
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t r = 0; r < n; ++r) {
                if (m == r) continue;
                nu[k][m][r] = cycle[t % cycle.size()];
                ++t;
            }
        }
    }

    // Structure constants: e(k, m) * e(l, r) = nu_t(m, r) with p_t = p_k (x) p_l.
    std::vector<std::vector<Vec>> sc(dim, std::vector<Vec>(dim, Vec::zero(f2, dim)));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t l = 0; l < n; ++l) {
                for (std::size_t r = 0; r < n; ++r) {
                    std::size_t t = p.otimes[k][l];
                    sc[basis_index(n, k, m)][basis_index(n, l, r)] =
                        Vec::unit(f2, dim, nu[t][m][r]);
                }
            }
        }
    }
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t j = 0; j < n; ++j) names.push_back(basis_name(m, j));
    }
    KAlgebra algebra(f2, dim, std::move(names), std::move(sc));

    std::vector<Subspace> h;
    h.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Vec> gens;
        for (std::size_t m = 0; m < n; ++m) {
            if (!p.leq[m][k]) continue;
            for (std::size_t j = 0; j < n; ++j) gens.push_back(Vec::unit(f2, dim, basis_index(n, m, j)));
        }
        h.push_back(Subspace::span(f2, dim, gens));
    }

    return Embedding{p, std::move(algebra), std::move(h), std::move(nu),
                     ModalRelation::embedding(p)};
}

bool EmbeddingReport::all_pass() const {
    for (const EmbeddingClause& c : clauses) {
        if (!c.pass) return false;
    }
    return true;
}

EmbeddingReport verify_embedding(const Embedding& e, const EnumLimits& limits) {
    const ModalResiduatedPoset& p = e.source;
    const std::size_t n = p.n;
    EmbeddingReport report;

    auto elem = [&](std::size_t i) { return "p" + std::to_string(i + 1); };

    EmbeddingClause order{"order-embedding", true, ""};
    for (std::size_t a = 0; a < n && order.pass; ++a) {
        for (std::size_t b = 0; b < n && order.pass; ++b) {
            if (p.leq[a][b] != e.h[b].contains(e.h[a])) {
                order.pass = false;
                order.witness = elem(a) + " vs " + elem(b);
            }
        }
    }
    report.clauses.push_back(order);

    EmbeddingClause otimes_clause{"otimes", true, ""};
    for (std::size_t a = 0; a < n && otimes_clause.pass; ++a) {
        for (std::size_t b = 0; b < n && otimes_clause.pass; ++b) {
            if (!(e.h[p.otimes[a][b]] == tensor(e.algebra, e.h[a], e.h[b]))) {
                otimes_clause.pass = false;
                otimes_clause.witness = elem(a) + " (x) " + elem(b);
            }
        }
    }
    report.clauses.push_back(otimes_clause);

    EmbeddingClause lres_clause{"lres", true, ""};
    for (std::size_t a = 0; a < n && lres_clause.pass; ++a) {
        for (std::size_t b = 0; b < n && lres_clause.pass; ++b) {
            if (!(e.h[p.lres[a][b]] == lres(e.algebra, e.h[a], e.h[b]))) {
                lres_clause.pass = false;
                lres_clause.witness = elem(a) + " \\ " + elem(b);
            }
        }
    }
    report.clauses.push_back(lres_clause);

    EmbeddingClause rres_clause{"rres", true, ""};
    for (std::size_t a = 0; a < n && rres_clause.pass; ++a) {
        for (std::size_t b = 0; b < n && rres_clause.pass; ++b) {
            if (!(e.h[p.rres[a][b]] == rres(e.algebra, e.h[a], e.h[b]))) {
                rres_clause.pass = false;
                rres_clause.witness = elem(a) + " / " + elem(b);
            }
        }
    }
    report.clauses.push_back(rres_clause);

    EmbeddingClause dia_clause{"dia", true, ""};
    for (std::size_t a = 0; a < n && dia_clause.pass; ++a) {
        if (!(e.h[p.dia[a]] == dia(e.relation, e.h[a], limits))) {
            dia_clause.pass = false;
            dia_clause.witness = "dia " + elem(a);
        }
    }
    report.clauses.push_back(dia_clause);

    EmbeddingClause box_clause{"box", true, ""};
    for (std::size_t a = 0; a < n && box_clause.pass; ++a) {
        if (!(e.h[p.box[a]] == box(e.relation, e.h[a], limits))) {
            box_clause.pass = false;
            box_clause.witness = "box " + elem(a);
        }
    }
    report.clauses.push_back(box_clause);

    return report;
}

}  // namespace lambekws
