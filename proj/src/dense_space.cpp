#include "dense_space.hpp"

#include <stdexcept>

namespace lambekws::detail {

DenseSpace DenseSpace::build(const Field& f, std::size_t dim, const KAlgebra* algebra,
                             std::uint64_t max_size) {
    if (!f.finite()) throw std::domain_error("exhaustive check requires a finite field");
    DenseSpace ds;
    ds.field = f;
    ds.dim = dim;
    ds.p = f.modulus();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < dim; ++i) size *= ds.p;
    if (size > max_size) {
        throw std::domain_error("enumeration bound exceeded: |V| = " + std::to_string(size) +
                                " > " + std::to_string(max_size));
    }
    ds.size = size;
    ds.vecs = all_vectors(f, dim, size);

    ds.add_tab.resize(size * size);
    for (std::uint64_t i = 0; i < size; ++i) {
        for (std::uint64_t j = 0; j <= i; ++j) {
            // Digit-wise addition mod p.
            std::uint64_t a = i, b = j, out = 0, place = 1;
            for (std::size_t d = 0; d < dim; ++d) {
                out += (a % ds.p + b % ds.p) % ds.p * place;
                a /= ds.p;
                b /= ds.p;
                place *= ds.p;
            }
            ds.add_tab[i * size + j] = static_cast<std::uint32_t>(out);
            ds.add_tab[j * size + i] = static_cast<std::uint32_t>(out);
        }
    }

    ds.scale_tab.resize(ds.p * size);
    for (std::uint64_t s = 0; s < ds.p; ++s) {
        for (std::uint64_t i = 0; i < size; ++i) {
            std::uint64_t a = i, out = 0, place = 1;
            for (std::size_t d = 0; d < dim; ++d) {
                out += a % ds.p * s % ds.p * place;
                a /= ds.p;
                place *= ds.p;
            }
            ds.scale_tab[s * size + i] = static_cast<std::uint32_t>(out);
        }
    }

    if (algebra) {
        if (algebra->dim() != dim || !(algebra->field() == f)) {
            throw std::invalid_argument("dense space / algebra mismatch");
        }
        ds.star_tab.resize(size * size);
        for (std::uint64_t i = 0; i < size; ++i) {
            for (std::uint64_t j = 0; j < size; ++j) {
                ds.star_tab[i * size + j] =
                    static_cast<std::uint32_t>(pack_vector(algebra->star(ds.vecs[i], ds.vecs[j])));
            }
        }
    }
    return ds;
}

}  // namespace lambekws::detail
