#pragma once

// Internal: packed-index view of a small finite vector space, used by the
// exhaustive first-order checkers. Index arithmetic avoids Scalar overhead in
// quantifier loops.

#include <cstdint>
#include <vector>

#include "lambekws/kalgebra.hpp"
#include "lambekws/linalg.hpp"

namespace lambekws::detail {

struct DenseSpace {
    Field field = Field::f2();
    std::size_t dim = 0;
    std::uint64_t p = 2;
    std::uint64_t size = 0;      // p^dim
    std::vector<Vec> vecs;       // index -> vector, mixed-radix order
    std::vector<std::uint32_t> add_tab;    // size*size
    std::vector<std::uint32_t> scale_tab;  // p*size
    std::vector<std::uint32_t> star_tab;   // size*size, only when an algebra is given

    std::uint32_t add(std::uint32_t i, std::uint32_t j) const { return add_tab[i * size + j]; }
    std::uint32_t scale(std::uint64_t s, std::uint32_t i) const {
        return scale_tab[s * size + i];
    }
    std::uint32_t star(std::uint32_t i, std::uint32_t j) const { return star_tab[i * size + j]; }

    /// Does x = a*y have a solution a? (y = 0 admits one iff x = 0.)
    bool proportional(std::uint32_t x, std::uint32_t y) const {
        if (y == 0) return x == 0;
        for (std::uint64_t a = 0; a < p; ++a) {
            if (scale(a, y) == x) return true;
        }
        return false;
    }

    static DenseSpace build(const Field& f, std::size_t dim, const KAlgebra* algebra,
                            std::uint64_t max_size);
};

}  // namespace lambekws::detail
