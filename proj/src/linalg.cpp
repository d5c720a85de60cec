#include "lambekws/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lambekws {

namespace {

void check_vec(const Field& f, std::size_t dim, const Vec& v, const char* what) {
    if (!(v.field() == f)) {
        throw std::invalid_argument(std::string(what) + ": field mismatch (" + v.field().to_string() +
                                    " vs " + f.to_string() + ")");
    }
    if (v.dim() != dim) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(v.dim()) + " vs " + std::to_string(dim) + ")");
    }
}

std::uint64_t pow_sz(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

Vec::Vec(const Field& f, std::vector<Scalar> coords) : field_(f), coords_(std::move(coords)) {
    for (const Scalar& c : coords_) {
        if (!(c.field() == field_)) throw std::invalid_argument("vector coordinate field mismatch");
    }
}

Vec Vec::zero(const Field& f, std::size_t dim) {
    return Vec(f, std::vector<Scalar>(dim, Scalar::zero(f)));
}

Vec Vec::unit(const Field& f, std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::out_of_range("unit vector index out of range");
    std::vector<Scalar> c(dim, Scalar::zero(f));
    c[i] = Scalar::one(f);
    return Vec(f, std::move(c));
}

Vec Vec::from_ints(const Field& f, const std::vector<long long>& coords) {
    std::vector<Scalar> c;
    c.reserve(coords.size());
    for (long long v : coords) c.push_back(Scalar::from_int(f, v));
    return Vec(f, std::move(c));
}

Vec Vec::operator+(const Vec& o) const {
    check_vec(field_, dim(), o, "vector addition");
    std::vector<Scalar> c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(coords_[i] + o.coords_[i]);
    return Vec(field_, std::move(c));
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
    std::vector<Scalar> c;
    c.reserve(dim());
    for (const Scalar& x : coords_) c.push_back(-x);
    return Vec(field_, std::move(c));
}

Vec Vec::scaled(const Scalar& a) const {
    std::vector<Scalar> c;
    c.reserve(dim());
    for (const Scalar& x : coords_) c.push_back(x * a);
    return Vec(field_, std::move(c));
}

bool Vec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Vec::operator==(const Vec& o) const {
    if (!(field_ == o.field_) || dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (coords_[i] != o.coords_[i]) return false;
    }
    return true;
}

std::string Vec::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) s += ",";
        s += coords_[i].to_string();
    }
    return s + ")";
}

std::optional<Scalar> solve_proportional(const Vec& x, const Vec& y) {
    check_vec(x.field(), x.dim(), y, "proportionality");
    if (y.is_zero()) {
        if (x.is_zero()) return Scalar::one(x.field());
        return std::nullopt;
    }
    std::size_t i = 0;
    while (y[i].is_zero()) ++i;
    Scalar a = x[i] / y[i];
    if (x == y.scaled(a)) return a;
    return std::nullopt;
}

LinearMap::LinearMap(const Field& f, std::vector<std::vector<Scalar>> rows)
    : field_(f), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != rows_.size()) throw std::invalid_argument("linear map must be square");
        for (const Scalar& x : r) {
            if (!(x.field() == field_)) throw std::invalid_argument("matrix entry field mismatch");
        }
    }
}

LinearMap LinearMap::identity(const Field& f, std::size_t dim) {
    std::vector<std::vector<Scalar>> rows(dim, std::vector<Scalar>(dim, Scalar::zero(f)));
    for (std::size_t i = 0; i < dim; ++i) rows[i][i] = Scalar::one(f);
    return LinearMap(f, std::move(rows));
}

LinearMap LinearMap::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Scalar>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        row.reserve(r.size());
        for (long long v : r) row.push_back(Scalar::from_int(f, v));
        m.push_back(std::move(row));
    }
    return LinearMap(f, std::move(m));
}

LinearMap LinearMap::from_columns(const Field& f, const std::vector<Vec>& cols) {
    std::size_t dim = cols.size();
    std::vector<std::vector<Scalar>> rows(dim, std::vector<Scalar>(dim, Scalar::zero(f)));
    for (std::size_t c = 0; c < dim; ++c) {
        check_vec(f, dim, cols[c], "matrix column");
        for (std::size_t r = 0; r < dim; ++r) rows[r][c] = cols[c][r];
    }
    return LinearMap(f, std::move(rows));
}

Vec LinearMap::apply(const Vec& v) const {
    check_vec(field_, dim(), v, "linear map application");
    std::vector<Scalar> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t c = 0; c < dim(); ++c) acc = acc + rows_[r][c] * v[c];
        out.push_back(acc);
    }
    return Vec(field_, std::move(out));
}

bool LinearMap::operator==(const LinearMap& o) const {
    return field_ == o.field_ && rows_ == o.rows_;
}

std::string LinearMap::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = 0; c < dim(); ++c) {
            if (c) s += " ";
            s += rows_[r][c].to_string();
        }
        s += "\n";
    }
    return s;
}

RrefResult rref(const Field& f, std::size_t dim, const std::vector<Vec>& rows) {
    std::vector<std::vector<Scalar>> m;
    m.reserve(rows.size());
    for (const Vec& r : rows) {
        check_vec(f, dim, r, "rref row");
        std::vector<Scalar> row;
        row.reserve(dim);
        for (std::size_t j = 0; j < dim; ++j) row.push_back(r[j]);
        m.push_back(std::move(row));
    }

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < dim && pivot_row < m.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[pivot_row], m[sel]);

        Scalar inv = m[pivot_row][col].inverse();
        for (std::size_t j = col; j < dim; ++j) m[pivot_row][j] = m[pivot_row][j] * inv;

        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == pivot_row || m[i][col].is_zero()) continue;
            Scalar factor = m[i][col];
            for (std::size_t j = col; j < dim; ++j) {
                m[i][j] = m[i][j] - factor * m[pivot_row][j];
            }
        }
        ++pivot_row;
    }

    RrefResult out;
    out.rank = pivot_row;
    out.basis.reserve(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) out.basis.emplace_back(f, std::move(m[i]));
    return out;
}

std::vector<Vec> kernel_basis(const Field& f, std::size_t dim, const std::vector<Vec>& rows) {
    RrefResult r = rref(f, dim, rows);

    std::vector<std::size_t> pivot_col_of_row(r.rank);
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::size_t c = 0;
        while (r.basis[i][c].is_zero()) ++c;
        pivot_col_of_row[i] = c;
        is_pivot[c] = true;
    }

    std::vector<Vec> out;
    for (std::size_t freec = 0; freec < dim; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Scalar> x(dim, Scalar::zero(f));
        x[freec] = Scalar::one(f);
        for (std::size_t i = 0; i < r.rank; ++i) {
            x[pivot_col_of_row[i]] = -r.basis[i][freec];
        }
        out.emplace_back(f, std::move(x));
    }
    return out;
}

Subspace::Subspace(const Field& f, std::size_t dim, std::vector<Vec> basis)
    : field_(f), dim_(dim), basis_(std::move(basis)) {}

Subspace Subspace::zero(const Field& f, std::size_t dim) { return Subspace(f, dim, {}); }

Subspace Subspace::full(const Field& f, std::size_t dim) {
    std::vector<Vec> b;
    b.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) b.push_back(Vec::unit(f, dim, i));
    return Subspace(f, dim, std::move(b));
}

Subspace Subspace::span(const Field& f, std::size_t dim, const std::vector<Vec>& vs) {
    RrefResult r = rref(f, dim, vs);
    return Subspace(f, dim, std::move(r.basis));
}

bool Subspace::contains(const Vec& v) const {
    check_vec(field_, dim_, v, "membership");
    // Reduce v by the echelon basis; v is a member iff the residue is zero.
    Vec residue = v;
    for (const Vec& b : basis_) {
        std::size_t c = 0;
        while (b[c].is_zero()) ++c;
        if (!residue[c].is_zero()) residue = residue - b.scaled(residue[c]);
    }
    return residue.is_zero();
}

bool Subspace::contains(const Subspace& s) const {
    for (const Vec& b : s.basis_) {
        if (!contains(b)) return false;
    }
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && basis_ == o.basis_;
}

Subspace Subspace::join(const Subspace& o) const {
    if (!(field_ == o.field_) || dim_ != o.dim_) throw std::invalid_argument("join: space mismatch");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, dim_, rows);
}

Subspace Subspace::annihilator() const {
    return span(field_, dim_, kernel_basis(field_, dim_, basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (!(field_ == o.field_) || dim_ != o.dim_) {
        throw std::invalid_argument("intersect: space mismatch");
    }
    // S cap T is the double annihilator of the combined annihilators.
    std::vector<Vec> rows = annihilator().basis();
    const std::vector<Vec> other = o.annihilator().basis();
    rows.insert(rows.end(), other.begin(), other.end());
    return span(field_, dim_, kernel_basis(field_, dim_, rows));
}

std::vector<Vec> Subspace::elements() const {
    if (!field_.finite()) throw std::domain_error("elements(): infinite field");
    std::uint64_t p = field_.modulus();
    std::uint64_t count = pow_sz(p, rank());
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Vec v = Vec::zero(field_, dim_);
        std::uint64_t rest = idx;
        for (const Vec& b : basis_) {
            std::uint64_t digit = rest % p;
            rest /= p;
            if (digit) v = v + b.scaled(Scalar::from_int(field_, static_cast<long long>(digit)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string Subspace::to_string() const {
    if (basis_.empty()) return "{0}";
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ", ";
        s += basis_[i].to_string();
    }
    return s + "}";
}

std::string Subspace::key() const {
    std::string s = field_.to_string() + "^" + std::to_string(dim_) + ":";
    for (const Vec& b : basis_) s += b.to_string();
    return s;
}

Subspace solve_membership_constraints(
    const Field& f, std::size_t dim,
    const std::vector<std::pair<LinearMap, Subspace>>& constraints) {
    // map(u) in S  iff  (C M) u = 0 for C the annihilator of S; stack all
    // constraint rows and take the kernel.
    std::vector<Vec> rows;
    for (const auto& [map, space] : constraints) {
        if (map.dim() != dim || space.ambient_dim() != dim) {
            throw std::invalid_argument("membership constraint dimension mismatch");
        }
        Subspace cokernel = space.annihilator();
        for (const Vec& c : cokernel.basis()) {
            std::vector<Scalar> row;
            row.reserve(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t k = 0; k < dim; ++k) acc = acc + c[k] * map.at(k, j);
                row.push_back(acc);
            }
            rows.emplace_back(f, std::move(row));
        }
    }
    return Subspace::span(f, dim, kernel_basis(f, dim, rows));
}

SubspaceEnumerator::SubspaceEnumerator(const Field& f, std::size_t dim, std::size_t dim_bound)
    : field_(f), dim_(dim), rank_(0) {
    if (!f.finite()) throw std::domain_error("subspace enumeration requires a finite field");
    if (dim > dim_bound) {
        throw std::domain_error("subspace enumeration bound exceeded: dim " + std::to_string(dim) +
                                " > " + std::to_string(dim_bound));
    }
}

// Free entries of the echelon shape with the current pivot set: positions
// (i, c) with c > pivots_[i] and c not a pivot column.
static std::vector<std::size_t> shape_free_slots(const std::vector<std::size_t>& pivots,
                                                 std::size_t dim) {
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t c = pivots[i] + 1; c < dim; ++c) {
            if (!is_pivot[c]) slots.push_back(i * dim + c);
        }
    }
    return slots;
}

Subspace SubspaceEnumerator::current() const {
    std::vector<Vec> rows;
    std::vector<std::vector<Scalar>> m(rank_, std::vector<Scalar>(dim_, Scalar::zero(field_)));
    for (std::size_t i = 0; i < rank_; ++i) m[i][pivots_[i]] = Scalar::one(field_);
    for (std::size_t s = 0; s < free_slots_.size(); ++s) {
        std::size_t slot = free_slots_[s];
        m[slot / dim_][slot % dim_] = Scalar::from_int(field_, assignment_[s]);
    }
    rows.reserve(rank_);
    for (auto& row : m) rows.emplace_back(field_, std::move(row));
    return Subspace::span(field_, dim_, rows);
}

bool SubspaceEnumerator::advance_assignment() {
    std::uint32_t p = field_.modulus();
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        if (++assignment_[i] < p) return true;
        assignment_[i] = 0;
    }
    return false;
}

bool SubspaceEnumerator::advance_pivots() {
    // Next combination of `rank_` pivot columns out of dim_, else next rank.
    while (true) {
        if (!pivots_.empty()) {
            std::size_t i = pivots_.size();
            while (i > 0) {
                --i;
                if (pivots_[i] + (pivots_.size() - i) <= dim_ - 1) {
                    ++pivots_[i];
                    for (std::size_t j = i + 1; j < pivots_.size(); ++j) {
                        pivots_[j] = pivots_[j - 1] + 1;
                    }
                    free_slots_ = shape_free_slots(pivots_, dim_);
                    assignment_.assign(free_slots_.size(), 0);
                    return true;
                }
            }
        }
        if (rank_ == dim_) return false;
        ++rank_;
        pivots_.resize(rank_);
        std::iota(pivots_.begin(), pivots_.end(), 0);
        free_slots_ = shape_free_slots(pivots_, dim_);
        assignment_.assign(free_slots_.size(), 0);
        return true;
    }
}

std::optional<Subspace> SubspaceEnumerator::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        return Subspace::zero(field_, dim_);  // rank 0
    }
    if (!assignment_.empty() && advance_assignment()) return current();
    if (!advance_pivots()) {
        done_ = true;
        return std::nullopt;
    }
    return current();
}

std::vector<Subspace> all_subspaces(const Field& f, std::size_t dim, std::size_t dim_bound) {
    SubspaceEnumerator e(f, dim, dim_bound);
    std::vector<Subspace> out;
    while (auto s = e.next()) out.push_back(std::move(*s));
    return out;
}

std::vector<Vec> all_vectors(const Field& f, std::size_t dim, std::size_t space_bound) {
    if (!f.finite()) throw std::domain_error("vector enumeration requires a finite field");
    std::uint64_t p = f.modulus();
    std::uint64_t count = pow_sz(p, dim);
    if (count > space_bound) {
        throw std::domain_error("vector enumeration bound exceeded: " + std::to_string(count) +
                                " > " + std::to_string(space_bound));
    }
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(unpack_vector(f, dim, i));
    return out;
}

std::uint64_t pack_vector(const Vec& v) {
    std::uint64_t p = v.field().modulus();
    std::uint64_t idx = 0;
    for (std::size_t i = v.dim(); i-- > 0;) idx = idx * p + v[i].residue();
    return idx;
}

Vec unpack_vector(const Field& f, std::size_t dim, std::uint64_t index) {
    std::uint64_t p = f.modulus();
    std::vector<Scalar> c;
    c.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        c.push_back(Scalar::from_int(f, static_cast<long long>(index % p)));
        index /= p;
    }
    return Vec(f, std::move(c));
}

}  // namespace lambekws
