#pragma once

#include <memory>
#include <string>
#include <vector>

namespace lambekws {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Formulas of the modal non-associative Lambek calculus:
/// A ::= p | A / A | A * A | A \ A | dia A | box A.
class Formula {
public:
    enum class Kind { atom, tensor, lres, rres, dia, box };

    static FormulaPtr atom(std::string name);
    static FormulaPtr tensor(FormulaPtr l, FormulaPtr r);
    /// l \ r (left residual; l is the divisor).
    static FormulaPtr lres(FormulaPtr l, FormulaPtr r);
    /// l / r (right residual; r is the divisor).
    static FormulaPtr rres(FormulaPtr l, FormulaPtr r);
    static FormulaPtr dia(FormulaPtr x);
    static FormulaPtr box(FormulaPtr x);

    Kind kind() const { return kind_; }
    const std::string& atom_name() const { return atom_; }
    const FormulaPtr& left() const { return left_; }
    const FormulaPtr& right() const { return right_; }
    const FormulaPtr& child() const { return left_; }

    bool is_binary() const {
        return kind_ == Kind::tensor || kind_ == Kind::lres || kind_ == Kind::rres;
    }

    /// Atoms occurring in the formula, in first-occurrence order.
    void collect_atoms(std::vector<std::string>& out) const;

private:
    Formula(Kind k, std::string atom, FormulaPtr l, FormulaPtr r)
        : kind_(k), atom_(std::move(atom)), left_(std::move(l)), right_(std::move(r)) {}
    Kind kind_;
    std::string atom_;
    FormulaPtr left_, right_;
    friend bool equal(const FormulaPtr&, const FormulaPtr&);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

class Structure;
using StructurePtr = std::shared_ptr<const Structure>;

/// Structures: X ::= A | X ,(x) X | <X> | X //v X | X \\v X | [X], where the
/// binary comma is structural fusion, <.> structural diamond, [.] structural
/// box, and //v, \\v the structural residuals.
class Structure {
public:
    enum class Kind { leaf, fusion, sdia, sldiv, srdiv, sbox };

    static StructurePtr leaf(FormulaPtr f);
    static StructurePtr fusion(StructurePtr l, StructurePtr r);
    static StructurePtr sdia(StructurePtr x);
    /// l \\v r: structural left residual (l is the divisor).
    static StructurePtr sldiv(StructurePtr l, StructurePtr r);
    /// l //v r: structural right residual (r is the divisor).
    static StructurePtr srdiv(StructurePtr l, StructurePtr r);
    static StructurePtr sbox(StructurePtr x);

    Kind kind() const { return kind_; }
    const FormulaPtr& formula() const { return formula_; }
    const StructurePtr& left() const { return left_; }
    const StructurePtr& right() const { return right_; }
    const StructurePtr& child() const { return left_; }

    void collect_atoms(std::vector<std::string>& out) const;

private:
    Structure(Kind k, FormulaPtr f, StructurePtr l, StructurePtr r)
        : kind_(k), formula_(std::move(f)), left_(std::move(l)), right_(std::move(r)) {}
    Kind kind_;
    FormulaPtr formula_;
    StructurePtr left_, right_;
    friend bool equal(const StructurePtr&, const StructurePtr&);
};

bool equal(const StructurePtr& a, const StructurePtr& b);

struct Sequent {
    StructurePtr lhs;
    StructurePtr rhs;
    std::vector<std::string> atoms() const;
};

bool equal(const Sequent& a, const Sequent& b);

/// Unambiguous serializations, usable as container keys.
std::string key_of(const FormulaPtr& f);
std::string key_of(const StructurePtr& s);
std::string key_of(const Sequent& s);

}  // namespace lambekws
