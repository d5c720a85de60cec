#include "lambekws/formula.hpp"

#include <algorithm>

namespace lambekws {

FormulaPtr Formula::atom(std::string name) {
    return FormulaPtr(new Formula(Kind::atom, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::tensor(FormulaPtr l, FormulaPtr r) {
    return FormulaPtr(new Formula(Kind::tensor, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::lres(FormulaPtr l, FormulaPtr r) {
    return FormulaPtr(new Formula(Kind::lres, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::rres(FormulaPtr l, FormulaPtr r) {
    return FormulaPtr(new Formula(Kind::rres, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::dia(FormulaPtr x) {
    return FormulaPtr(new Formula(Kind::dia, "", std::move(x), nullptr));
}
FormulaPtr Formula::box(FormulaPtr x) {
    return FormulaPtr(new Formula(Kind::box, "", std::move(x), nullptr));
}

void Formula::collect_atoms(std::vector<std::string>& out) const {
    if (kind_ == Kind::atom) {
        if (std::find(out.begin(), out.end(), atom_) == out.end()) out.push_back(atom_);
        return;
    }
    if (left_) left_->collect_atoms(out);
    if (right_) right_->collect_atoms(out);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind_ != b->kind_ || a->atom_ != b->atom_) return false;
    return equal(a->left_, b->left_) && equal(a->right_, b->right_);
}

StructurePtr Structure::leaf(FormulaPtr f) {
    return StructurePtr(new Structure(Kind::leaf, std::move(f), nullptr, nullptr));
}
StructurePtr Structure::fusion(StructurePtr l, StructurePtr r) {
    return StructurePtr(new Structure(Kind::fusion, nullptr, std::move(l), std::move(r)));
}
StructurePtr Structure::sdia(StructurePtr x) {
    return StructurePtr(new Structure(Kind::sdia, nullptr, std::move(x), nullptr));
}
StructurePtr Structure::sldiv(StructurePtr l, StructurePtr r) {
    return StructurePtr(new Structure(Kind::sldiv, nullptr, std::move(l), std::move(r)));
}
StructurePtr Structure::srdiv(StructurePtr l, StructurePtr r) {
    return StructurePtr(new Structure(Kind::srdiv, nullptr, std::move(l), std::move(r)));
}
StructurePtr Structure::sbox(StructurePtr x) {
    return StructurePtr(new Structure(Kind::sbox, nullptr, std::move(x), nullptr));
}

void Structure::collect_atoms(std::vector<std::string>& out) const {
    if (kind_ == Kind::leaf) {
        formula_->collect_atoms(out);
        return;
    }
    if (left_) left_->collect_atoms(out);
    if (right_) right_->collect_atoms(out);
}

bool equal(const StructurePtr& a, const StructurePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind_ != b->kind_) return false;
    if (a->kind_ == Structure::Kind::leaf) return equal(a->formula_, b->formula_);
    return equal(a->left_, b->left_) && equal(a->right_, b->right_);
}

std::vector<std::string> Sequent::atoms() const {
    std::vector<std::string> out;
    lhs->collect_atoms(out);
    rhs->collect_atoms(out);
    return out;
}

bool equal(const Sequent& a, const Sequent& b) {
    return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

std::string key_of(const FormulaPtr& f) {
    switch (f->kind()) {
        case Formula::Kind::atom: return "a'" + f->atom_name() + "'";
        case Formula::Kind::tensor: return "t(" + key_of(f->left()) + key_of(f->right()) + ")";
        case Formula::Kind::lres: return "l(" + key_of(f->left()) + key_of(f->right()) + ")";
        case Formula::Kind::rres: return "r(" + key_of(f->left()) + key_of(f->right()) + ")";
        case Formula::Kind::dia: return "d(" + key_of(f->child()) + ")";
        case Formula::Kind::box: return "b(" + key_of(f->child()) + ")";
    }
    return "";
}

std::string key_of(const StructurePtr& s) {
    switch (s->kind()) {
        case Structure::Kind::leaf: return "F[" + key_of(s->formula()) + "]";
        case Structure::Kind::fusion: return "O(" + key_of(s->left()) + key_of(s->right()) + ")";
        case Structure::Kind::sdia: return "D(" + key_of(s->child()) + ")";
        case Structure::Kind::sldiv: return "L(" + key_of(s->left()) + key_of(s->right()) + ")";
        case Structure::Kind::srdiv: return "R(" + key_of(s->left()) + key_of(s->right()) + ")";
        case Structure::Kind::sbox: return "B(" + key_of(s->child()) + ")";
    }
    return "";
}

std::string key_of(const Sequent& s) { return key_of(s.lhs) + "=>" + key_of(s.rhs); }

}  // namespace lambekws
