#include <sstream>

#include "lambekws/prover.hpp"

namespace lambekws {

namespace {

std::string latex_formula(const FormulaPtr& f, bool wrap_binary) {
    switch (f->kind()) {
        case Formula::Kind::atom: return "\\mathit{" + f->atom_name() + "}";
        case Formula::Kind::dia: return "\\Diamond " + latex_formula(f->child(), true);
        case Formula::Kind::box: return "\\blacksquare " + latex_formula(f->child(), true);
        default: break;
    }
    const char* op = f->kind() == Formula::Kind::tensor ? " \\otimes "
                     : f->kind() == Formula::Kind::lres ? " \\backslash "
                                                        : " / ";
    std::string s = latex_formula(f->left(), true) + op + latex_formula(f->right(), true);
    return wrap_binary ? "(" + s + ")" : s;
}

std::string latex_structure(const StructurePtr& s) {
    switch (s->kind()) {
        case Structure::Kind::leaf: {
            const FormulaPtr& f = s->formula();
            return f->is_binary() ? "(" + latex_formula(f, false) + ")" : latex_formula(f, false);
        }
        case Structure::Kind::fusion:
            return "(" + latex_structure(s->left()) + " \\,\\hat{\\otimes}\\, " +
                   latex_structure(s->right()) + ")";
        case Structure::Kind::sdia: return "\\hat{\\Diamond} " + latex_structure(s->child());
        case Structure::Kind::sbox: return "\\check{\\blacksquare} " + latex_structure(s->child());
        case Structure::Kind::sldiv:
            return "(" + latex_structure(s->left()) + " \\,\\check{\\backslash}\\, " +
                   latex_structure(s->right()) + ")";
        case Structure::Kind::srdiv:
            return "(" + latex_structure(s->left()) + " \\,\\check{/}\\, " +
                   latex_structure(s->right()) + ")";
    }
    return "";
}

std::string latex_sequent(const Sequent& s) {
    return latex_structure(s.lhs) + " \\Rightarrow " + latex_structure(s.rhs);
}

std::string latex_rule_label(RuleId r) {
    switch (r) {
        case RuleId::id_axiom: return "\\mathrm{Id}";
        case RuleId::cut: return "\\mathrm{Cut}";
        case RuleId::rp_fusion_to_ldiv:
        case RuleId::rp_ldiv_to_fusion: return "\\otimes \\dashv \\backslash";
        case RuleId::rp_fusion_to_rdiv:
        case RuleId::rp_rdiv_to_fusion: return "\\otimes \\dashv /";
        case RuleId::rp_sdia_to_sbox:
        case RuleId::rp_sbox_to_sdia: return "\\Diamond \\dashv \\blacksquare";
        case RuleId::tensor_l: return "\\otimes_L";
        case RuleId::tensor_r: return "\\otimes_R";
        case RuleId::ldiv_l: return "\\backslash_L";
        case RuleId::ldiv_r: return "\\backslash_R";
        case RuleId::rdiv_l: return "/_L";
        case RuleId::rdiv_r: return "/_R";
        case RuleId::dia_l: return "\\Diamond_L";
        case RuleId::dia_r: return "\\Diamond_R";
        case RuleId::box_l: return "\\blacksquare_L";
        case RuleId::box_r: return "\\blacksquare_R";
        case RuleId::a_dia: return "A\\Diamond";
        case RuleId::dia_c: return "\\Diamond C";
    }
    return "";
}

void emit(const ProofTreePtr& t, std::ostringstream& out) {
    for (const auto& p : t->premises) emit(p, out);
    if (t->premises.empty()) {
        out << "\\AxiomC{}\n";
        out << "\\RightLabel{\\footnotesize $" << latex_rule_label(t->rule) << "$}\n";
        out << "\\UnaryInfC{$" << latex_sequent(t->conclusion) << "$}\n";
        return;
    }
    out << "\\RightLabel{\\footnotesize $" << latex_rule_label(t->rule) << "$}\n";
    if (t->premises.size() == 1) {
        out << "\\UnaryInfC{$" << latex_sequent(t->conclusion) << "$}\n";
    } else {
        out << "\\BinaryInfC{$" << latex_sequent(t->conclusion) << "$}\n";
    }
}

}  // namespace

std::string export_latex(const ProofTreePtr& t) {
    std::ostringstream out;
    out << "\\begin{prooftree}\n";
    emit(t, out);
    out << "\\end{prooftree}\n";
    return out.str();
}

}  // namespace lambekws
