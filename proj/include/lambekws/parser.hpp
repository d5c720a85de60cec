#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambekws/formula.hpp"
#include "lambekws/kalgebra.hpp"
#include "lambekws/relation.hpp"

namespace lambekws {

/// Syntax error with a byte position into the offending text (0-based) and,
/// for line-oriented files, a 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position, std::size_t line = 0);
    std::size_t position() const { return position_; }
    std::size_t line() const { return line_; }

private:
    std::size_t position_;
    std::size_t line_;
};

/// Formula syntax: atoms are identifiers; `dia`/`box` are prefix and bind
/// tightest; `*`, `\`, `/` are binary and non-associative, so nested binary
/// connectives need parentheses. UTF-8 aliases (unicode diamond, filled
/// square, circled times) are accepted on input.
FormulaPtr parse_formula(const std::string& text);
std::string print_formula(const FormulaPtr& f);

/// Structure syntax: `(X , Y)` fusion, `<X>` structural diamond, `[X]`
/// structural box, `(X \\ Y)` and `(X // Y)` structural residuals, bare
/// formulas as leaves.
StructurePtr parse_structure(const std::string& text);
std::string print_structure(const StructurePtr& s);

/// `X => Y` (the unicode double arrow is accepted for `=>`).
Sequent parse_sequent(const std::string& text);
std::string print_sequent(const Sequent& s);

struct Lexicon {
    std::map<std::string, std::vector<FormulaPtr>> entries;
};

/// Lines of the form `word : Formula`; duplicate identical entries collapse;
/// `#` starts a comment.
Lexicon parse_lexicon(const std::string& text);

Scalar parse_scalar(const Field& f, const std::string& token);
/// `1,0,2` or `(1,0,2)`.
Vec parse_vector(const Field& f, const std::string& text);

/// Algebra file: `field F2|Fp|Q`, `dim N`, `basis e0 e1 ...`, then product
/// lines `ei * ej = c ek + c el` (omitted products are zero).
KAlgebra parse_algebra(const std::string& text);
std::string print_algebra(const KAlgebra& a);

/// Relation file: `relation extensional|functional|graph` followed by
/// `v -> u` pair lines (extensional, graph generators) or matrix rows
/// (functional).
ModalRelation parse_relation(const std::string& text, const Field& f, std::size_t dim);

/// Poset file: `size n`, `leq` block, `otimes`/`lres`/`rres` blocks, `dia`
/// and `box` rows. Table entries are 1-based element indices.
ModalResiduatedPoset parse_poset(const std::string& text);
std::string print_poset(const ModalResiduatedPoset& p);

/// Valuation file: lines `atom = (v1) (v2) ...`; no vectors means the zero
/// subspace.
std::map<std::string, Subspace> parse_valuation(const std::string& text, const Field& f,
                                                std::size_t dim);

}  // namespace lambekws
