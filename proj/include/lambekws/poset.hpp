#pragma once

#include <map>
#include <optional>
#include <string>

#include "lambekws/formula.hpp"
#include "lambekws/relation.hpp"

namespace lambekws {

struct PosetReport {
    bool valid = false;
    std::string violation;  // first failing axiom instance
};

/// Exhaustively checks the partial-order axioms, the residuation law for
/// otimes/lres/rres, and the adjunction law for dia/box.
PosetReport validate_poset(const ModalResiduatedPoset& p);

using PosetValuation = std::map<std::string, std::size_t>;

/// Interprets formulas and structures directly in the poset tables
/// (structural connectives via the same operations).
std::size_t poset_eval(const ModalResiduatedPoset& p, const PosetValuation& val,
                       const FormulaPtr& f);
std::size_t poset_eval(const ModalResiduatedPoset& p, const PosetValuation& val,
                       const StructurePtr& s);
bool poset_holds(const ModalResiduatedPoset& p, const PosetValuation& val, const Sequent& seq);

/// 1-, 2- and 3-element chains with meet fusion, relative-implication
/// residuals and identity modalities; handy valid instances.
ModalResiduatedPoset chain_poset(std::size_t n);

struct Countermodel {
    ModalResiduatedPoset poset;
    PosetValuation valuation;
};

/// Enumerates valid modal residuated posets of size 1..max_size and all
/// valuations of the sequent's atoms, returning the first refuting pair.
/// Best effort: nullopt does not imply derivability.
std::optional<Countermodel> search_countermodel(const Sequent& seq, std::size_t max_size = 3);

}  // namespace lambekws
