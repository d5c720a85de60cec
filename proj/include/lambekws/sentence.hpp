#pragma once

#include <string>
#include <vector>

#include "lambekws/parser.hpp"
#include "lambekws/prover.hpp"

namespace lambekws {

/// All binary bracketings of n leaves (Catalan(n-1) of them), as index trees.
/// Each tree is encoded over the leaves word[lo..hi).
struct Bracketing {
    // For leaves, lo + 1 == hi; otherwise split in [lo+1, hi).
    std::size_t lo = 0, hi = 0, split = 0;
    std::vector<Bracketing> children;  // empty or exactly two
};

std::vector<Bracketing> enumerate_bracketings(std::size_t word_count);

struct SentenceParse {
    std::size_t bracketing_index = 0;
    std::vector<FormulaPtr> assignment;  // one category per word
    Sequent sequent;
    ProofTreePtr proof;
};

struct SentenceResult {
    std::vector<SentenceParse> parses;
    /// True when every failed (bracketing, assignment) search exhausted its
    /// space: zero parses is then a definitive no at the bound.
    bool all_failures_exhausted = true;
    long nodes_expanded = 0;
};

/// Parse-as-deduction: tries every bracketing and every lexical category
/// assignment against the goal category; collects all provable combinations
/// in a fixed order. Throws on a word missing from the lexicon.
SentenceResult parse_sentence(const std::vector<std::string>& words, const Lexicon& lex,
                              const FormulaPtr& goal, const RuleSet& rules,
                              const SearchLimits& limits);

}  // namespace lambekws
