#include "lambekws/sentence.hpp"

#include <stdexcept>

namespace lambekws {

namespace {

std::vector<Bracketing> bracketings_of_range(std::size_t lo, std::size_t hi) {
    std::vector<Bracketing> out;
    if (hi - lo == 1) {
        out.push_back({lo, hi, 0, {}});
        return out;
    }
    for (std::size_t split = lo + 1; split < hi; ++split) {
        for (const Bracketing& l : bracketings_of_range(lo, split)) {
            for (const Bracketing& r : bracketings_of_range(split, hi)) {
                out.push_back({lo, hi, split, {l, r}});
            }
        }
    }
    return out;
}

StructurePtr realize(const Bracketing& b, const std::vector<FormulaPtr>& cats) {
    if (b.children.empty()) return Structure::leaf(cats[b.lo]);
    return Structure::fusion(realize(b.children[0], cats), realize(b.children[1], cats));
}

}  // namespace

std::vector<Bracketing> enumerate_bracketings(std::size_t word_count) {
    if (word_count == 0) return {};
    return bracketings_of_range(0, word_count);
}

SentenceResult parse_sentence(const std::vector<std::string>& words, const Lexicon& lex,
                              const FormulaPtr& goal, const RuleSet& rules,
                              const SearchLimits& limits) {
    if (words.empty()) throw std::invalid_argument("empty sentence");

    std::vector<const std::vector<FormulaPtr>*> choices;
    choices.reserve(words.size());
    for (const std::string& w : words) {
        auto it = lex.entries.find(w);
        if (it == lex.entries.end() || it->second.empty()) {
            throw std::invalid_argument("word not in lexicon: " + w);
        }
        choices.push_back(&it->second);
    }

    SentenceResult result;
    std::vector<Bracketing> brackets = enumerate_bracketings(words.size());

    // Odometer over category assignments, least significant digit first.
    std::vector<std::size_t> pick(words.size(), 0);
    while (true) {
        std::vector<FormulaPtr> cats;
        cats.reserve(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) cats.push_back((*choices[i])[pick[i]]);

        for (std::size_t bi = 0; bi < brackets.size(); ++bi) {
            Sequent seq{realize(brackets[bi], cats), Structure::leaf(goal)};
            SearchResult sr = prove(seq, rules, limits);
            result.nodes_expanded += sr.nodes_expanded;
            if (sr.status == SearchStatus::proved) {
                result.parses.push_back({bi, cats, seq, sr.proof});
            } else if (sr.status == SearchStatus::budget) {
                result.all_failures_exhausted = false;
            }
        }

        std::size_t d = 0;
        while (d < pick.size() && ++pick[d] == choices[d]->size()) {
            pick[d] = 0;
            ++d;
        }
        if (d == pick.size()) break;
    }
    return result;
}

}  // namespace lambekws
