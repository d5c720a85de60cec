#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lambekws/formula.hpp"

namespace lambekws {

/// Inference rules of the display calculus. The six rp_* entries are the
/// directed halves of the three invertible display postulates.
enum class RuleId {
    id_axiom,
    cut,
    rp_fusion_to_ldiv,  // from X,Y => Z       infer Y => X \\v Z
    rp_ldiv_to_fusion,  // from Y => X \\v Z   infer X,Y => Z
    rp_fusion_to_rdiv,  // from X,Y => Z       infer X => Z //v Y
    rp_rdiv_to_fusion,  // from X => Z //v Y   infer X,Y => Z
    rp_sdia_to_sbox,    // from <X> => Y       infer X => [Y]
    rp_sbox_to_sdia,    // from X => [Y]       infer <X> => Y
    tensor_l,
    tensor_r,
    ldiv_l,
    ldiv_r,
    rdiv_l,
    rdiv_r,
    dia_l,
    dia_r,
    box_l,
    box_r,
    a_dia,  // controlled right-associativity
    dia_c,  // controlled left-commutativity
};

std::string rule_name(RuleId r);
bool is_display_postulate(RuleId r);

struct ProofTree;
using ProofTreePtr = std::shared_ptr<const ProofTree>;

struct ProofTree {
    Sequent conclusion;
    RuleId rule;
    std::vector<ProofTreePtr> premises;
    std::size_t inference_count() const;
};

struct RuleSet {
    bool enable_a_dia = false;
    bool enable_dia_c = false;
};

struct SearchLimits {
    int max_depth = 40;
    long node_budget = 200000;
};

enum class SearchStatus {
    proved,
    exhausted,  // the bounded search space was fully explored: no proof exists
    budget,     // depth or node budget was hit: inconclusive
};

struct SearchResult {
    SearchStatus status = SearchStatus::budget;
    ProofTreePtr proof;  // set iff proved
    long nodes_expanded = 0;
};

/// Backward goal-directed proof search. Display postulates are explored as
/// bidirectional rewrites with loop detection on canonical sequent forms;
/// logical rules fire when their principal connective is displayed. Cut is
/// never searched.
SearchResult prove(const Sequent& goal, const RuleSet& rules = {}, const SearchLimits& limits = {});

/// Independent schema verifier: true iff every node of the tree instantiates
/// its named rule correctly (Cut trees are accepted; search never builds them).
bool check_proof(const ProofTreePtr& t);

/// Display-normal form: sequents inter-derivable by display postulates alone
/// share a canonical form (structural residuals on the right are folded into
/// fusion/diamond on the left).
Sequent canonical_form(const Sequent& s);
std::string canonical_key(const Sequent& s);

/// All sequents reachable from s by display postulates, including s itself,
/// in breadth-first order.
std::vector<Sequent> display_class(const Sequent& s);

/// Proof-tree rendering for a standard LaTeX proof-tree package.
std::string export_latex(const ProofTreePtr& t);

}  // namespace lambekws
