#include "lambekws/prover.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lambekws {

std::string rule_name(RuleId r) {
    switch (r) {
        case RuleId::id_axiom: return "Id";
        case RuleId::cut: return "Cut";
        case RuleId::rp_fusion_to_ldiv:
        case RuleId::rp_ldiv_to_fusion: return "disp(* -| \\)";
        case RuleId::rp_fusion_to_rdiv:
        case RuleId::rp_rdiv_to_fusion: return "disp(* -| /)";
        case RuleId::rp_sdia_to_sbox:
        case RuleId::rp_sbox_to_sdia: return "disp(dia -| box)";
        case RuleId::tensor_l: return "*L";
        case RuleId::tensor_r: return "*R";
        case RuleId::ldiv_l: return "\\L";
        case RuleId::ldiv_r: return "\\R";
        case RuleId::rdiv_l: return "/L";
        case RuleId::rdiv_r: return "/R";
        case RuleId::dia_l: return "diaL";
        case RuleId::dia_r: return "diaR";
        case RuleId::box_l: return "boxL";
        case RuleId::box_r: return "boxR";
        case RuleId::a_dia: return "A-dia";
        case RuleId::dia_c: return "dia-C";
    }
    return "";
}

bool is_display_postulate(RuleId r) {
    switch (r) {
        case RuleId::rp_fusion_to_ldiv:
        case RuleId::rp_ldiv_to_fusion:
        case RuleId::rp_fusion_to_rdiv:
        case RuleId::rp_rdiv_to_fusion:
        case RuleId::rp_sdia_to_sbox:
        case RuleId::rp_sbox_to_sdia: return true;
        default: return false;
    }
}

std::size_t ProofTree::inference_count() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p->inference_count();
    return n;
}

namespace {

using SKind = Structure::Kind;
using FKind = Formula::Kind;

/// The unique premise of the directed display rule whose conclusion is s, if
/// the rule applies.
std::optional<Sequent> display_premise(RuleId rule, const Sequent& s) {
    switch (rule) {
        case RuleId::rp_ldiv_to_fusion:  // conclusion X,Y => Z; premise Y => X \\v Z
            if (s.lhs->kind() == SKind::fusion) {
                return Sequent{s.lhs->right(), Structure::sldiv(s.lhs->left(), s.rhs)};
            }
            return std::nullopt;
        case RuleId::rp_rdiv_to_fusion:  // conclusion X,Y => Z; premise X => Z //v Y
            if (s.lhs->kind() == SKind::fusion) {
                return Sequent{s.lhs->left(), Structure::srdiv(s.rhs, s.lhs->right())};
            }
            return std::nullopt;
        case RuleId::rp_fusion_to_ldiv:  // conclusion Y => X \\v Z; premise X,Y => Z
            if (s.rhs->kind() == SKind::sldiv) {
                return Sequent{Structure::fusion(s.rhs->left(), s.lhs), s.rhs->right()};
            }
            return std::nullopt;
        case RuleId::rp_fusion_to_rdiv:  // conclusion X => Z //v Y; premise X,Y => Z
            if (s.rhs->kind() == SKind::srdiv) {
                return Sequent{Structure::fusion(s.lhs, s.rhs->right()), s.rhs->left()};
            }
            return std::nullopt;
        case RuleId::rp_sbox_to_sdia:  // conclusion <X> => Y; premise X => [Y]
            if (s.lhs->kind() == SKind::sdia) {
                return Sequent{s.lhs->child(), Structure::sbox(s.rhs)};
            }
            return std::nullopt;
        case RuleId::rp_sdia_to_sbox:  // conclusion X => [Y]; premise <X> => Y
            if (s.rhs->kind() == SKind::sbox) {
                return Sequent{Structure::sdia(s.lhs), s.rhs->child()};
            }
            return std::nullopt;
        default: return std::nullopt;
    }
}

constexpr RuleId kDisplayRules[] = {
    RuleId::rp_ldiv_to_fusion, RuleId::rp_rdiv_to_fusion, RuleId::rp_fusion_to_ldiv,
    RuleId::rp_fusion_to_rdiv, RuleId::rp_sbox_to_sdia,   RuleId::rp_sdia_to_sbox,
};

struct DisplayNode {
    Sequent seq;
    int parent = -1;      // index into the BFS order
    RuleId via = RuleId::id_axiom;  // rule proving parent's sequent from this one
};

std::vector<DisplayNode> display_closure(const Sequent& s) {
    std::vector<DisplayNode> nodes;
    std::unordered_set<std::string> seen;
    nodes.push_back({s, -1, RuleId::id_axiom});
    seen.insert(key_of(s));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Sequent cur = nodes[i].seq;
        for (RuleId r : kDisplayRules) {
            if (auto prem = display_premise(r, cur)) {
                if (seen.insert(key_of(*prem)).second) {
                    nodes.push_back({*prem, static_cast<int>(i), r});
                }
            }
        }
    }
    return nodes;
}

/// Wraps a proof of nodes[i].seq into display inferences down to nodes[0].seq.
ProofTreePtr wrap_display_path(const std::vector<DisplayNode>& nodes, int i, ProofTreePtr proof) {
    while (i > 0) {
        const DisplayNode& n = nodes[static_cast<std::size_t>(i)];
        int parent = n.parent;
        proof = std::make_shared<ProofTree>(
            ProofTree{nodes[static_cast<std::size_t>(parent)].seq, n.via, {std::move(proof)}});
        i = parent;
    }
    return proof;
}

struct BackwardStep {
    RuleId rule;
    std::vector<Sequent> premises;
};

/// Backward instances of logical and analytic structural rules whose
/// conclusion is exactly s (display postulates are handled separately).
std::vector<BackwardStep> backward_steps(const Sequent& s, const RuleSet& rules) {
    std::vector<BackwardStep> out;
    const StructurePtr& L = s.lhs;
    const StructurePtr& R = s.rhs;
    const FormulaPtr lf = L->kind() == SKind::leaf ? L->formula() : nullptr;
    const FormulaPtr rf = R->kind() == SKind::leaf ? R->formula() : nullptr;

    // Left logical rules: principal formula displayed as the whole antecedent.
    if (lf && lf->kind() == FKind::tensor) {
        out.push_back({RuleId::tensor_l,
                       {Sequent{Structure::fusion(Structure::leaf(lf->left()),
                                                  Structure::leaf(lf->right())),
                                R}}});
    }
    if (lf && lf->kind() == FKind::dia) {
        out.push_back({RuleId::dia_l, {Sequent{Structure::sdia(Structure::leaf(lf->child())), R}}});
    }
    if (lf && lf->kind() == FKind::lres && R->kind() == SKind::sldiv) {
        // A \ B => X \\v Y   from   X => A and B => Y
        out.push_back({RuleId::ldiv_l,
                       {Sequent{R->left(), Structure::leaf(lf->left())},
                        Sequent{Structure::leaf(lf->right()), R->right()}}});
    }
    if (lf && lf->kind() == FKind::rres && R->kind() == SKind::srdiv) {
        // B / A => Y //v X   from   B => Y and X => A
        out.push_back({RuleId::rdiv_l,
                       {Sequent{Structure::leaf(lf->left()), R->left()},
                        Sequent{R->right(), Structure::leaf(lf->right())}}});
    }
    if (lf && lf->kind() == FKind::box && R->kind() == SKind::sbox) {
        // box A => [X]   from   A => X
        out.push_back({RuleId::box_l, {Sequent{Structure::leaf(lf->child()), R->child()}}});
    }

    // Right logical rules: principal formula displayed as the whole succedent.
    if (rf && rf->kind() == FKind::tensor && L->kind() == SKind::fusion) {
        out.push_back({RuleId::tensor_r,
                       {Sequent{L->left(), Structure::leaf(rf->left())},
                        Sequent{L->right(), Structure::leaf(rf->right())}}});
    }
    if (rf && rf->kind() == FKind::lres) {
        out.push_back({RuleId::ldiv_r,
                       {Sequent{L, Structure::sldiv(Structure::leaf(rf->left()),
                                                    Structure::leaf(rf->right()))}}});
    }
    if (rf && rf->kind() == FKind::rres) {
        out.push_back({RuleId::rdiv_r,
                       {Sequent{L, Structure::srdiv(Structure::leaf(rf->left()),
                                                    Structure::leaf(rf->right()))}}});
    }
    if (rf && rf->kind() == FKind::dia && L->kind() == SKind::sdia) {
        out.push_back({RuleId::dia_r, {Sequent{L->child(), Structure::leaf(rf->child())}}});
    }
    if (rf && rf->kind() == FKind::box) {
        out.push_back({RuleId::box_r, {Sequent{L, Structure::sbox(Structure::leaf(rf->child()))}}});
    }

    // Analytic structural rules on the displayed antecedent.
    if (rules.enable_a_dia && L->kind() == SKind::fusion &&
        L->left()->kind() == SKind::fusion && L->right()->kind() == SKind::sdia) {
        // (X,Y),<Z> => W   from   X,(Y,<Z>) => W
        out.push_back(
            {RuleId::a_dia,
             {Sequent{Structure::fusion(L->left()->left(),
                                        Structure::fusion(L->left()->right(), L->right())),
                      R}}});
    }
    if (rules.enable_dia_c && L->kind() == SKind::fusion &&
        L->left()->kind() == SKind::fusion && L->right()->kind() == SKind::sdia) {
        // (X,Z),<Y> => W   from   (X,<Y>),Z => W
        out.push_back(
            {RuleId::dia_c,
             {Sequent{Structure::fusion(Structure::fusion(L->left()->left(), L->right()),
                                        L->left()->right()),
                      R}}});
    }
    return out;
}

bool is_id_instance(const Sequent& s) {
    return s.lhs->kind() == SKind::leaf && s.rhs->kind() == SKind::leaf &&
           s.lhs->formula()->kind() == FKind::atom && s.rhs->formula()->kind() == FKind::atom &&
           s.lhs->formula()->atom_name() == s.rhs->formula()->atom_name();
}

struct Searcher {
    RuleSet rules;
    SearchLimits limits;
    long nodes = 0;
    bool truncated = false;

    ProofTreePtr search(const Sequent& goal, int depth, std::vector<std::string>& visited) {
        if (++nodes > limits.node_budget) {
            truncated = true;
            return nullptr;
        }
        if (depth >= limits.max_depth) {
            truncated = true;
            return nullptr;
        }

        std::vector<DisplayNode> cls = display_closure(goal);

        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (is_id_instance(cls[i].seq)) {
                auto id = std::make_shared<ProofTree>(
                    ProofTree{cls[i].seq, RuleId::id_axiom, {}});
                return wrap_display_path(cls, static_cast<int>(i), id);
            }
        }

        std::string self_key = canonical_key(goal);
        visited.push_back(self_key);

        ProofTreePtr found;
        for (std::size_t i = 0; i < cls.size() && !found; ++i) {
            for (const BackwardStep& step : backward_steps(cls[i].seq, rules)) {
                bool looping = false;
                std::vector<std::string> premise_keys;
                premise_keys.reserve(step.premises.size());
                for (const Sequent& p : step.premises) {
                    std::string k = canonical_key(p);
                    if (std::find(visited.begin(), visited.end(), k) != visited.end()) {
                        looping = true;
                        break;
                    }
                    premise_keys.push_back(std::move(k));
                }
                if (looping) continue;

                std::vector<ProofTreePtr> subs;
                bool ok = true;
                for (const Sequent& p : step.premises) {
                    ProofTreePtr sub = search(p, depth + 1, visited);
                    if (!sub) {
                        ok = false;
                        break;
                    }
                    subs.push_back(std::move(sub));
                }
                if (ok) {
                    auto node = std::make_shared<ProofTree>(
                        ProofTree{cls[i].seq, step.rule, std::move(subs)});
                    found = wrap_display_path(cls, static_cast<int>(i), node);
                    break;
                }
            }
        }

        visited.pop_back();
        return found;
    }
};

}  // namespace

SearchResult prove(const Sequent& goal, const RuleSet& rules, const SearchLimits& limits) {
    if (limits.max_depth <= 0 || limits.node_budget <= 0) {
        throw std::invalid_argument("search limits must be positive");
    }
    Searcher s{rules, limits};
    std::vector<std::string> visited;
    ProofTreePtr proof = s.search(goal, 0, visited);
    SearchResult out;
    out.nodes_expanded = s.nodes;
    if (proof) {
        out.status = SearchStatus::proved;
        out.proof = std::move(proof);
    } else {
        out.status = s.truncated ? SearchStatus::budget : SearchStatus::exhausted;
    }
    return out;
}

Sequent canonical_form(const Sequent& s) {
    Sequent cur = s;
    while (true) {
        switch (cur.rhs->kind()) {
            case SKind::sldiv:  // Y => X \\v Z  ~~>  X,Y => Z
                cur = Sequent{Structure::fusion(cur.rhs->left(), cur.lhs), cur.rhs->right()};
                break;
            case SKind::srdiv:  // X => Z //v Y  ~~>  X,Y => Z
                cur = Sequent{Structure::fusion(cur.lhs, cur.rhs->right()), cur.rhs->left()};
                break;
            case SKind::sbox:  // X => [Y]  ~~>  <X> => Y
                cur = Sequent{Structure::sdia(cur.lhs), cur.rhs->child()};
                break;
            default: return cur;
        }
    }
}

std::string canonical_key(const Sequent& s) { return key_of(canonical_form(s)); }

std::vector<Sequent> display_class(const Sequent& s) {
    std::vector<Sequent> out;
    for (const DisplayNode& n : display_closure(s)) out.push_back(n.seq);
    return out;
}

namespace {

bool premise_matches(const ProofTreePtr& t, std::size_t i, const Sequent& expected) {
    return i < t->premises.size() && equal(t->premises[i]->conclusion, expected);
}

bool node_instantiates_rule(const ProofTreePtr& t) {
    const Sequent& c = t->conclusion;
    const StructurePtr& L = c.lhs;
    const StructurePtr& R = c.rhs;
    const FormulaPtr lf = L->kind() == SKind::leaf ? L->formula() : nullptr;
    const FormulaPtr rf = R->kind() == SKind::leaf ? R->formula() : nullptr;
    const std::size_t n = t->premises.size();

    switch (t->rule) {
        case RuleId::id_axiom:
            return n == 0 && is_id_instance(c);
        case RuleId::cut: {
            if (n != 2) return false;
            const Sequent& p0 = t->premises[0]->conclusion;
            const Sequent& p1 = t->premises[1]->conclusion;
            return p0.rhs->kind() == SKind::leaf && p1.lhs->kind() == SKind::leaf &&
                   equal(p0.rhs->formula(), p1.lhs->formula()) && equal(p0.lhs, c.lhs) &&
                   equal(p1.rhs, c.rhs);
        }
        case RuleId::rp_ldiv_to_fusion:
        case RuleId::rp_rdiv_to_fusion:
        case RuleId::rp_fusion_to_ldiv:
        case RuleId::rp_fusion_to_rdiv:
        case RuleId::rp_sbox_to_sdia:
        case RuleId::rp_sdia_to_sbox: {
            if (n != 1) return false;
            auto prem = display_premise(t->rule, c);
            return prem && equal(t->premises[0]->conclusion, *prem);
        }
        case RuleId::tensor_l:
            return n == 1 && lf && lf->kind() == FKind::tensor &&
                   premise_matches(t, 0,
                                   Sequent{Structure::fusion(Structure::leaf(lf->left()),
                                                             Structure::leaf(lf->right())),
                                           R});
        case RuleId::tensor_r:
            return n == 2 && rf && rf->kind() == FKind::tensor && L->kind() == SKind::fusion &&
                   premise_matches(t, 0, Sequent{L->left(), Structure::leaf(rf->left())}) &&
                   premise_matches(t, 1, Sequent{L->right(), Structure::leaf(rf->right())});
        case RuleId::ldiv_l:
            return n == 2 && lf && lf->kind() == FKind::lres && R->kind() == SKind::sldiv &&
                   premise_matches(t, 0, Sequent{R->left(), Structure::leaf(lf->left())}) &&
                   premise_matches(t, 1, Sequent{Structure::leaf(lf->right()), R->right()});
        case RuleId::ldiv_r:
            return n == 1 && rf && rf->kind() == FKind::lres &&
                   premise_matches(t, 0,
                                   Sequent{L, Structure::sldiv(Structure::leaf(rf->left()),
                                                               Structure::leaf(rf->right()))});
        case RuleId::rdiv_l:
            return n == 2 && lf && lf->kind() == FKind::rres && R->kind() == SKind::srdiv &&
                   premise_matches(t, 0, Sequent{Structure::leaf(lf->left()), R->left()}) &&
                   premise_matches(t, 1, Sequent{R->right(), Structure::leaf(lf->right())});
        case RuleId::rdiv_r:
            return n == 1 && rf && rf->kind() == FKind::rres &&
                   premise_matches(t, 0,
                                   Sequent{L, Structure::srdiv(Structure::leaf(rf->left()),
                                                               Structure::leaf(rf->right()))});
        case RuleId::dia_l:
            return n == 1 && lf && lf->kind() == FKind::dia &&
                   premise_matches(t, 0, Sequent{Structure::sdia(Structure::leaf(lf->child())), R});
        case RuleId::dia_r:
            return n == 1 && rf && rf->kind() == FKind::dia && L->kind() == SKind::sdia &&
                   premise_matches(t, 0, Sequent{L->child(), Structure::leaf(rf->child())});
        case RuleId::box_l:
            return n == 1 && lf && lf->kind() == FKind::box && R->kind() == SKind::sbox &&
                   premise_matches(t, 0, Sequent{Structure::leaf(lf->child()), R->child()});
        case RuleId::box_r:
            return n == 1 && rf && rf->kind() == FKind::box &&
                   premise_matches(t, 0, Sequent{L, Structure::sbox(Structure::leaf(rf->child()))});
        case RuleId::a_dia:
            return n == 1 && L->kind() == SKind::fusion && L->left()->kind() == SKind::fusion &&
                   L->right()->kind() == SKind::sdia &&
                   premise_matches(
                       t, 0,
                       Sequent{Structure::fusion(L->left()->left(),
                                                 Structure::fusion(L->left()->right(), L->right())),
                               R});
        case RuleId::dia_c:
            return n == 1 && L->kind() == SKind::fusion && L->left()->kind() == SKind::fusion &&
                   L->right()->kind() == SKind::sdia &&
                   premise_matches(
                       t, 0,
                       Sequent{Structure::fusion(
                                   Structure::fusion(L->left()->left(), L->right()),
                                   L->left()->right()),
                               R});
    }
    return false;
}

}  // namespace

bool check_proof(const ProofTreePtr& t) {
    if (!t) return false;
    if (!node_instantiates_rule(t)) return false;
    for (const auto& p : t->premises) {
        if (!check_proof(p)) return false;
    }
    return true;
}

}  // namespace lambekws
