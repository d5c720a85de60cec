#include "lambekws/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambekws/complex_algebra.hpp"
#include "lambekws/embedding.hpp"
#include "lambekws/parser.hpp"
#include "lambekws/poset.hpp"
#include "lambekws/prover.hpp"
#include "lambekws/sentence.hpp"

namespace lambekws {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;
constexpr int kExitUsage = 4;

bool color_enabled() {
    const char* v = std::getenv("LAMBEKWS_COLOR");
    if (!v) return false;
    std::string s(v);
    return s == "1" || s == "true" || s == "always";
}

std::string styled(const std::string& text, const char* code) {
    if (!color_enabled()) return text;
    return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string good(const std::string& t) { return styled(t, "32"); }
std::string bad(const std::string& t) { return styled(t, "31"); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

KAlgebra load_algebra(const std::string& spec) {
    if (spec == "quaternions") return KAlgebra::quaternions();
    if (spec == "octonions") return KAlgebra::octonions();
    return parse_algebra(read_file(spec));
}

struct CommonOpts {
    int depth = 40;
    long budget = 200000;
    bool adia = false;
    bool diac = false;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::size_t dim_bound = 16;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--depth", o.depth, "proof search depth limit");
    cmd->add_option("--budget", o.budget, "proof search node budget");
    cmd->add_flag("--adia", o.adia, "enable the controlled right-associativity rule");
    cmd->add_flag("--diac", o.diac, "enable the controlled left-commutativity rule");
    cmd->add_option("--seed", o.seed, "seed for all randomized sampling");
    cmd->add_option("--format", o.format, "output format: text | latex | jsonl")
        ->check(CLI::IsMember({"text", "latex", "jsonl"}));
    cmd->add_option("--dim-bound", o.dim_bound, "dimension bound for modal enumeration");
}

json proof_to_json(const ProofTreePtr& t) {
    json premises = json::array();
    for (const auto& p : t->premises) premises.push_back(proof_to_json(p));
    return json{{"rule", rule_name(t->rule)},
                {"sequent", print_sequent(t->conclusion)},
                {"premises", premises}};
}

void print_proof_text(std::ostream& out, const ProofTreePtr& t, std::size_t indent) {
    out << std::string(indent, ' ') << "[" << rule_name(t->rule) << "] "
        << print_sequent(t->conclusion) << "\n";
    for (const auto& p : t->premises) print_proof_text(out, p, indent + 2);
}

void emit_proof(std::ostream& out, const CommonOpts& o, const ProofTreePtr& proof, long nodes) {
    if (o.format == "jsonl") {
        out << json{{"type", "result"}, {"status", "proved"}, {"nodes", nodes}}.dump() << "\n";
        out << json{{"type", "proof"}, {"tree", proof_to_json(proof)}}.dump() << "\n";
    } else if (o.format == "latex") {
        out << export_latex(proof);
    } else {
        out << good("proved") << " (" << nodes << " nodes)\n";
        print_proof_text(out, proof, 0);
    }
}

int report_no_proof(std::ostream& out, const CommonOpts& o, const SearchResult& sr,
                    const Sequent& seq) {
    bool exhausted = sr.status == SearchStatus::exhausted;
    if (o.format == "jsonl") {
        out << json{{"type", "result"},
                    {"status", exhausted ? "exhausted" : "budget"},
                    {"nodes", sr.nodes_expanded}}
                   .dump()
            << "\n";
    } else {
        out << bad(exhausted ? "no proof (search space exhausted at the bound)"
                             : "no proof found (budget hit; inconclusive)")
            << " (" << sr.nodes_expanded << " nodes)\n";
    }
    if (exhausted && o.format == "text") {
        // Countermodel hint, best effort at tiny sizes.
        try {
            if (auto cm = search_countermodel(seq, 2)) {
                out << "hint: refuted in a modal residuated poset of size " << cm->poset.n << "\n";
            }
        } catch (const std::exception&) {
        }
    }
    return exhausted ? kExitNegative : kExitInconclusive;
}

int cmd_prove(const CommonOpts& o, const std::string& sequent_text,
              const std::optional<std::string>& sentence,
              const std::optional<std::string>& lexfile, const std::optional<std::string>& goal,
              bool latex_output, std::ostream& out, std::ostream& err) {
    RuleSet rules{o.adia, o.diac};
    SearchLimits limits{o.depth, o.budget};
    CommonOpts opts = o;
    if (latex_output) opts.format = "latex";

    if (sentence) {
        if (!lexfile || !goal) {
            err << "--sentence needs --lexfile and --goal\n";
            return kExitUsage;
        }
        Lexicon lex = parse_lexicon(read_file(*lexfile));
        std::vector<std::string> words;
        std::istringstream ws(*sentence);
        std::string w;
        while (ws >> w) words.push_back(w);
        SentenceResult res = parse_sentence(words, lex, parse_formula(*goal), rules, limits);
        if (!res.parses.empty()) {
            const SentenceParse& first = res.parses.front();
            if (opts.format == "jsonl") {
                out << json{{"type", "result"},
                            {"status", "proved"},
                            {"parses", res.parses.size()},
                            {"nodes", res.nodes_expanded}}
                           .dump()
                    << "\n";
                for (const SentenceParse& p : res.parses) {
                    out << json{{"type", "parse"},
                                {"sequent", print_sequent(p.sequent)},
                                {"tree", proof_to_json(p.proof)}}
                               .dump()
                        << "\n";
                }
            } else if (opts.format == "latex") {
                out << export_latex(first.proof);
            } else {
                out << good("proved") << ": " << res.parses.size() << " parse(s), first:\n";
                out << print_sequent(first.sequent) << "\n";
                print_proof_text(out, first.proof, 0);
            }
            return kExitOk;
        }
        bool exhausted = res.all_failures_exhausted;
        if (opts.format == "jsonl") {
            out << json{{"type", "result"},
                        {"status", exhausted ? "exhausted" : "budget"},
                        {"nodes", res.nodes_expanded}}
                       .dump()
                << "\n";
        } else {
            out << bad(exhausted ? "no parse (all searches exhausted)"
                                 : "no parse found (budget hit; inconclusive)")
                << "\n";
        }
        return exhausted ? kExitNegative : kExitInconclusive;
    }

    Sequent seq = parse_sequent(sequent_text);
    SearchResult sr = prove(seq, rules, limits);
    if (sr.status == SearchStatus::proved) {
        emit_proof(out, opts, sr.proof, sr.nodes_expanded);
        return kExitOk;
    }
    return report_no_proof(out, opts, sr, seq);
}

std::string verdict_line(const std::string& property, const PseudoVerdict& v) {
    std::ostringstream s;
    s << property << ": "
      << (v.status == VerdictStatus::holds   ? good("holds")
          : v.status == VerdictStatus::fails ? bad("fails")
                                             : "unknown");
    if (!v.witness.empty()) {
        s << "  witness:";
        for (const Vec& w : v.witness) s << " " << w.to_string();
    }
    if (!v.detail.empty()) s << "  (" << v.detail << ")";
    return s.str();
}

int verdict_exit(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds: return kExitOk;
        case VerdictStatus::fails: return kExitNegative;
        case VerdictStatus::unknown: return kExitInconclusive;
    }
    return kExitInconclusive;
}

json verdict_json(const std::string& property, const PseudoVerdict& v) {
    json witness = json::array();
    for (const Vec& w : v.witness) witness.push_back(w.to_string());
    return json{{"type", "verdict"},
                {"property", property},
                {"status", to_string(v.status)},
                {"witness", witness},
                {"detail", v.detail}};
}

PseudoVerdict run_pseudo_check(const KAlgebra& a, const std::string& property,
                               const std::optional<Vec>& candidate, const ModalRelation* rel,
                               const CheckOptions& opts) {
    if (property == "commutative") return check_pseudo_commutative(a, opts);
    if (property == "associative") return check_pseudo_associative(a, opts);
    if (property == "unital") return check_pseudo_unital(a, candidate, opts);
    if (property == "contractive") return check_pseudo_contractive(a, opts);
    if (property == "expansive") return check_pseudo_expansive(a, opts);
    if (property == "right-associative" || property == "left-commutative") {
        if (!rel) throw std::invalid_argument(property + " needs --relation");
        return check_pseudo_modal(a, *rel,
                                  property == "right-associative"
                                      ? ModalPseudoProperty::right_associative
                                      : ModalPseudoProperty::left_commutative,
                                  opts);
    }
    throw std::invalid_argument("unknown property: " + property);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for the modal non-associative Lambek calculus and its vector-space semantics"};
    app.require_subcommand(1);

    CommonOpts o;

    // prove
    auto* prove_cmd = app.add_subcommand("prove", "prove a sequent or parse a sentence");
    std::string sequent_text;
    std::optional<std::string> sentence, lexfile, goal;
    prove_cmd->add_option("sequent", sequent_text, "sequent, e.g. \"p => p\"");
    prove_cmd->add_option("--sentence", sentence, "space-separated words to parse");
    prove_cmd->add_option("--lexfile", lexfile, "lexicon file");
    prove_cmd->add_option("--goal", goal, "goal category for --sentence");
    add_common(prove_cmd, o);

    // export-latex
    auto* latex_cmd = app.add_subcommand("export-latex", "prove a sequent and print the LaTeX tree");
    std::string latex_sequent;
    latex_cmd->add_option("sequent", latex_sequent, "sequent")->required();
    add_common(latex_cmd, o);

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "parse and reprint formulas or sequents");
    std::optional<std::string> parse_f, parse_s, parse_st;
    parse_cmd->add_option("--formula", parse_f, "formula text");
    parse_cmd->add_option("--sequent", parse_s, "sequent text");
    parse_cmd->add_option("--structure", parse_st, "structure text");
    add_common(parse_cmd, o);

    // check-algebra
    auto* checka_cmd = app.add_subcommand("check-algebra", "pseudo-property sweep of an algebra");
    std::string checka_file;
    std::string checka_props = "commutative,associative,unital,contractive,expansive";
    std::optional<std::string> checka_candidate;
    checka_cmd->add_option("algebra", checka_file, "algebra file, or 'quaternions'/'octonions'")
        ->required();
    checka_cmd->add_option("--properties", checka_props, "comma-separated list");
    checka_cmd->add_option("--candidate", checka_candidate, "unit candidate vector");
    add_common(checka_cmd, o);

    // check-pseudo
    auto* checkp_cmd = app.add_subcommand("check-pseudo", "one pseudo-property check");
    std::string checkp_file, checkp_prop;
    std::optional<std::string> checkp_candidate, checkp_relation;
    checkp_cmd->add_option("algebra", checkp_file, "algebra file or builtin name")->required();
    checkp_cmd->add_option("property", checkp_prop, "property name")->required();
    checkp_cmd->add_option("--candidate", checkp_candidate, "unit candidate vector");
    checkp_cmd->add_option("--relation", checkp_relation, "relation file (modal properties)");
    add_common(checkp_cmd, o);

    // check-vplus
    auto* checkv_cmd = app.add_subcommand("check-vplus", "subspace-lattice property check");
    std::string checkv_file, checkv_prop;
    std::optional<std::string> checkv_relation;
    checkv_cmd->add_option("algebra", checkv_file, "algebra file or builtin name")->required();
    checkv_cmd->add_option("property", checkv_prop, "property name")->required();
    checkv_cmd->add_option("--relation", checkv_relation, "relation file (modal properties)");
    add_common(checkv_cmd, o);

    // validate-relation
    auto* valrel_cmd = app.add_subcommand("validate-relation", "check L1R, L2R, L3R");
    std::string valrel_algebra, valrel_relation;
    valrel_cmd->add_option("algebra", valrel_algebra, "algebra file or builtin name")->required();
    valrel_cmd->add_option("relation", valrel_relation, "relation file")->required();
    add_common(valrel_cmd, o);

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "embed a poset into an F2 algebra");
    std::string embed_poset;
    std::optional<std::string> embed_out;
    embed_cmd->add_option("poset", embed_poset, "poset file")->required();
    embed_cmd->add_option("--out", embed_out, "write the algebra file here");
    add_common(embed_cmd, o);

    // verify-embedding
    auto* verify_cmd = app.add_subcommand("verify-embedding", "check the six embedding clauses");
    std::string verify_poset;
    verify_cmd->add_option("poset", verify_poset, "poset file")->required();
    add_common(verify_cmd, o);

    // countermodel
    auto* counter_cmd = app.add_subcommand("countermodel", "search finite poset countermodels");
    std::string counter_sequent;
    std::size_t counter_max = 3;
    counter_cmd->add_option("sequent", counter_sequent, "sequent")->required();
    counter_cmd->add_option("--max-size", counter_max, "poset size bound (<= 3)");
    add_common(counter_cmd, o);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a sequent in a model");
    std::string eval_sequent, eval_algebra, eval_valuation;
    std::optional<std::string> eval_relation;
    eval_cmd->add_option("sequent", eval_sequent, "sequent")->required();
    eval_cmd->add_option("--algebra", eval_algebra, "algebra file or builtin name")->required();
    eval_cmd->add_option("--relation", eval_relation, "relation file");
    eval_cmd->add_option("--valuation", eval_valuation, "valuation file")->required();
    add_common(eval_cmd, o);

    std::vector<const char*> argv;
    argv.push_back("lambekws");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    CheckOptions copts;
    copts.seed = o.seed;
    EnumLimits elim;
    elim.max_space = std::uint64_t(1) << std::min<std::size_t>(o.dim_bound, 24);

    try {
        if (prove_cmd->parsed()) {
            if (!sentence && sequent_text.empty()) {
                err << "either a sequent or --sentence is required\n";
                return kExitUsage;
            }
            return cmd_prove(o, sequent_text, sentence, lexfile, goal, false, out, err);
        }
        if (latex_cmd->parsed()) {
            return cmd_prove(o, latex_sequent, std::nullopt, std::nullopt, std::nullopt, true, out,
                             err);
        }
        if (parse_cmd->parsed()) {
            if (parse_f) {
                FormulaPtr f = parse_formula(*parse_f);
                if (o.format == "jsonl") {
                    out << json{{"type", "formula"}, {"text", print_formula(f)}}.dump() << "\n";
                } else {
                    out << print_formula(f) << "\n";
                }
            }
            if (parse_st) {
                StructurePtr s = parse_structure(*parse_st);
                if (o.format == "jsonl") {
                    out << json{{"type", "structure"}, {"text", print_structure(s)}}.dump() << "\n";
                } else {
                    out << print_structure(s) << "\n";
                }
            }
            if (parse_s) {
                Sequent s = parse_sequent(*parse_s);
                if (o.format == "jsonl") {
                    out << json{{"type", "sequent"},
                                {"text", print_sequent(s)},
                                {"canonical", print_sequent(canonical_form(s))}}
                               .dump()
                        << "\n";
                } else {
                    out << print_sequent(s) << "\n";
                    out << "canonical: " << print_sequent(canonical_form(s)) << "\n";
                }
            }
            if (!parse_f && !parse_s && !parse_st) {
                err << "nothing to parse; use --formula/--sequent/--structure\n";
                return kExitUsage;
            }
            return kExitOk;
        }
        if (checka_cmd->parsed()) {
            KAlgebra a = load_algebra(checka_file);
            std::optional<Vec> candidate;
            if (checka_candidate) candidate = parse_vector(a.field(), *checka_candidate);
            int worst = kExitOk;
            std::istringstream props(checka_props);
            std::string prop;
            while (std::getline(props, prop, ',')) {
                PseudoVerdict v;
                try {
                    v = run_pseudo_check(a, prop, candidate, nullptr, copts);
                } catch (const std::invalid_argument& e) {
                    if (o.format == "jsonl") {
                        out << json{{"type", "verdict"}, {"property", prop},
                                    {"status", "skipped"}, {"detail", e.what()}}
                                   .dump()
                            << "\n";
                    } else {
                        out << prop << ": skipped (" << e.what() << ")\n";
                    }
                    continue;
                }
                if (o.format == "jsonl") {
                    out << verdict_json(prop, v).dump() << "\n";
                } else {
                    out << verdict_line(prop, v) << "\n";
                }
                worst = std::max(worst, verdict_exit(v.status));
            }
            return worst;
        }
        if (checkp_cmd->parsed()) {
            KAlgebra a = load_algebra(checkp_file);
            std::optional<Vec> candidate;
            if (checkp_candidate) candidate = parse_vector(a.field(), *checkp_candidate);
            std::optional<ModalRelation> rel;
            if (checkp_relation) {
                rel = parse_relation(read_file(*checkp_relation), a.field(), a.dim());
            }
            PseudoVerdict v =
                run_pseudo_check(a, checkp_prop, candidate, rel ? &*rel : nullptr, copts);
            if (o.format == "jsonl") {
                out << verdict_json(checkp_prop, v).dump() << "\n";
            } else {
                out << verdict_line(checkp_prop, v) << "\n";
            }
            return verdict_exit(v.status);
        }
        if (checkv_cmd->parsed()) {
            KAlgebra a = load_algebra(checkv_file);
            std::optional<ModalRelation> rel;
            if (checkv_relation) {
                rel = parse_relation(read_file(*checkv_relation), a.field(), a.dim());
            }
            ResiduatedWitness w = check_vplus_property(a, rel ? &*rel : nullptr,
                                                       vplus_property_from_string(checkv_prop),
                                                       o.dim_bound, elim);
            if (o.format == "jsonl") {
                json ce = json::array();
                for (const Subspace& s : w.counterexample) ce.push_back(s.to_string());
                out << json{{"type", "vplus"},
                            {"property", to_string(w.property)},
                            {"holds", w.holds},
                            {"counterexample", ce},
                            {"detail", w.detail}}
                           .dump()
                    << "\n";
            } else {
                out << to_string(w.property) << ": " << (w.holds ? good("holds") : bad("fails"));
                if (!w.detail.empty()) out << "  (" << w.detail << ")";
                out << "\n";
                for (const Subspace& s : w.counterexample) out << "  " << s.to_string() << "\n";
            }
            return w.holds ? kExitOk : kExitNegative;
        }
        if (valrel_cmd->parsed()) {
            KAlgebra a = load_algebra(valrel_algebra);
            ModalRelation rel = parse_relation(read_file(valrel_relation), a.field(), a.dim());
            RelationReport rep = validate_relation(rel, copts);
            if (o.format == "jsonl") {
                out << json{{"type", "relation"},
                            {"l1r", rep.l1r},
                            {"l2r", rep.l2r},
                            {"l3r", rep.l3r},
                            {"violation", rep.violation}}
                           .dump()
                    << "\n";
            } else {
                out << "L1R: " << (rep.l1r ? good("pass") : bad("fail")) << "\n";
                out << "L2R: " << (rep.l2r ? good("pass") : bad("fail")) << "\n";
                out << "L3R: " << (rep.l3r ? good("pass") : bad("fail")) << "\n";
                if (!rep.violation.empty()) out << "first violation: " << rep.violation << "\n";
            }
            return rep.valid() ? kExitOk : kExitNegative;
        }
        if (embed_cmd->parsed()) {
            ModalResiduatedPoset p = parse_poset(read_file(embed_poset));
            Embedding e = embed(p);
            if (o.format == "jsonl") {
                json hs = json::array();
                for (const Subspace& s : e.h) hs.push_back(s.to_string());
                out << json{{"type", "embedding"},
                            {"poset_size", p.n},
                            {"dim", e.algebra.dim()},
                            {"h", hs}}
                           .dump()
                    << "\n";
            } else {
                out << "embedded " << p.n << "-element poset into an F2 algebra of dimension "
                    << e.algebra.dim() << "\n";
                for (std::size_t k = 0; k < p.n; ++k) {
                    out << "  h(p" << k + 1 << ") has rank " << e.h[k].rank() << "\n";
                }
            }
            if (embed_out) {
                std::ofstream f(*embed_out);
                if (!f) throw std::runtime_error("cannot write file: " + *embed_out);
                f << print_algebra(e.algebra);
                if (o.format == "text") out << "algebra written to " << *embed_out << "\n";
            }
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            ModalResiduatedPoset p = parse_poset(read_file(verify_poset));
            Embedding e = embed(p);
            EmbeddingReport rep = verify_embedding(e, elim);
            for (const EmbeddingClause& c : rep.clauses) {
                if (o.format == "jsonl") {
                    out << json{{"type", "clause"},
                                {"name", c.name},
                                {"pass", c.pass},
                                {"witness", c.witness}}
                               .dump()
                        << "\n";
                } else {
                    out << c.name << ": " << (c.pass ? good("pass") : bad("fail"));
                    if (!c.witness.empty()) out << "  at " << c.witness;
                    out << "\n";
                }
            }
            return rep.all_pass() ? kExitOk : kExitNegative;
        }
        if (counter_cmd->parsed()) {
            Sequent seq = parse_sequent(counter_sequent);
            auto cm = search_countermodel(seq, counter_max);
            if (!cm) {
                if (o.format == "jsonl") {
                    out << json{{"type", "countermodel"}, {"found", false}}.dump() << "\n";
                } else {
                    out << "no countermodel up to size " << counter_max
                        << " (does not imply derivability)\n";
                }
                return kExitNegative;
            }
            if (o.format == "jsonl") {
                json val = json::object();
                for (const auto& [atom, idx] : cm->valuation) val[atom] = idx + 1;
                out << json{{"type", "countermodel"},
                            {"found", true},
                            {"size", cm->poset.n},
                            {"poset", print_poset(cm->poset)},
                            {"valuation", val}}
                           .dump()
                    << "\n";
            } else {
                out << "refuted in a modal residuated poset of size " << cm->poset.n << "\n";
                out << print_poset(cm->poset);
                for (const auto& [atom, idx] : cm->valuation) {
                    out << atom << " -> p" << idx + 1 << "\n";
                }
            }
            return kExitOk;
        }
        if (eval_cmd->parsed()) {
            KAlgebra a = load_algebra(eval_algebra);
            std::optional<ModalRelation> rel;
            if (eval_relation) rel = parse_relation(read_file(*eval_relation), a.field(), a.dim());
            Valuation val = parse_valuation(read_file(eval_valuation), a.field(), a.dim());
            Sequent seq = parse_sequent(eval_sequent);
            bool h = holds(a, rel ? &*rel : nullptr, val, seq, elim);
            if (o.format == "jsonl") {
                out << json{{"type", "eval"}, {"holds", h}}.dump() << "\n";
            } else {
                out << (h ? good("holds") : bad("fails")) << "\n";
            }
            return h ? kExitOk : kExitNegative;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace lambekws
