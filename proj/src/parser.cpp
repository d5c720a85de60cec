#include "lambekws/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lambekws {

ParseError::ParseError(std::string message, std::size_t position, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                              : message + " (at position " + std::to_string(position) + ")"),
      position_(position),
      line_(line) {}

namespace {

enum class Tok {
    atom, kw_dia, kw_box, star, bslash, fslash, dbl_bslash, dbl_fslash, comma,
    lparen, rparen, langle, rangle, lbracket, rbracket, arrow, end
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

// UTF-8 aliases accepted on input.
const std::string kDiaUtf = "\xe2\x97\x87";    // white diamond
const std::string kBoxUtf = "\xe2\x96\xa0";    // black square
const std::string kTensorUtf = "\xe2\x8a\x97"; // circled times
const std::string kArrowUtf = "\xe2\x87\x92";  // double arrow

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts_with = [&](const std::string& s) {
        return text.compare(i, s.size(), s) == 0;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                    text[j] == '\'')) {
                ++j;
            }
            std::string word = text.substr(i, j - i);
            i = j;
            if (word == "dia") {
                out.push_back({Tok::kw_dia, word, pos});
            } else if (word == "box") {
                out.push_back({Tok::kw_box, word, pos});
            } else {
                out.push_back({Tok::atom, word, pos});
            }
            continue;
        }
        if (starts_with("=>")) { out.push_back({Tok::arrow, "=>", pos}); i += 2; continue; }
        if (starts_with("\\\\")) { out.push_back({Tok::dbl_bslash, "\\\\", pos}); i += 2; continue; }
        if (starts_with("//")) { out.push_back({Tok::dbl_fslash, "//", pos}); i += 2; continue; }
        if (starts_with(kDiaUtf)) { out.push_back({Tok::kw_dia, "dia", pos}); i += kDiaUtf.size(); continue; }
        if (starts_with(kBoxUtf)) { out.push_back({Tok::kw_box, "box", pos}); i += kBoxUtf.size(); continue; }
        if (starts_with(kTensorUtf)) { out.push_back({Tok::star, "*", pos}); i += kTensorUtf.size(); continue; }
        if (starts_with(kArrowUtf)) { out.push_back({Tok::arrow, "=>", pos}); i += kArrowUtf.size(); continue; }
        switch (c) {
            case '*': out.push_back({Tok::star, "*", pos}); break;
            case '\\': out.push_back({Tok::bslash, "\\", pos}); break;
            case '/': out.push_back({Tok::fslash, "/", pos}); break;
            case ',': out.push_back({Tok::comma, ",", pos}); break;
            case '(': out.push_back({Tok::lparen, "(", pos}); break;
            case ')': out.push_back({Tok::rparen, ")", pos}); break;
            case '<': out.push_back({Tok::langle, "<", pos}); break;
            case '>': out.push_back({Tok::rangle, ">", pos}); break;
            case '[': out.push_back({Tok::lbracket, "[", pos}); break;
            case ']': out.push_back({Tok::rbracket, "]", pos}); break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
        }
        ++i;
    }
    out.push_back({Tok::end, "", text.size()});
    return out;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t at = 0;

    const Token& peek() const { return toks[at]; }
    Token take() { return toks[at++]; }
    bool accept(Tok k) {
        if (toks[at].kind == k) {
            ++at;
            return true;
        }
        return false;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) {
            throw ParseError(std::string("expected ") + what + ", found '" + peek().text + "'",
                             peek().pos);
        }
    }

    // formula := unary (op unary)?   (binary connectives non-associative)
    FormulaPtr formula() {
        FormulaPtr left = unary();
        Tok k = peek().kind;
        if (k == Tok::star || k == Tok::bslash || k == Tok::fslash) {
            take();
            FormulaPtr right = unary();
            Tok next = peek().kind;
            if (next == Tok::star || next == Tok::bslash || next == Tok::fslash) {
                throw ParseError("binary connectives are non-associative; parenthesize", peek().pos);
            }
            if (k == Tok::star) return Formula::tensor(left, right);
            if (k == Tok::bslash) return Formula::lres(left, right);
            return Formula::rres(left, right);
        }
        return left;
    }

    FormulaPtr unary() {
        if (accept(Tok::kw_dia)) return Formula::dia(unary());
        if (accept(Tok::kw_box)) return Formula::box(unary());
        if (accept(Tok::lparen)) {
            FormulaPtr f = formula();
            expect(Tok::rparen, "')'");
            return f;
        }
        if (peek().kind == Tok::atom) return Formula::atom(take().text);
        throw ParseError("expected a formula, found '" + peek().text + "'", peek().pos);
    }

    // structure := '<' structure '>' | '[' structure ']'
    //            | '(' structure (',' | '\\\\' | '//') structure ')'
    //            | formula (with '(' formula ')' as a fallback leaf)
    StructurePtr structure() {
        if (accept(Tok::langle)) {
            StructurePtr s = structure();
            expect(Tok::rangle, "'>'");
            return Structure::sdia(s);
        }
        if (accept(Tok::lbracket)) {
            StructurePtr s = structure();
            expect(Tok::rbracket, "']'");
            return Structure::sbox(s);
        }
        if (peek().kind == Tok::lparen) {
            // Try a structural pair first; fall back to a parenthesized
            // formula leaf.
            std::size_t mark = at;
            take();
            StructurePtr left;
            bool left_ok = true;
            try {
                left = structure();
            } catch (const ParseError&) {
                left_ok = false;
            }
            if (left_ok) {
                if (accept(Tok::comma)) {
                    StructurePtr right = structure();
                    expect(Tok::rparen, "')'");
                    return Structure::fusion(left, right);
                }
                if (accept(Tok::dbl_bslash)) {
                    StructurePtr right = structure();
                    expect(Tok::rparen, "')'");
                    return Structure::sldiv(left, right);
                }
                if (accept(Tok::dbl_fslash)) {
                    StructurePtr right = structure();
                    expect(Tok::rparen, "')'");
                    return Structure::srdiv(left, right);
                }
            }
            at = mark;
            return Structure::leaf(formula());
        }
        return Structure::leaf(formula());
    }

    Sequent sequent() {
        StructurePtr lhs = structure();
        expect(Tok::arrow, "'=>'");
        StructurePtr rhs = structure();
        return Sequent{lhs, rhs};
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
    Parser p{tokenize(text)};
    FormulaPtr f = p.formula();
    p.expect(Tok::end, "end of input");
    return f;
}

StructurePtr parse_structure(const std::string& text) {
    Parser p{tokenize(text)};
    StructurePtr s = p.structure();
    p.expect(Tok::end, "end of input");
    return s;
}

Sequent parse_sequent(const std::string& text) {
    Parser p{tokenize(text)};
    Sequent s = p.sequent();
    p.expect(Tok::end, "end of input");
    return s;
}

namespace {

std::string print_formula_inner(const FormulaPtr& f, bool parenthesize_binary) {
    switch (f->kind()) {
        case Formula::Kind::atom: return f->atom_name();
        case Formula::Kind::dia: return "dia " + print_formula_inner(f->child(), true);
        case Formula::Kind::box: return "box " + print_formula_inner(f->child(), true);
        default: break;
    }
    const char* op = f->kind() == Formula::Kind::tensor ? " * "
                     : f->kind() == Formula::Kind::lres ? " \\ "
                                                        : " / ";
    std::string s = print_formula_inner(f->left(), true) + op +
                    print_formula_inner(f->right(), true);
    return parenthesize_binary ? "(" + s + ")" : s;
}

}  // namespace

std::string print_formula(const FormulaPtr& f) { return print_formula_inner(f, false); }

std::string print_structure(const StructurePtr& s) {
    switch (s->kind()) {
        case Structure::Kind::leaf: {
            // A binary formula leaf keeps its own parentheses so that the
            // structural reading stays unambiguous.
            const FormulaPtr& f = s->formula();
            return f->is_binary() ? "(" + print_formula(f) + ")" : print_formula(f);
        }
        case Structure::Kind::fusion:
            return "(" + print_structure(s->left()) + " , " + print_structure(s->right()) + ")";
        case Structure::Kind::sdia: return "< " + print_structure(s->child()) + " >";
        case Structure::Kind::sbox: return "[ " + print_structure(s->child()) + " ]";
        case Structure::Kind::sldiv:
            return "(" + print_structure(s->left()) + " \\\\ " + print_structure(s->right()) + ")";
        case Structure::Kind::srdiv:
            return "(" + print_structure(s->left()) + " // " + print_structure(s->right()) + ")";
    }
    return "";
}

std::string print_sequent(const Sequent& s) {
    return print_structure(s.lhs) + " => " + print_structure(s.rhs);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    std::size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Lexicon parse_lexicon(const std::string& text) {
    Lexicon lex;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw ParseError("expected 'word : formula'", 0, lineno);
        }
        std::string word = line.substr(0, colon);
        word.erase(std::remove_if(word.begin(), word.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   word.end());
        if (word.empty()) throw ParseError("empty word before ':'", 0, lineno);
        FormulaPtr f;
        try {
            f = parse_formula(line.substr(colon + 1));
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad category: ") + e.what(), 0, lineno);
        }
        auto& forms = lex.entries[word];
        bool duplicate = std::any_of(forms.begin(), forms.end(),
                                     [&](const FormulaPtr& g) { return equal(f, g); });
        if (!duplicate) forms.push_back(f);
    }
    return lex;
}

Scalar parse_scalar(const Field& f, const std::string& token) {
    std::size_t slash = token.find('/');
    auto to_ll = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw ParseError("bad number '" + s + "'", 0);
        return v;
    };
    if (slash == std::string::npos) return Scalar::from_int(f, to_ll(token));
    return Scalar::fraction(f, to_ll(token.substr(0, slash)), to_ll(token.substr(slash + 1)));
}

Vec parse_vector(const Field& f, const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               body.end());
    if (!body.empty() && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    std::vector<Scalar> coords;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            std::size_t comma = body.find(',', start);
            std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
            if (tok.empty()) throw ParseError("empty vector coordinate", start);
            coords.push_back(parse_scalar(f, tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return Vec(f, std::move(coords));
}

namespace {

Field parse_field_token(const std::string& tok, std::size_t lineno) {
    if (tok == "Q") return Field::rationals();
    if (tok.size() >= 2 && tok[0] == 'F') {
        try {
            return Field::fp(static_cast<std::uint32_t>(std::stoul(tok.substr(1))));
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad field '") + tok + "': " + e.what(), 0, lineno);
        }
    }
    throw ParseError("bad field '" + tok + "' (expected F<p> or Q)", 0, lineno);
}

}  // namespace

KAlgebra parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    std::optional<Field> field;
    std::optional<std::size_t> dim;
    std::vector<std::string> names;
    std::map<std::string, std::size_t> name_index;
    std::vector<std::vector<Vec>> sc;

    auto header_ready = [&] { return field && dim && !names.empty(); };

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::vector<std::string> words = split_ws(line);
        if (words[0] == "field") {
            if (words.size() != 2) throw ParseError("expected 'field F<p>|Q'", 0, lineno);
            field = parse_field_token(words[1], lineno);
            continue;
        }
        if (words[0] == "dim") {
            if (words.size() != 2) throw ParseError("expected 'dim N'", 0, lineno);
            dim = std::stoul(words[1]);
            continue;
        }
        if (words[0] == "basis") {
            if (!dim) throw ParseError("'basis' before 'dim'", 0, lineno);
            if (words.size() != *dim + 1) {
                throw ParseError("expected " + std::to_string(*dim) + " basis names", 0, lineno);
            }
            names.assign(words.begin() + 1, words.end());
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (!name_index.emplace(names[i], i).second) {
                    throw ParseError("duplicate basis name '" + names[i] + "'", 0, lineno);
                }
            }
            sc.assign(*dim, std::vector<Vec>(*dim, Vec::zero(*field, *dim)));
            continue;
        }
        // Product line: name * name = term (+|-) term ... | 0
        if (!header_ready()) {
            throw ParseError("product line before field/dim/basis header", 0, lineno);
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected '=' in product line", 0, lineno);
        std::vector<std::string> left = split_ws(line.substr(0, eq));
        if (left.size() != 3 || left[1] != "*") {
            throw ParseError("expected 'ei * ej = ...'", 0, lineno);
        }
        auto li = name_index.find(left[0]);
        auto lj = name_index.find(left[2]);
        if (li == name_index.end() || lj == name_index.end()) {
            throw ParseError("unknown basis name in product line", 0, lineno);
        }

        // Right-hand side: signed terms, each `[coef] name`, or a lone 0.
        std::vector<std::string> rhs = split_ws(line.substr(eq + 1));
        Vec value = Vec::zero(*field, *dim);
        if (!(rhs.size() == 1 && rhs[0] == "0")) {
            long long sign = 1;
            std::optional<std::string> coef;
            std::vector<Scalar> coords(*dim, Scalar::zero(*field));
            auto flush = [&](const std::string& name) {
                auto it = name_index.find(name);
                if (it == name_index.end()) {
                    throw ParseError("unknown basis name '" + name + "'", 0, lineno);
                }
                Scalar c = coef ? parse_scalar(*field, *coef) : Scalar::one(*field);
                if (sign < 0) c = -c;
                coords[it->second] = coords[it->second] + c;
                sign = 1;
                coef.reset();
            };
            for (const std::string& tok : rhs) {
                if (tok == "+") continue;
                if (tok == "-") {
                    sign = -sign;
                    continue;
                }
                bool numeric = tok.find_first_not_of("0123456789/-") == std::string::npos;
                if (numeric) {
                    if (coef) throw ParseError("two coefficients in a row", 0, lineno);
                    if (tok[0] == '-') sign = -sign;
                    coef = tok[0] == '-' ? tok.substr(1) : tok;
                } else {
                    flush(tok);
                }
            }
            if (coef) throw ParseError("dangling coefficient", 0, lineno);
            value = Vec(*field, std::move(coords));
        }
        sc[li->second][lj->second] = value;
    }
    if (!header_ready()) throw ParseError("missing field/dim/basis header", 0, lineno);
    return KAlgebra(*field, *dim, names, std::move(sc));
}

std::string print_algebra(const KAlgebra& a) {
    std::ostringstream out;
    out << "field " << a.field().to_string() << "\n";
    out << "dim " << a.dim() << "\n";
    out << "basis";
    for (const std::string& n : a.basis_names()) out << " " << n;
    out << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vec& v = a.sc(i, j);
            if (v.is_zero()) continue;
            out << a.basis_names()[i] << " * " << a.basis_names()[j] << " =";
            bool first = true;
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (v[k].is_zero()) continue;
                out << (first ? " " : " + ") << v[k].to_string() << " " << a.basis_names()[k];
                first = false;
            }
            out << "\n";
        }
    }
    return out.str();
}

ModalRelation parse_relation(const std::string& text, const Field& f, std::size_t dim) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::string kind;
    std::vector<std::pair<Vec, Vec>> pairs;
    std::vector<std::vector<Scalar>> matrix;

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::vector<std::string> words = split_ws(line);
        if (words[0] == "relation") {
            if (words.size() != 2) throw ParseError("expected 'relation <kind>'", 0, lineno);
            kind = words[1];
            continue;
        }
        if (kind.empty()) throw ParseError("missing 'relation <kind>' header", 0, lineno);
        if (kind == "functional") {
            std::vector<Scalar> row;
            for (const std::string& w : words) row.push_back(parse_scalar(f, w));
            if (row.size() != dim) throw ParseError("matrix row of wrong length", 0, lineno);
            matrix.push_back(std::move(row));
            continue;
        }
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("expected 'v -> u'", 0, lineno);
        Vec v = parse_vector(f, line.substr(0, arrow));
        Vec u = parse_vector(f, line.substr(arrow + 2));
        if (v.dim() != dim || u.dim() != dim) {
            throw ParseError("relation vector of wrong dimension", 0, lineno);
        }
        pairs.emplace_back(std::move(v), std::move(u));
    }

    if (kind == "extensional") return ModalRelation::extensional(f, dim, std::move(pairs));
    if (kind == "functional") {
        if (matrix.size() != dim) throw ParseError("functional relation needs dim rows", 0, lineno);
        return ModalRelation::functional(LinearMap(f, std::move(matrix)));
    }
    if (kind == "graph") {
        std::vector<Vec> generators;
        for (const auto& [v, u] : pairs) {
            std::vector<Scalar> joint;
            for (std::size_t i = 0; i < dim; ++i) joint.push_back(v[i]);
            for (std::size_t i = 0; i < dim; ++i) joint.push_back(u[i]);
            generators.emplace_back(f, std::move(joint));
        }
        return ModalRelation::graph(f, dim, Subspace::span(f, 2 * dim, generators));
    }
    throw ParseError("unknown relation kind '" + kind + "'", 0, lineno);
}

ModalResiduatedPoset parse_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    ModalResiduatedPoset p;
    std::string section;
    std::size_t rows_needed = 0;
    std::vector<std::vector<std::size_t>>* table = nullptr;

    auto need_size = [&](std::size_t ln) {
        if (p.n == 0) throw ParseError("'size n' must come first", 0, ln);
    };

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::vector<std::string> words = split_ws(line);
        if (words[0] == "size") {
            if (words.size() != 2) throw ParseError("expected 'size n'", 0, lineno);
            p.n = std::stoul(words[1]);
            p.leq.assign(p.n, std::vector<bool>(p.n, false));
            continue;
        }
        if (words.size() == 1 &&
            (words[0] == "leq" || words[0] == "otimes" || words[0] == "lres" ||
             words[0] == "rres" || words[0] == "dia" || words[0] == "box")) {
            need_size(lineno);
            section = words[0];
            rows_needed = (section == "dia" || section == "box") ? 1 : p.n;
            table = section == "otimes" ? &p.otimes
                    : section == "lres" ? &p.lres
                    : section == "rres" ? &p.rres
                                        : nullptr;
            if (table) table->clear();
            continue;
        }
        if (section.empty()) throw ParseError("data before a section header", 0, lineno);
        if (rows_needed == 0) throw ParseError("too many rows in '" + section + "'", 0, lineno);
        if (words.size() != p.n) {
            throw ParseError("expected " + std::to_string(p.n) + " entries", 0, lineno);
        }
        if (section == "leq") {
            std::size_t row = p.n - rows_needed;
            for (std::size_t j = 0; j < p.n; ++j) p.leq[row][j] = words[j] == "1";
        } else if (section == "dia" || section == "box") {
            std::vector<std::size_t>& v = section == "dia" ? p.dia : p.box;
            v.clear();
            for (const std::string& w : words) {
                std::size_t idx = std::stoul(w);
                if (idx < 1 || idx > p.n) throw ParseError("index out of range", 0, lineno);
                v.push_back(idx - 1);
            }
        } else {
            std::vector<std::size_t> row;
            for (const std::string& w : words) {
                std::size_t idx = std::stoul(w);
                if (idx < 1 || idx > p.n) throw ParseError("index out of range", 0, lineno);
                row.push_back(idx - 1);
            }
            table->push_back(std::move(row));
        }
        --rows_needed;
    }
    if (p.n == 0) throw ParseError("missing 'size n'", 0, lineno);
    if (p.otimes.size() != p.n || p.lres.size() != p.n || p.rres.size() != p.n ||
        p.dia.size() != p.n || p.box.size() != p.n) {
        throw ParseError("incomplete poset tables", 0, lineno);
    }
    return p;
}

std::string print_poset(const ModalResiduatedPoset& p) {
    std::ostringstream out;
    out << "size " << p.n << "\n";
    out << "leq\n";
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = 0; j < p.n; ++j) out << (j ? " " : "") << (p.leq[i][j] ? 1 : 0);
        out << "\n";
    }
    auto table = [&](const char* name, const std::vector<std::vector<std::size_t>>& t) {
        out << name << "\n";
        for (std::size_t i = 0; i < p.n; ++i) {
            for (std::size_t j = 0; j < p.n; ++j) out << (j ? " " : "") << t[i][j] + 1;
            out << "\n";
        }
    };
    table("otimes", p.otimes);
    table("lres", p.lres);
    table("rres", p.rres);
    out << "dia\n";
    for (std::size_t i = 0; i < p.n; ++i) out << (i ? " " : "") << p.dia[i] + 1;
    out << "\nbox\n";
    for (std::size_t i = 0; i < p.n; ++i) out << (i ? " " : "") << p.box[i] + 1;
    out << "\n";
    return out.str();
}

std::map<std::string, Subspace> parse_valuation(const std::string& text, const Field& f,
                                                std::size_t dim) {
    std::map<std::string, Subspace> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'atom = (v) (v) ...'", 0, lineno);
        std::string atom = line.substr(0, eq);
        atom.erase(std::remove_if(atom.begin(), atom.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   atom.end());
        if (atom.empty()) throw ParseError("empty atom name", 0, lineno);
        std::vector<Vec> vs;
        std::string rest = line.substr(eq + 1);
        std::size_t i = 0;
        while (i < rest.size()) {
            if (std::isspace(static_cast<unsigned char>(rest[i]))) {
                ++i;
                continue;
            }
            if (rest[i] != '(') throw ParseError("expected '(' in vector list", i, lineno);
            std::size_t close = rest.find(')', i);
            if (close == std::string::npos) throw ParseError("unbalanced '('", i, lineno);
            Vec v = parse_vector(f, rest.substr(i, close - i + 1));
            if (v.dim() != dim) throw ParseError("vector of wrong dimension", i, lineno);
            vs.push_back(std::move(v));
            i = close + 1;
        }
        out.insert_or_assign(atom, Subspace::span(f, dim, vs));
    }
    return out;
}

}  // namespace lambekws
