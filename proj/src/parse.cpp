#include "nilalg/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nilalg {

namespace {

// Values of the expression evaluator: a scalar plus an optional linear part
// over externally resolved atoms (basis vectors e_k or forms D(i,j)).
struct LinValue {
    Scalar scalar;
    std::map<size_t, Scalar> linear; // atom index -> coefficient

    bool pureScalar() const { return linear.empty(); }
};

struct Token {
    enum Kind { Number, Name, Op, End } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg, size_t pos) const {
        fail(ErrorKind::ParseError,
             msg + " at column " + std::to_string(pos + 1) + " in \"" + s_ + "\"");
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", i_};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
                ++j;
            tok_ = {Token::Number, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Name, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        tok_ = {Token::Op, std::string(1, c), i_};
        ++i_;
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

// Resolves a name token to an atom index, or nullopt for plain names.
// May consume further tokens (e.g. the (i,j) of D(i,j)).
using AtomResolver = std::function<std::optional<size_t>(const std::string&, Lexer&)>;

class ExprParser {
public:
    ExprParser(Lexer& lex, const ParseContext& ctx, AtomResolver atoms)
        : lex_(lex), ctx_(ctx), atoms_(std::move(atoms)) {}

    LinValue parseExpr() {
        LinValue v = parseTerm();
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.next().text;
            LinValue r = parseTerm();
            v = op == "+" ? add(v, r) : add(v, negate(r));
        }
        return v;
    }

private:
    LinValue parseTerm() {
        LinValue v = parseFactor();
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            Token op = lex_.next();
            LinValue r = parseFactor();
            v = op.text == "*" ? mul(v, r, op.pos) : div(v, r, op.pos);
        }
        return v;
    }

    LinValue parseFactor() {
        bool neg = false;
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "-" || lex_.peek().text == "+")) {
            if (lex_.next().text == "-")
                neg = !neg;
        }
        LinValue v = parsePrimary();
        if (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
            Token caret = lex_.next();
            long e = parseExponent();
            if (!v.pureScalar())
                lex_.error("cannot exponentiate a basis combination", caret.pos);
            v.scalar = v.scalar.pow(e);
        }
        return neg ? negate(v) : v;
    }

    long parseExponent() {
        bool paren = false;
        if (lex_.peek().kind == Token::Op && lex_.peek().text == "(") {
            lex_.next();
            paren = true;
        }
        bool neg = false;
        if (lex_.peek().kind == Token::Op &&
            (lex_.peek().text == "-" || lex_.peek().text == "+"))
            neg = lex_.next().text == "-";
        Token t = lex_.next();
        if (t.kind != Token::Number)
            lex_.error("expected integer exponent", t.pos);
        long e = std::stol(t.text);
        if (paren) {
            Token close = lex_.next();
            if (close.kind != Token::Op || close.text != ")")
                lex_.error("expected ')'", close.pos);
        }
        return neg ? -e : e;
    }

    LinValue parsePrimary() {
        Token t = lex_.next();
        if (t.kind == Token::Number)
            return {Scalar(Rational(BigInt(t.text))), {}};
        if (t.kind == Token::Op && t.text == "(") {
            LinValue v = parseExpr();
            Token close = lex_.next();
            if (close.kind != Token::Op || close.text != ")")
                lex_.error("expected ')'", close.pos);
            return v;
        }
        if (t.kind == Token::Name) {
            if (t.text == "i")
                return {Scalar::i(), {}};
            if (t.text == "sqrt") {
                Token open = lex_.next();
                if (open.kind != Token::Op || open.text != "(")
                    lex_.error("expected '(' after sqrt", open.pos);
                LinValue inner = parseExpr();
                Token close = lex_.next();
                if (close.kind != Token::Op || close.text != ")")
                    lex_.error("expected ')'", close.pos);
                if (!inner.pureScalar())
                    lex_.error("sqrt of a basis combination", t.pos);
                auto poly = inner.scalar.asPolynomial();
                if (!poly)
                    lex_.error("sqrt argument must be a polynomial", t.pos);
                if (!ctx_.radicand)
                    lex_.error("sqrt used without a declared radical", t.pos);
                if (*poly != *ctx_.radicand)
                    lex_.error("sqrt argument differs from the declared radicand " +
                                   ctx_.radicand->str(),
                               t.pos);
                return {Scalar::sqrtOf(*poly), {}};
            }
            if (atoms_) {
                auto idx = atoms_(t.text, lex_);
                if (idx)
                    return {Scalar::zero(), {{*idx, Scalar::one()}}};
            }
            if (ctx_.params.count(t.text))
                return {Scalar::variable(t.text), {}};
            lex_.error("unknown name '" + t.text + "'", t.pos);
        }
        lex_.error("unexpected token '" + t.text + "'", t.pos);
    }

    LinValue negate(LinValue v) {
        v.scalar = -v.scalar;
        for (auto& [k, c] : v.linear)
            c = -c;
        return v;
    }

    LinValue add(LinValue a, const LinValue& b) {
        a.scalar += b.scalar;
        for (const auto& [k, c] : b.linear) {
            auto it = a.linear.find(k);
            if (it == a.linear.end())
                a.linear.emplace(k, c);
            else
                it->second += c;
        }
        return a;
    }

    LinValue mul(const LinValue& a, const LinValue& b, size_t pos) {
        if (!a.pureScalar() && !b.pureScalar())
            lex_.error("product of two basis combinations", pos);
        const LinValue& s = a.pureScalar() ? a : b;
        const LinValue& v = a.pureScalar() ? b : a;
        LinValue out;
        out.scalar = s.scalar * v.scalar;
        for (const auto& [k, c] : v.linear)
            out.linear.emplace(k, c * s.scalar);
        return out;
    }

    LinValue div(const LinValue& a, const LinValue& b, size_t pos) {
        if (!b.pureScalar())
            lex_.error("division by a basis combination", pos);
        if (b.scalar.isZero())
            lex_.error("division by zero", pos);
        LinValue out;
        out.scalar = a.scalar / b.scalar;
        for (const auto& [k, c] : a.linear)
            out.linear.emplace(k, c / b.scalar);
        return out;
    }

    Lexer& lex_;
    const ParseContext& ctx_;
    AtomResolver atoms_;
};

LinValue evalString(const std::string& text, const ParseContext& ctx, AtomResolver atoms) {
    Lexer lex(text);
    ExprParser p(lex, ctx, std::move(atoms));
    LinValue v = p.parseExpr();
    if (lex.peek().kind != Token::End)
        lex.error("trailing input", lex.peek().pos);
    return v;
}

std::optional<size_t> basisAtom(const std::string& name, size_t n, Lexer& lex) {
    if (name.size() < 2 || name[0] != 'e')
        return std::nullopt;
    for (size_t k = 1; k < name.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(name[k])))
            return std::nullopt;
    size_t idx = std::stoul(name.substr(1));
    if (idx < 1 || idx > n)
        lex.error("basis vector e" + std::to_string(idx) + " out of range", 0);
    return idx - 1;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string stripComment(const std::string& line) {
    size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::vector<std::string> splitWords(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

[[noreturn]] void parseFail(const std::string& what, size_t lineNo, const std::string& line) {
    fail(ErrorKind::ParseError,
         what + " at line " + std::to_string(lineNo) + ": \"" + line + "\"");
}

} // namespace

Scalar parseScalar(const std::string& text, const ParseContext& ctx) {
    return evalString(text, ctx, nullptr).scalar;
}

Vec parseLinearCombination(const std::string& text, size_t n, const ParseContext& ctx) {
    LinValue v = evalString(text, ctx, [n](const std::string& name, Lexer& lex) {
        return basisAtom(name, n, lex);
    });
    if (!v.scalar.isZero())
        fail(ErrorKind::ParseError,
             "expected a combination of basis vectors, found scalar part " + v.scalar.str() +
                 " in \"" + text + "\"");
    Vec out(n);
    for (const auto& [k, c] : v.linear)
        out[k] = c;
    return out;
}

BilinearForm parseBilinearForm(const std::string& text, size_t n, const ParseContext& ctx) {
    auto atoms = [n](const std::string& name, Lexer& lex) -> std::optional<size_t> {
        if (name != "D")
            return std::nullopt;
        auto expectOp = [&](const char* op) {
            Token t = lex.next();
            if (t.kind != Token::Op || t.text != op)
                lex.error(std::string("expected '") + op + "' in D(i,j)", t.pos);
        };
        expectOp("(");
        Token ti = lex.next();
        if (ti.kind != Token::Number)
            lex.error("expected row index in D(i,j)", ti.pos);
        expectOp(",");
        Token tj = lex.next();
        if (tj.kind != Token::Number)
            lex.error("expected column index in D(i,j)", tj.pos);
        expectOp(")");
        size_t ii = std::stoul(ti.text), jj = std::stoul(tj.text);
        if (ii < 1 || ii > n || jj < 1 || jj > n)
            lex.error("D index out of range", ti.pos);
        return (ii - 1) * n + (jj - 1);
    };
    LinValue v = evalString(text, ctx, atoms);
    if (!v.scalar.isZero())
        fail(ErrorKind::ParseError, "stray scalar term in bilinear form \"" + text + "\"");
    BilinearForm m(n, n);
    for (const auto& [k, c] : v.linear)
        m.at(k / n, k % n) = c;
    return m;
}

std::vector<Scalar> parseNablaCombination(const std::string& text, size_t count,
                                          const ParseContext& ctx) {
    auto atoms = [count](const std::string& name, Lexer& lex) -> std::optional<size_t> {
        if (name.rfind("nabla", 0) != 0 || name.size() <= 5)
            return std::nullopt;
        size_t idx = std::stoul(name.substr(5));
        if (idx < 1 || idx > count)
            lex.error("nabla index out of range", 0);
        return idx - 1;
    };
    LinValue v = evalString(text, ctx, atoms);
    if (!v.scalar.isZero())
        fail(ErrorKind::ParseError, "stray scalar term in representative \"" + text + "\"");
    std::vector<Scalar> out(count);
    for (const auto& [k, c] : v.linear)
        out[k] = c;
    return out;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Algebra parseAlgebraText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    std::string name;
    size_t dim = 0;
    std::vector<ParamDecl> params;
    std::optional<Polynomial> radicand;
    std::vector<std::tuple<size_t, size_t, std::string>> products;
    bool sawAlgebra = false, sawDim = false;

    while (std::getline(in, line)) {
        ++lineNo;
        line = trim(stripComment(line));
        if (line.empty())
            continue;
        auto words = splitWords(line);
        if (words[0] == "algebra") {
            if (words.size() != 2)
                parseFail("expected 'algebra <name>'", lineNo, line);
            name = words[1];
            sawAlgebra = true;
        } else if (words[0] == "dim") {
            if (words.size() != 2)
                parseFail("expected 'dim <n>'", lineNo, line);
            dim = std::stoul(words[1]);
            if (dim == 0)
                parseFail("dimension must be positive", lineNo, line);
            sawDim = true;
        } else if (words[0] == "param") {
            if (words.size() < 2)
                parseFail("expected 'param <name> [exclude ...]'", lineNo, line);
            ParamDecl p;
            p.name = words[1];
            if (words.size() > 2) {
                if (words[2] != "exclude")
                    parseFail("expected 'exclude' after parameter name", lineNo, line);
                std::string rest = line.substr(line.find("exclude") + 7);
                ParseContext pctx; // exclusions are closed scalar literals
                for (const auto& part : splitOn(rest, ','))
                    if (!part.empty())
                        p.excluded.push_back(parseScalar(part, pctx));
            }
            params.push_back(std::move(p));
        } else if (words[0] == "radical") {
            ParseContext pctx;
            for (const auto& p : params)
                pctx.params.insert(p.name);
            std::string rest = trim(line.substr(line.find("radical") + 7));
            Scalar s = parseScalar(rest, pctx);
            auto poly = s.asPolynomial();
            if (!poly)
                parseFail("radical line must be a polynomial", lineNo, line);
            radicand = *poly;
        } else {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                parseFail("expected a product line 'e<i>*e<j> = ...'", lineNo, line);
            std::string lhs = trim(line.substr(0, eq));
            std::string rhs = trim(line.substr(eq + 1));
            size_t star = lhs.find('*');
            if (star == std::string::npos || lhs.empty() || lhs[0] != 'e')
                parseFail("expected 'e<i>*e<j>' on the left", lineNo, line);
            std::string li = lhs.substr(1, star - 1);
            std::string rj = trim(lhs.substr(star + 1));
            if (rj.empty() || rj[0] != 'e')
                parseFail("expected 'e<i>*e<j>' on the left", lineNo, line);
            size_t i = std::stoul(li), j = std::stoul(rj.substr(1));
            products.emplace_back(i, j, rhs);
        }
    }
    if (!sawAlgebra)
        fail(ErrorKind::ParseError, "missing 'algebra <name>' header");
    if (!sawDim)
        fail(ErrorKind::ParseError, "missing 'dim <n>' line in " + name);

    Algebra A(name, dim);
    for (auto& p : params)
        A.addParam(p);
    if (radicand)
        A.setRadicand(*radicand);
    ParseContext ctx;
    for (const auto& p : params)
        ctx.params.insert(p.name);
    ctx.radicand = radicand;
    for (const auto& [i, j, rhs] : products) {
        if (i < 1 || i > dim || j < 1 || j > dim)
            fail(ErrorKind::ParseError,
                 name + ": product index out of range e" + std::to_string(i) + "*e" +
                     std::to_string(j));
        Vec v = parseLinearCombination(rhs, dim, ctx);
        for (size_t k = 0; k < dim; ++k)
            A.setC(i - 1, j - 1, k, v[k]);
    }
    return A;
}

CocycleFile parseCocycleText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    CocycleFile out;
    while (std::getline(in, line)) {
        ++lineNo;
        line = trim(stripComment(line));
        if (line.empty())
            continue;
        auto words = splitWords(line);
        if (words[0] == "cocycle") {
            if (words.size() != 4 || words[2] != "over")
                parseFail("expected 'cocycle <name> over <algebra>'", lineNo, line);
            out.name = words[1];
            out.overRef = words[3];
        } else if (words[0].rfind("component", 0) == 0) {
            size_t colon = line.find(':');
            if (colon == std::string::npos)
                parseFail("expected 'component: <form>'", lineNo, line);
            out.componentExprs.push_back(trim(line.substr(colon + 1)));
        } else {
            parseFail("unexpected line in cocycle file", lineNo, line);
        }
    }
    if (out.name.empty())
        fail(ErrorKind::ParseError, "missing 'cocycle ... over ...' header");
    if (out.componentExprs.empty())
        fail(ErrorKind::ParseError, out.name + ": cocycle has no components");
    return out;
}

CertificateFile parseCertificateText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    CertificateFile out;
    std::map<size_t, std::string> basis;
    while (std::getline(in, line)) {
        ++lineNo;
        line = trim(stripComment(line));
        if (line.empty())
            continue;
        auto words = splitWords(line);
        if (words[0] == "degeneration") {
            if (words.size() != 2)
                parseFail("expected 'degeneration <name>'", lineNo, line);
            out.name = words[1];
        } else if (words[0] == "source") {
            if (words.size() < 2)
                parseFail("expected 'source <ref> [index <expr>]'", lineNo, line);
            out.sourceRef = words[1];
            if (words.size() > 2) {
                if (words[2] != "index")
                    parseFail("expected 'index' after source reference", lineNo, line);
                size_t at = line.find("index");
                out.indexExpr = trim(line.substr(at + 5));
            }
        } else if (words[0] == "target") {
            if (words.size() != 2)
                parseFail("expected 'target <ref>'", lineNo, line);
            out.targetRef = words[1];
        } else if (words[0] == "constraint") {
            size_t bang = line.find("!=");
            if (bang == std::string::npos || trim(line.substr(bang + 2)) != "0")
                parseFail("expected 'constraint <polynomial> != 0'", lineNo, line);
            size_t at = line.find("constraint") + 10;
            out.constraintExprs.push_back(trim(line.substr(at, bang - at)));
        } else if (words[0] == "radical") {
            out.radicalExpr = trim(line.substr(line.find("radical") + 7));
        } else if (line[0] == 'E') {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                parseFail("expected 'E<i> = <combination>'", lineNo, line);
            size_t idx = std::stoul(trim(line.substr(1, eq - 1)));
            basis[idx] = trim(line.substr(eq + 1));
        } else {
            parseFail("unexpected line in certificate file", lineNo, line);
        }
    }
    if (out.name.empty() || out.sourceRef.empty() || out.targetRef.empty())
        fail(ErrorKind::ParseError, "certificate needs degeneration/source/target lines");
    for (size_t i = 1; i <= basis.size(); ++i) {
        auto it = basis.find(i);
        if (it == basis.end())
            fail(ErrorKind::ParseError, out.name + ": missing basis row E" + std::to_string(i));
        out.basisExprs.push_back(it->second);
    }
    return out;
}

ExpectedFile parseExpectedText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    ExpectedFile out;
    while (std::getline(in, line)) {
        ++lineNo;
        line = trim(stripComment(line));
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            parseFail("expected 'key=value'", lineNo, line);
        out.values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

NormalizationFamily parseNormalizationText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineNo = 0;
    NormalizationFamily fam;
    NormalizationCase* cur = nullptr;
    while (std::getline(in, line)) {
        ++lineNo;
        line = trim(stripComment(line));
        if (line.empty())
            continue;
        auto words = splitWords(line);
        if (words[0] == "normalization_family") {
            fam.id = words.at(1);
        } else if (words[0] == "base") {
            fam.baseRef = words.at(1);
        } else if (words[0] == "aut_params") {
            fam.autParams.assign(words.begin() + 1, words.end());
        } else if (words[0] == "aut_row") {
            size_t at = line.find("aut_row");
            fam.autMatrix.push_back(splitOn(line.substr(at + 7), ','));
        } else if (words[0] == "nabla") {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                parseFail("expected 'nabla <k> = <form>'", lineNo, line);
            size_t idx = std::stoul(words.at(1));
            if (idx != fam.nablaExprs.size() + 1)
                parseFail("nabla indices must be consecutive from 1", lineNo, line);
            fam.nablaExprs.push_back(trim(line.substr(eq + 1)));
        } else if (words[0] == "excluded_pattern") {
            std::vector<size_t> idxs;
            for (size_t k = 1; k < words.size(); ++k) {
                const std::string& w = words[k];
                size_t eq = w.find("=0");
                if (w.size() < 3 || w[0] != 'a' || eq == std::string::npos)
                    parseFail("expected 'a<i>=0' entries", lineNo, line);
                idxs.push_back(std::stoul(w.substr(1, eq - 1)));
            }
            fam.excludedPatterns.push_back(std::move(idxs));
        } else if (words[0] == "case") {
            fam.cases.emplace_back();
            cur = &fam.cases.back();
            cur->id = words.at(1);
        } else if (words[0] == "end") {
            cur = nullptr;
        } else if (cur && words[0] == "bind") {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                parseFail("expected 'bind <param> = <values>'", lineNo, line);
            cur->bindParam = words.at(1);
            ParseContext pctx;
            for (const auto& v : splitOn(line.substr(eq + 1), ','))
                cur->bindValues.push_back(parseScalar(v, pctx));
            cur->contextLabel = "bind " + cur->bindParam + " " + trim(line.substr(eq + 1));
        } else if (cur && words[0] == "generic") {
            cur->contextLabel = line;
        } else if (cur && words[0] == "where") {
            for (size_t k = 1; k < words.size(); ++k) {
                const std::string& w = words[k];
                size_t neq = w.find("!=0");
                size_t eq = w.find("=0");
                if (w.size() >= 2 && w[0] == 'a' && neq != std::string::npos)
                    cur->nonzero.push_back(std::stoul(w.substr(1, neq - 1)));
                else if (w.size() >= 2 && w[0] == 'a' && eq != std::string::npos)
                    cur->zero.push_back(std::stoul(w.substr(1, eq - 1)));
                else
                    parseFail("expected 'a<i>!=0' or 'a<i>=0'", lineNo, line);
            }
        } else if (cur && words[0] == "choose") {
            size_t eq = line.find('=');
            if (eq == std::string::npos)
                parseFail("expected 'choose <param> = <expr>'", lineNo, line);
            cur->choices.emplace_back(words.at(1), trim(line.substr(eq + 1)));
        } else if (cur && words[0] == "representative") {
            cur->representativeText = trim(line.substr(line.find("representative") + 14));
        } else {
            parseFail("unexpected line in normalization file", lineNo, line);
        }
    }
    if (fam.id.empty() || fam.baseRef.empty() || fam.autMatrix.empty() || fam.nablaExprs.empty())
        fail(ErrorKind::ParseError, "normalization family is incomplete");
    return fam;
}

AlgebraRef parseAlgebraRef(const std::string& text) {
    std::string s = trim(text);
    size_t open = s.find('(');
    if (open == std::string::npos)
        return {s, std::nullopt};
    if (s.back() != ')')
        fail(ErrorKind::ParseError, "malformed algebra reference: " + s);
    return {trim(s.substr(0, open)), s.substr(open + 1, s.size() - open - 2)};
}

} // namespace nilalg
