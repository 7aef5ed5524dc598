#include "coneterm/instance_io.hpp"

#include <cctype>
#include <map>

namespace coneterm {

using nlohmann::json;

void InstanceOptions::apply(SearchConfig& cfg) const {
    if (max_degree) cfg.max_degree = *max_degree;
    if (box_lo) cfg.box_lo = *box_lo;
    if (box_hi) cfg.box_hi = *box_hi;
    if (max_subdivision_depth) cfg.max_subdivision_depth = *max_subdivision_depth;
}

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": rational entries must be strings like \"p/q\", got " + j.dump());
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

long integer_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer, got " + j.dump());
    return j.get<long>();
}

}  // namespace

QVector vector_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array of rational strings");
    QVector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i], "vector entry " + std::to_string(i + 1));
    return v;
}

json vector_to_json(const QVector& v) {
    json j = json::array();
    for (size_t i = 0; i < v.dim(); ++i) j.push_back(v[i].to_string());
    return j;
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    const size_t rows = j.size();
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    QMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix rows must all have equal length");
        for (size_t c = 0; c < cols; ++c)
            m(r, c) = rational_from_json(j[r][c], "matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
    }
    return m;
}

json matrix_to_json(const QMatrix& m) {
    json j = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        j.push_back(std::move(row));
    }
    return j;
}

json shaped_matrix_to_json(const QMatrix& m) {
    json j;
    j["shape"] = {m.rows(), m.cols()};
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

QMatrix shaped_matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("entries"))
        throw ParseError("shaped matrix must carry shape and entries");
    const size_t rows = j["shape"].at(0).get<size_t>(), cols = j["shape"].at(1).get<size_t>();
    const json& e = j["entries"];
    if (!e.is_array() || e.size() != rows) throw ParseError("shaped matrix row count mismatch");
    QMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        if (!e[r].is_array() || e[r].size() != cols) throw ParseError("shaped matrix column count mismatch");
        for (size_t c = 0; c < cols; ++c)
            m(r, c) = rational_from_json(e[r][c], "matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
    }
    return m;
}

ParsedInstance parse_instance_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance must be a JSON object");

    const long d = integer_from_json(j.at("d"), "d");
    const long k = integer_from_json(j.at("k"), "k");
    const long n = integer_from_json(j.at("n"), "n");
    if (d < 1 || k < 1 || n < 1) throw ParseError("d, k and n must be positive");

    if (!j.contains("matrices") || !j["matrices"].is_array() || j["matrices"].size() != static_cast<size_t>(k))
        throw ParseError("expected " + std::to_string(k) + " update matrices");
    std::vector<QMatrix> matrices;
    for (const auto& mj : j["matrices"]) matrices.push_back(matrix_from_json(mj));

    if (!j.contains("guard") || !j["guard"].is_array() || j["guard"].size() != static_cast<size_t>(n))
        throw ParseError("expected " + std::to_string(n) + " guard rows");
    std::vector<QVector> guard;
    for (const auto& gj : j["guard"]) guard.push_back(vector_from_json(gj));

    for (const auto& m : matrices)
        if (m.rows() != static_cast<size_t>(d) || m.cols() != static_cast<size_t>(d))
            throw ValidationError(ValidationError::Kind::DimensionMismatch, "matrix is not d x d");
    for (const auto& g : guard)
        if (g.dim() != static_cast<size_t>(d))
            throw ValidationError(ValidationError::Kind::DimensionMismatch, "guard row is not d-dimensional");

    InstanceOptions options;
    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) throw ParseError("options must be an object");
        if (o.contains("max_degree")) options.max_degree = integer_from_json(o["max_degree"], "options.max_degree");
        if (o.contains("max_subdivision_depth"))
            options.max_subdivision_depth =
                static_cast<int>(integer_from_json(o["max_subdivision_depth"], "options.max_subdivision_depth"));
        if (o.contains("box")) {
            const json& b = o["box"];
            if (!b.is_array() || b.size() != 2) throw ParseError("options.box must be [lo, hi]");
            options.box_lo = rational_from_json(b[0], "options.box lo");
            options.box_hi = rational_from_json(b[1], "options.box hi");
        }
    }

    return ParsedInstance{LoopSystem(std::move(matrices), std::move(guard)), std::move(options)};
}

json instance_to_json(const LoopSystem& sys) {
    json j;
    j["d"] = sys.dim();
    j["k"] = sys.num_updates();
    j["n"] = sys.num_guards();
    json ms = json::array();
    for (const auto& m : sys.matrices()) ms.push_back(matrix_to_json(m));
    j["matrices"] = std::move(ms);
    json gs = json::array();
    for (const auto& g : sys.guard_rows()) gs.push_back(vector_to_json(g));
    j["guard"] = std::move(gs);
    return j;
}

LoopSystem instance_from_json(const json& j) {
    std::vector<QMatrix> matrices;
    for (const auto& mj : j.at("matrices")) matrices.push_back(matrix_from_json(mj));
    std::vector<QVector> guard;
    for (const auto& gj : j.at("guard")) guard.push_back(vector_from_json(gj));
    return LoopSystem(std::move(matrices), std::move(guard));
}

/*
 * Loop DSL front end: a hand-rolled lexer with line/column tracking and a
 * recursive-descent parser over it.
 */
namespace {

struct Token {
    enum class Kind { KwWhile, KwDo, AndAnd, Geq, Assign, Pipe, LBrace, RBrace, LBracket, RBracket,
                      Comma, Semicolon, Star, Slash, Plus, Minus, Var, X, Number, End };
    Kind kind;
    std::string text;  // digits for Number, index digits for Var
    int line, col;
};

class DslLexer {
public:
    explicit DslLexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_ws();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) word += advance();
            if (word == "while") return {Token::Kind::KwWhile, word, line, col};
            if (word == "do") return {Token::Kind::KwDo, word, line, col};
            if (word == "x") return {Token::Kind::X, word, line, col};
            if (word.size() > 1 && word[0] == 'x') {
                for (size_t i = 1; i < word.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(word[i])))
                        fail(line, col, "unknown identifier '" + word + "'");
                return {Token::Kind::Var, word.substr(1), line, col};
            }
            fail(line, col, "unknown identifier '" + word + "'");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += advance();
            if (pos_ < text_.size() && text_[pos_] == '.')
                fail(line, col, "decimal literals are not allowed; use exact rationals like 1/2");
            return {Token::Kind::Number, digits, line, col};
        }
        switch (c) {
            case '&':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '&') {
                    advance();
                    return {Token::Kind::AndAnd, "&&", line, col};
                }
                fail(line, col, "expected '&&'");
            case '>':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    advance();
                    return {Token::Kind::Geq, ">=", line, col};
                }
                fail(line, col, "expected '>='");
            case ':':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '=') {
                    advance();
                    return {Token::Kind::Assign, ":=", line, col};
                }
                fail(line, col, "expected ':='");
            case '|': advance(); return {Token::Kind::Pipe, "|", line, col};
            case '{': advance(); return {Token::Kind::LBrace, "{", line, col};
            case '}': advance(); return {Token::Kind::RBrace, "}", line, col};
            case '[': advance(); return {Token::Kind::LBracket, "[", line, col};
            case ']': advance(); return {Token::Kind::RBracket, "]", line, col};
            case ',': advance(); return {Token::Kind::Comma, ",", line, col};
            case ';': advance(); return {Token::Kind::Semicolon, ";", line, col};
            case '*': advance(); return {Token::Kind::Star, "*", line, col};
            case '+': advance(); return {Token::Kind::Plus, "+", line, col};
            case '-': advance(); return {Token::Kind::Minus, "-", line, col};
            case '/': advance(); return {Token::Kind::Slash, "/", line, col};
            default: fail(line, col, std::string("unexpected character '") + c + "'");
        }
        return {Token::Kind::End, "", line, col};  // unreachable
    }

    [[noreturn]] static void fail(int line, int col, const std::string& what) {
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
    }

private:
    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class DslParser {
public:
    explicit DslParser(const std::string& text) : lexer_(text) { shift(); }

    ParsedInstance parse() {
        expect(Token::Kind::KwWhile, "'while'");
        // Guard inequalities as sparse coefficient maps (1-based variable index).
        std::vector<std::map<size_t, Rational>> ineqs;
        ineqs.push_back(parse_ineq());
        while (accept(Token::Kind::AndAnd)) ineqs.push_back(parse_ineq());
        expect(Token::Kind::KwDo, "'do'");
        expect(Token::Kind::LBrace, "'{'");
        std::vector<QMatrix> matrices;
        matrices.push_back(parse_update());
        while (accept(Token::Kind::Pipe)) matrices.push_back(parse_update());
        expect(Token::Kind::RBrace, "'}'");
        expect(Token::Kind::End, "end of input");

        size_t d = 0;
        for (const auto& row : ineqs)
            for (const auto& [var, c] : row) d = std::max(d, var);
        if (d == 0) DslLexer::fail(1, 1, "guard uses no variables");
        for (const auto& m : matrices)
            if (m.rows() != d || m.cols() != d)
                throw ValidationError(ValidationError::Kind::DimensionMismatch,
                                      "update matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                          " but the guard uses x1..x" + std::to_string(d));
        std::vector<QVector> guard;
        for (const auto& row : ineqs) {
            QVector v(d);
            for (const auto& [var, c] : row) v[var - 1] = c;
            guard.push_back(std::move(v));
        }
        return ParsedInstance{LoopSystem(std::move(matrices), std::move(guard)), InstanceOptions{}};
    }

private:
    void shift() { tok_ = lexer_.next(); }
    bool accept(Token::Kind k) {
        if (tok_.kind != k) return false;
        shift();
        return true;
    }
    Token expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k) DslLexer::fail(tok_.line, tok_.col, "expected " + what);
        Token t = tok_;
        shift();
        return t;
    }

    Rational parse_rational() {
        bool neg = accept(Token::Kind::Minus);
        Token num = expect(Token::Kind::Number, "a number");
        std::string text = num.text;
        if (accept(Token::Kind::Slash)) {
            Token den = expect(Token::Kind::Number, "a denominator");
            if (den.text.find_first_not_of('0') == std::string::npos)
                DslLexer::fail(den.line, den.col, "zero denominator");
            text += "/" + den.text;
        }
        Rational r = Rational::from_string(text);
        return neg ? -r : r;
    }

    // term := [rational "*"] var
    void parse_term(std::map<size_t, Rational>& row, bool negated) {
        Rational coeff(1);
        if (tok_.kind == Token::Kind::Number || tok_.kind == Token::Kind::Minus) {
            coeff = parse_rational();
            if (!accept(Token::Kind::Star))
                DslLexer::fail(tok_.line, tok_.col, "expected '*' between coefficient and variable");
        }
        Token var = expect(Token::Kind::Var, "a variable like x1");
        const size_t idx = std::stoul(var.text);
        if (idx == 0) DslLexer::fail(var.line, var.col, "variables are numbered from x1");
        if (negated) coeff = -coeff;
        row[idx] += coeff;
    }

    std::map<size_t, Rational> parse_ineq() {
        std::map<size_t, Rational> row;
        parse_term(row, false);
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            const bool minus = tok_.kind == Token::Kind::Minus;
            shift();
            parse_term(row, minus);
        }
        expect(Token::Kind::Geq, "'>='");
        Token zero = expect(Token::Kind::Number, "'0'");
        if (zero.text.find_first_not_of('0') != std::string::npos)
            DslLexer::fail(zero.line, zero.col, "guard inequalities must compare against 0");
        return row;
    }

    QMatrix parse_update() {
        expect(Token::Kind::X, "'x'");
        expect(Token::Kind::Assign, "':='");
        expect(Token::Kind::LBracket, "'['");
        std::vector<std::vector<Rational>> rows;
        rows.push_back(parse_row());
        while (accept(Token::Kind::Semicolon)) rows.push_back(parse_row());
        Token close = expect(Token::Kind::RBracket, "']'");
        for (const auto& r : rows)
            if (r.size() != rows.front().size()) DslLexer::fail(close.line, close.col, "ragged matrix rows");
        if (!accept(Token::Kind::Star)) DslLexer::fail(tok_.line, tok_.col, "expected '*' after the matrix");
        expect(Token::Kind::X, "'x'");
        QMatrix m(rows.size(), rows.front().size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::vector<Rational> parse_row() {
        std::vector<Rational> row;
        row.push_back(parse_rational());
        while (accept(Token::Kind::Comma)) row.push_back(parse_rational());
        return row;
    }

    DslLexer lexer_;
    Token tok_{Token::Kind::End, "", 0, 0};
};

}  // namespace

ParsedInstance parse_loop_dsl(const std::string& text) { return DslParser(text).parse(); }

}  // namespace coneterm
