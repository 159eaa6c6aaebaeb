#include <cctype>
#include <string>
#include <vector>

#include "varcalc/errors.hpp"
#include "varcalc/exprio.hpp"

namespace varcalc {

namespace {

enum class TokenKind { number, symbol, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;
};

std::vector<Token> lex(const std::string& input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            if (i < input.size() && input[i] == '/') {
                std::size_t j = i + 1;
                if (j >= input.size() || !std::isdigit(static_cast<unsigned char>(input[j])))
                    throw ParseError("expected digits after '/'", i + 1);
                i = j;
                while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            }
            tokens.push_back({TokenKind::number, input.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
                ++i;
            if (i < input.size() && input[i] == '{') {
                while (i < input.size() && input[i] != '}') ++i;
                if (i == input.size()) throw ParseError("unterminated '{' in index list", start);
                ++i;
            }
            tokens.push_back({TokenKind::symbol, input.substr(start, i - start), start});
            continue;
        }
        switch (c) {
            case '+': tokens.push_back({TokenKind::plus, "+", start}); break;
            case '-': tokens.push_back({TokenKind::minus, "-", start}); break;
            case '*': tokens.push_back({TokenKind::star, "*", start}); break;
            case '^': tokens.push_back({TokenKind::caret, "^", start}); break;
            case '(': tokens.push_back({TokenKind::lparen, "(", start}); break;
            case ')': tokens.push_back({TokenKind::rparen, ")", start}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        ++i;
    }
    tokens.push_back({TokenKind::end, "", input.size()});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const Bundle& b) : tokens_(std::move(tokens)), bundle_(b) {}

    Form run() {
        Form phi = parse_expr();
        if (peek().kind != TokenKind::end)
            throw ParseError("unexpected trailing input", peek().position);
        return phi;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    bool accept(TokenKind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    Form parse_expr() {
        Form acc = parse_term();
        while (true) {
            if (accept(TokenKind::plus))
                acc += parse_term();
            else if (accept(TokenKind::minus))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Form parse_term() {
        Form acc = parse_unary();
        while (peek().kind == TokenKind::star || peek().kind == TokenKind::caret) {
            ++pos_;
            acc = wedge(acc, parse_unary());
        }
        return acc;
    }

    Form parse_unary() {
        if (accept(TokenKind::minus)) return -parse_unary();
        if (accept(TokenKind::plus)) return parse_unary();
        return parse_atom();
    }

    Form parse_atom() {
        const Token tok = next();
        switch (tok.kind) {
            case TokenKind::number: {
                Rational r;
                try {
                    r = rational_from_string(tok.text);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), tok.position);
                }
                return Form::scalar(bundle_, DiffPoly::constant(r));
            }
            case TokenKind::symbol:
                return symbol_form(tok);
            case TokenKind::lparen: {
                Form inner = parse_expr();
                if (!accept(TokenKind::rparen))
                    throw ParseError("expected ')'", peek().position);
                return inner;
            }
            default:
                throw ParseError("expected a number, variable, or '('", tok.position);
        }
    }

    int parse_index(const std::string& text, std::size_t& k, std::size_t position) const {
        std::size_t start = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == start || k - start > 6)
            throw ParseError("expected a coordinate index", position + start);
        return std::stoi(text.substr(start, k - start));
    }

    MultiIndex parse_suffix(const std::string& text, std::size_t& k, std::size_t position) const {
        std::vector<int> letters;
        if (k >= text.size()) return MultiIndex();
        if (text[k] != '_')
            throw ParseError("unexpected characters in variable", position + k);
        ++k;
        if (k < text.size() && text[k] == '{') {
            ++k;
            while (true) {
                int lambda = parse_index(text, k, position);
                check_base_index(lambda, position + k);
                letters.push_back(lambda);
                if (k < text.size() && text[k] == ',') {
                    ++k;
                    continue;
                }
                break;
            }
            if (k >= text.size() || text[k] != '}')
                throw ParseError("expected '}' in index list", position + k);
            ++k;
        } else {
            std::size_t start = k;
            while (k < text.size()) {
                char c = text[k];
                int lambda;
                if (c == 'x')
                    lambda = 1;
                else if (c == 'y')
                    lambda = 2;
                else if (c == 'z')
                    lambda = 3;
                else
                    throw ParseError(std::string("unknown index letter '") + c + "'", position + k);
                check_base_index(lambda, position + k);
                letters.push_back(lambda);
                ++k;
            }
            if (letters.empty()) throw ParseError("empty derivative index", position + start);
        }
        if (k != text.size())
            throw ParseError("unexpected characters in variable", position + k);
        return MultiIndex::of(letters);
    }

    void check_base_index(int lambda, std::size_t position) const {
        if (lambda < 1 || lambda > bundle_.base_dim)
            throw ParseError("base index " + std::to_string(lambda) + " outside 1.." +
                                 std::to_string(bundle_.base_dim),
                             position);
    }

    void check_fiber_index(int i, std::size_t position) const {
        if (i < 1 || i > bundle_.fiber_dim)
            throw ParseError("fiber index " + std::to_string(i) + " outside 1.." +
                                 std::to_string(bundle_.fiber_dim),
                             position);
    }

    Form symbol_form(const Token& tok) {
        const std::string& text = tok.text;
        if (text.rfind("dx", 0) == 0) {
            std::size_t k = 2;
            int lambda = parse_index(text, k, tok.position);
            if (k != text.size())
                throw ParseError("unexpected characters in variable", tok.position + k);
            check_base_index(lambda, tok.position);
            return Form::term(bundle_, DiffPoly::constant(Rational(1)),
                              WedgeWord::normalize({CoVector::dx(lambda)})->first);
        }
        if (text.rfind("th", 0) == 0) {
            std::size_t k = 2;
            int i = parse_index(text, k, tok.position);
            check_fiber_index(i, tok.position);
            MultiIndex mi = parse_suffix(text, k, tok.position);
            return Form::term(bundle_, DiffPoly::constant(Rational(1)),
                              WedgeWord::normalize({CoVector::theta(i, mi)})->first);
        }
        if (text[0] == 'u') {
            std::size_t k = 1;
            int i = parse_index(text, k, tok.position);
            check_fiber_index(i, tok.position);
            MultiIndex mi = parse_suffix(text, k, tok.position);
            return Form::scalar(bundle_, DiffPoly::variable(JetVariable::fiber(i, mi)));
        }
        if (text[0] == 'x') {
            std::size_t k = 1;
            int lambda = parse_index(text, k, tok.position);
            if (k != text.size())
                throw ParseError("unexpected characters in variable", tok.position + k);
            check_base_index(lambda, tok.position);
            return Form::scalar(bundle_, DiffPoly::variable(JetVariable::base(lambda)));
        }
        throw ParseError("unknown symbol '" + text + "'", tok.position);
    }

    std::vector<Token> tokens_;
    Bundle bundle_;
    std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(const std::string& text, const Bundle& b) {
    Parser parser(lex(text), b);
    return parser.run();
}

}  // namespace varcalc
