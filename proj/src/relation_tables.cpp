#include "yso5/relation_tables.hpp"

#include <cctype>
#include <map>
#include <memory>

#include <json.hpp>

#include "yso5/error.hpp"

namespace yso5 {

namespace {

std::vector<RelationTable> load_tables() {
    nlohmann::json doc = nlohmann::json::parse(embedded_relation_tables_json());
    if (doc.value("schema", "") != "yso5-relations/1") throw ParseError("relation corpus: unexpected schema");
    std::vector<RelationTable> out;
    for (const auto& [name, t] : doc.at("tables").items()) {
        RelationTable table;
        table.name = name;
        table.alias = t.value("alias", "");
        table.title = t.value("title", "");
        if (t.contains("params"))
            for (const auto& p : t.at("params"))
                if (p == "n") table.has_n = true;
        for (const auto& e : t.at("entries")) {
            TableEntry entry;
            entry.id = e.at("id").get<std::string>();
            entry.expand = e.value("expand", "");
            entry.chain = e.at("chain").get<std::vector<std::string>>();
            if (e.contains("printed_chain")) entry.printed_chain = e.at("printed_chain").get<std::vector<std::string>>();
            if (e.contains("printed")) entry.printed = e.at("printed").get<std::string>();
            if (e.contains("note")) entry.note = e.at("note").get<std::string>();
            if (entry.chain.size() < 2) throw ParseError("relation corpus: entry " + entry.id + " has a short chain");
            table.entries.push_back(std::move(entry));
        }
        out.push_back(std::move(table));
    }
    return out;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

struct Token {
    enum Kind { Num, Sym, SymFn, Imag, Op, End } kind = End;
    std::string text;   // operator text or digits
    std::string name;   // symbol name
    std::string level;  // digits, "n" or "(n+1)"
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("relation expression '" + std::string(s) + "': " + why + " at offset " + std::to_string(pos));
    };
    while (pos < s.size()) {
        char ch = s[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            out.push_back({Token::Num, std::string(s.substr(start, pos - start)), "", ""});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            size_t start = pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string word(s.substr(start, pos - start));
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string level;
                if (s.substr(pos, 5) == "(n+1)") {
                    level = "(n+1)";
                    pos += 5;
                } else if (pos < s.size() && s[pos] == 'n') {
                    level = "n";
                    ++pos;
                } else {
                    size_t d = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (pos == d) fail("missing level after ^");
                    level = std::string(s.substr(d, pos - d));
                }
                out.push_back({Token::Sym, "", word, level});
            } else if (word == "sym") {
                out.push_back({Token::SymFn, word, "", ""});
            } else if (word == "i") {
                out.push_back({Token::Imag, word, "", ""});
            } else {
                fail("symbol '" + word + "' without level");
            }
            continue;
        }
        if (s.substr(pos, 3) == "]_+") {
            out.push_back({Token::Op, "]_+", "", ""});
            pos += 3;
            continue;
        }
        if (std::string_view("[](),+-/").find(ch) != std::string_view::npos) {
            out.push_back({Token::Op, std::string(1, ch), "", ""});
            ++pos;
            continue;
        }
        fail(std::string("unexpected character '") + ch + "'");
    }
    out.push_back({Token::End, "", "", ""});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const SymbolResolver& resolve, size_t dim, std::optional<int> n)
        : text_(text), toks_(tokenize(text)), resolve_(resolve), dim_(dim), n_(n) {}

    SurdOp parse() {
        SurdOp v = expr();
        if (peek().kind != Token::End) fail("trailing input");
        return v;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("relation expression '" + text_ + "': " + why + " at token " + std::to_string(k_));
    }
    void expect(const char* op) {
        if (!is_op(op)) fail(std::string("expected '") + op + "'");
        ++k_;
    }

    SurdOp expr() {
        Scalar sign(1);
        if (is_op("+")) {
            ++k_;
        } else if (is_op("-")) {
            ++k_;
            sign = Scalar(-1);
        }
        SurdOp v = sign * term();
        while (is_op("+") || is_op("-")) {
            bool minus = peek().text == "-";
            ++k_;
            SurdOp t = term();
            v = minus ? v - t : v + t;
        }
        return v;
    }

    SurdOp term() {
        Scalar coef(1);
        std::optional<SurdOp> val;
        bool any = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == Token::Num) {
                ++k_;
                Rational q = Rational::parse(t.text);
                if (is_op("/")) {
                    ++k_;
                    if (peek().kind != Token::Num) fail("expected denominator");
                    q /= Rational::parse(peek().text);
                    ++k_;
                }
                coef *= Scalar(q);
            } else if (t.kind == Token::Imag) {
                ++k_;
                coef *= Scalar::i();
            } else if (t.kind == Token::Sym || t.kind == Token::SymFn || is_op("[") || is_op("(")) {
                SurdOp f = factor();
                val = val ? *val * f : f;
            } else {
                break;
            }
            any = true;
        }
        if (!any) fail("expected a term");
        if (!val) return coef * SurdOp::identity(dim_);
        return coef * *val;
    }

    int level_of(const std::string& level) const {
        if (level == "n" || level == "(n+1)") {
            if (!n_) fail("level n used outside an n-parameterised table");
            return level == "n" ? *n_ : *n_ + 1;
        }
        return std::stoi(level);
    }

    SurdOp factor() {
        Token t = peek();
        ++k_;
        if (t.kind == Token::Sym) {
            SurdOp v = resolve_(t.name, level_of(t.level));
            if (v.dim() != dim_) fail("symbol " + t.name + " has the wrong dimension");
            return v;
        }
        if (t.kind == Token::SymFn) {
            expect("(");
            SurdOp a = expr();
            expect(",");
            SurdOp b = expr();
            expect(",");
            SurdOp c = expr();
            expect(")");
            return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a;
        }
        if (t.kind == Token::Op && t.text == "(") {
            SurdOp v = expr();
            expect(")");
            return v;
        }
        if (t.kind == Token::Op && t.text == "[") {
            SurdOp a = expr();
            expect(",");
            SurdOp b = expr();
            if (is_op("]")) {
                ++k_;
                return commutator(a, b);
            }
            if (is_op("]_+")) {
                ++k_;
                return anticommutator(a, b);
            }
            fail("expected ']' or ']_+'");
        }
        fail("unexpected token");
    }

    std::string text_;
    std::vector<Token> toks_;
    size_t k_ = 0;
    const SymbolResolver& resolve_;
    size_t dim_;
    std::optional<int> n_;
};

std::string check_name(const TableEntry& e, const TableInstance& inst, const RelationTable& table, int n, size_t j,
                       size_t chain_len) {
    std::string s = e.id;
    if (!inst.tag.empty()) s += "/" + inst.tag;
    if (table.has_n) s += " n=" + std::to_string(n);
    if (chain_len > 2) s += " #" + std::to_string(j);
    return s;
}

}  // namespace

const std::vector<RelationTable>& relation_tables() {
    static const std::vector<RelationTable> tables = load_tables();
    return tables;
}

const RelationTable& relation_table(std::string_view name_or_alias) {
    for (const auto& t : relation_tables())
        if (t.name == name_or_alias || t.alias == name_or_alias) return t;
    throw ParseError("unknown relation table '" + std::string(name_or_alias) + "'");
}

std::vector<TableInstance> expand_entry(const TableEntry& e, bool printed) {
    const std::vector<std::string>& chain = printed && e.printed_chain ? *e.printed_chain : e.chain;
    std::vector<TableInstance> out;
    if (e.expand.empty()) {
        out.push_back({"", chain});
    } else if (e.expand == "s") {
        const char* sets[2][5] = {{"p", "p", "m", "+", "-"}, {"m", "m", "p", "-", "+"}};
        for (const auto& set : sets) {
            TableInstance inst{set[0], {}};
            for (std::string c : chain) {
                c = replace_all(c, "{s}", set[1]);
                c = replace_all(c, "{t}", set[2]);
                c = replace_all(c, "{S}", set[3]);
                c = replace_all(c, "{T}", set[4]);
                inst.chain.push_back(c);
            }
            out.push_back(std::move(inst));
        }
    } else if (e.expand == "a") {
        for (const char* a : {"p", "m", "3"}) {
            TableInstance inst{a, {}};
            for (const auto& c : chain) inst.chain.push_back(replace_all(c, "{a}", a));
            out.push_back(std::move(inst));
        }
    } else {
        throw ParseError("relation corpus: unknown expand key '" + e.expand + "' in " + e.id);
    }
    return out;
}

SymbolResolver cached(SymbolResolver inner) {
    auto memo = std::make_shared<std::map<std::pair<std::string, int>, SurdOp>>();
    return [inner = std::move(inner), memo](std::string_view name, int level) -> SurdOp {
        auto key = std::make_pair(std::string(name), level);
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
        SurdOp v = inner(name, level);
        memo->emplace(key, v);
        return v;
    };
}

SurdOp evaluate_expression(std::string_view text, const SymbolResolver& resolve, size_t dim, std::optional<int> n) {
    return Parser(text, resolve, dim, n).parse();
}

std::vector<CheckResult> check_table(const RelationTable& table, const SymbolResolver& resolve, size_t dim,
                                     const std::vector<int>& n_values, const std::string& suite) {
    std::vector<int> ns = table.has_n ? n_values : std::vector<int>{0};
    std::vector<CheckResult> out;
    for (const auto& e : table.entries)
        for (int n : ns) {
            std::optional<int> nn = table.has_n ? std::optional<int>(n) : std::nullopt;
            for (const auto& inst : expand_entry(e)) {
                SurdOp first = evaluate_expression(inst.chain[0], resolve, dim, nn);
                for (size_t j = 1; j < inst.chain.size(); ++j) {
                    SurdOp other = evaluate_expression(inst.chain[j], resolve, dim, nn);
                    CheckResult r = residual_result(suite, check_name(e, inst, table, n, j, inst.chain.size()),
                                                    table.name, first - other);
                    if (e.printed) r.metrics.emplace_back("corrected_from", *e.printed);
                    out.push_back(std::move(r));
                }
            }
            if (!e.printed_chain) continue;
            for (const auto& inst : expand_entry(e, true)) {
                SurdOp first = evaluate_expression(inst.chain[0], resolve, dim, nn);
                for (size_t j = 1; j < inst.chain.size(); ++j) {
                    SurdOp other = evaluate_expression(inst.chain[j], resolve, dim, nn);
                    CheckResult r = residual_result(
                        suite, check_name(e, inst, table, n, j, inst.chain.size()) + " printed", table.name,
                        first - other);
                    r.metrics.emplace_back("printed_form", r.status == Status::Pass ? "holds" : "fails");
                    r.status = Status::Measured;
                    out.push_back(std::move(r));
                }
            }
        }
    return out;
}

}  // namespace yso5
