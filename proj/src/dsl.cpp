#include "cbtree/dsl.hpp"

#include <cctype>
#include <map>

#include "cbtree/analysis.hpp"
#include "cbtree/error.hpp"

namespace cbtree {

std::string NatExpr::str() const {
    if (var.empty() || slope == 0)
        return std::to_string(intercept);
    std::string out = slope == 1 ? var : std::to_string(slope) + "*" + var;
    return intercept == 0 ? out : out + "+" + std::to_string(intercept);
}

namespace {

using Kind = TreeExpr::Kind;

const std::map<std::string, Kind, std::less<>> &keywords() {
    static const std::map<std::string, Kind, std::less<>> table{
        {"empty", Kind::Empty},   {"epsilon", Kind::Epsilon}, {"full", Kind::Full},     {"hat", Kind::Hat},
        {"comb", Kind::Comb},     {"G", Kind::Growing},       {"B", Kind::BTree},       {"pref", Kind::Pref},
        {"quot", Kind::Quot},     {"root", Kind::Root},       {"mirror", Kind::Mirror}, {"union", Kind::Union},
        {"inter", Kind::Inter},   {"prune", Kind::Prune},     {"derive", Kind::Derive}, {"kernel", Kind::Kernel},
        {"plug", Kind::Plug},     {"rootfam", Kind::RootFam},
    };
    return table;
}

TreeExpr node(Kind kind) {
    TreeExpr e;
    e.kind = kind;
    return e;
}

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Program program() {
        Program p;
        skip();
        const std::size_t save = pos_;
        if (token() == "alphabet") {
            p.alphabet.emplace();
            expect('{');
            do {
                skip();
                const std::size_t at = pos_;
                auto sym = token();
                if (sym.empty())
                    fail("expected symbol", at);
                p.alphabet->emplace_back(sym);
            } while (accept(','));
            expect('}');
        } else {
            pos_ = save;
        }
        p.expr = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected trailing input", pos_);
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what, std::size_t at) const { throw ParseError(what, at); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string token() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && word_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'", pos_);
    }

    std::uint64_t number() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected number", start);
        try {
            return std::stoull(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range &) {
            fail("number out of range", start);
        }
    }

    bool at_digit() {
        skip();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    // nat := term {'+' term}, term := number | number ['*'] var | var
    NatExpr nat() {
        NatExpr n;
        do {
            skip();
            const std::size_t at = pos_;
            std::uint64_t coeff = 1;
            bool has_coeff = false;
            if (at_digit()) {
                coeff = number();
                has_coeff = true;
                accept('*');
                skip();
            }
            if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                auto var = token();
                if (!n.var.empty() && n.var != var)
                    fail("only one variable allowed in '" + n.var + "' expression", at);
                n.var = var;
                n.slope += coeff;
            } else if (has_coeff) {
                n.intercept += coeff;
            } else {
                fail("expected natural number", at);
            }
        } while (accept('+'));
        return n;
    }

    // upword := word | word '(' word ')^w'
    std::string upword() {
        skip();
        std::string out = token();
        skip();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            auto period = token();
            if (period.empty())
                fail("expected period", at);
            expect(')');
            if (!(pos_ + 1 < text_.size() + 1 && text_.substr(pos_, 2) == "^w"))
                fail("expected '^w'", pos_);
            pos_ += 2;
            out += "(" + period + ")^w";
        }
        if (out.empty())
            fail("expected word", pos_);
        return out;
    }

    std::string word() {
        skip();
        const std::size_t at = pos_;
        auto w = token();
        if (w.empty())
            fail("expected word", at);
        return w;
    }

    Ordinal ordinal() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
            ++pos_;
            if (accept('+'))
                return Ordinal({{1, 1}, {0, number()}});
            return Ordinal::omega();
        }
        return Ordinal::finite(number());
    }

    // affine(s,t) | explicit(o, ..., affine(s,t))
    RankPattern pattern() {
        skip();
        const std::size_t at = pos_;
        const auto head = token();
        RankPattern r;
        if (head == "explicit") {
            expect('(');
            for (;;) {
                skip();
                const std::size_t save = pos_;
                if (token() == "affine") {
                    pos_ = save;
                    break;
                }
                pos_ = save;
                r.prefix.push_back(ordinal());
                expect(',');
            }
            auto tail = pattern();
            expect(')');
            r.slope = tail.slope;
            r.intercept = tail.intercept;
            return r;
        }
        if (head != "affine")
            fail("expected affine(...) or explicit(...)", at);
        expect('(');
        r.slope = number();
        expect(',');
        r.intercept = number();
        expect(')');
        return r;
    }

    TreeExpr unary(Kind kind) {
        TreeExpr e = node(kind);
        expect('(');
        e.args.push_back(expr());
        expect(')');
        return e;
    }

    TreeExpr binary(Kind kind) {
        TreeExpr e = node(kind);
        expect('(');
        e.args.push_back(expr());
        expect(',');
        e.args.push_back(expr());
        expect(')');
        return e;
    }

    TreeExpr plugged(Kind kind) {
        TreeExpr e = node(kind);
        bool family = false, ranks = false;
        expect('(');
        do {
            skip();
            const std::size_t at = pos_;
            const auto key = token();
            expect('=');
            if (key == "spine" && kind == Kind::Plug) {
                e.word = upword();
            } else if (key == "family" && !family) {
                e.args.push_back(expr());
                family = true;
            } else if (key == "ranks" && !ranks) {
                e.ranks = pattern();
                ranks = true;
            } else if (key == "support" && kind == Kind::Plug) {
                e.support = number();
            } else {
                fail("unexpected argument '" + key + "'", at);
            }
        } while (accept(','));
        const std::size_t close = pos_;
        expect(')');
        if (!family || !ranks || (kind == Kind::Plug && e.word.empty()))
            fail(kind == Kind::Plug ? "plug needs spine, family and ranks" : "rootfam needs family and ranks", close);
        return e;
    }

    TreeExpr expr() {
        skip();
        const std::size_t at = pos_;
        const auto name = token();
        if (name.empty())
            fail("expected expression", at);
        if (accept('.')) {
            TreeExpr e = node(Kind::Attach);
            e.word = name;
            e.args.push_back(expr());
            return e;
        }
        const auto it = keywords().find(name);
        if (it == keywords().end())
            fail("unknown identifier '" + name + "'", at);
        const Kind kind = it->second;
        switch (kind) {
        case Kind::Empty:
        case Kind::Epsilon:
        case Kind::Full:
        case Kind::Hat:
        case Kind::Comb:
        case Kind::Growing:
            return node(kind);
        case Kind::BTree: {
            TreeExpr e = node(kind);
            expect('(');
            e.nat = nat();
            expect(')');
            return e;
        }
        case Kind::Pref: {
            TreeExpr e = node(kind);
            expect('(');
            e.word = upword();
            expect(')');
            return e;
        }
        case Kind::Quot: {
            TreeExpr e = node(kind);
            expect('(');
            e.word = word();
            expect(',');
            e.args.push_back(expr());
            expect(')');
            return e;
        }
        case Kind::Root: {
            TreeExpr e = node(kind);
            expect('(');
            do {
                e.symbols.push_back(word());
                expect(':');
                e.args.push_back(expr());
            } while (accept(','));
            expect(')');
            return e;
        }
        case Kind::Mirror:
        case Kind::Prune:
        case Kind::Kernel:
            return unary(kind);
        case Kind::Union:
        case Kind::Inter:
            return binary(kind);
        case Kind::Derive: {
            TreeExpr e = node(kind);
            expect('(');
            e.args.push_back(expr());
            if (accept(',')) {
                e.nat = nat();
                e.has_nat = true;
            }
            expect(')');
            return e;
        }
        case Kind::Plug:
        case Kind::RootFam:
            return plugged(kind);
        case Kind::Attach:
            break;
        }
        fail("unknown identifier '" + name + "'", at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------

struct Binding {
    std::string var;
    std::uint64_t value = 0;
};

std::uint64_t eval_nat(const NatExpr &n, const std::optional<Binding> &env) {
    if (n.var.empty() || n.slope == 0)
        return n.intercept;
    if (!env || env->var != n.var)
        throw Error("unknown identifier '" + n.var + "'");
    return n.slope * env->value + n.intercept;
}

bool uses_variable(const TreeExpr &e) {
    if (!e.nat.var.empty() && e.nat.slope != 0)
        return true;
    for (const auto &a : e.args)
        if (uses_variable(a))
            return true;
    return false;
}

const char *kind_name(Kind k) {
    for (const auto &[name, kind] : keywords())
        if (kind == k)
            return name.c_str();
    return "attach";
}

TreeAutomaton eval_regular(const TreeExpr &e, const AlphabetRef &alphabet, const std::optional<Binding> &env) {
    auto arg = [&](std::size_t i) {
        const auto &sub = e.args.at(i);
        if (sub.kind == Kind::Growing || sub.kind == Kind::Plug || sub.kind == Kind::RootFam)
            throw RepresentationMismatch(std::string(kind_name(e.kind)) + " applies to regular trees only, got " +
                                         kind_name(sub.kind));
        return eval_regular(sub, alphabet, env);
    };
    switch (e.kind) {
    case Kind::Empty:
        return empty_tree(alphabet);
    case Kind::Epsilon:
        return epsilon_tree(alphabet);
    case Kind::Full:
        return full_tree(alphabet);
    case Kind::Hat:
        require_same_alphabet(alphabet, Alphabet::binary());
        return hat();
    case Kind::Comb:
        require_same_alphabet(alphabet, Alphabet::binary());
        return comb();
    case Kind::BTree:
        return b_tree(eval_nat(e.nat, env), alphabet);
    case Kind::Pref:
        if (e.word.find('(') != std::string::npos)
            return pref_chain(UPWord::parse(e.word, alphabet));
        return pref_word(FiniteWord::parse(e.word, alphabet));
    case Kind::Attach:
        return attach(FiniteWord::parse(e.word, alphabet), arg(0));
    case Kind::Quot:
        return quotient(arg(0), FiniteWord::parse(e.word, alphabet));
    case Kind::Root: {
        TreeFamily family{alphabet, std::vector<TreeAutomaton>(alphabet->size(), empty_tree(alphabet))};
        std::vector<bool> seen(alphabet->size(), false);
        for (std::size_t i = 0; i < e.symbols.size(); ++i) {
            const auto letter = alphabet->find(e.symbols[i]);
            if (!letter)
                throw Error("unknown symbol '" + e.symbols[i] + "'");
            if (seen[*letter])
                throw Error("symbol '" + e.symbols[i] + "' given twice in root(...)");
            seen[*letter] = true;
            family.components[*letter] = arg(i);
        }
        return root_construct(family);
    }
    case Kind::Mirror:
        return mirror(arg(0), SymbolPermutation::reversal(alphabet));
    case Kind::Union:
        return unite(arg(0), arg(1));
    case Kind::Inter:
        return intersect(arg(0), arg(1));
    case Kind::Prune:
        return prune(arg(0));
    case Kind::Derive:
        return e.has_nat ? derive(arg(0), eval_nat(e.nat, env)) : derive(arg(0));
    case Kind::Kernel:
        return kernel(arg(0));
    case Kind::Growing:
    case Kind::Plug:
    case Kind::RootFam:
        break;
    }
    throw RepresentationMismatch(std::string(kind_name(e.kind)) + " is not a regular tree");
}

} // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

std::string print(const TreeExpr &e) {
    auto args = [&] {
        std::string out;
        for (std::size_t i = 0; i < e.args.size(); ++i)
            out += (i ? ", " : "") + print(e.args[i]);
        return out;
    };
    switch (e.kind) {
    case Kind::BTree:
        return "B(" + e.nat.str() + ")";
    case Kind::Pref:
        return "pref(" + e.word + ")";
    case Kind::Attach:
        return e.word + "." + print(e.args.at(0));
    case Kind::Quot:
        return "quot(" + e.word + ", " + print(e.args.at(0)) + ")";
    case Kind::Root: {
        std::string out = "root(";
        for (std::size_t i = 0; i < e.args.size(); ++i)
            out += (i ? ", " : "") + e.symbols[i] + ": " + print(e.args[i]);
        return out + ")";
    }
    case Kind::Derive:
        return "derive(" + args() + (e.has_nat ? ", " + e.nat.str() : "") + ")";
    case Kind::Plug:
        return "plug(spine=" + e.word + ", family=" + print(e.args.at(0)) + ", ranks=" + e.ranks.str() +
               (e.support ? ", support=" + std::to_string(*e.support) : "") + ")";
    case Kind::RootFam:
        return "rootfam(family=" + print(e.args.at(0)) + ", ranks=" + e.ranks.str() + ")";
    case Kind::Mirror:
    case Kind::Union:
    case Kind::Inter:
    case Kind::Prune:
    case Kind::Kernel:
        return std::string(kind_name(e.kind)) + "(" + args() + ")";
    default:
        return kind_name(e.kind);
    }
}

std::string print(const Program &p) {
    if (!p.alphabet)
        return print(p.expr);
    std::string out = "alphabet {";
    for (std::size_t i = 0; i < p.alphabet->size(); ++i)
        out += (i ? "," : "") + (*p.alphabet)[i];
    return out + "} " + print(p.expr);
}

TreeValue eval(const Program &p) {
    const AlphabetRef alphabet = p.alphabet ? Alphabet::make(*p.alphabet) : Alphabet::binary();
    const TreeExpr &e = p.expr;
    switch (e.kind) {
    case Kind::Growing:
        require_same_alphabet(alphabet, Alphabet::binary());
        return growing_tree();
    case Kind::Plug: {
        const TreeExpr family = e.args.at(0);
        if (family.kind == Kind::Growing || family.kind == Kind::Plug || family.kind == Kind::RootFam)
            throw RepresentationMismatch("plug components must be regular trees");
        auto spine = UPWord::parse(e.word, alphabet);
        return SpinePlugged(
            std::move(spine),
            [family, alphabet](std::size_t k, Letter) { return eval_regular(family, alphabet, Binding{"k", k}); },
            e.ranks, e.support, !uses_variable(family));
    }
    case Kind::RootFam: {
        const TreeExpr family = e.args.at(0);
        if (family.kind == Kind::Growing || family.kind == Kind::Plug || family.kind == Kind::RootFam)
            throw RepresentationMismatch("rootfam components must be regular trees");
        return RootFamily([family, alphabet](std::size_t n) { return eval_regular(family, alphabet, Binding{"n", n}); },
                          e.ranks, alphabet);
    }
    default:
        return eval_regular(e, alphabet, std::nullopt);
    }
}

TreeValue eval(std::string_view text) { return eval(parse_program(text)); }

} // namespace cbtree
