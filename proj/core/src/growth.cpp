#include "hurwitz/growth.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

struct GrowthFunction::Node {
    enum class Op { number, var, add, sub, mul, div, pow, neg, max, min, log, sqrt } op;
    double value = 0.0;
    std::vector<std::shared_ptr<const Node>> args;

    double eval(double n) const {
        switch (op) {
            case Op::number: return value;
            case Op::var: return n;
            case Op::add: return args[0]->eval(n) + args[1]->eval(n);
            case Op::sub: return args[0]->eval(n) - args[1]->eval(n);
            case Op::mul: return args[0]->eval(n) * args[1]->eval(n);
            case Op::div: return args[0]->eval(n) / args[1]->eval(n);
            case Op::pow: return std::pow(args[0]->eval(n), args[1]->eval(n));
            case Op::neg: return -args[0]->eval(n);
            case Op::log: return std::log(args[0]->eval(n));
            case Op::sqrt: return std::sqrt(args[0]->eval(n));
            case Op::max:
            case Op::min: {
                double acc = args[0]->eval(n);
                for (std::size_t i = 1; i < args.size(); ++i) {
                    const double v = args[i]->eval(n);
                    acc = op == Op::max ? std::max(acc, v) : std::min(acc, v);
                }
                return acc;
            }
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const GrowthFunction::Node>;
using Op = GrowthFunction::Node::Op;

NodePtr make(Op op, std::vector<NodePtr> args = {}, double value = 0.0) {
    auto node = std::make_shared<GrowthFunction::Node>();
    node->op = op;
    node->value = value;
    node->args = std::move(args);
    return node;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse_all() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "growth expression '" << s_ << "' at offset " << pos_ << ": " << msg;
        throw ParseError(os.str());
    }

    NodePtr expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+')) lhs = make(Op::add, {lhs, term()});
            else if (accept('-')) lhs = make(Op::sub, {lhs, term()});
            else return lhs;
        }
    }
    NodePtr term() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) lhs = make(Op::mul, {lhs, unary()});
            else if (accept('/')) lhs = make(Op::div, {lhs, unary()});
            else return lhs;
        }
    }
    NodePtr unary() {
        if (accept('-')) return make(Op::neg, {unary()});
        if (accept('+')) return unary();
        return power();
    }
    NodePtr power() {
        auto base = primary();
        if (accept('^')) return make(Op::pow, {base, unary()});  // right associative
        return base;
    }
    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (accept('(')) {
            auto e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(s_.substr(pos_), &used);
            } catch (const std::exception&) {
                fail("bad number");
            }
            pos_ += used;
            return make(Op::number, {}, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == "n") return make(Op::var);
            Op op;
            if (name == "max") op = Op::max;
            else if (name == "min") op = Op::min;
            else if (name == "log") op = Op::log;
            else if (name == "sqrt") op = Op::sqrt;
            else fail("unknown identifier '" + name + "'");
            expect('(');
            std::vector<NodePtr> args{expr()};
            while (accept(',')) args.push_back(expr());
            expect(')');
            const bool variadic = op == Op::max || op == Op::min;
            if (variadic ? args.size() < 2 : args.size() != 1) fail("wrong argument count for " + name);
            return make(op, std::move(args));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

GrowthFunction GrowthFunction::parse(const std::string& expr) {
    GrowthFunction f;
    f.root_ = Parser(expr).parse_all();
    f.text_ = expr;
    return f;
}

GrowthFunction GrowthFunction::constant(double c) {
    GrowthFunction f;
    f.root_ = make(Op::number, {}, c);
    std::ostringstream os;
    os.precision(17);
    os << c;
    f.text_ = os.str();
    return f;
}

double GrowthFunction::operator()(double n) const { return root_->eval(n); }

}  // namespace hurwitz
