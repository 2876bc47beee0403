/* Copyright 2026 The svsim Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "svsim/qasm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

namespace svsim::qasm {

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (is_alpha(c)) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]))) advance();
            t.kind = Tok::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
            if (pos_ < src_.size() && src_[pos_] == '.') {
                advance();
                while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
            }
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                std::size_t look = pos_ + 1;
                if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
                if (look < src_.size() && is_digit(src_[look])) {
                    while (pos_ < look) advance();
                    while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
                }
            }
            t.kind = Tok::Number;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (c == '"') {
            advance();
            const std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') advance();
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw ParseError(Errc::SyntaxError, t.line, t.column, "unterminated string literal");
            }
            t.kind = Tok::String;
            t.text = std::string(src_.substr(start, pos_ - start));
            advance();
            return t;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            t.kind = Tok::Symbol;
            t.text = "->";
            return t;
        }
        static constexpr std::string_view kSymbols = ";,()[]{}+-*/^";
        if (kSymbols.find(c) != std::string_view::npos) {
            advance();
            t.kind = Tok::Symbol;
            t.text = std::string(1, c);
            return t;
        }
        throw ParseError(Errc::SyntaxError, t.line, t.column, "unexpected character '" + printable(c) + "'");
    }

private:
    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    static std::string printable(char c) {
        const auto u = static_cast<unsigned char>(c);
        if (u >= 0x20 && u < 0x7f) return std::string(1, c);
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\x%02x", u);
        return buf;
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

constexpr int kMaxExpressionDepth = 128;

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

    Program run() {
        Program prog;
        expect_ident("OPENQASM");
        const Token ver = cur_;
        if (ver.kind != Tok::Number) fail(ver, "expected version number");
        if (ver.text != "2.0" && ver.text != "2") {
            throw ParseError(Errc::SyntaxError, ver.line, ver.column, "only OpenQASM 2.0 is supported, got " + ver.text);
        }
        prog.version = "2.0";
        bump();
        expect_symbol(";");

        while (cur_.kind != Tok::End) statement(prog);
        return prog;
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& expected) {
        const std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
        throw ParseError(Errc::SyntaxError, at.line, at.column, expected + ", found " + found);
    }

    void bump() { cur_ = lex_.next(); }

    bool is_symbol(std::string_view s) const { return cur_.kind == Tok::Symbol && cur_.text == s; }

    void expect_symbol(std::string_view s) {
        if (!is_symbol(s)) fail(cur_, "expected '" + std::string(s) + "'");
        bump();
    }

    void expect_ident(std::string_view s) {
        if (cur_.kind != Tok::Ident || cur_.text != s) fail(cur_, "expected '" + std::string(s) + "'");
        bump();
    }

    std::string identifier(const char* what) {
        if (cur_.kind != Tok::Ident) fail(cur_, std::string("expected ") + what);
        std::string s = cur_.text;
        bump();
        return s;
    }

    int integer(const char* what) {
        const Token t = cur_;
        if (t.kind != Tok::Number || t.text.find_first_of(".eE") != std::string::npos) {
            fail(t, std::string("expected integer ") + what);
        }
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v > (1LL << 30)) {
            throw ParseError(Errc::SyntaxError, t.line, t.column, std::string(what) + " " + t.text + " is too large");
        }
        bump();
        return static_cast<int>(v);
    }

    void statement(Program& prog) {
        const Token head = cur_;
        if (head.kind != Tok::Ident) fail(head, "expected statement");
        const std::string& kw = head.text;
        if (kw == "include") {
            bump();
            if (cur_.kind != Tok::String) fail(cur_, "expected include file name");
            if (cur_.text != "qelib1.inc") {
                throw ParseError(Errc::SyntaxError, cur_.line, cur_.column,
                                 "only \"qelib1.inc\" can be included, got \"" + cur_.text + "\"");
            }
            bump();
            expect_symbol(";");
        } else if (kw == "qreg" || kw == "creg") {
            bump();
            declaration(prog, kw == "qreg");
        } else if (kw == "measure") {
            bump();
            Statement st{Statement::Type::Measure, "measure", {}, {}, {}, head.line, head.column};
            st.qargs.push_back(argument(prog.qregs, "quantum"));
            expect_symbol("->");
            st.cargs.push_back(argument(prog.cregs, "classical"));
            expect_symbol(";");
            check_broadcast(st.qargs.front(), st.cargs.front(), prog);
            prog.statements.push_back(std::move(st));
        } else if (kw == "barrier") {
            bump();
            Statement st{Statement::Type::Barrier, "barrier", {}, {}, {}, head.line, head.column};
            st.qargs = argument_list(prog);
            expect_symbol(";");
            prog.statements.push_back(std::move(st));
        } else if (kw == "gate" || kw == "opaque" || kw == "if" || kw == "reset") {
            throw ParseError(Errc::UnsupportedGate, head.line, head.column, "statement '" + kw + "' is not supported");
        } else {
            gate_call(prog);
        }
    }

    void declaration(Program& prog, bool quantum) {
        const Token at = cur_;
        Register r;
        r.name = identifier("register name");
        expect_symbol("[");
        const Token size_tok = cur_;
        r.size = integer("register size");
        expect_symbol("]");
        expect_symbol(";");
        if (r.size < 1) throw ParseError(Errc::SyntaxError, size_tok.line, size_tok.column, "register size must be >= 1");
        auto taken = [&](const std::vector<Register>& regs) {
            return std::any_of(regs.begin(), regs.end(), [&](const Register& x) { return x.name == r.name; });
        };
        if (taken(prog.qregs) || taken(prog.cregs)) {
            throw ParseError(Errc::SyntaxError, at.line, at.column, "register '" + r.name + "' redeclared");
        }
        if (quantum) {
            int total = r.size;
            for (const auto& q : prog.qregs) total += q.size;
            if (total > kMaxProgramQubits) {
                throw ParseError(Errc::CapacityExceeded, size_tok.line, size_tok.column,
                                 "program declares more than " + std::to_string(kMaxProgramQubits) + " qubits");
            }
            prog.qregs.push_back(std::move(r));
        } else {
            prog.cregs.push_back(std::move(r));
        }
    }

    Argument argument(const std::vector<Register>& regs, const char* what) {
        Argument a;
        a.line = cur_.line;
        a.column = cur_.column;
        a.reg = identifier("register name");
        const auto it = std::find_if(regs.begin(), regs.end(), [&](const Register& r) { return r.name == a.reg; });
        if (it == regs.end()) {
            throw ParseError(Errc::UndeclaredRegister, a.line, a.column,
                             std::string(what) + " register '" + a.reg + "' is not declared");
        }
        if (is_symbol("[")) {
            bump();
            const Token idx = cur_;
            a.index = integer("register index");
            expect_symbol("]");
            if (a.index >= it->size) {
                throw ParseError(Errc::IndexOutOfRange, idx.line, idx.column,
                                 a.reg + "[" + std::to_string(a.index) + "] but '" + a.reg + "' has size " +
                                     std::to_string(it->size));
            }
        }
        return a;
    }

    std::vector<Argument> argument_list(const Program& prog) {
        std::vector<Argument> args;
        args.push_back(argument(prog.qregs, "quantum"));
        while (is_symbol(",")) {
            bump();
            args.push_back(argument(prog.qregs, "quantum"));
        }
        return args;
    }

    static int reg_size(const std::vector<Register>& regs, const std::string& name) {
        for (const auto& r : regs)
            if (r.name == name) return r.size;
        return 0;
    }

    void check_broadcast(const Argument& q, const Argument& c, const Program& prog) {
        if ((q.index < 0) != (c.index < 0)) {
            throw ParseError(Errc::SyntaxError, q.line, q.column, "measure mixes a register and a single bit");
        }
        if (q.index < 0 && reg_size(prog.qregs, q.reg) != reg_size(prog.cregs, c.reg)) {
            throw ParseError(Errc::SyntaxError, q.line, q.column, "measure registers differ in size");
        }
    }

    void gate_call(Program& prog) {
        const Token head = cur_;
        std::string name = head.text;
        if (name == "U") name = "u3";
        if (name == "CX") name = "cx";
        const auto kind = gate_kind_from_name(name);
        if (!kind) {
            throw ParseError(Errc::UnsupportedGate, head.line, head.column, "gate '" + head.text + "' is not supported");
        }
        bump();
        Statement st{Statement::Type::Gate, name, {}, {}, {}, head.line, head.column};
        if (is_symbol("(")) {
            bump();
            if (!is_symbol(")")) {
                st.params.push_back(parameter());
                while (is_symbol(",")) {
                    bump();
                    st.params.push_back(parameter());
                }
            }
            expect_symbol(")");
        }
        if (st.params.size() != static_cast<std::size_t>(param_count(*kind))) {
            throw ParseError(Errc::SyntaxError, head.line, head.column,
                             name + " expects " + std::to_string(param_count(*kind)) + " parameter(s), got " +
                                 std::to_string(st.params.size()));
        }
        st.qargs = argument_list(prog);
        expect_symbol(";");
        const std::size_t arity = static_cast<std::size_t>(target_count(*kind) + builtin_controls(*kind));
        if (st.qargs.size() != arity) {
            throw ParseError(Errc::SyntaxError, head.line, head.column,
                             name + " expects " + std::to_string(arity) + " qubit argument(s), got " +
                                 std::to_string(st.qargs.size()));
        }
        int width = -1;
        for (const auto& a : st.qargs) {
            if (a.index >= 0) continue;
            const int size = reg_size(prog.qregs, a.reg);
            if (width >= 0 && size != width) {
                throw ParseError(Errc::SyntaxError, a.line, a.column, "broadcast over registers of different sizes");
            }
            width = size;
        }
        for (std::size_t i = 0; i < st.qargs.size(); ++i)
            for (std::size_t j = i + 1; j < st.qargs.size(); ++j)
                if (st.qargs[i].reg == st.qargs[j].reg &&
                    (st.qargs[i].index == st.qargs[j].index || st.qargs[i].index < 0 || st.qargs[j].index < 0)) {
                    throw ParseError(Errc::OverlappingQubits, st.qargs[j].line, st.qargs[j].column,
                                     name + " uses the same qubit more than once");
                }
        prog.statements.push_back(std::move(st));
    }

    double parameter() {
        const Token at = cur_;
        const double v = expr(0);
        if (!std::isfinite(v)) throw ParseError(Errc::SyntaxError, at.line, at.column, "parameter is not finite");
        return v;
    }

    void guard(int depth) {
        if (depth > kMaxExpressionDepth) {
            throw ParseError(Errc::SyntaxError, cur_.line, cur_.column, "expression nested too deeply");
        }
    }

    double expr(int depth) {
        guard(depth);
        double v = term(depth + 1);
        while (is_symbol("+") || is_symbol("-")) {
            const bool plus = cur_.text == "+";
            bump();
            const double rhs = term(depth + 1);
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term(int depth) {
        guard(depth);
        double v = unary(depth + 1);
        while (is_symbol("*") || is_symbol("/")) {
            const bool mul = cur_.text == "*";
            bump();
            const double rhs = unary(depth + 1);
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    double unary(int depth) {
        guard(depth);
        if (is_symbol("-")) {
            bump();
            return -unary(depth + 1);
        }
        if (is_symbol("+")) {
            bump();
            return unary(depth + 1);
        }
        const double base = primary(depth + 1);
        if (is_symbol("^")) {
            bump();
            return std::pow(base, unary(depth + 1));
        }
        return base;
    }

    double primary(int depth) {
        guard(depth);
        const Token t = cur_;
        if (t.kind == Tok::Number) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
                throw ParseError(Errc::SyntaxError, t.line, t.column, "malformed number '" + t.text + "'");
            }
            bump();
            return v;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "pi") {
                bump();
                return std::numbers::pi;
            }
            static const std::map<std::string, double (*)(double)> kFuncs{
                {"sin", [](double x) { return std::sin(x); }},   {"cos", [](double x) { return std::cos(x); }},
                {"tan", [](double x) { return std::tan(x); }},   {"exp", [](double x) { return std::exp(x); }},
                {"ln", [](double x) { return std::log(x); }},    {"sqrt", [](double x) { return std::sqrt(x); }},
            };
            const auto f = kFuncs.find(t.text);
            if (f == kFuncs.end()) fail(t, "expected expression");
            bump();
            expect_symbol("(");
            const double arg = expr(depth + 1);
            expect_symbol(")");
            return f->second(arg);
        }
        if (is_symbol("(")) {
            bump();
            const double v = expr(depth + 1);
            expect_symbol(")");
            return v;
        }
        fail(t, "expected expression");
    }

    Lexer lex_;
    Token cur_;
};

} // namespace

Program parse(std::string_view source) { return Parser(source).run(); }

Circuit lower(const Program& program) {
    std::map<std::string, int> qoffset, qsize, coffset, csize;
    int nq = 0, nc = 0;
    for (const auto& r : program.qregs) {
        qoffset[r.name] = nq;
        qsize[r.name] = r.size;
        nq += r.size;
    }
    for (const auto& r : program.cregs) {
        coffset[r.name] = nc;
        csize[r.name] = r.size;
        nc += r.size;
    }
    if (nq == 0) throw Error(Errc::UndeclaredRegister, "program declares no quantum register");
    Circuit circuit(nq);

    for (const auto& st : program.statements) {
        if (st.type == Statement::Type::Barrier) continue;
        int width = 1;
        for (const auto& a : st.qargs)
            if (a.index < 0) width = qsize.at(a.reg);
        auto qubit = [&](const Argument& a, int k) { return qoffset.at(a.reg) + (a.index < 0 ? k : a.index); };

        if (st.type == Statement::Type::Measure) {
            const auto& c = st.cargs.front();
            for (int k = 0; k < width; ++k)
                circuit.add_measurement(qubit(st.qargs.front(), k), coffset.at(c.reg) + (c.index < 0 ? k : c.index));
            continue;
        }
        const auto kind = gate_kind_from_name(st.name);
        if (!kind) throw ParseError(Errc::UnsupportedGate, st.line, st.column, "gate '" + st.name + "' is not supported");
        const int nctrl = builtin_controls(*kind);
        for (int k = 0; k < width; ++k) {
            GateOp op;
            op.kind = *kind;
            op.params = st.params;
            for (std::size_t i = 0; i < st.qargs.size(); ++i) {
                (static_cast<int>(i) < nctrl ? op.controls : op.targets).push_back(qubit(st.qargs[i], k));
            }
            circuit.add(std::move(op));
        }
    }
    return circuit;
}

Circuit from_source(std::string_view source) { return lower(parse(source)); }

Circuit from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IOError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_source(buf.str());
}

namespace {

std::string format_param(double v) {
    if (!std::isfinite(v)) throw Error(Errc::NotEmittable, "non-finite gate parameter");
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

std::string emit(const Circuit& circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.nqubits() << "];\n";
    int nclbits = 0;
    for (const auto& m : circuit.measurements()) nclbits = std::max(nclbits, m.clbit + 1);
    if (nclbits > 0) out << "creg c[" << nclbits << "];\n";

    for (const auto& op : circuit.ops()) {
        if (op.kind == GateKind::Fused) throw Error(Errc::NotEmittable, "fused gates have no OpenQASM form");
        if (op.controls.size() != static_cast<std::size_t>(builtin_controls(op.kind))) {
            throw Error(Errc::NotEmittable, std::string(gate_name(op.kind)) + " with extra controls");
        }
        out << gate_name(op.kind);
        if (!op.params.empty()) {
            out << '(';
            for (std::size_t i = 0; i < op.params.size(); ++i) out << (i ? "," : "") << format_param(op.params[i]);
            out << ')';
        }
        const auto qs = op.qubits();
        for (std::size_t i = 0; i < qs.size(); ++i) out << (i ? "," : " ") << "q[" << qs[i] << ']';
        out << ";\n";
    }
    for (const auto& m : circuit.measurements()) out << "measure q[" << m.qubit << "] -> c[" << m.clbit << "];\n";
    return out.str();
}

} // namespace svsim::qasm
