#include "askey/expr.hpp"

#include "askey/series.hpp"

namespace askey {

Rational EvalCtx::lookup(const std::string& name) const {
    if (name == "i") return Rational(i);
    if (name == "x") return Rational(x);
    if (name == "N") return Rational(params ? params->N : 0);
    auto it = extra.find(name);
    if (it != extra.end()) return it->second;
    if (params && params->has(name)) return params->at(name);
    throw ConfigError("expression references unknown parameter '" + name + "'");
}

Rational Expr::eval(const EvalCtx& ctx) const {
    switch (kind) {
        case Kind::Const:
            return value;
        case Kind::Param:
            return ctx.lookup(name);
        case Kind::QPow: {
            long e = lin.value(ctx.i, ctx.x, ctx.params ? ctx.params->N : 0);
            return ctx.lookup("q").pow(e);
        }
        case Kind::Add: {
            Rational s(0);
            for (const auto& a : args) s += a->eval(ctx);
            return s;
        }
        case Kind::Mul: {
            Rational p(1);
            for (const auto& a : args) p *= a->eval(ctx);
            return p;
        }
        case Kind::Div: {
            Rational den = args[1]->eval(ctx);
            if (den.is_zero()) throw SingularParameters("catalog expression denominator vanishes");
            return args[0]->eval(ctx) / den;
        }
        case Kind::PochQ: {
            long n = lin.value(ctx.i, ctx.x, ctx.params ? ctx.params->N : 0);
            if (n < 0) throw ConfigError("negative q-Pochhammer length in catalog expression");
            return q_pochhammer(args[0]->eval(ctx), ctx.lookup("q"), static_cast<int>(n));
        }
        case Kind::Poch: {
            long n = lin.value(ctx.i, ctx.x, ctx.params ? ctx.params->N : 0);
            if (n < 0) throw ConfigError("negative Pochhammer length in catalog expression");
            return pochhammer(args[0]->eval(ctx), static_cast<int>(n));
        }
    }
    throw ConfigError("corrupt expression node");
}

namespace {

LinForm load_lin(const nlohmann::json& j) {
    LinForm f;
    if (j.contains("c")) f.c = j.at("c").get<long>();
    if (j.contains("i")) f.ci = j.at("i").get<long>();
    if (j.contains("x")) f.cx = j.at("x").get<long>();
    if (j.contains("N")) f.cN = j.at("N").get<long>();
    return f;
}

} // namespace

ExprPtr Expr::load(const nlohmann::json& j) {
    auto node = std::make_shared<Expr>();
    const std::string k = j.at("k").get<std::string>();
    if (k == "const") {
        node->kind = Kind::Const;
        node->value = Rational::parse(j.at("v").get<std::string>());
    } else if (k == "param") {
        node->kind = Kind::Param;
        node->name = j.at("n").get<std::string>();
    } else if (k == "qpow") {
        node->kind = Kind::QPow;
        node->lin = load_lin(j.at("e"));
    } else if (k == "add" || k == "mul") {
        node->kind = (k == "add") ? Kind::Add : Kind::Mul;
        for (const auto& a : j.at("a")) node->args.push_back(load(a));
        if (node->args.empty()) throw ConfigError("empty " + k + " node");
    } else if (k == "div") {
        node->kind = Kind::Div;
        const auto& a = j.at("a");
        if (a.size() != 2) throw ConfigError("div node needs exactly two children");
        node->args.push_back(load(a[0]));
        node->args.push_back(load(a[1]));
    } else if (k == "pochq" || k == "poch") {
        node->kind = (k == "pochq") ? Kind::PochQ : Kind::Poch;
        node->args.push_back(load(j.at("b")));
        node->lin = load_lin(j.at("n"));
    } else {
        throw ConfigError("unknown expression node kind '" + k + "'");
    }
    return node;
}

} // namespace askey
