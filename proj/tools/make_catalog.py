#!/usr/bin/env python3
"""Regenerate the relation catalog under data/catalog/.

Coefficient formulas are written here as infix strings and compiled to the
prefix-form JSON expression trees the library loads (node kinds: const,
param, qpow, add, mul, div, pochq, poch). Exponents of q and Pochhammer
lengths must be integer linear forms in (i, x, N).

Usage: python3 tools/make_catalog.py [output_dir]
"""

import ast
import json
import sys
from pathlib import Path

PARAMS = {"alpha", "beta", "gamma", "delta", "z", "i", "x", "N", "ie", "Ne"}


def _lin(node):
    """Extract an integer linear form in (i, x, N) from an AST node."""
    if isinstance(node, ast.Constant):
        if not isinstance(node.value, int):
            raise ValueError("non-integer constant in exponent")
        return {"c": node.value}
    if isinstance(node, ast.Name):
        if node.id not in ("i", "x", "N"):
            raise ValueError(f"exponent variable {node.id}")
        return {node.id: 1}
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return {k: -v for k, v in _lin(node.operand).items()}
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, (ast.Add, ast.Sub)):
            left, right = _lin(node.left), _lin(node.right)
            sign = 1 if isinstance(node.op, ast.Add) else -1
            out = dict(left)
            for k, v in right.items():
                out[k] = out.get(k, 0) + sign * v
            return {k: v for k, v in out.items() if v != 0} or {"c": 0}
        if isinstance(node.op, ast.Mult):
            left, right = node.left, node.right
            if isinstance(left, ast.Constant):
                return {k: left.value * v for k, v in _lin(right).items()}
            if isinstance(right, ast.Constant):
                return {k: right.value * v for k, v in _lin(left).items()}
    raise ValueError(f"cannot linearize exponent: {ast.dump(node)}")


def _tree(node):
    if isinstance(node, ast.Expression):
        return _tree(node.body)
    if isinstance(node, ast.Constant):
        return {"k": "const", "v": str(node.value)}
    if isinstance(node, ast.Name):
        if node.id == "q":
            return {"k": "qpow", "e": {"c": 1}}
        if node.id not in PARAMS:
            raise ValueError(f"unknown name {node.id}")
        return {"k": "param", "n": node.id}
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return {"k": "mul", "a": [{"k": "const", "v": "-1"}, _tree(node.operand)]}
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.left, ast.Name) and node.left.id == "q"):
                raise ValueError("only powers of q are supported")
            return {"k": "qpow", "e": _lin(node.right)}
        left, right = _tree(node.left), _tree(node.right)
        if isinstance(node.op, ast.Add):
            return {"k": "add", "a": [left, right]}
        if isinstance(node.op, ast.Sub):
            return {"k": "add",
                    "a": [left, {"k": "mul", "a": [{"k": "const", "v": "-1"}, right]}]}
        if isinstance(node.op, ast.Mult):
            return {"k": "mul", "a": [left, right]}
        if isinstance(node.op, ast.Div):
            return {"k": "div", "a": [left, right]}
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        if node.func.id in ("qp", "p"):
            kind = "pochq" if node.func.id == "qp" else "poch"
            return {"k": kind, "b": _tree(node.args[0]), "n": _lin(node.args[1])}
    raise ValueError(f"cannot translate: {ast.dump(node)}")


def E(text):
    """Compile an infix formula string to a JSON expression tree."""
    return _tree(ast.parse(text.replace("^", "**"), mode="eval"))


def qshift(eta, dn, **exps):
    nbar = "N" if dn == 0 else (f"N+{dn}" if dn > 0 else f"N{dn}")
    moves = {}
    for name, e in exps.items():
        if e == 0:
            moves[name] = name
        elif e == 1:
            moves[name] = f"q*{name}"
        else:
            moves[name] = f"q^{e}*{name}"
    return {"eta": eta, "N_bar": nbar, "map": moves}


def ashift(eta, dn, **adds):
    nbar = "N" if dn == 0 else (f"N+{dn}" if dn > 0 else f"N{dn}")
    moves = {}
    for name, a in adds.items():
        if a == "0" or a == 0:
            moves[name] = name
        else:
            s = str(a)
            moves[name] = f"{name}+{s}" if not s.startswith("-") else f"{name}{s}"
    return {"eta": eta, "N_bar": nbar, "map": moves}


def a2(id_, shift, lp, p0p, pm1p, lm, p0m, p1m, lambda_nu=None, chi=None):
    entry = {
        "id": id_,
        "provenance": "a2-list",
        "shift": shift,
        "plus": {"lambda": E(lp), "phi0": E(p0p), "phim1": E(pm1p)},
        "minus": {"lambda": E(lm), "phi0": E(p0m), "phi1": E(p1m)},
    }
    if lambda_nu is not None:
        entry["lambda_nu"] = E(lambda_nu)
    if chi is not None:
        kind, payload = chi
        if kind == "zero":
            entry["chi"] = {"kind": "zero"}
        elif kind == "expr":
            entry["chi"] = {"kind": "expr", "tree": E(payload)}
        else:
            entry["chi"] = {"kind": "weight_ratio", "den": E(payload)}
    return entry


def b2(id_, via, shift, lam, p1, m1, phi0):
    mode = {"lsum": {"mode": "lambda0_minus_sum"}, "nsum": {"mode": "neg_sum"}}
    entry = {
        "id": id_,
        "provenance": "b2-list",
        "via": via,
        "shift": shift,
        "lambda": E(lam),
        "phi_p1": E(p1),
        "phi_m1": E(m1),
    }
    entry["phi_0"] = mode[phi0] if phi0 in mode else {"mode": "expr", "tree": E(phi0)}
    return entry


def b2p(id_, via, shift, p0, m2, m1, lam, pp2, pp0, pp1):
    def mode(v):
        table = {"lsum": {"mode": "lambda0_minus_sum"}, "nsum": {"mode": "neg_sum"},
                 "1sum": {"mode": "lambda0_minus_sum"}}
        return table[v] if v in table else {"mode": "expr", "tree": E(v)}

    return {
        "id": id_,
        "provenance": "b2p-list",
        "via": via,
        "shift": shift,
        "plus": {"phi0": E(p0), "phim2": E(m2), "phim1": mode(m1)},
        "minus": {"lambda": E(lam), "phi_p2": E(pp2), "phi_0": E(pp0), "phi_p1": mode(pp1)},
    }


def bi(id_, side, parity, x_off, n_off, ba, bb, bg, z0, zm, w0, wp, omega):
    return {
        "id": id_,
        "provenance": "bi-list",
        "side": side,
        "n_parity": parity,
        "bar": {"x_offset": x_off, "n_offset": n_off,
                "alpha": E(ba), "beta": E(bb), "gamma": E(bg)},
        "z0_even": E(z0[0]), "z0_odd": E(z0[1]),
        "zm_even": E(zm[0]), "zm_odd": E(zm[1]),
        "w0_even": E(w0[0]), "w0_odd": E(w0[1]),
        "wp_even": E(wp[0]), "wp_odd": E(wp[1]),
        "omega": E(omega),
    }


def limits(pairs):
    return [{"source": s, "target": t} for s, t in pairs]


# --------------------------------------------------------------------------
# q-Racah
# --------------------------------------------------------------------------

QR = {
    "family": "qR",
    "a2": [
        a2("qRI", qshift(0, -1, alpha=0, beta=1, gamma=-1),
           "1",
           "(1-q^(i-N))*(1-alpha*beta*q^(i+1))/((1-q^(-N))*(1-alpha*beta*q^(2*i+1)))",
           "(1-q^i)*(1-alpha*beta*q^(N+i+1))/((1-q^N)*(1-alpha*beta*q^(2*i+1)))",
           "(1-gamma*q^x)*(1-q^(N-x))/(1-q^N)",
           "(1-beta*q^(i+1))*(alpha*q^(i+1)-gamma)/(1-alpha*beta*q^(2*i+2))",
           "(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
           lambda_nu="-(1-q^(-N))*(1-gamma)",
           chi=("weight_ratio", "(1-gamma)*(1-q^(-N))")),
        a2("qRII", qshift(0, 0, alpha=0, beta=1, gamma=0),
           "1",
           "(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
           "-beta*q*(1-q^i)*(gamma-alpha*q^i)/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
           "(1-beta*gamma*q^(x+1))*(1-beta*q^(N+1-x))/(beta*q*(1-beta*gamma*q))",
           "(1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))/(beta*q*(1-alpha*beta*q^(2*i+2)))",
           "(q^i-q^N)*(1-alpha*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
           lambda_nu="-(1-q^(-N-1)/beta)*(1-beta*gamma*q)",
           chi=("zero", None)),
        a2("qRIII", qshift(-1, -1, alpha=1, beta=0, gamma=1),
           "1",
           "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))"
           "/((1-q^N)*(1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
           "(1-q^i)*(gamma*q^(1-i)-alpha*q)*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))"
           "/((1-q^N)*(1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))",
           "(1-q^(-x))*(1-gamma*q^(x-N))/((1-beta*gamma*q)*(1-alpha*q)*(1-q^N))",
           "-q^(i-N)/(1-alpha*beta*q^(2*i+2))",
           "q^(i-N)/(1-alpha*beta*q^(2*i+2))",
           lambda_nu="0",
           chi=("expr",
                "(1-q^(-N)/beta)*(1-gamma*q)*(1-gamma*q^(-N))*(1-gamma*q^(-N)/alpha)*alpha*beta*q^2"
                "/((1-alpha*q)*(1-beta*gamma*q)*(1-q^(-N))*(1-gamma*q^(-N+1))*(1-gamma*q^(-N+2)))")),
        a2("qRIV", qshift(0, 0, alpha=1, beta=0, gamma=0),
           "1",
           "(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
           "-q*alpha*(1-q^i)*(1-beta*q^i)/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
           "(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))/(alpha*q*(1-alpha*q))",
           "(1-alpha*beta*q^(N+i+2))*(gamma-alpha*q^(i+1))/(alpha*q*(1-alpha*beta*q^(2*i+2)))",
           "-(q^N-q^i)*(1-beta*gamma*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
           lambda_nu="-(1-alpha*q)*(1-gamma*q^(-N-1)/alpha)",
           chi=("zero", None)),
    ],
    "b2": [
        b2("qRI/II", ["qRI", "qRII"], qshift(0, -1, alpha=0, beta=0, gamma=-1),
           "(1-beta*gamma*q^x)*(1-beta*q^(N-x))/(beta*q*(1-beta*gamma))",
           "(1-q^(i-N))*(1-alpha*beta*q^(i+1))*(q^i-q^(N-1))*(1-alpha*q^(i+1))"
           "/((1-q^(-N))*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "(1-q^i)*(1-alpha*beta*q^(N+i+1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i))"
           "/(beta*q*(1-q^N)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "lsum"),
        b2("qRI/III", ["qRI", "qRIII"], qshift(1, 0, alpha=-1, beta=1, gamma=-2),
           "(1-q^(-x-1))*(1-gamma*q^(x-N-1))/((1-beta*gamma)*(1-alpha))",
           "-q^i*(1-q^(i-N))*(1-alpha*beta*q^(i+1))"
           "/((1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "-q^(i-N-1)*(1-q^i)*(1-alpha*beta*q^(N+i+1))"
           "/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "nsum"),
        b2("qRI/IV", ["qRI", "qRIV"], qshift(0, -1, alpha=-1, beta=1, gamma=-1),
           "(1-alpha*q^x)*(gamma-alpha*q^(N-x))/(alpha*q*(1-alpha))",
           "(q^i-q^(N-1))*(q^i-q^N)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))"
           "/((1-q^N)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "(1-q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))*(gamma-alpha*q^i)"
           "/(alpha*q*(1-q^N)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "lsum"),
        b2("qRII/I", ["qRII", "qRI"], qshift(0, 1, alpha=0, beta=0, gamma=1),
           "(1-gamma*q^(x+1))*(1-q^(N-x+1))/(1-q^(N+1))",
           "(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))*(1-alpha*q^(i+1))"
           "/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "beta*q^2*(1-q^i)*(1-beta*q^i)*(gamma-alpha*q^(i-1))*(gamma-alpha*q^i)"
           "/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "lsum"),
        b2("qRII/III", ["qRII", "qRIII"], qshift(1, 1, alpha=-1, beta=1, gamma=-1),
           "(1-q^(-x-1))*(1-gamma*q^(x-N-1))/((1-alpha)*(1-q^(N+1)))",
           "q^(i-N-1)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))"
           "/((1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "beta*q^(i-N-1)*(1-q^i)*(gamma-alpha*q^i)"
           "/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "nsum"),
        b2("qRII/IV", ["qRII", "qRIV"], qshift(0, 0, alpha=-1, beta=1, gamma=0),
           "(1-alpha*q^x)*(gamma-alpha*q^(N-x))/(alpha*(1-alpha))",
           "-(q^N-q^i)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))"
           "/((1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "-beta*q*(1-q^i)*(gamma-alpha*q^(i-1))*(gamma-alpha*q^i)*(1-alpha*beta*q^(N+i+1))"
           "/(alpha*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "lsum"),
        b2("qRIII/I", ["qRIII", "qRI"], qshift(-1, 0, alpha=1, beta=-1, gamma=2),
           "(1-gamma*q^(x+1))*(1-q^(N-x+1))",
           "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))"
           "*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))"
           "/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "q^3*(1-q^(-i))*(alpha*q^(i-1)-gamma)*(alpha*q^i-gamma)*(1-beta*q^(i-1))*(1-beta*q^i)"
           "*(1-alpha*beta*q^(N+i+1))"
           "/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "q*(1-alpha*q^(i+1))*(1-beta*q^i)*(1-beta*gamma*q^(i+1))*(alpha*q^i-gamma)"
           "/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))"
           "*(q*(1-q^(N-i))*(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+2))"
           "+(1-q^(-i))*(1-alpha*beta*q^(N+i+1))/(1-alpha*beta*q^(2*i)))"),
        b2("qRIII/II", ["qRIII", "qRII"], qshift(-1, -1, alpha=1, beta=-1, gamma=1),
           "(1-beta*gamma*q^x)*(1-beta*q^(N-x))/beta",
           "(1-q^(N-i))*(q^i-q^(N-1))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))"
           "*(1-beta*gamma*q^(i+1))"
           "/((1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "q*(1-q^i)*(gamma*q^(-i)-alpha)*(1-beta*q^(i-1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i))"
           "*(1-alpha*beta*q^(N+i+1))"
           "/(beta*(1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))"
           "/((1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i+1)))"
           "*((1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))/(beta*(1-alpha*beta*q^(2*i+2)))"
           "+(1-q^i)*(gamma-alpha*q^i)/(1-alpha*beta*q^(2*i)))"),
        b2("qRIII/IV", ["qRIII", "qRIV"], qshift(-1, -1, alpha=0, beta=0, gamma=1),
           "(1-alpha*q^x)*(gamma-alpha*q^(N-x))/alpha",
           "(1-q^(N-i))*(q^i-q^(N-1))*(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))"
           "*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))"
           "/((1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "(1-q^i)*(gamma*q^(1-i)-alpha*q)*(gamma-alpha*q^(i-1))*(1-beta*q^i)"
           "*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))"
           "/(alpha*(1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "(1-q^(N-i))*(1-beta*gamma*q^(i+1))*(1-alpha*beta*q^(N+i+1))*(gamma-alpha*q^i)"
           "/((1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))"
           "*((1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/(alpha*(1-alpha*beta*q^(2*i+2)))"
           "+(1-q^i)*(1-beta*q^i)/(1-alpha*beta*q^(2*i)))"),
        b2("qRIV/I", ["qRIV", "qRI"], qshift(0, 1, alpha=1, beta=-1, gamma=1),
           "(1-gamma*q^(x+1))*(1-q^(N-x+1))/(1-q^(N+1))",
           "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))"
           "/((1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "-alpha*q^2*(1-q^i)*(1-beta*q^(i-1))*(1-beta*q^i)*(alpha*q^i-gamma)"
           "/((1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "lsum"),
        b2("qRIV/II", ["qRIV", "qRII"], qshift(0, 0, alpha=1, beta=-1, gamma=0),
           "(1-beta*gamma*q^x)*(1-beta*q^(N-x))/(beta*(1-beta*gamma))",
           "(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))*(q^i-q^N)*(1-alpha*q^(i+2))"
           "/((1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "-alpha*q*(1-q^i)*(1-beta*q^(i-1))*(1-beta*q^i)*(1-alpha*beta*q^(N+i+1))"
           "/(beta*(1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "lsum"),
        b2("qRIV/III", ["qRIV", "qRIII"], qshift(1, 1, alpha=0, beta=0, gamma=-1),
           "(1-q^(-x-1))*(1-gamma*q^(x-N-1))/((1-beta*gamma)*(1-q^(N+1)))",
           "q^(i-N-1)*(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))"
           "/((1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
           "alpha*q^(i-N-1)*(1-q^i)*(1-beta*q^i)"
           "/((1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
           "nsum"),
    ],
    "b2p": [
        b2p("qRI/I'", ["qRI", "qRI"], qshift(0, -2, alpha=0, beta=2, gamma=-2),
            "(1-q^(i-N))*(1-q^(i-N+1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))"
            "/((1-q^(-N))*(1-q^(-N+1))*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))"
            "/((1-q^(N-1))*(1-q^N)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "1sum",
            "(1-gamma*q^(x-1))*(1-gamma*q^x)*(1-q^(N-x-1))*(1-q^(N-x))/((1-q^(N-1))*(1-q^N))",
            "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "(1-beta*q^(i+1))*(1-beta*q^(i+2))*(alpha*q^(i+1)-gamma)*(alpha*q^(i+2)-gamma)"
            "/(q*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "lsum"),
        b2p("qRI/II'", ["qRI", "qRII"], qshift(0, -1, alpha=0, beta=2, gamma=-1),
            "(1-q^(i-N))*(1-beta*gamma*q^(i+1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))"
            "/((1-q^(-N))*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "-beta*q*(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i+1))*(gamma-alpha*q^i)"
            "/((1-q^N)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "1sum",
            "(1-gamma*q^x)*(1-q^(N-x))*(1-beta*gamma*q^(x+1))*(1-beta*q^(N+1-x))"
            "/(beta*q*(1-q^N)*(1-beta*gamma*q))",
            "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+2))*(q^(i+1)-q^N)"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "(1-beta*q^(i+1))*(1-beta*q^(i+2))*(alpha*q^(i+1)-gamma)*(1-alpha*beta*q^(N+i+2))"
            "/(beta*q*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "lsum"),
        b2p("qRI/III'", ["qRI", "qRIII"], qshift(-1, -2, alpha=1, beta=1, gamma=0),
            "(1-q^(i-N))*(1-q^(N-i-1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))"
            "*(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))"
            "/((1-q^(-N))*(1-q^(N-1))*(1-alpha*q)*(1-beta*gamma*q)"
            "*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))"
            "*(gamma*q^(1-i)-alpha*q)*(1-beta*q^i)"
            "/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-beta*gamma*q)"
            "*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "(1-q^(N-i))*(1-alpha*beta*q^(i+1))*(1-q^i)*(1-alpha*beta*q^(N+i+1))"
            "/((1-alpha*q)*(1-beta*gamma*q)*(1-q^(N-1))*(1-q^N)*(1-alpha*beta*q^(2*i+1)))"
            "*((gamma-alpha*q^(i+1))*(1-beta*q^(i+1))/(1-alpha*beta*q^(2*i+2))"
            "+(1-beta*gamma*q^i)*(1-alpha*q^i)/(1-alpha*beta*q^(2*i)))",
            "(1-gamma*q^x)*(1-q^(N-x))*(1-q^(-x))*(1-gamma*q^(x-N))"
            "/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-beta*gamma*q))",
            "q^(i-N+1)*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "-q^(i-N+1)*(1-beta*q^(i+1))*(alpha*q^(i+1)-gamma)"
            "/((1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "nsum"),
        b2p("qRI/IV'", ["qRI", "qRIV"], qshift(0, -1, alpha=1, beta=1, gamma=-1),
            "(1-q^(i-N))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-alpha*q^(i+1))"
            "/((1-q^(-N))*(1-alpha*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "-alpha*q*(1-q^(i-1))*(1-q^i)*(1-alpha*beta*q^(N+i+1))*(1-beta*q^i)"
            "/((1-q^N)*(1-alpha*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "1sum",
            "(1-gamma*q^x)*(1-q^(N-x))*(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))"
            "/(alpha*q*(1-q^N)*(1-alpha*q))",
            "-(q^N-q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "(1-beta*q^(i+1))*(alpha*q^(i+2)-gamma)*(1-alpha*beta*q^(N+i+2))*(gamma-alpha*q^(i+1))"
            "/(alpha*q*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "lsum"),
        b2p("qRII/II'", ["qRII", "qRII"], qshift(0, 0, alpha=0, beta=2, gamma=0),
            "(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-beta*gamma*q^(i+1))"
            "*(1-beta*gamma*q^(i+2))"
            "/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "beta*beta*q^3*(1-q^(i-1))*(1-q^i)*(gamma-alpha*q^(i-1))*(gamma-alpha*q^i)"
            "/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "1sum",
            "(1-beta*gamma*q^(x+1))*(1-beta*gamma*q^(x+2))*(1-beta*q^(N+1-x))*(1-beta*q^(N+2-x))"
            "/(beta*beta*q^3*(1-beta*gamma*q)*(1-beta*gamma*q^2))",
            "(q^i-q^N)*(q^(i+1)-q^N)*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "(1-beta*q^(i+1))*(1-beta*q^(i+2))*(1-alpha*beta*q^(N+i+2))*(1-alpha*beta*q^(N+i+3))"
            "/(beta*beta*q^3*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "lsum"),
        b2p("qRII/III'", ["qRII", "qRIII"], qshift(-1, -1, alpha=1, beta=1, gamma=1),
            "(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))*(1-beta*gamma*q^(i+1))"
            "*(1-beta*gamma*q^(i+2))*(1-q^(N-i))*(1-alpha*q^(i+1))"
            "/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-q^N)*(1-alpha*q)"
            "*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "-beta*q*(1-q^(i-1))*(1-q^i)*(gamma*q^(2-i)-alpha*q)*(gamma-alpha*q^i)*(1-beta*q^i)"
            "*(1-alpha*beta*q^(N+i+1))"
            "/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-q^N)*(1-alpha*q)"
            "*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "(1-q^i)*(1-alpha*beta*q^(i+1))*(1-beta*gamma*q^(i+1))*(gamma*q^(1-i)-alpha*q)"
            "/((1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*beta*q^(2*i+1))*(1-q^N)*(1-alpha*q))"
            "*((1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))/(1-alpha*beta*q^(2*i+2))"
            "-beta*q^i*(1-q^(N-i+1))*(1-alpha*q^i)/(1-alpha*beta*q^(2*i)))",
            "(1-beta*gamma*q^(x+1))*(1-q^(-x))*(1-beta*q^(N+1-x))*(1-gamma*q^(x-N))"
            "/(beta*q*(1-beta*gamma*q)*(1-beta*gamma*q^2)*(1-alpha*q)*(1-q^N))",
            "q^(i+1-N)*(q^i-q^(N-1))*(1-alpha*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "-q^(i-N-1)*(1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))"
            "/(beta*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "nsum"),
        b2p("qRII/IV'", ["qRII", "qRIV"], qshift(0, 0, alpha=1, beta=1, gamma=0),
            "(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))"
            "/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "alpha*beta*q^2*(1-q^(i-1))*(1-q^i)*(1-beta*q^i)*(gamma-alpha*q^i)"
            "/((1-alpha*q)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "1sum",
            "(1-beta*gamma*q^(x+1))*(1-beta*q^(N+1-x))*(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))"
            "/(alpha*beta*q^2*(1-alpha*q)*(1-beta*gamma*q))",
            "-(q^i-q^N)*(q^N-q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "(1-beta*q^(i+1))*(gamma-alpha*q^(i+1))*(1-alpha*beta*q^(N+i+2))*(1-alpha*beta*q^(N+i+3))"
            "/(alpha*beta*q^2*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "lsum"),
        b2p("qRIII/III'", ["qRIII", "qRIII"], qshift(-2, -2, alpha=2, beta=0, gamma=2),
            "(1-q^(N-i-1))*(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-beta*gamma*q^(i+1))"
            "*(1-beta*gamma*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))"
            "/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-beta*gamma*q^2)"
            "*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "q^3*(1-q^(i-1))*(1-q^i)*(gamma*q^(-i)-alpha)*(gamma*q^(1-i)-alpha)*(1-beta*q^(i-1))"
            "*(1-beta*q^i)*(1-alpha*beta*q^(N+i))*(1-alpha*beta*q^(N+i+1))"
            "/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-beta*gamma*q^2)"
            "*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "(1-q^i)*(1-q^(N-i))*(1-alpha*q^(i+1))*(1-beta*gamma*q^(i+1))*(gamma*q^(1-i)-alpha*q)"
            "*(1-beta*q^i)*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(N+i+1))*(1+q)"
            "/((1-q^(N-1))*(1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-beta*gamma*q^2)"
            "*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+2)))",
            "(1-q^(-x))*(1-q^(-x+1))*(1-gamma*q^(x-N))*(1-gamma*q^(x-N+1))"
            "/((1-alpha*q)*(1-alpha*q^2)*(1-q^(N-1))*(1-q^N)*(1-beta*gamma*q)*(1-beta*gamma*q^2))",
            "q^(2*i-2*N+2)/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "q^(2*i-2*N+1)/((1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "nsum"),
        b2p("qRIII/IV'", ["qRIII", "qRIV"], qshift(-1, -1, alpha=2, beta=0, gamma=1),
            "(1-q^(N-i))*(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))"
            "*(1-alpha*beta*q^(i+2))*(1-beta*gamma*q^(i+1))"
            "/((1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)"
            "*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "-alpha*q^3*(1-q^(i-1))*(1-q^i)*(gamma*q^(-i)-alpha)*(1-beta*q^(i-1))*(1-beta*q^i)"
            "*(1-alpha*beta*q^(N+i+1))"
            "/((1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)"
            "*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "q*(1-q^i)*(1-alpha*q^(i+1))*(1-beta*q^i)*(1-alpha*beta*q^(i+1))"
            "/((1-q^N)*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-alpha*beta*q^(2*i+1)))"
            "*(-alpha*q*(1-q^(N-i))*(1-beta*gamma*q^(i+1))/(1-alpha*beta*q^(2*i+2))"
            "+(gamma*q^(-i)-alpha)*(1-alpha*beta*q^(N+i+1))/(1-alpha*beta*q^(2*i)))",
            "(1-q^(-x))*(1-gamma*q^(x-N))*(1-alpha*q^(x+1))*(gamma-alpha*q^(N+1-x))"
            "/(alpha*q*(1-alpha*q)*(1-alpha*q^2)*(1-beta*gamma*q)*(1-q^N))",
            "-q^(i-N)*(q^N-q^(i+1))*(1-beta*gamma*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "-q^(i-N-1)*(1-alpha*beta*q^(N+i+2))*(gamma-alpha*q^(i+1))"
            "/(alpha*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "nsum"),
        b2p("qRIV/IV'", ["qRIV", "qRIV"], qshift(0, 0, alpha=2, beta=0, gamma=0),
            "(1-alpha*q^(i+1))*(1-alpha*q^(i+2))*(1-alpha*beta*q^(i+1))*(1-alpha*beta*q^(i+2))"
            "/((1-alpha*q)*(1-alpha*q^2)*(1-alpha*beta*q^(2*i+1))*(1-alpha*beta*q^(2*i+2)))",
            "alpha*alpha*q^3*(1-q^(i-1))*(1-q^i)*(1-beta*q^(i-1))*(1-beta*q^i)"
            "/((1-alpha*q)*(1-alpha*q^2)*(1-alpha*beta*q^(2*i))*(1-alpha*beta*q^(2*i+1)))",
            "1sum",
            "(1-alpha*q^(x+1))*(1-alpha*q^(x+2))*(gamma-alpha*q^(N+1-x))*(gamma-alpha*q^(N+2-x))"
            "/(alpha*alpha*q^3*(1-alpha*q)*(1-alpha*q^2))",
            "(q^N-q^i)*(q^N-q^(i+1))*(1-beta*gamma*q^(i+1))*(1-beta*gamma*q^(i+2))"
            "/((1-alpha*beta*q^(2*i+3))*(1-alpha*beta*q^(2*i+4)))",
            "(1-alpha*beta*q^(N+i+2))*(1-alpha*beta*q^(N+i+3))*(gamma-alpha*q^(i+1))"
            "*(gamma-alpha*q^(i+2))"
            "/(alpha*alpha*q^3*(1-alpha*beta*q^(2*i+2))*(1-alpha*beta*q^(2*i+3)))",
            "lsum"),
    ],
}

# --------------------------------------------------------------------------
# q-Hahn
# --------------------------------------------------------------------------

QH = {
    "family": "qH",
    "a2": [
        a2("qHI", qshift(0, 0, alpha=1, beta=0),
           "1",
           "(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
           "-alpha*q*(1-q^i)*(1-beta*q^i)/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))",
           "q^N*(alpha*q-q^(-x))/(1-alpha*q)",
           "-q^i*(1-alpha*beta*q^(N+i+2))/(1-alpha*beta*q^(2*i+2))",
           "(q^i-q^N)/(1-alpha*beta*q^(2*i+2))"),
        a2("qHII", qshift(-1, -1, alpha=1, beta=0),
           "1",
           "(1-q^(N-i))*(1-alpha*beta*q^(i+1))*(1-alpha*q^(i+1))"
           "/((1-q^N)*(1-alpha*beta*q^(2*i+1))*(1-alpha*q))",
           "-alpha*q*(1-q^i)*(1-alpha*beta*q^(N+i+1))*(1-beta*q^i)"
           "/((1-q^N)*(1-alpha*beta*q^(2*i+1))*(1-alpha*q))",
           "(1-q^(-x))/((1-q^N)*(1-alpha*q))",
           "-q^(i-N)/(1-alpha*beta*q^(2*i+2))",
           "q^(i-N)/(1-alpha*beta*q^(2*i+2))"),
        a2("qHIII", qshift(0, 0, alpha=0, beta=1),
           "1",
           "(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+1))",
           "alpha*beta*q^(i+1)*(1-q^i)/(1-alpha*beta*q^(2*i+1))",
           "(1-beta*q^(N+1-x))/(beta*q)",
           "(1-beta*q^(i+1))*(1-alpha*beta*q^(N+i+2))/(beta*q*(1-alpha*beta*q^(2*i+2)))",
           "(q^i-q^N)*(1-alpha*q^(i+1))/(1-alpha*beta*q^(2*i+2))"),
        a2("qHIV", qshift(0, -1, alpha=0, beta=1),
           "1",
           "(1-q^(i-N))*(1-alpha*beta*q^(i+1))/((1-q^(-N))*(1-alpha*beta*q^(2*i+1)))",
           "(1-q^i)*(1-alpha*beta*q^(N+i+1))/((1-q^N)*(1-alpha*beta*q^(2*i+1)))",
           "(1-q^(N-x))/(1-q^N)",
           "alpha*q^(i+1)*(1-beta*q^(i+1))/(1-alpha*beta*q^(2*i+2))",
           "(1-alpha*q^(i+1))/(1-alpha*beta*q^(2*i+2))"),
    ],
    "limits": limits([("qRI", "qHIV"), ("qRII", "qHIII"), ("qRIII", "qHII"), ("qRIV", "qHI")]),
}

# --------------------------------------------------------------------------
# dual q-Hahn
# --------------------------------------------------------------------------

DQH = {
    "family": "dqH",
    "a2": [
        a2("dqHI", qshift(-1, -1, alpha=1, beta=1),
           "1",
           "(1-q^(N-i))*(1-alpha*q^(i+1))/((1-q^N)*(1-alpha*q))",
           "-alpha*q*(1-q^i)*(1-beta*q^(N-i+1))/((1-q^N)*(1-alpha*q))",
           "(1-q^(-x))*(1-alpha*beta*q^(x+1))/((1-alpha*q)*(1-q^N))",
           "-q^(i-N)",
           "q^(i-N)"),
        a2("dqHII", qshift(0, -1, alpha=0, beta=0),
           "1",
           "(q^i-q^N)/(1-q^N)",
           "(1-q^i)/(1-q^N)",
           "(1-q^(N-x))*(1-alpha*beta*q^(x+N+1))/(1-q^N)",
           "alpha*q*(q^i-beta*q^N)",
           "1-alpha*q^(i+1)"),
        a2("dqHIII", qshift(0, 0, alpha=1, beta=-1),
           "1",
           "(1-alpha*q^(i+1))/(1-alpha*q)",
           "-alpha*q*(1-q^i)/(1-alpha*q)",
           "(q^(-x)-beta)*(1-alpha*q^(x+1))/(1-alpha*q)",
           "q^(i-N)-beta",
           "1-q^(i-N)"),
    ],
    "limits": limits([("qRI", "dqHII"), ("qRII", "trivial"), ("qRIII", "dqHI"),
                      ("qRIV", "dqHIII")]),
}

# --------------------------------------------------------------------------
# quantum q-Krawtchouk
# --------------------------------------------------------------------------

QQK = {
    "family": "qqK",
    "a2": [
        a2("qqKI", qshift(0, 0, alpha=1),
           "1", "q^(-i)", "1-q^(-i)",
           "q^(-N)-alpha*q^(1-x)", "q^(-i)-alpha*q", "q^(-N)-q^(-i)"),
        a2("qqKII", qshift(0, -1, alpha=1),
           "1", "(1-q^(N-i))/(1-q^N)", "(1-q^(-i))/(1-q^(-N))",
           "alpha*q*(1-q^(N-x))/(1-q^N)", "alpha*q-q^(-i)", "q^(-i)"),
        a2("qqKIII", qshift(-1, -1, alpha=0),
           "1-q^N", "1-q^(N-i)", "-q^N*(1-q^(-i))*(1-alpha*q^i)",
           "alpha*q^(N+1)*(1-q^(-x))/(1-q^N)", "-q^(-i)", "q^(-i)"),
    ],
    "limits": limits([("qRI", "qqKII"), ("qRII", "qqKI"), ("qRIII", "qqKIII"),
                      ("qRIV", "trivial")]),
}

# --------------------------------------------------------------------------
# q-Krawtchouk
# --------------------------------------------------------------------------

QK = {
    "family": "qK",
    "a2": [
        a2("qKI", qshift(0, 0, alpha=1),
           "1",
           "(1-alpha*q^i)/(1-alpha*q^(2*i))",
           "alpha*q^i*(1-q^i)/(1-alpha*q^(2*i))",
           "q^(N-x)",
           "q^i*(1-alpha*q^(N+i+1))/(1-alpha*q^(2*i+1))",
           "(q^N-q^i)/(1-alpha*q^(2*i+1))"),
        a2("qKII", qshift(0, -1, alpha=1),
           "1",
           "(1-q^(i-N))*(1-alpha*q^i)/((1-alpha*q^(2*i))*(1-q^(-N)))",
           "(1-q^i)*(1-alpha*q^(N+i))/((1-alpha*q^(2*i))*(1-q^N))",
           "(1-q^(N-x))/(1-q^N)",
           "-alpha*q^(2*i+1)/(1-alpha*q^(2*i+1))",
           "1/(1-alpha*q^(2*i+1))"),
        a2("qKIII", qshift(-1, -1, alpha=1),
           "1",
           "(1-q^(N-i))*(1-alpha*q^i)/((1-alpha*q^(2*i))*(1-q^N))",
           "alpha*q^i*(1-alpha*q^(i+N))*(1-q^i)/((1-alpha*q^(2*i))*(1-q^N))",
           "(1-q^(-x))/(1-q^N)",
           "-q^(i-N)/(1-alpha*q^(2*i+1))",
           "q^(i-N)/(1-alpha*q^(2*i+1))"),
    ],
    "limits": limits([("qRI", "qKII"), ("qRII", "qKI"), ("qRIII", "qKIII"), ("qRIV", "qKI")]),
}

# --------------------------------------------------------------------------
# affine q-Krawtchouk
# --------------------------------------------------------------------------

AQK = {
    "family": "aqK",
    "a2": [
        a2("aqKI", qshift(0, 0, alpha=1),
           "1",
           "(1-alpha*q^(i+1))/(1-alpha*q)",
           "-alpha*q*(1-q^i)/(1-alpha*q)",
           "q^N*(alpha*q-q^(-x))/(1-alpha*q)",
           "-q^i",
           "q^i-q^N"),
        a2("aqKII", qshift(0, -1, alpha=0),
           "1",
           "(1-q^(i-N))/(1-q^(-N))",
           "(1-q^i)/(1-q^N)",
           "(1-q^(N-x))/(1-q^N)",
           "alpha*q^(i+1)",
           "1-alpha*q^(i+1)"),
        a2("aqKIII", qshift(-1, -1, alpha=1),
           "1",
           "(1-q^(N-i))*(1-alpha*q^(i+1))/((1-q^N)*(1-alpha*q))",
           "-alpha*q*(1-q^i)/((1-q^N)*(1-alpha*q))",
           "(1-q^(-x))/((1-q^N)*(1-alpha*q))",
           "-q^(i-N)",
           "q^(i-N)"),
    ],
    "limits": limits([("qRI", "aqKII"), ("qRII", "trivial"), ("qRIII", "aqKIII"),
                      ("qRIV", "aqKI")]),
}

# --------------------------------------------------------------------------
# dual q-Krawtchouk
# --------------------------------------------------------------------------

DQK = {
    "family": "dqK",
    "a2": [
        a2("dqKI", qshift(0, -1, alpha=0),
           "1",
           "(1-q^(i-N))/(1-q^(-N))",
           "(1-q^i)/(1-q^N)",
           "(1-q^(N-x))*(1-alpha*q^(x+N))/(1-q^N)",
           "-alpha*q^N",
           "1"),
        a2("dqKII", qshift(-1, -1, alpha=2),
           "1",
           "(1-q^(N-i))/(1-q^N)",
           "-alpha*q^(N+1)*(1-q^(-i))/(1-q^N)",
           "(1-q^(-x))*(1-alpha*q^x)/(1-q^(-N))",
           "q^i",
           "-q^i"),
    ],
    "limits": limits([("qRI", "dqKI"), ("qRII", "trivial"), ("qRIII", "dqKII"),
                      ("qRIV", "trivial")]),
}

# --------------------------------------------------------------------------
# Racah
# --------------------------------------------------------------------------

R = {
    "family": "R",
    "a2": [
        a2("RI", ashift(0, -1, alpha=0, beta=1, gamma=-1),
           "1",
           "(i+1+alpha+beta)*(N-i)/((2*i+1+alpha+beta)*N)",
           "(i+1+alpha+beta+N)*i/((2*i+1+alpha+beta)*N)",
           "(x+gamma)*(x-N)/N",
           "(i+1+beta)*(i+1+alpha-gamma)/(2*i+2+alpha+beta)",
           "-(i+beta+gamma+1)*(i+alpha+1)/(2*i+2+alpha+beta)",
           lambda_nu="N*gamma",
           chi=("weight_ratio", "N*gamma")),
        a2("RII", ashift(0, 0, alpha=0, beta=1, gamma=0),
           "1",
           "(i+1+alpha+beta)*(i+1+beta+gamma)/((2*i+1+alpha+beta)*(1+beta+gamma))",
           "-i*(i+alpha-gamma)/((2*i+1+alpha+beta)*(1+beta+gamma))",
           "(x+beta+gamma+1)*(N+beta-x+1)/(1+beta+gamma)",
           "(i+2+alpha+beta+N)*(i+1+beta)/(2*i+2+alpha+beta)",
           "(N-i)*(i+1+alpha)/(2*i+2+alpha+beta)",
           lambda_nu="(beta+N+1)*(beta+gamma+1)",
           chi=("zero", None)),
        a2("RIII", ashift(-1, -1, alpha=1, beta=0, gamma=1),
           "1",
           "(i+1+alpha+beta)*(i+1+alpha)*(N-i)*(i+1+beta+gamma)"
           "/((2*i+1+alpha+beta)*(1+alpha)*(1+beta+gamma)*N)",
           "i*(i+beta)*(i+alpha-gamma)*(i+1+alpha+beta+N)"
           "/((2*i+1+alpha+beta)*(1+alpha)*(1+beta+gamma)*N)",
           "x*(x+gamma-N)/((1+alpha)*(1+beta+gamma)*N)",
           "1/(2*i+2+alpha+beta)",
           "-1/(2*i+2+alpha+beta)",
           lambda_nu="0",
           chi=("expr",
                "(gamma+1)*(beta+N)*(alpha+N-gamma)"
                "/((beta+gamma+1)*(alpha+1)*(N-2-gamma)*(N-gamma-1)*N)")),
        a2("RIV", ashift(0, 0, alpha=1, beta=0, gamma=0),
           "1",
           "(i+1+alpha+beta)*(i+1+alpha)/((1+alpha)*(2*i+1+alpha+beta))",
           "-i*(i+beta)/((1+alpha)*(2*i+1+alpha+beta))",
           "(x+1+alpha)*(N+alpha-gamma-x+1)/(1+alpha)",
           "(i+2+alpha+beta+N)*(i+1+alpha-gamma)/(2*i+2+alpha+beta)",
           "(i+1+beta+gamma)*(N-i)/(2*i+2+alpha+beta)",
           lambda_nu="(alpha+1)*(alpha+1-gamma+N)",
           chi=("zero", None)),
    ],
    "limits": limits([("qRI", "RI"), ("qRII", "RII"), ("qRIII", "RIII"), ("qRIV", "RIV")]),
}

# --------------------------------------------------------------------------
# Hahn
# --------------------------------------------------------------------------

H = {
    "family": "H",
    "a2": [
        a2("HI", ashift(0, 0, alpha=1, beta=0),
           "1",
           "(i+1+alpha)*(i+1+alpha+beta)/((1+alpha)*(2*i+1+alpha+beta))",
           "-i*(i+beta)/((1+alpha)*(2*i+1+alpha+beta))",
           "(x+1+alpha)/(1+alpha)",
           "(i+2+alpha+beta+N)/(2*i+2+alpha+beta)",
           "(i-N)/(2*i+2+alpha+beta)"),
        a2("HII", ashift(-1, -1, alpha=1, beta=0),
           "1",
           "(i+1+alpha)*(i+1+alpha+beta)*(N-i)/((2*i+1+alpha+beta)*(1+alpha)*N)",
           "-i*(i+1+alpha+beta+N)*(i+beta)/((2*i+1+alpha+beta)*(1+alpha)*N)",
           "-x",
           "-(1+alpha)*N/(2*i+2+alpha+beta)",
           "(1+alpha)*N/(2*i+2+alpha+beta)"),
        a2("HIII", ashift(0, 0, alpha=0, beta=1),
           "1",
           "(i+1+alpha+beta)/(2*i+1+alpha+beta)",
           "i/(2*i+1+alpha+beta)",
           "N+beta-x+1",
           "(i+2+alpha+beta+N)*(i+1+beta)/(2*i+2+alpha+beta)",
           "(N-i)*(i+1+alpha)/(2*i+2+alpha+beta)"),
        a2("HIV", ashift(0, -1, alpha=0, beta=1),
           "1",
           "(i+1+alpha+beta)*(N-i)/((2*i+1+alpha+beta)*N)",
           "i*(i+1+alpha+beta+N)/((2*i+1+alpha+beta)*N)",
           "N-x",
           "N*(i+1+beta)/(2*i+2+alpha+beta)",
           "N*(i+1+alpha)/(2*i+2+alpha+beta)"),
    ],
    "limits": limits([("qHI", "HI"), ("qHII", "HII"), ("qHIII", "HIII"), ("qHIV", "HIV")]),
}

# --------------------------------------------------------------------------
# dual Hahn
# --------------------------------------------------------------------------

DH = {
    "family": "dH",
    "a2": [
        a2("dHI", ashift(-1, -1, alpha=1, beta=1),
           "1",
           "(i+1+alpha)*(N-i)/(N*(1+alpha))",
           "i*(i-1-beta-N)/(N*(1+alpha))",
           "x*(x+alpha+beta+1)/((1+alpha)*N)",
           "1",
           "-1"),
        a2("dHII", ashift(0, -1, alpha=0, beta=0),
           "1",
           "(N-i)/N",
           "i/N",
           "(N-x)*(x+1+alpha+beta+N)/N",
           "beta+N-i",
           "i+alpha+1"),
        a2("dHIII", ashift(0, 0, alpha=1, beta=-1),
           "1",
           "(i+1+alpha)/(1+alpha)",
           "-i/(1+alpha)",
           "-(x+1+alpha)*(x+beta)/(1+alpha)",
           "i-beta-N",
           "N-i"),
    ],
    "limits": limits([("dqHI", "dHI"), ("dqHII", "dHII"), ("dqHIII", "dHIII")]),
}

# --------------------------------------------------------------------------
# Krawtchouk
# --------------------------------------------------------------------------

K = {
    "family": "K",
    "a2": [
        a2("KI", ashift(0, -1, alpha=0),
           "1", "(N-i)/N", "i/N",
           "(N-x)/N", "1-alpha", "alpha"),
        a2("KII", ashift(-1, -1, alpha=0),
           "1", "(N-i)/N", "(alpha-1)*i/(alpha*N)",
           "x", "alpha*N", "-alpha*N"),
    ],
    "limits": limits([("qqKI", "trivial"), ("qqKII", "KI"), ("qqKIII", "KII"),
                      ("qKI", "trivial"), ("qKII", "KI"), ("qKIII", "KII"),
                      ("aqKI", "trivial"), ("aqKII", "KI"), ("aqKIII", "KII"),
                      ("dqKI", "KI"), ("dqKII", "KII")]),
}

# --------------------------------------------------------------------------
# Bannai-Ito <-> complementary Bannai-Ito
# --------------------------------------------------------------------------

BI = {
    "family": "BI",
    "bi_relations": [
        bi("B1", "B", 0, 0, 0, "beta-1", "alpha+1", "-gamma",
           z0=("1", "1"),
           zm=("ie*(beta+ie)", "(ie-Ne)*(beta+gamma+ie)"),
           w0=("-(alpha-gamma+ie+1)*(alpha+beta+Ne+ie+1)", "-(alpha+ie+1)*(alpha+beta+ie+1)"),
           wp=("1", "1"),
           omega="gamma-2*alpha-(N+3)/2"),
        bi("B2", "B", 0, 0, -1, "beta", "alpha", "-gamma+1",
           z0=("1", "-1"),
           zm=("ie*(alpha+ie)", "-(alpha+beta+1+ie+Ne)*(beta+gamma+ie)"),
           w0=("(ie-Ne)*(alpha-gamma+ie+1)", "-(beta+ie+1)*(alpha+beta+ie+1)"),
           wp=("1", "-1"),
           omega="-gamma+(1-N)/2"),
        bi("B3", "B", 1, 0, -1, "beta-1", "alpha+1", "-gamma",
           z0=("1", "1"),
           zm=("ie*(alpha+beta+Ne+ie+1)", "(alpha+1+ie)*(beta+gamma+ie)"),
           w0=("-(beta+ie)*(alpha-gamma+ie+1)", "(Ne-ie)*(alpha+beta+ie+1)"),
           wp=("1", "1"),
           omega="gamma+N/2"),
        bi("B4", "B", 1, 0, 0, "beta-1", "alpha+1", "-gamma",
           z0=("1", "-1"),
           zm=("ie*(ie-Ne-1)", "-(beta+ie)*(beta+gamma+ie)"),
           w0=("(alpha+ie+1)*(alpha-gamma+ie+1)", "-(alpha+beta+ie+1)*(alpha+beta+Ne+ie+2)"),
           wp=("1", "-1"),
           omega="2*alpha-gamma+2+N/2"),
        bi("B5", "B", 0, -1, -1, "alpha-gamma", "beta+gamma", "-gamma",
           z0=("1", "1"),
           zm=("ie*(beta+ie)", "(alpha-gamma+ie+1)*(alpha+beta+Ne+ie+1)"),
           w0=("(Ne-ie)*(beta+gamma+ie)", "-(alpha+ie+1)*(alpha+beta+ie+1)"),
           wp=("1", "1"),
           omega="(N+1)/2-gamma"),
        bi("I1", "I", 0, 0, 0, "beta", "alpha+1", "-gamma",
           z0=("1", "1"),
           zm=("-ie*(alpha+ie+1)", "(alpha-gamma+ie+1)*(Ne-ie)"),
           w0=("(beta+ie)*(alpha+beta+ie+1)", "(alpha+beta+Ne+ie+2)*(beta+gamma+ie+1)"),
           wp=("1", "1"),
           omega="2*beta+gamma+(N+1)/2"),
        bi("I2", "I", 0, 0, -1, "beta-1", "alpha+2", "-gamma-1",
           z0=("1", "1"),
           zm=("-ie*(alpha+beta+ie+Ne+1)", "-(beta+ie)*(alpha-gamma+ie+1)"),
           w0=("(alpha+beta+ie+1)*(ie-Ne)", "(alpha+ie+2)*(beta+gamma+ie+1)"),
           wp=("1", "1"),
           omega="gamma-(N-1)/2"),
        bi("I3", "I", 1, 0, 0, "beta", "alpha+1", "-gamma",
           z0=("1", "-1"),
           zm=("ie*(ie-Ne-1)", "-(alpha+ie+1)*(alpha-gamma+ie+1)"),
           w0=("-(alpha+beta+Ne+ie+2)*(alpha+beta+ie+1)", "(beta+ie+1)*(beta+gamma+ie+1)"),
           wp=("-1", "1"),
           omega="-2*beta-gamma-(N+2)/2"),
        bi("I4", "I", 1, 0, -1, "beta", "alpha+1", "-gamma",
           z0=("1", "-1"),
           zm=("ie*(beta+ie)", "-(alpha+beta+Ne+ie+2)*(alpha-gamma+ie+1)"),
           w0=("-(alpha+beta+ie+1)*(alpha+ie+1)", "(ie-Ne)*(beta+gamma+ie+1)"),
           wp=("-1", "1"),
           omega="-gamma+N/2"),
        bi("I5", "I", 1, -1, -1, "alpha-gamma+1", "beta+gamma", "-gamma+1",
           z0=("1", "1"),
           zm=("-ie*(beta+gamma+ie)", "-(alpha+ie+1)*(alpha+beta+Ne+ie+2)"),
           w0=("-(alpha-gamma+ie+1)*(alpha+beta+ie+1)", "(beta+ie+1)*(Ne-ie)"),
           wp=("-1", "-1"),
           omega="gamma+N/2"),
    ],
}

# --------------------------------------------------------------------------
# generalized 4phi3 relations
# --------------------------------------------------------------------------

G = {
    "family": "G",
    "g_relations": [
        {"id": "GI", "provenance": "g-list", "form": "plus",
         "shift": qshift(0, -1, beta=1, gamma=-1),
         "c0": E("(1-alpha*beta*q^(i+1))*(q^i-q^N)/((1-q^N)*(1-alpha*beta*q^(2*i+1)))"),
         "cm1": E("(1-alpha*beta*q^(N+i+1))*(1-q^i)/((1-q^N)*(1-alpha*beta*q^(2*i+1)))")},
        {"id": "GII", "provenance": "g-list", "form": "plus",
         "shift": qshift(0, 0, beta=1, delta=1),
         "c0": E("(1-delta*q^i)*(1-alpha*beta*q^(i+1))/((1-delta)*(1-alpha*beta*q^(2*i+1)))"),
         "cm1": E("-(1-q^i)*(delta-alpha*beta*q^(i+1))/((1-delta)*(1-alpha*beta*q^(2*i+1)))")},
        {"id": "GIII", "provenance": "g-list", "form": "minus",
         "shift": qshift(-1, -1, alpha=1, gamma=1, delta=1),
         "lambda": E("(1-q^(-x))*(1-gamma*q^(x-N))"),
         "phi1": E("q^(i-N+1)*(1-alpha*q)*(1-delta)*(1-q^N)/(z*(1-alpha*beta*q^(2*i+2)))"),
         "phi0": E("-q^(i-N+1)*(1-alpha*q)*(1-delta)*(1-q^N)/(z*(1-alpha*beta*q^(2*i+2)))")},
        {"id": "GIV", "provenance": "g-list", "form": "plus",
         "shift": qshift(0, 0, alpha=1),
         "c0": E("(1-alpha*q^(i+1))*(1-alpha*beta*q^(i+1))/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))"),
         "cm1": E("-alpha*q*(1-beta*q^i)*(1-q^i)/((1-alpha*q)*(1-alpha*beta*q^(2*i+1)))")},
        {"id": "GV", "provenance": "g-list", "form": "plus",
         "shift": qshift(0, 0, beta=1),
         "c0": E("(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+1))"),
         "cm1": E("alpha*beta*q^(i+1)*(1-q^i)/(1-alpha*beta*q^(2*i+1))")},
        {"id": "GVI", "provenance": "g-list", "form": "plus",
         "shift": qshift(0, 0, beta=1, z=-1),
         "c0": E("q^i*(1-alpha*beta*q^(i+1))/(1-alpha*beta*q^(2*i+1))"),
         "cm1": E("(1-q^i)/(1-alpha*beta*q^(2*i+1))")},
    ],
}


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog"
    out_dir.mkdir(parents=True, exist_ok=True)
    for doc in (QR, QH, DQH, QQK, QK, AQK, DQK, R, H, DH, K, BI, G):
        path = out_dir / f"{doc['family']}.json"
        path.write_text(json.dumps(doc, indent=1) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
