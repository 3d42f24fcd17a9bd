"""Macaulay2 / Singular scripts for checking a result outside this package."""

from .ideals import default_order


def _poly(p, ring, order, var, zero):
    if not p:
        return zero
    out = []
    for exp, c in p.sorted_terms(order):
        factors = []
        for idx, e in enumerate(exp):
            if e:
                factors.append(var(*ring.position(idx)) + (f"^{e}" if e > 1 else ""))
        mono = "*".join(factors) or "1"
        coeff = abs(c)
        body = mono if coeff == 1 else f"({coeff})*{mono}"
        out.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _m2_poly(p, ring, order):
    return _poly(p, ring, order, lambda i, j: f"x_({i},{j})", "0_R")


def _sing_poly(p, ring, order):
    return _poly(p, ring, order, lambda i, j: f"x({i})({j})", "0")


def export_cas(gens, ring, dialect="macaulay2", title=None, order=None):
    """Self-contained script printing depth, projective dimension and the
    minimal primes of ``S/I``. Output is byte-stable for a given input."""
    order = order or default_order()
    gens = [p for p in gens if p]
    m, n = ring.m, ring.n
    header = title or f"ideal in QQ[x_(i,j) : i in 1..{m}, j in 1..{n}]"
    if dialect == "macaulay2":
        body = ",\n    ".join(_m2_poly(p, ring, order) for p in gens) or "0_R"
        return (
            f"-- {header}\n"
            'needsPackage "Depth";\n'
            f"R = QQ[x_(1,1)..x_({m},{n})];\n"
            f"I = ideal(\n    {body}\n);\n"
            'print("depth: " | toString depth(R^1/I));\n'
            'print("pd: " | toString pdim(R^1/I));\n'
            'print("minimal primes:");\n'
            "print toString minimalPrimes I;\n"
        )
    if dialect == "singular":
        body = ",\n    ".join(_sing_poly(p, ring, order) for p in gens) or "0"
        return (
            f"// {header}\n"
            'LIB "homolog.lib";\n'
            'LIB "primdec.lib";\n'
            f"ring R = 0, (x(1..{m})(1..{n})), dp;\n"
            f"ideal I =\n    {body};\n"
            "I = std(I);\n"
            "module M = I;\n"
            'print("depth: " + string(depth(M)));\n'
            'print("pd: " + string(nvars(R) - depth(M)));\n'
            'print("minimal primes:");\n'
            "print(minAssGTZ(I));\n"
            "quit;\n"
        )
    raise ValueError(f"unknown CAS dialect {dialect!r}")
