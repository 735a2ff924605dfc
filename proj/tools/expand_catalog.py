#!/usr/bin/env python3
"""Expand the primitive spherical systems list into concrete systems.

Independent of the C++ catalog: every family is written out again here, directly from
the printed parameter constraints, and the result is stored as JSON in the system
interchange format (node references are (component, Bourbaki index) on the listed
components, before canonicalization).

Usage: expand_catalog.py MAX_RANK > catalog_expansion.json
"""

import json
import sys


def r(*terms):
    """Root from (index, coeff) pairs or plain indices on component 0."""
    out = []
    for t in terms:
        if isinstance(t, tuple):
            if len(t) == 2:
                out.append([0, t[0], t[1]])
            else:
                out.append([t[0], t[1], t[2]])
        else:
            out.append([0, t, 1])
    return out


def span(a, b, c=1, comp=0):
    return [[comp, i, c] for i in range(a, b + 1)]


def ctail(a, n, comp=0):
    # a + 2(a+1) + ... + 2(n-1) + n
    return [[comp, a, 1]] + span(a + 1, n - 1, 2, comp) + [[comp, n, 1]]


def dtail(a, n):
    return span(a, n - 2, 2) + [[0, n - 1, 1], [0, n, 1]]


def one(fam, n, sp, sigma):
    return {"components": [[fam, n]], "sp": [[0, i] for i in sp], "sigma": sigma}


def pairs(fam, p):
    return {"components": [[fam, p], [fam, p]], "sp": [],
            "sigma": [[[0, i, 1], [1, i, 1]] for i in range(1, p + 1)]}


def odd_nodes(upto):
    return list(range(1, upto + 1, 2))


def triples(last):
    return [[[0, 2 * i - 1, 1], [0, 2 * i, 2], [0, 2 * i + 1, 1]] for i in range(1, (last - 1) // 2 + 1)]


def edges(a, b):
    return [[[0, i, 1], [0, i + 1, 1]] for i in range(a, b)]


def dbl(a, b):
    return [[[0, i, 2]] for i in range(a, b + 1)]


def families(R):
    """Yield (label, system) for every admissible instantiation of rank <= R."""
    rng = range(1, R + 1)
    # Type A
    for p in rng:
        if 2 * p <= R:
            yield f"aa({p},{p})", pairs("A", p)
    for n in rng:
        yield f"ao({n})", one("A", n, [], dbl(1, n))
    for n in rng:
        if n >= 3 and n % 2 == 1:
            yield f"ac({n})", one("A", n, odd_nodes(n), triples(n))
    for p in rng:
        for q in range(2, R + 1):
            n = 2 * p + q
            if n <= R:
                sig = [r(i, n + 1 - i) for i in range(1, p + 1)] + [span(p + 1, p + q)]
                yield f"aa({p}+{q}+{p})", one("A", n, list(range(p + 2, p + q)), sig)
    for p in rng:
        n = 2 * p + 1
        if n <= R:
            sig = [r(i, n + 1 - i) for i in range(1, p + 1)] + [r((p + 1, 2))]
            yield f"aa′({p}+1+{p})", one("A", n, [], sig)
    for n in range(2, R + 1):
        yield f"a({n})", one("A", n, list(range(2, n)), [span(1, n)])
    for n in range(3, R + 1):
        yield f"ac∗({n})", one("A", n, [], edges(1, n))
    # Type B
    for p in range(2, R + 1):
        if 2 * p <= R:
            yield f"bb({p},{p})", pairs("B", p)
    for p in rng:
        for q in rng:
            n = p + q
            if n <= R:
                yield f"bo({p}+{q})", one("B", n, list(range(p + 2, n + 1)), dbl(1, p) + [span(p + 1, n, 2)])
    for n in range(2, R + 1):
        yield f"b({n})", one("B", n, list(range(2, n + 1)), [span(1, n)])
        yield f"b′({n})", one("B", n, list(range(2, n + 1)), [span(1, n, 2)])
        yield f"b∗({n})", one("B", n, list(range(2, n)), [span(1, n)])
    for n in range(3, R + 1):
        yield f"bc∗({n})", one("B", n, [], edges(1, n))
    for n in range(2, R + 1):
        yield f"bc′({n})", one("B", n, [], edges(1, n) + [r((n, 2))])
    for p in range(2, R + 1):
        for q in rng:
            n = p + q
            if n > R:
                continue
            sp = list(range(2, p)) + list(range(p + 2, n + 1))
            if q >= 2:
                yield f"a({p})+b({q})", one("B", n, sp, [span(1, p), span(p + 1, n)])
            yield f"a({p})+b′({q})", one("B", n, sp, [span(1, p), span(p + 1, n, 2)])
            tail = list(range(p + 2, n + 1))
            if q >= 2:
                yield f"ac∗({p})+b({q})", one("B", n, tail, edges(1, p) + [span(p + 1, n)])
            yield f"ac∗({p})+b′({q})", one("B", n, tail, edges(1, p) + [span(p + 1, n, 2)])
    if R >= 3:
        yield "b∗∗(3)", one("B", 3, [1, 2], [r(1, (2, 2), (3, 3))])
    if R >= 4:
        yield "b∗(4)+b∗∗(3)", one("B", 4, [2, 3], [span(1, 4), r(2, (3, 2), (4, 3))])
    # Type C
    for p in range(3, R + 1):
        if 2 * p <= R:
            yield f"cc({p},{p})", pairs("C", p)
    for n in range(3, R + 1):
        yield f"co({n})", one("C", n, [], dbl(1, n))
        yield f"c({n})", one("C", n, [1] + list(range(3, n + 1)), [ctail(1, n)])
        yield f"c∗({n})", one("C", n, list(range(3, n + 1)), [ctail(1, n)])
    for p in range(2, R + 1, 2):
        for q in range(2, R + 1):
            n = p + q
            if n <= R:
                sp = odd_nodes(p + 1) + list(range(p + 3, n + 1))
                yield f"cc({p}+{q})", one("C", n, sp, triples(p + 1) + [ctail(p + 1, n)])
    for p in range(2, R + 1, 2):
        n = p + 2
        if n <= R:
            yield f"cc′({p}+2)", one("C", n, odd_nodes(n - 1), triples(n - 1) + [r((n - 1, 2), (n, 2))])
    for q in range(2, R + 1):
        n = q + 2
        if n <= R:
            yield f"ca(1+{q}+1)", one("C", n, list(range(3, q + 1)), [r(1, n), span(2, n - 1)])
    for p in range(2, R + 1):
        for q in range(2, R + 1):
            n = p + q + 1
            if n <= R:
                sp = list(range(3, p + 1)) + list(range(p + 4, n + 1))
                yield f"aa(1+{p}+1)+c∗({q})", one("C", n, sp, [r(1, p + 2), span(2, p + 1), ctail(p + 2, n)])
    for n in range(2, R):
        yield f"aa(1,1)+c∗({n})", {"components": [["A", 1], ["C", n]],
                                   "sp": [[1, i] for i in range(3, n + 1)],
                                   "sigma": [[[0, 1, 1], [1, 1, 1]], ctail(1, n, 1)]}
    for n1 in range(2, R + 1):
        for n2 in range(n1, R + 1):
            if n1 + n2 <= R:
                yield f"aa(1,1)+c∗({n1})+c∗({n2})", {
                    "components": [["C", n1], ["C", n2]],
                    "sp": [[0, i] for i in range(3, n1 + 1)] + [[1, i] for i in range(3, n2 + 1)],
                    "sigma": [[[0, 1, 1], [1, 1, 1]], ctail(1, n1, 0), ctail(1, n2, 1)]}
    for p in range(2, R + 1):
        for q in range(2, R + 1):
            n = p + q - 1
            if n <= R:
                yield f"ac∗({p})+c∗({q})", one("C", n, list(range(p + 2, n + 1)), edges(1, p) + [ctail(p, n)])
    for n in range(3, R + 1):
        yield f"a′(1)+c∗({n})", one("C", n, list(range(3, n + 1)), [r((1, 2)), ctail(1, n)])
    # Type D
    for p in range(4, R + 1):
        if 2 * p <= R:
            yield f"dd({p},{p})", pairs("D", p)
    for p in rng:
        for q in range(2, R + 1):
            n = p + q
            if 4 <= n <= R:
                sp = list(range(p + 2, n + 1)) if q > 2 else []
                yield f"do({p}+{q})", one("D", n, sp, dbl(1, p) + [dtail(p + 1, n)])
    for n in range(4, R + 1):
        yield f"do({n})", one("D", n, [], dbl(1, n))
        yield f"d({n})", one("D", n, list(range(2, n + 1)), [dtail(1, n)])
        yield f"ds({n})", one("D", n, list(range(2, n - 1)), [span(1, n - 1), span(1, n - 2) + [[0, n, 1]]])
        yield f"dc∗({n})", one("D", n, [], edges(1, n - 1) + [r(n - 2, n)])
    for n in range(6, R + 1, 2):
        yield f"dc′({n})", one("D", n, odd_nodes(n - 1), triples(n - 1) + [r((n, 2))])
    for n in range(5, R + 1, 2):
        yield f"dc({n})", one("D", n, odd_nodes(n - 2), triples(n - 2) + [span(n - 2, n)])
    if R >= 4:
        yield "ds∗(4)", one("D", 4, [2], [r(1, 2, 3), r(2, 3, 4), r(1, 2, 4)])
    for p in range(2, R + 1):
        for q in range(2, R + 1):
            n = p + q
            if n <= R:
                tail = list(range(p + 2, n + 1)) if q > 2 else []
                yield f"a({p})+d({q})", one("D", n, list(range(2, p)) + tail, [span(1, p), dtail(p + 1, n)])
                yield f"ac∗({p})+d({q})", one("D", n, tail, edges(1, p) + [dtail(p + 1, n)])
    # Type E
    ef6 = [r((1, 2), 2, (3, 2), (4, 2), 5), r(2, 3, (4, 2), (5, 2), (6, 2))]
    for p in (6, 7, 8):
        if 2 * p <= R:
            yield f"ee({p},{p})", pairs("E", p)
    for n in (6, 7, 8):
        if n > R:
            continue
        yield f"eo({n})", one("E", n, [], dbl(1, n))
        yield f"ec∗({n})", one("E", n, [], [r(1, 3), r(2, 4)] + edges(3, n))
        if n >= 7:
            yield f"ef({n})", one("E", n, [2, 3, 4, 5], ef6 + dbl(7, n))
    if R >= 6:
        yield "ea(6)", one("E", 6, [], [r(1, 6), r(3, 5), r((2, 2)), r((4, 2))])
        yield "ed(6)", one("E", 6, [3, 4, 5], [r(1, 3, 4, 5, 6), r((2, 2), 3, (4, 2), 5)])
        yield "ef(6)", one("E", 6, [2, 3, 4, 5], ef6)
        yield "aa(2,2)+a(2)", one("E", 6, [], [r(1, 6), r(3, 5), r(2, 4)])
    if R >= 7:
        yield "ec(7)", one("E", 7, [2, 5, 7], [r((1, 2)), r((3, 2)), r(2, (4, 2), 5), r(5, (6, 2), 7)])
        yield "ac(5)+a(2)", one("E", 7, [2, 5, 7], [r(1, 3), r(2, (4, 2), 5), r(5, (6, 2), 7)])
    if R >= 8:
        yield "ef(6)+a(2)", one("E", 8, [2, 3, 4, 5], ef6 + [r(7, 8)])
    # Type F
    if R >= 8:
        yield "ff(4,4)", pairs("F", 4)
    if R >= 4:
        yield "fo(4)", one("F", 4, [], dbl(1, 4))
        yield "f(4)", one("F", 4, [1, 2, 3], [r(1, (2, 2), (3, 3), (4, 2))])
        yield "fa(1+2+1)", one("F", 4, [], [r(1, 4), r(2, 3)])
        yield "fd(4)", one("F", 4, [2], [r(1, 2, 3), r(2, (3, 2), 4)])
        yield "ao(2)+a(2)", one("F", 4, [], [r(1, 2), r((3, 2)), r((4, 2))])
        yield "fc∗(4)", one("F", 4, [], edges(1, 4))
    # Type G
    if R >= 4:
        yield "gg(2,2)", pairs("G", 2)
    if R >= 2:
        yield "go(2)", one("G", 2, [], [r((1, 2)), r((2, 2))])
        yield "g(2)", one("G", 2, [2], [r((1, 2), 2)])
        yield "g′(2)", one("G", 2, [2], [r((1, 4), (2, 2))])
        yield "g∗(2)", one("G", 2, [], [r(1, 2)])



def strict(label):
    """The non-strict families: b(n), a(p)+b(q), ac∗(p)+b(q), cc(p+q) with q=2, g(2)."""
    if label.startswith("b(") or label == "g(2)":
        return False
    if (label.startswith("a(") or label.startswith("ac∗(")) and "+b(" in label:
        return False
    if label.startswith("cc(") and "+" in label and label.endswith("+2)"):
        return False
    return True


def main():
    R = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    rows = []
    for label, s in families(R):
        rows.append({
            "label": label,
            "strict": strict(label),
            "system": {
                "diagram": {"components": [{"family": f, "rank": n} for f, n in s["components"]]},
                "sp": s["sp"],
                "sigma": s["sigma"],
            },
        })
    json.dump(rows, sys.stdout, ensure_ascii=False, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
