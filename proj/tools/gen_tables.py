#!/usr/bin/env python3
"""Write data/tables.json, the discriminant regression fixture.

Rows of the two published tables are transcribed as printed. Closed-form
family rows are expanded from their formulas for the sizes the test suite
uses. Run from the repository root.
"""

import json
import re
import sys
from pathlib import Path

TOKEN = re.compile(r"\(m([+-]\d+)\)(?:\^\{?(\d+)\}?)?|m(?:\^\{?(\d+)\}?)?")

# Table 1, infinite series G(e,e,r): {r: {e: text}}
TABLE1_SERIES = {
    3: {
        3: "-(m-9)m^8",
        4: "(m-11)(m-3)^3(m+1)^8",
        5: "-(m-15)m^{14}",
        6: "(m-17)(m-5)^3(m+1)^{14}",
        7: "(m-21)m^{20}",
        8: "(m-23)(m-7)^3(m+1)^{20}",
        9: "-(m-27)m^{26}",
        10: "(m-29)(m-9)^3(m+1)^{26}",
        11: "-(m-33)m^{32}",
        12: "(m-35)(m-11)^3(m+1)^{32}",
        13: "-(m-39)m^{38}",
        14: "(m-41)(m-13)^3(m+1)^{38}",
    },
    4: {
        3: "(m-15)(m-3)^3 m^{12}(m+3)^2",
        4: "(m-19)(m-3)^9(m+1)^{12}(m+5)^2",
        5: "(m-25)(m-5)^3m^{24}(m+5)^2",
        6: "(m-29)(m-5)^9(m+1)^{24}(m+7)^2",
        7: "(m-35)(m-7)^3 m^{36} (m+7)^2",
        8: "(m-39)(m-7)^9(m+1)^{36}(m+9)^2",
        9: "(m-45)(m-9)^3 m^{48} (m+9)^2",
    },
    5: {
        3: "(m-21)(m-6)^4m^{20}(m+3)^5",
        4: "(m-27)(m-7)^4(m-3)^{10}(m+1)^{20}(m+5)^5",
        5: "(m-35)(m-10)^4m^{40}(m+5)^5",
        6: "(m-41)(m-11)^4(m-5)^{10}(m+1)^{40}(m+7)^5",
        7: "(m-49)(m-14)^4m^{60}(m+7)^5",
    },
}

# Table 1, exceptional groups. Every row is printed monic.
TABLE1_EXCEPTIONAL = {
    "G12": ["(m-11)(m-3)^6(m+1)^2(m+5)^3"],
    "G13": ["(m-17)(m-5)^2(m+7)^3", "(m-17)(m-5)^2(m-1)^6(m+7)^3"],
    "G22": ["(m-29)(m-5)^{15}(m+1)^8(m+11)^6"],
    "G23": ["(m-13)(m-1)^{10}(m+2)^4"],
    "G24": ["(m-17)(m-3)^{12}(m+4)^8"],
    "G27": ["(m-41)(m-5)^{10}(m-1)^{18}(m+4)^{16}"],
    "G28": ["(m-15)(m-3)^2(m+1)^9", "(m-15)(m-3)^2(m+1)^9"],
    "G29": ["(m-31)(m-11)^4(m+1)^{35}"],
    "G30": ["(m-45)(m-5)^{18}m^{16}(m+3)^{25}"],
    "G31": ["(m-45)(m-21)^5(m-5)^9(m+3)^{45}"],
    "G33": ["(m-33)(m-3)^{24} (m+3)^{20}"],
    "G34": ["(m-81)(m-9)^{35}(m+3)^{90}"],
    "G35": ["(m-21)(m-3)^{20}(m+3)^{15}"],
    "G36": ["(m-33)(m-5)^{27}(m+3)^{35}"],
    "G37": ["(m-57)(m-9)^{35}(m+3)^{84}"],
}

# Table 2, G(2e,e,r): {r: {e: [text per class]}}
TABLE2 = {
    2: {
        1: ["(m-3)(m+1)", "(m-3)(m+1)"],
        2: ["(m-5)(m+3)", "(m-5)(m+3)", "(m-5)(m+3)"],
        3: ["(m-7)(m+5)", "(m-7)(m-3)(m-1)^2(m+3)^2"],
        4: ["(m-9)(m+7)", "(m-9)(m-1)(m+3)^2", "(m-9)(m-1)(m+3)^2"],
        5: ["(m-11)(m+9)", "(m-11)(m-7)(m-1)^4(m+3)^4"],
        6: ["(m-13)(m+11)", "(m-13)(m-1)^2(m+3)^3", "(m-13)(m-1)^2(m+3)^3"],
        7: ["(m-15)(m+13)", "(m-15)(m-11)(m-1)^6(m+3)^6"],
        8: ["(m-17)(m+15)", "(m-17)(m-1)^3(m+3)^4", "(m-17)(m-1)^3(m+3)^4"],
        9: ["(m-19)(m+17)", "(m-19)(m-15)(m-1)^8(m+3)^8"],
        10: ["(m-21)(m+19)", "(m-21)(m-1)^4(m+3)^5", "(m-21)(m-1)^4(m+3)^5"],
    },
    3: {
        2: ["-(m-9)(m+3)^2", "(m-13)(m-5)^3(m-1)^2(m+3)^6"],
        3: ["-(m-13)(m+5)^2", "(m-19)(m-3)^3(m-1)^8(m+3)^6"],
        4: ["-(m-17)(m+7)^2", "(m-25)(m-9)^3(m-1)^8(m+3)^{12}"],
        5: ["-(m-21)(m+9)^2", "(m-31)(m-7)^3(m-1)^{14}(m+3)^{12}"],
        6: ["-(m-25)(m+11)^2", "(m-37)(m-13)^3(m-1)^{14}(m+3)^{18}"],
        7: ["-(m-29)(m+13)^2", "(m-43)(m-11)^3(m-1)^{20}(m+3)^{18}"],
        8: ["-(m-33)(m+15)^2", "(m-49)(m-17)^3(m-1)^{20}(m+3)^{24}"],
        9: ["-(m-37)(m+17)^2", "(m-55)(m-15)^3(m-1)^{26}(m+3)^{24}"],
        10: ["-(m-41)(m+19)^2", "(m-61)(m-21)^3(m-1)^{26}(m+3)^{30}"],
    },
    4: {
        2: ["(m-13)(m+3)^3", "(m-21)(m-5)^9(m+3)^{14}"],
        3: ["(m-19)(m+5)^3", "(m-31)(m-7)^3(m-3)^6(m-1)^{12}(m+3)^{12}(m+5)^2"],
        4: ["(m-25)(m+7)^3", "(m-41)(m-9)^9(m-1)^{12}(m+3)^{24}(m+7)^2"],
        5: ["(m-31)(m+9)^3", "(m-51) (m-11)^3(m-7)^6(m-1)^{24}(m+3)^{24}(m+9)^2"],
        6: ["(m-37)(m+11)^3", "(m-61)(m-13)^9(m-1)^{24}(m+3)^{36}(m+11)^2"],
        7: ["(m-43)(m+13)^3", "(m-71)(m-15)^3(m-11)^6(m-1)^{36}(m+3)^{36}(m+13)^2"],
        8: ["(m-49)(m+15)^3", "(m-81)(m-17)^9(m-1)^{36}(m+3)^{48}(m+15)^2"],
    },
}


def parse(text):
    """Return (sign, [[root, mult], ...]) for a product of linear factors."""
    body = text.replace(" ", "")
    sign = 1
    if body.startswith("-"):
        sign, body = -1, body[1:]
    factors = {}
    pos = 0
    while pos < len(body):
        mt = TOKEN.match(body, pos)
        if not mt:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        if mt.group(1) is not None:
            root, mult = -int(mt.group(1)), int(mt.group(2) or 1)
        else:
            root, mult = 0, int(mt.group(3) or 1)
        factors[root] = factors.get(root, 0) + mult
        pos = mt.end()
    return sign, [[r, k] for r, k in sorted(factors.items(), reverse=True)]


def row(which, group, text=None, sign=None, factors=None, normalized=False):
    if text is not None:
        sign, factors = parse(text)
    return {
        "which": which,
        "group": group,
        "class_size": sum(k for _, k in factors),
        "sign": sign,
        "factors": factors,
        "sign_normalized": normalized,
    }


def closed_forms():
    out = []
    for n in range(3, 8):  # A_{n-1}
        f = [(n - 3, n - 1), (2 * n - 3, 1), (-1, n * (n - 3) // 2)]
        out.append(row("prop81", f"A{n - 1}", sign=1, factors=clean(f), normalized=True))
    for n in range(2, 7):  # B_n
        out.append(row("prop81", f"B{n}", sign=(-1) ** n, factors=clean([(2 * n - 1, 1), (-1, n - 1)])))
        f = [(4 * n - 5, 1), (2 * n - 5, n - 1), (-1, n * (n - 2))]
        out.append(row("prop81", f"B{n}", sign=1, factors=clean(f)))
    for n in range(4, 7):  # D_n
        f = [(4 * n - 7, 1), (1, n * (n - 1) // 2), (-3, n * (n - 3) // 2), (2 * n - 7, n - 1)]
        out.append(row("prop81", f"D{n}", sign=1, factors=clean(f), normalized=True))
    for e in range(3, 15):  # I2(e)
        if e % 2:
            out.append(row("prop81", f"I2({e})", sign=-1, factors=clean([(e, 1), (0, e - 1)])))
        else:
            f = clean([(e - 1, 1), (-1, e // 2 - 1)])
            for _ in range(2):
                out.append(row("prop81", f"I2({e})", sign=(-1) ** (e // 2), factors=f))
    return out


def clean(f):
    merged = {}
    for r, k in f:
        if k:
            merged[r] = merged.get(r, 0) + k
    return [[r, k] for r, k in sorted(merged.items(), reverse=True)]


def main():
    rows = []
    for r, block in TABLE1_SERIES.items():
        for e, text in block.items():
            rows.append(row("1", f"G({e},{e},{r})", text))
    for name, texts in TABLE1_EXCEPTIONAL.items():
        for text in texts:
            rows.append(row("1", name, text, normalized=True))
    for r, block in TABLE2.items():
        for e, texts in block.items():
            for text in texts:
                rows.append(row("2", f"G({2 * e},{e},{r})", text))
    rows.extend(closed_forms())
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data/tables.json")
    out.write_text(json.dumps({"rows": rows}, indent=1) + "\n")
    print(f"wrote {len(rows)} rows to {out}")


if __name__ == "__main__":
    main()
