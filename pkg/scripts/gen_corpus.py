#!/usr/bin/env python3
"""Synthesize the bundled mini-corpus of small Python files.

Deterministic: a fixed seed drives every choice, so rerunning the script
reproduces the corpus byte-for-byte. Every emitted file must compile() as
Python source; the statement forms stay inside the subset grammar documented
in docs/grammar.md (assignments, expression statements, imports, def, class,
if/elif/else, for, while, return, pass).
"""
from __future__ import annotations

import random
import sys
from pathlib import Path

SEED = 20240817
OUT_DIR = Path(__file__).resolve().parent.parent / "data" / "corpus"

NAMES = [
    "data", "items", "values", "result", "total", "count", "acc", "weights",
    "row", "col", "grid", "vec", "node", "graph", "queue", "stack", "cache",
    "config", "params", "buffer", "text", "line", "word", "score", "rate",
    "step", "epoch", "batch", "index", "key", "entry", "record", "field",
    "path", "url", "host", "port", "size", "width", "height", "depth",
    "limit", "offset", "mask", "flag", "state", "mode", "label", "target",
    "source", "left", "right", "mid", "low", "high", "tmp", "out", "arr",
    "pairs", "seen", "best", "first", "last", "head", "tail", "prev", "cur",
]

ATTRS = ["name", "value", "size", "items", "next", "prev", "data", "kind",
         "parent", "children", "weight", "label", "count", "level"]

METHODS = ["append", "extend", "get", "pop", "keys", "values", "items",
           "split", "join", "strip", "lower", "upper", "add", "update",
           "sort", "copy", "index", "count", "startswith", "endswith"]

FUNC_PREFIXES = ["compute", "build", "make", "parse", "format", "load",
                 "save", "get", "set", "update", "merge", "split", "filter",
                 "apply", "scale", "clip", "norm", "init", "reset", "check"]

CLASS_NAMES = ["Point", "Vector", "Node", "Tree", "Stack", "Queue", "Config",
               "Record", "Entry", "Buffer", "Cache", "Timer", "Window",
               "Layer", "Grid", "Span", "Cursor", "Registry", "Pool", "Box"]

STRINGS = ["utf-8", "r", "w", "__main__", "name", "id", "key", "value",
           "data", "error", "ok", "total", ", ", " ", "x", "y", "n/a",
           "left", "right", "end", "start", "row", "col", "done", ":"]

MODULES = ["math", "os", "sys", "json", "re", "random", "itertools",
           "collections", "functools", "string", "time", "heapq", "bisect"]

FROM_IMPORTS = [
    ("math", ["sqrt", "floor", "ceil", "pi", "log", "exp"]),
    ("collections", ["OrderedDict", "defaultdict", "deque", "Counter"]),
    ("itertools", ["chain", "islice", "repeat", "cycle", "count"]),
    ("functools", ["reduce", "partial"]),
    ("heapq", ["heappush", "heappop"]),
    ("os", ["path", "sep", "linesep"]),
]

BINOPS = ["+", "-", "*", "//", "%", "**", "<<", ">>", "&", "|", "^", "/"]
CMPOPS = ["<", "<=", ">", ">=", "==", "!="]
AUGOPS = ["+=", "-=", "*=", "//=", "%=", "&=", "|=", "^=", "<<=", ">>=", "/=", "**="]


class FileGen:
    def __init__(self, rng: random.Random):
        self.rng = rng

    def name(self) -> str:
        return self.rng.choice(NAMES)

    def number(self) -> str:
        r = self.rng.random()
        if r < 0.45:
            return str(self.rng.randint(0, 999))
        if r < 0.65:
            return "%.2f" % (self.rng.random() * 100)
        if r < 0.72:
            return self.rng.choice(["0x1f", "0xff", "0x10", "0b1010", "0o755"])
        if r < 0.80:
            return self.rng.choice(["1e-3", "2.5e6", "1.5e-2", "3e8"])
        if r < 0.86:
            return self.rng.choice(["1_000", "10_000", "1_000_000"])
        if r < 0.90:
            return self.rng.choice(["2j", "1.5j", "3j"])
        return str(self.rng.randint(1000, 99999))

    def string(self) -> str:
        s = self.rng.choice(STRINGS)
        quote = self.rng.choice(["'", '"'])
        return quote + s + quote

    def atom(self, depth: int) -> str:
        r = self.rng.random()
        if r < 0.34:
            return self.name()
        if r < 0.55:
            return self.number()
        if r < 0.68:
            return self.string()
        if r < 0.74:
            return self.rng.choice(["True", "False", "None"])
        if depth <= 0:
            return self.name()
        if r < 0.80:
            return "%s.%s" % (self.name(), self.rng.choice(ATTRS))
        if r < 0.86:
            return "%s[%s]" % (self.name(), self.expr(depth - 1))
        if r < 0.92:
            args = ", ".join(self.expr(depth - 1) for _ in range(self.rng.randint(0, 2)))
            return "%s(%s)" % (self.callee(), args)
        if r < 0.96:
            elems = ", ".join(self.expr(depth - 1) for _ in range(self.rng.randint(0, 3)))
            return "[%s]" % elems
        pairs = ", ".join("%s: %s" % (self.string(), self.expr(depth - 1))
                          for _ in range(self.rng.randint(0, 2)))
        return "{%s}" % pairs

    def callee(self) -> str:
        r = self.rng.random()
        if r < 0.4:
            return self.rng.choice(["len", "min", "max", "sum", "abs", "int",
                                    "float", "str", "list", "range", "sorted",
                                    "tuple", "set", "round", "repr"])
        if r < 0.7:
            return self.name()
        return "%s.%s" % (self.name(), self.rng.choice(METHODS))

    def expr(self, depth: int = 2) -> str:
        r = self.rng.random()
        if depth <= 0 or r < 0.40:
            return self.atom(depth)
        if r < 0.62:
            return "%s %s %s" % (self.atom(depth - 1), self.rng.choice(BINOPS),
                                 self.atom(depth - 1))
        if r < 0.74:
            return "%s %s %s" % (self.atom(depth - 1), self.rng.choice(CMPOPS),
                                 self.atom(depth - 1))
        if r < 0.80:
            return "%s %s %s" % (self.atom(depth - 1),
                                 self.rng.choice(["and", "or"]),
                                 self.atom(depth - 1))
        if r < 0.84:
            return "not %s" % self.atom(depth - 1)
        if r < 0.87:
            return "-%s" % self.atom(depth - 1)
        if r < 0.90:
            return "(%s)" % self.expr(depth - 1)
        if r < 0.93:
            return "%s in %s" % (self.atom(0), self.name())
        if r < 0.96:
            return "[%s for %s in %s]" % (self.expr(0), self.name(), self.name())
        if r < 0.98:
            return "[%s for %s in %s if %s]" % (
                self.expr(0), self.name(), self.name(),
                "%s %s %s" % (self.atom(0), self.rng.choice(CMPOPS), self.atom(0)))
        return "%s if %s else %s" % (self.atom(0), self.atom(0), self.atom(0))

    def condition(self) -> str:
        r = self.rng.random()
        if r < 0.5:
            return "%s %s %s" % (self.name(), self.rng.choice(CMPOPS), self.atom(1))
        if r < 0.65:
            return "%s is None" % self.name()
        if r < 0.75:
            return "%s is not None" % self.name()
        if r < 0.85:
            return "not %s" % self.name()
        return self.name()

    def comment(self) -> str:
        return "# " + self.rng.choice([
            "keep totals in sync", "bounds are inclusive", "cheap path first",
            "fallback for empty input", "see module notes", "accumulate",
            "normalize before compare", "indices are 0-based", "tail case",
            "guard against zero", "sorted by construction", "by weight",
        ])

    # statement emitters ---------------------------------------------------

    def assign(self) -> str:
        r = self.rng.random()
        if r < 0.55:
            return "%s = %s" % (self.name(), self.expr(2))
        if r < 0.70:
            return "%s %s %s" % (self.name(), self.rng.choice(AUGOPS), self.atom(1))
        if r < 0.80:
            return "%s[%s] = %s" % (self.name(), self.atom(0), self.expr(1))
        if r < 0.88:
            return "%s.%s = %s" % (self.name(), self.rng.choice(ATTRS), self.expr(1))
        if r < 0.95:
            return "%s, %s = %s, %s" % (self.name(), self.name(),
                                        self.expr(1), self.expr(1))
        return "%s = %s = %s" % (self.name(), self.name(), self.expr(1))

    def simple_stmt(self, in_func: bool) -> list[str]:
        r = self.rng.random()
        if r < 0.55:
            return [self.assign()]
        if r < 0.70:
            args = ", ".join(self.expr(1) for _ in range(self.rng.randint(1, 2)))
            return ["%s(%s)" % (self.callee(), args)]
        if in_func and r < 0.80:
            return ["return %s" % self.expr(2)]
        if r < 0.9:
            return [self.assign()]
        return ["pass"]

    def block(self, indent: int, in_func: bool, budget: int) -> list[str]:
        pad = " " * indent
        lines: list[str] = []
        n = max(1, min(budget, self.rng.randint(1, 3)))
        for _ in range(n):
            r = self.rng.random()
            if self.rng.random() < 0.12:
                lines.append(pad + self.comment())
            if r < 0.55 or budget <= 1 or indent >= 12:
                for stmt in self.simple_stmt(in_func):
                    lines.append(pad + stmt)
            elif r < 0.75:
                lines.append(pad + "if %s:" % self.condition())
                lines.extend(self.block(indent + 4, in_func, budget - 1))
                rr = self.rng.random()
                if rr < 0.3:
                    lines.append(pad + "elif %s:" % self.condition())
                    lines.extend(self.block(indent + 4, in_func, budget - 1))
                if rr < 0.55:
                    lines.append(pad + "else:")
                    lines.extend(self.block(indent + 4, in_func, budget - 1))
            elif r < 0.9:
                if self.rng.random() < 0.7:
                    lines.append(pad + "for %s in %s:" % (self.name(), self.iterable()))
                else:
                    lines.append(pad + "for %s, %s in %s.items():"
                                 % (self.name(), self.name(), self.name()))
                lines.extend(self.block(indent + 4, in_func, budget - 1))
            else:
                counter = self.name()
                lines.append(pad + "while %s %s %s:" % (counter,
                                                        self.rng.choice(["<", "<="]),
                                                        self.atom(0)))
                body = self.block(indent + 4, in_func, budget - 1)
                body.append(" " * (indent + 4) + "%s += 1" % counter)
                lines.extend(body)
        return lines

    def iterable(self) -> str:
        r = self.rng.random()
        if r < 0.4:
            return "range(%s)" % self.rng.choice(["3", "8", "10", "16", self.name()])
        if r < 0.7:
            return self.name()
        return "%s(%s)" % (self.rng.choice(["sorted", "reversed", "enumerate"]),
                           self.name())

    def func_def(self) -> list[str]:
        fname = "%s_%s" % (self.rng.choice(FUNC_PREFIXES), self.name())
        params = [self.name() for _ in range(self.rng.randint(1, 3))]
        seen: list[str] = []
        for p in params:
            if p not in seen:
                seen.append(p)
        params = seen
        r = self.rng.random()
        if r < 0.15:
            params[-1] = params[-1] + "=" + self.rng.choice(["0", "None", "1", "''"])
        elif r < 0.2 and len(params) > 1:
            params.append("*rest")
        sig = ", ".join(params)
        ret = " -> int" if self.rng.random() < 0.08 else ""
        lines = ["def %s(%s)%s:" % (fname, sig, ret)]
        if self.rng.random() < 0.35:
            lines.append('    """%s."""' % self.rng.choice([
                "Fold the inputs into one value",
                "Best-effort lookup with a default",
                "Normalize and clamp the argument",
                "Collect matching entries",
                "Cheap structural comparison",
            ]))
        body = self.block(4, True, 3)
        if not any(s.strip().startswith("return") for s in body):
            if self.rng.random() < 0.8:
                body.append("    return %s" % self.expr(1))
        lines.extend(body)
        return lines

    def class_def(self) -> list[str]:
        cname = self.rng.choice(CLASS_NAMES)
        base = "" if self.rng.random() < 0.7 else "(object)"
        lines = ["class %s%s:" % (cname, base)]
        if self.rng.random() < 0.3:
            lines.append('    """%s."""' % self.rng.choice([
                "Small value holder", "Mutable pair with bookkeeping",
                "Cheap container with named fields",
            ]))
        fields = [self.rng.choice(ATTRS) for _ in range(self.rng.randint(1, 3))]
        fields = list(dict.fromkeys(fields))
        args = ", ".join(fields)
        lines.append("    def __init__(self, %s):" % args)
        for f in fields:
            lines.append("        self.%s = %s" % (f, f))
        for _ in range(self.rng.randint(1, 2)):
            mname = self.rng.choice(FUNC_PREFIXES)
            lines.append("")
            lines.append("    def %s(self, %s):" % (mname, self.name()))
            body = self.block(8, True, 2)
            if not any(s.strip().startswith("return") for s in body):
                body.append("        return self.%s" % self.rng.choice(fields))
            lines.extend(body)
        return lines

    # whole files ----------------------------------------------------------

    def header(self) -> list[str]:
        lines = []
        if self.rng.random() < 0.4:
            lines.append(self.comment())
        if self.rng.random() < 0.3:
            lines.append('"""%s."""' % self.rng.choice([
                "Helpers for the toy pipeline", "Small numeric utilities",
                "Plain-data containers", "Assorted table helpers",
                "String formatting odds and ends",
            ]))
            lines.append("")
        n_imports = self.rng.randint(0, 2)
        for _ in range(n_imports):
            if self.rng.random() < 0.5:
                lines.append("import %s" % self.rng.choice(MODULES))
            else:
                mod, names = self.rng.choice(FROM_IMPORTS)
                picked = self.rng.sample(names, self.rng.randint(1, min(2, len(names))))
                lines.append("from %s import %s" % (mod, ", ".join(picked)))
        if n_imports:
            lines.append("")
        for _ in range(self.rng.randint(0, 2)):
            const = self.rng.choice(NAMES).upper()
            lines.append("%s = %s" % (const, self.expr(1)))
        return lines

    def module_functions(self) -> str:
        lines = self.header()
        if lines and lines[-1] != "":
            lines.append("")
        for i in range(self.rng.randint(1, 3)):
            if i:
                lines.append("")
            lines.extend(self.func_def())
        return "\n".join(lines).strip("\n") + "\n"

    def module_class(self) -> str:
        lines = self.header()
        if lines and lines[-1] != "":
            lines.append("")
        lines.extend(self.class_def())
        if self.rng.random() < 0.4:
            lines.append("")
            lines.append("")
            lines.extend(self.func_def())
        return "\n".join(lines).strip("\n") + "\n"

    def module_script(self) -> str:
        lines = self.header()
        if lines and lines[-1] != "":
            lines.append("")
        lines.extend(self.block(0, False, 3))
        if self.rng.random() < 0.35:
            lines.append("")
            lines.append("if __name__ == '__main__':")
            lines.extend(self.block(4, False, 2))
        return "\n".join(lines).strip("\n") + "\n"

    def module_consts(self) -> str:
        lines = []
        if self.rng.random() < 0.5:
            lines.append(self.comment())
        for _ in range(self.rng.randint(4, 9)):
            style = self.rng.random()
            nm = self.rng.choice(NAMES)
            if style < 0.6:
                lines.append("%s = %s" % (nm.upper(), self.expr(1)))
            elif style < 0.8:
                elems = ", ".join(self.string() for _ in range(self.rng.randint(2, 4)))
                lines.append("%s = [%s]" % (nm.upper(), elems))
            else:
                pairs = ",\n    ".join("%s: %s" % (self.string(), self.atom(1))
                                       for _ in range(self.rng.randint(2, 3)))
                lines.append("%s = {\n    %s,\n}" % (nm.upper(), pairs))
            if self.rng.random() < 0.15:
                lines.append("")
        return "\n".join(lines).strip("\n") + "\n"


# Hand-written files covering lexer corners the generator avoids.
HANDWRITTEN = {
    "hw_docstrings.py": '''"""Module docstring spanning
multiple lines, with an embedded 'quote' and a \\" escape."""

def outer(a):
    """Inner docstring."""
    return a * 2
''',
    "hw_multiline_call.py": '''result = sum(
    [1, 2, 3],
)
table = {
    "a": 1,
    "b": 2,
}
values = [
    10,
    20,  # inline note
    30,
]
''',
    "hw_backslash.py": '''total = 1 + \\
    2 + \\
    3
label = 'ab\\
cd'
''',
    "hw_numbers.py": '''small = 7
big = 1_000_000
hexval = 0xDEAD_beef
octv = 0o644
binv = 0b1011_0001
fl = 3.14159
half = .5
trailing = 2.
expo = 6.022e23
negexp = 1E-9
cplx = 4j
cplx2 = 2.5J
''',
    "hw_strings.py": r'''plain = 'single'
double = "double"
raw = r"raw\nstring"
rawb = rb'os\x00'
byte = b"bytes"
uni = u'unicode'
fstr = f"{plain}-tail"
esc = "tab\there"
joined = "implicit" 'concat'
empty = ''
quote_in = "it's fine"
''',
    "hw_nesting.py": '''def deep(n):
    if n > 0:
        if n > 1:
            if n > 2:
                return 3
            return 2
        return 1
    return 0
''',
    "hw_dedent_steps.py": '''def steps(a):
    if a:
        x = 1
        if x:
            y = 2
        z = 3
    return a
w = 4
''',
    "hw_comments.py": '''# leading comment
# second comment line

x = 1  # trailing
    # indented comment, no indent token
y = 2
# tail comment
''',
    "hw_blank_ws.py": "a = 1\n   \nb = 2\n\t\nc = 3\n",
    "hw_only_comments.py": "# nothing but comments\n# and a blank line\n\n",
    "hw_ops_soup.py": '''a = 1 + 2 - 3 * 4 / 5 // 6 % 7
b = 1 << 2 >> 3 & 4 | 5 ^ 6
c = ~a
d = a ** 2
a += 1
a -= 1
a *= 2
a /= 2
a //= 2
a %= 3
a **= 2
a <<= 1
a >>= 1
a &= 3
a |= 4
a ^= 5
ok = a < b <= c > d >= a == b != c
''',
    "hw_matmul.py": '''left = load("left")
right = load("right")
prod = left @ right
prod @= right
''',
    "hw_ellipsis_arrow.py": '''def stub(x) -> int:
    ...

def other() -> str:
    return "done"
''',
    "hw_tabs.py": "def tabbed():\n\tx = 1\n\tif x:\n\t\treturn x\n\treturn 0\n",
    "hw_unicode.py": "caf\u00e9 = 1\nna\u00efve = caf\u00e9 + 1\n\u03bbval = 2\n",
    "hw_no_trailing_newline.py": "x = 1\ny = x + 1",
    "hw_triple_edges.py": """s = '''one
two \\''' still inside
three'''
t = \"\"\"short\"\"\"
""",
    "hw_bracket_comment.py": '''result = max(
    1,  # lower bound
    2,
)
''',
    "hw_slice_games.py": '''text = "abcdefgh"
head = text[:3]
tail = text[3:]
mid = text[2:6]
strided = text[::2]
rev = text[::-1]
pair = text[1:7:2]
''',
    "hw_comprehensions.py": '''nums = [1, 2, 3, 4, 5]
squares = [n ** 2 for n in nums]
evens = [n for n in nums if n % 2 == 0]
table = {n: n * 2 for n in nums}
names = {c for c in "abcabc"}
''',
    "hw_keywords_tour.py": '''flagged = True and not False
nothing = None
both = flagged or nothing
member = 1 in [1, 2]
absent = 3 not in [1, 2]
same = nothing is None
diff = flagged is not None
''',
    "hw_class_nested.py": '''class Outer:
    class Inner:
        tag = "inner"

    def spawn(self):
        return Outer.Inner()
''',
    "hw_long_line.py": '''wide = {"alpha": 1, "beta": 2, "gamma": 3, "delta": 4, "epsilon": 5, "zeta": 6}
narrow = wide["alpha"] + wide["beta"] + wide["gamma"] + wide["delta"] + wide["epsilon"]
''',
    "hw_while_countdown.py": '''def countdown(n):
    steps = 0
    while n > 0:
        n -= 1
        steps += 1
    return steps
''',
    "hw_trailing_spaces.py": "x = 1   \nif x:   \n    y = 2  \n",
    "hw_deep_brackets.py": '''grid = [[1, 2], [3, 4]]
cell = grid[0][1]
nested = {"outer": {"inner": [1, (2, 3)]}}
value = nested["outer"]["inner"][1][0]
''',
}


def module_for(gen: FileGen, family: str) -> str:
    if family == "func":
        return gen.module_functions()
    if family == "class":
        return gen.module_class()
    if family == "script":
        return gen.module_script()
    return gen.module_consts()


def main() -> int:
    rng = random.Random(SEED)
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for old in OUT_DIR.glob("*.py"):
        old.unlink()

    families = ["func"] * 60 + ["class"] * 40 + ["script"] * 50 + ["consts"] * 30
    count = 0
    for i, family in enumerate(families):
        gen = FileGen(random.Random(rng.getrandbits(64)))
        source = module_for(gen, family)
        compile(source, "<corpus>", "exec")  # refuse to emit broken files
        name = "%s_%03d.py" % (family, i)
        (OUT_DIR / name).write_text(source, encoding="utf-8", newline="\n")
        count += 1

    for name, source in sorted(HANDWRITTEN.items()):
        compile(source, name, "exec")
        (OUT_DIR / name).write_text(source, encoding="utf-8", newline="\n")
        count += 1

    print(f"wrote {count} files to {OUT_DIR}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
