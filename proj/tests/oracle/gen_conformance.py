#!/usr/bin/env python3
"""Builds the interpreter conformance corpus.

Writes each program to tests/data/conformance/ and records the reference
interpreter's rendered final value in expected.json. The expectation for a
program is str(v) where v is final_answer if bound, else final, else None.

Run from the repository root:  python3 tests/oracle/gen_conformance.py
"""
import json
import os
import textwrap

PROGRAMS = {}


def p(name, src):
    PROGRAMS[name] = textwrap.dedent(src).lstrip("\n")


p("p01_int_arith", """
    x = 2 + 3 * 4
    y = x - 5
    final = y
""")

p("p02_string_concat", """
    a = "multi" + "-" + "hop"
    final = a
""")

p("p03_fstring_basic", """
    name = "Ada"
    final = f"hello {name}!"
""")

p("p04_fstring_nested_expr", """
    n = 4
    final = f"n plus one is {n + 1} and double is {n * 2}"
""")

p("p05_fstring_braces", """
    x = "v"
    final = f"literal {{braces}} and {x}"
""")

p("p06_bool_ops_values", """
    a = 0 or "fallback"
    b = "first" and "second"
    c = None or 7
    final = f"{a}|{b}|{c}"
""")

p("p07_not_truthiness", """
    a = not ""
    b = not [1]
    c = not 0
    final = f"{a} {b} {c}"
""")

p("p08_comparisons", """
    a = 3 < 5
    b = "apple" < "banana"
    c = 10 >= 10
    d = 2 != 3
    final = f"{a} {b} {c} {d}"
""")

p("p09_bool_int_equality", """
    a = True == 1
    b = False == 0
    c = True == 2
    final = f"{a} {b} {c}"
""")

p("p10_list_literal_index", """
    xs = [10, 20, 30, 40]
    final = xs[1] + xs[-1]
""")

p("p11_list_mutation", """
    xs = [1, 2]
    xs.append(3)
    xs[0] = 99
    final = xs
""")

p("p12_dict_literal_order", """
    d = {"b": 2, "a": 1, "c": 3}
    d["z"] = 4
    d["a"] = 10
    final = d
""")

p("p13_nested_subscript_assign", """
    flags = {}
    flags["film1"] = {}
    flags["film1"]["comedy"] = True
    flags["film1"]["drama"] = False
    final = flags
""")

p("p14_dict_get", """
    d = {"k": "v"}
    a = d.get("k")
    b = d.get("missing", "default")
    c = d.get("missing")
    final = f"{a} {b} {c}"
""")

p("p15_in_operator", """
    a = "hop" in "multi-hop"
    b = 2 in [1, 2, 3]
    c = "k" in {"k": 1}
    d = "x" in "abc"
    final = f"{a} {b} {c} {d}"
""")

p("p16_for_list_sum", """
    total = 0
    for v in [1, 2, 3, 4, 5]:
        total = total + v
    final = total
""")

p("p17_for_string_chars", """
    out = []
    for ch in "abc":
        out.append(ch.upper())
    final = out
""")

p("p18_for_dict_keys", """
    d = {"x": 1, "y": 2, "z": 3}
    keys = []
    for k in d:
        keys.append(k)
    final = keys
""")

p("p19_for_items_unpack", """
    d = {"a": 1, "b": 2}
    parts = []
    for k, v in d.items():
        parts.append(f"{k}={v}")
    final = parts
""")

p("p20_range_loops", """
    xs = []
    for i in range(5):
        xs.append(i)
    ys = []
    for j in range(2, 8, 2):
        ys.append(j)
    final = f"{xs} {ys}"
""")

p("p21_if_elif_else", """
    score = 72
    if score > 90:
        grade = "A"
    elif score > 70:
        grade = "B"
    elif score > 50:
        grade = "C"
    else:
        grade = "F"
    final = grade
""")

p("p22_nested_if_in_loop", """
    evens = []
    odds = []
    for n in range(1, 10):
        if n == 2 or n == 4 or n == 6 or n == 8:
            evens.append(n)
        else:
            odds.append(n)
    final = f"{evens} {odds}"
""")

p("p23_list_comprehension", """
    xs = [n * n for n in range(6)]
    final = xs
""")

p("p24_comprehension_condition", """
    xs = [n for n in range(10) if n > 4]
    final = xs
""")

p("p25_dict_comprehension", """
    d = {s: len(s) for s in ["ab", "cde", "f"]}
    final = d
""")

p("p26_comprehension_items", """
    d = {"a": 1, "b": 2, "c": 3}
    inverted = {f"{v}": k for k, v in d.items() if v != 2}
    final = inverted
""")

p("p27_comprehension_scope", """
    n = "outer"
    xs = [n for n in range(3)]
    final = f"{n} {xs}"
""")

p("p28_all_any_generator", """
    a = all(n > 0 for n in [1, 2, 3])
    b = all(n > 1 for n in [1, 2, 3])
    c = any(s == "hit" for s in ["miss", "hit"])
    d = any(s == "hit" for s in [])
    final = f"{a} {b} {c} {d}"
""")

p("p29_all_any_lists", """
    a = all([True, 1, "x"])
    b = any([0, "", None])
    final = f"{a} {b}"
""")

p("p30_function_def", """
    def shout(word):
        return word.upper() + "!"
    final = shout("quiet")
""")

p("p31_function_two_params", """
    def describe(name, year):
        return f"{name} ({year})"
    a = describe("Inception", 2010)
    b = describe("Jurassic Park", 1993)
    final = f"{a} and {b}"
""")

p("p32_function_recursion", """
    def fact(n):
        if n < 2:
            return 1
        return n * fact(n - 1)
    final = fact(10)
""")

p("p33_function_reads_global", """
    base = 100
    def offset(n):
        return base + n
    final = offset(23)
""")

p("p34_methods_strings", """
    s = "  The Quick Fox  "
    final = f"[{s.strip()}] [{s.strip().lower()}] [{s.strip().upper()}]"
""")

p("p35_split_join", """
    csv = "alpha,beta,gamma"
    parts = csv.split(",")
    spaced = " | ".join(parts)
    ws = "  a  b   c ".split()
    final = f"{parts} / {spaced} / {ws}"
""")

p("p36_split_keep_empties", """
    s = "a--b--"
    final = s.split("-")
""")

p("p37_builtin_int_str_len", """
    n = int("  42 ")
    m = int("-7")
    s = str(n + m)
    dlen = len({"a": 1})
    final = f"{s} {len(s)} {len([1, 2, 3])} {dlen}"
""")

p("p38_re_search_group", """
    import re
    m = re.search("[0-9]{4}", "released in 1993, remastered 2010")
    year = m.group()
    final = year
""")

p("p39_re_search_none", """
    import re
    m = re.search("[0-9]{4}", "no digits here")
    if m:
        final = "found"
    else:
        final = "nothing"
""")

p("p40_conditional_expr", """
    n = 7
    parity = "odd" if n == 7 else "even"
    other = "low" if n < 5 else "high"
    final = f"{parity} {other}"
""")

p("p41_adjacent_string_concat", """
    s = "one " "two " "three"
    t = f"{1 + 1} " f"four"
    final = s + t
""")

p("p42_negative_and_none", """
    x = -5
    y = 0 - x
    z = None
    final = f"{x} {y} {z}"
""")

p("p43_string_indexing", """
    s = "answer"
    final = f"{s[0]}{s[-1]}{s[2]}"
""")

p("p44_final_answer_priority", """
    final = "shadowed"
    final_answer = "wins"
""")

p("p45_loop_var_leaks", """
    for item in ["a", "b", "c"]:
        last = item
    final = f"{item} {last}"
""")

p("p46_aggregate_report", """
    films = {"Inception": 2010, "Jaws": 1975, "Alien": 1979}
    before_1980 = [name for name, year in films.items() if year < 1980]
    count = len(before_1980)
    joined = ", ".join(before_1980)
    final = f"{count} early films: {joined}"
""")

p("p47_unicode_strings", """
    name = "Pedro Rodríguez"
    final = f"{name} has {len(name)} characters"
""")

p("p48_deep_nesting", """
    table = {"rows": [{"id": 1, "tags": ["x", "y"]}, {"id": 2, "tags": []}]}
    row = table["rows"][0]
    tag = row["tags"][1]
    final = f"{row['id']}-{tag}"
""")


def reference_value(source):
    namespace = {}
    exec(compile(source, "<conformance>", "exec"), namespace)  # trusted fixtures
    if "final_answer" in namespace:
        return namespace["final_answer"]
    return namespace.get("final")


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out_dir = os.path.join(root, "data", "conformance")
    os.makedirs(out_dir, exist_ok=True)
    expected = {}
    for name, source in sorted(PROGRAMS.items()):
        filename = name + ".py"
        with open(os.path.join(out_dir, filename), "w") as f:
            f.write(source)
        expected[filename] = str(reference_value(source))
    with open(os.path.join(out_dir, "expected.json"), "w") as f:
        json.dump(expected, f, indent=2, ensure_ascii=False)
        f.write("\n")
    print(f"wrote {len(expected)} programs")


if __name__ == "__main__":
    main()
