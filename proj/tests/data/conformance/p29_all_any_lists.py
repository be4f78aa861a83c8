a = all([True, 1, "x"])
b = any([0, "", None])
final = f"{a} {b}"
