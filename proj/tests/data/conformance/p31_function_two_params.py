def describe(name, year):
    return f"{name} ({year})"
a = describe("Inception", 2010)
b = describe("Jurassic Park", 1993)
final = f"{a} and {b}"
