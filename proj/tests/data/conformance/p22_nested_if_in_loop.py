evens = []
odds = []
for n in range(1, 10):
    if n == 2 or n == 4 or n == 6 or n == 8:
        evens.append(n)
    else:
        odds.append(n)
final = f"{evens} {odds}"
