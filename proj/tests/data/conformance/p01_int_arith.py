x = 2 + 3 * 4
y = x - 5
final = y
