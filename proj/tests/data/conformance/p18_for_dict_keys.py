d = {"x": 1, "y": 2, "z": 3}
keys = []
for k in d:
    keys.append(k)
final = keys
