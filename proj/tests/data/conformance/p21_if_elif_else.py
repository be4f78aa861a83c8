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
