s = "a--b--"
final = s.split("-")
