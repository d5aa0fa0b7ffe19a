"""Published values the analyses are checked against."""

# NGOPM dimension -> cycle length
KNOWN_PERIODS = {
    1: 0, 2: 0, 3: 2, 4: 4, 5: 12, 6: 44, 7: 8, 8: 16, 9: 120, 10: 8,
    12: 21384, 17: 360, 19: 24,
}

# dimension -> smallest x with x-1, x+1, x-k, x+k prime
# the 83 row is printed as "83 x 89" in the source table; read as 83.
KNOWN_QUADRUPLES = {
    5: 12, 7: 12, 11: 18, 13: 18, 17: 30, 19: 42, 23: 30, 29: 42, 31: 42,
    37: 42, 41: 60, 43: 60, 47: 60, 53: 60, 59: 72, 61: 102, 67: 72,
    71: 102, 73: 240, 79: 102, 83: 150, 89: 102, 97: 102, 101: 138,
}

# 5x5 boards with the same prime layout as the one starting at 51
KNOWN_EQUIVALENT_STARTS_51 = (261, 1281, 14541, 75981)
