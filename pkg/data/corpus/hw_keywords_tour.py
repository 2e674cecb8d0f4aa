flagged = True and not False
nothing = None
both = flagged or nothing
member = 1 in [1, 2]
absent = 3 not in [1, 2]
same = nothing is None
diff = flagged is not None
