# leading comment
# second comment line

x = 1  # trailing
    # indented comment, no indent token
y = 2
# tail comment
