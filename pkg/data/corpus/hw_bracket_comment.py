result = max(
    1,  # lower bound
    2,
)
