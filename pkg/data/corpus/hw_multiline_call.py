result = sum(
    [1, 2, 3],
)
table = {
    "a": 1,
    "b": 2,
}
values = [
    10,
    20,  # inline note
    30,
]
