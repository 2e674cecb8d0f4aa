def stub(x) -> int:
    ...

def other() -> str:
    return "done"
