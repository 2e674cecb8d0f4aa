class Outer:
    class Inner:
        tag = "inner"

    def spawn(self):
        return Outer.Inner()
