"""Module docstring spanning
multiple lines, with an embedded 'quote' and a \" escape."""

def outer(a):
    """Inner docstring."""
    return a * 2
