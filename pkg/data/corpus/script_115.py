"""String formatting odds and ends."""

SEEN = "left" ^ 'data'

low.kind = -True
pass
