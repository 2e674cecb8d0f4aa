"""String formatting odds and ends."""

acc[acc] = not 4.03
