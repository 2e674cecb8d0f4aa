# normalize before compare

# fallback for empty input
source %= limit
