café = 1
naïve = café + 1
λval = 2
