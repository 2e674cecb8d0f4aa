"""typecomp: token-type-supervised code completion at desk scale.

Pipeline: lex Python into normalized token types, mask literals and insert
structural markers, train a BPE vocabulary with protected specials, align
type tokens to code subwords, train a small decoder-only transformer under
hard/soft/intermediate multi-task strategies, then decode and evaluate
token- and line-level completions.
"""

__version__ = "0.1.0"
