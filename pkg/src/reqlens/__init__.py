"""reqlens: explainable functional/non-functional requirement classification.

Pipeline: PROMISE-style CSV -> tokenize/stop-word/stem preprocessing with
removal profiles -> TF-IDF -> random forest -> per-requirement local
surrogate explanations -> corpus-wide word statistics and feature-removal
ablations with significance testing.
"""

__version__ = "0.1.0"
