"""Batch steps over the .ori corpus, run in order by run_corpus.py."""
