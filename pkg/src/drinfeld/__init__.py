"""Drinfeld modular forms with A-expansions: exact t-expansions, Hecke operators, checks."""
