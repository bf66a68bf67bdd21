"""
Core trihex mathematics: signatures, census, lattice model, maps,
constructors and analysis.
"""
