"""Standard realizations of topological crystals, discrete surface geometry and graph spectra."""

__version__ = "0.1.0"
