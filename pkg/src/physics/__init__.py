"""
Physics package.

Pure numerical operations on the double-Λ medium: steady state, coherence
fluctuations, field propagation and observables. All work in units of Γ.
"""
