"""
Contextuality of the Peres-Mermin square measured with one clean qubit.
"""
