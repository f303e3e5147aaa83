"""
bottforge: exact cohomology of generalized Demazure modules
"""
