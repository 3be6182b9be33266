"""bourbakikit command line"""
