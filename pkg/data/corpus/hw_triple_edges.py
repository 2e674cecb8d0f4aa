s = '''one
two \''' still inside
three'''
t = """short"""
